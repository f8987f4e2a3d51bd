#include "powergraph/products.hpp"

namespace powergraph {

namespace {

SimpleGraph empty_product(const SimpleGraph& a, const SimpleGraph& b, std::size_t cap) {
  const std::size_t n = a.vertex_count() * b.vertex_count();
  if (n > cap)
    throw GraphError("product has " + std::to_string(n) + " vertices, above cap " +
                     std::to_string(cap));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& la : a.labels())
    for (const auto& lb : b.labels()) labels.push_back("(" + la + "," + lb + ")");
  return SimpleGraph(n, std::move(labels));
}

Vertex pair_vertex(Vertex i, Vertex j, const SimpleGraph& b) {
  return static_cast<Vertex>(static_cast<std::size_t>(i) * b.vertex_count() + j);
}

void add_direct_edges(SimpleGraph& out, const SimpleGraph& a, const SimpleGraph& b) {
  const auto eb = b.edges();
  for (const auto& [u1, v1] : a.edges()) {
    for (const auto& [u2, v2] : eb) {
      out.add_edge(pair_vertex(u1, u2, b), pair_vertex(v1, v2, b));
      out.add_edge(pair_vertex(u1, v2, b), pair_vertex(v1, u2, b));
    }
  }
}

void add_cartesian_edges(SimpleGraph& out, const SimpleGraph& a, const SimpleGraph& b) {
  for (Vertex i = 0; i < a.vertex_count(); ++i)
    for (const auto& [u2, v2] : b.edges()) out.add_edge(pair_vertex(i, u2, b), pair_vertex(i, v2, b));
  for (const auto& [u1, v1] : a.edges())
    for (Vertex j = 0; j < b.vertex_count(); ++j)
      out.add_edge(pair_vertex(u1, j, b), pair_vertex(v1, j, b));
}

}  // namespace

std::optional<ProductKind> parse_product_kind(std::string_view name) {
  if (name == "direct") return ProductKind::Direct;
  if (name == "cartesian") return ProductKind::Cartesian;
  if (name == "normal") return ProductKind::Normal;
  if (name == "generalized") return ProductKind::Generalized;
  return std::nullopt;
}

const char* to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::Direct: return "direct";
    case ProductKind::Cartesian: return "cartesian";
    case ProductKind::Normal: return "normal";
    case ProductKind::Generalized: return "generalized";
  }
  return "unknown";
}

SimpleGraph direct_product_graph(const SimpleGraph& a, const SimpleGraph& b, std::size_t cap) {
  auto out = empty_product(a, b, cap);
  add_direct_edges(out, a, b);
  return out;
}

SimpleGraph cartesian_product_graph(const SimpleGraph& a, const SimpleGraph& b, std::size_t cap) {
  auto out = empty_product(a, b, cap);
  add_cartesian_edges(out, a, b);
  return out;
}

SimpleGraph normal_product_graph(const SimpleGraph& a, const SimpleGraph& b, std::size_t cap) {
  auto out = empty_product(a, b, cap);
  add_direct_edges(out, a, b);
  add_cartesian_edges(out, a, b);
  return out;
}

SimpleGraph generalized_product_graph(const SimpleGraph& a, const Generalization& wa,
                                      const SimpleGraph& b, const Generalization& wb,
                                      std::size_t cap) {
  if (wa.vertex_count() != a.vertex_count() || wb.vertex_count() != b.vertex_count())
    throw GraphError("weighting does not match its graph's vertex count");
  auto out = empty_product(a, b, cap);
  // Sentinel weights never meet a positive integer, so only stored entries
  // can contribute. Every ordered pair is visited from both ends, which
  // covers both orientations of the rule.
  for (Vertex g1 = 0; g1 < a.vertex_count(); ++g1) {
    for (const auto& e1 : wa.row(g1)) {
      for (Vertex g2 = 0; g2 < b.vertex_count(); ++g2) {
        for (const auto& e2 : wb.row(g2)) {
          if (g1 == e1.target && g2 == e2.target) continue;
          if (aps_intersect_positively(e1.weight, e2.weight))
            out.add_edge(pair_vertex(g1, g2, b), pair_vertex(e1.target, e2.target, b));
        }
      }
    }
  }
  return out;
}

Generalization classical_weights(ClassicalWeightKind kind, const SimpleGraph& g) {
  ApPair arc;
  ApPair diagonal;
  switch (kind) {
    case ClassicalWeightKind::Direct: arc = {1, 1}; diagonal = {0, 0}; break;
    case ClassicalWeightKind::CartesianLeft: arc = {1, 0}; diagonal = {1, 1}; break;
    case ClassicalWeightKind::CartesianRight: arc = {2, 0}; diagonal = {1, 1}; break;
    case ClassicalWeightKind::Normal: arc = {1, 0}; diagonal = {1, 1}; break;
  }
  Generalization w(g.vertex_count());
  std::vector<Generalization::Entry> row;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    row.clear();
    row.push_back({x, diagonal});
    for (Vertex y : g.neighbors(x)) row.push_back({y, arc});
    w.assign_row(x, row);
  }
  return w;
}

}  // namespace powergraph
