#include "powergraph/power_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace powergraph {

void Generalization::set(Vertex u, Vertex v, ApPair weight) {
  if (v >= rows_.size()) throw GraphError("weight target out of range");
  auto& row = rows_.at(u);
  auto it = std::lower_bound(row.begin(), row.end(), v,
                             [](const Entry& e, Vertex t) { return e.target < t; });
  const bool present = it != row.end() && it->target == v;
  if (weight.is_sentinel()) {
    if (present) row.erase(it);
  } else if (present) {
    it->weight = weight;
  } else {
    row.insert(it, Entry{v, weight});
  }
}

void Generalization::assign_row(Vertex u, std::span<const Entry> entries) {
  auto& row = rows_.at(u);
  row.clear();
  for (const auto& e : entries) {
    if (e.target >= rows_.size()) throw GraphError("weight target out of range");
    if (!e.weight.is_sentinel()) row.push_back(e);
  }
  std::sort(row.begin(), row.end(), [](const Entry& x, const Entry& y) { return x.target < y.target; });
  auto dup = std::adjacent_find(row.begin(), row.end(), [](const Entry& x, const Entry& y) {
    return x.target == y.target;
  });
  if (dup != row.end()) throw GraphError("duplicate weight target in row");
}

ApPair Generalization::at(Vertex u, Vertex v) const {
  const auto& row = rows_.at(u);
  auto it = std::lower_bound(row.begin(), row.end(), v,
                             [](const Entry& e, Vertex t) { return e.target < t; });
  return it != row.end() && it->target == v ? it->weight : kSentinel;
}

namespace {

// Calls visit(a, row) where row lists (a^t, (t, o(a))) for t = 1..o(a).
// a, a^2, ..., a^o(a) = e visits every element of <a> exactly once, so the
// first hit is the least exponent.
template <typename Visit>
void for_each_power_row(const FiniteGroup& g, Visit&& visit) {
  std::vector<Generalization::Entry> row;
  for (Element a = 0; a < g.order(); ++a) {
    const std::uint32_t order = g.element_order(a);
    row.clear();
    Element x = a;
    for (std::uint32_t t = 1; t <= order; ++t) {
      row.push_back({x, ApPair{t, order}});
      x = g.multiply(x, a);
    }
    visit(a, std::span<const Generalization::Entry>(row));
  }
}

SimpleGraph graph_from_weights(const FiniteGroup& g, const Generalization& w) {
  SimpleGraph graph(g.order(), g.labels());
  for (Vertex u = 0; u < g.order(); ++u)
    for (const auto& entry : w.row(u))
      if (entry.target != u) graph.add_edge(u, entry.target);
  return graph;
}

}  // namespace

Generalization power_weights(const FiniteGroup& g) {
  Generalization w(g.order());
  for_each_power_row(g, [&](Element a, std::span<const Generalization::Entry> row) {
    w.assign_row(a, row);
  });
  return w;
}

// Same rows as power_weights, consumed one at a time so the full weight
// table (quadratic for cyclic groups) is never held in memory.
SimpleGraph power_graph(const FiniteGroup& g) {
  SimpleGraph graph(g.order(), g.labels());
  for_each_power_row(g, [&](Element a, std::span<const Generalization::Entry> row) {
    for (const auto& entry : row)
      if (entry.target != a) graph.add_edge(a, entry.target);
  });
  return graph;
}

PowerGraphBundle power_graph_bundle(FiniteGroup g) {
  auto weights = power_weights(g);
  auto graph = graph_from_weights(g, weights);
  return PowerGraphBundle{std::move(g), std::move(graph), std::move(weights)};
}

std::vector<std::uint64_t> exponent_set_window(const FiniteGroup& g, Element a, Element b,
                                               std::uint64_t bound) {
  if (bound > 10ULL * g.element_order(a))
    throw std::invalid_argument("exponent window bound exceeds 10 * o(a)");
  if (b >= g.order()) throw GroupError(GroupErrorKind::OutOfRange, "element out of range");
  std::vector<std::uint64_t> out;
  Element x = a;
  for (std::uint64_t m = 1; m <= bound; ++m) {
    if (x == b) out.push_back(m);
    x = g.multiply(x, a);
  }
  return out;
}

std::string dump_weights(const Generalization& w) {
  std::string out;
  for (Vertex u = 0; u < w.vertex_count(); ++u)
    for (const auto& e : w.row(u))
      out += std::to_string(u) + " " + std::to_string(e.target) + " : " + to_string(e.weight) +
             "\n";
  return out;
}

}  // namespace powergraph
