#include "powergraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <iterator>

namespace powergraph {

SimpleGraph::SimpleGraph(std::size_t vertex_count)
    : SimpleGraph(vertex_count, [vertex_count] {
        std::vector<std::string> labels(vertex_count);
        for (std::size_t i = 0; i < vertex_count; ++i) labels[i] = std::to_string(i);
        return labels;
      }()) {}

SimpleGraph::SimpleGraph(std::size_t vertex_count, std::vector<std::string> labels)
    : n_(vertex_count),
      words_((vertex_count + 63) / 64),
      bits_(vertex_count * ((vertex_count + 63) / 64), 0),
      labels_(std::move(labels)) {
  if (labels_.size() != n_)
    throw GraphError("expected " + std::to_string(n_) + " labels, got " +
                     std::to_string(labels_.size()));
}

bool SimpleGraph::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_)
    throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                     "} out of range for " + std::to_string(n_) + " vertices");
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) return false;
  bits_[row_offset(u) + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[row_offset(v) + u / 64] |= std::uint64_t{1} << (u % 64);
  ++edges_;
  return true;
}

std::size_t SimpleGraph::degree(Vertex v) const {
  if (v >= n_) throw GraphError("vertex " + std::to_string(v) + " out of range");
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(bits_[row_offset(v) + w]);
  return d;
}

std::vector<Vertex> SimpleGraph::neighbors(Vertex v) const {
  if (v >= n_) throw GraphError("vertex " + std::to_string(v) + " out of range");
  std::vector<Vertex> out;
  for (std::size_t w = 0; w < words_; ++w) {
    for (std::uint64_t word = bits_[row_offset(v) + w]; word != 0; word &= word - 1)
      out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(word)));
  }
  return out;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool graphs_equal_labeled(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const std::size_t n = a.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    if (a.neighbors(u) != b.neighbors(u)) return false;
  return true;
}

std::vector<Edge> edge_symmetric_difference(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count() != b.vertex_count())
    throw GraphError("symmetric difference needs equal vertex counts");
  const auto ea = a.edges();
  const auto eb = b.edges();
  std::vector<Edge> out;
  std::set_symmetric_difference(ea.begin(), ea.end(), eb.begin(), eb.end(),
                                std::back_inserter(out));
  return out;
}

SimpleGraph relabel(const SimpleGraph& g, std::span<const Vertex> perm) {
  const std::size_t n = g.vertex_count();
  if (perm.size() != n) throw GraphError("permutation size mismatch");
  std::vector<char> hit(n, 0);
  for (Vertex p : perm) {
    if (p >= n || hit[p]) throw GraphError("relabel argument is not a permutation");
    hit[p] = 1;
  }
  std::vector<std::string> labels(n);
  for (Vertex v = 0; v < n; ++v) labels[perm[v]] = g.label(v);
  SimpleGraph out(n, std::move(labels));
  for (const auto& [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

bool has_universal_vertex(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) + 1 == n) return true;
  return false;
}

}  // namespace powergraph
