#include "powergraph/graph.hpp"

#include <algorithm>
#include <map>

namespace powergraph {

namespace {

// Colour refinement on the disjoint union of a and b, so colour ids are
// comparable between the two graphs. Vertex v of b is index n + v.
std::vector<std::size_t> refine_jointly(const SimpleGraph& a, const SimpleGraph& b) {
  const std::size_t n = a.vertex_count();
  std::vector<std::vector<Vertex>> adj(2 * n);
  for (Vertex v = 0; v < n; ++v) {
    adj[v] = a.neighbors(v);
    for (Vertex w : b.neighbors(v)) adj[n + v].push_back(static_cast<Vertex>(n + w));
  }

  std::vector<std::size_t> colour(2 * n);
  for (std::size_t v = 0; v < 2 * n; ++v) colour[v] = adj[v].size();

  std::size_t classes = 0;
  for (;;) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> ids;
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sigs(2 * n);
    for (std::size_t v = 0; v < 2 * n; ++v) {
      std::vector<std::size_t> around;
      around.reserve(adj[v].size());
      for (Vertex w : adj[v]) around.push_back(colour[w]);
      std::sort(around.begin(), around.end());
      sigs[v] = {colour[v], std::move(around)};
      ids.emplace(sigs[v], 0);
    }
    std::size_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t v = 0; v < 2 * n; ++v) colour[v] = ids.at(sigs[v]);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return colour;
}

class Matcher {
 public:
  Matcher(const SimpleGraph& a, const SimpleGraph& b, std::vector<std::size_t> colour)
      : a_(a), b_(b), n_(a.vertex_count()), colour_(std::move(colour)) {
    std::map<std::size_t, std::vector<Vertex>> by_colour;
    for (Vertex v = 0; v < n_; ++v) by_colour[colour_[n_ + v]].push_back(v);
    candidates_.resize(n_);
    for (Vertex u = 0; u < n_; ++u) candidates_[u] = by_colour[colour_[u]];

    order_.resize(n_);
    for (Vertex u = 0; u < n_; ++u) order_[u] = u;
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex x, Vertex y) {
      return candidates_[x].size() < candidates_[y].size();
    });
    map_.assign(n_, 0);
    used_.assign(n_, 0);
  }

  std::optional<std::vector<Vertex>> run() {
    if (!extend(0)) return std::nullopt;
    return map_;
  }

 private:
  bool consistent(std::size_t depth, Vertex u, Vertex v) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex pu = order_[i];
      if (a_.adjacent(u, pu) != b_.adjacent(v, map_[pu])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const Vertex u = order_[depth];
    for (Vertex v : candidates_[u]) {
      if (used_[v] || !consistent(depth, u, v)) continue;
      map_[u] = v;
      used_[v] = 1;
      if (extend(depth + 1)) return true;
      used_[v] = 0;
    }
    return false;
  }

  const SimpleGraph& a_;
  const SimpleGraph& b_;
  std::size_t n_;
  std::vector<std::size_t> colour_;
  std::vector<std::vector<Vertex>> candidates_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

std::vector<std::size_t> degree_multiset(const SimpleGraph& g) {
  std::vector<std::size_t> d(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count() > kIsomorphismVertexCap || b.vertex_count() > kIsomorphismVertexCap)
    throw GraphError("isomorphism test limited to " + std::to_string(kIsomorphismVertexCap) +
                     " vertices");
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  if (degree_multiset(a) != degree_multiset(b)) return std::nullopt;

  const std::size_t n = a.vertex_count();
  auto colour = refine_jointly(a, b);
  std::vector<std::size_t> left(colour.begin(), colour.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<std::size_t> right(colour.begin() + static_cast<std::ptrdiff_t>(n), colour.end());
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  if (left != right) return std::nullopt;

  return Matcher(a, b, std::move(colour)).run();
}

}  // namespace powergraph
