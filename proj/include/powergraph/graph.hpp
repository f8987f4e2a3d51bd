#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace powergraph {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Largest vertex count accepted by are_isomorphic.
inline constexpr std::size_t kIsomorphismVertexCap = 200;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected simple graph on vertices 0..vertex_count()-1 with a display
/// label per vertex. Adjacency is a dense bit matrix; labels never take part
/// in equality or isomorphism.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t vertex_count);
  SimpleGraph(std::size_t vertex_count, std::vector<std::string> labels);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_; }

  /// Adds {u, v}. Returns false when the edge was already present. Throws
  /// GraphError on a self-loop or an out-of-range endpoint.
  bool add_edge(Vertex u, Vertex v);

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (bits_[row_offset(u) + v / 64] >> (v % 64)) & 1U;
  }

  std::size_t degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;

  /// All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::size_t row_offset(Vertex u) const noexcept { return static_cast<std::size_t>(u) * words_; }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> labels_;
};

/// Same vertex count and same adjacency under the identity correspondence.
bool graphs_equal_labeled(const SimpleGraph& a, const SimpleGraph& b);

/// Edges present in exactly one of the two graphs (which must have the same
/// vertex count), sorted.
std::vector<Edge> edge_symmetric_difference(const SimpleGraph& a, const SimpleGraph& b);

/// Copy of `g` in which vertex v becomes vertex perm[v]; labels move along.
SimpleGraph relabel(const SimpleGraph& g, std::span<const Vertex> perm);

/// When the graphs are isomorphic, returns a witness `w` with
/// a.adjacent(u, v) == b.adjacent(w[u], w[v]) for all u, v.
///
/// Counts and degree multisets are compared first. Then both graphs are
/// colour-refined together (degree, then multiset of neighbour colours,
/// until the partition is stable) and a backtracking search maps each vertex
/// of `a` to an unused vertex of `b` with the same colour, trying candidates
/// in ascending index order. Throws GraphError above kIsomorphismVertexCap.
std::optional<std::vector<Vertex>> find_isomorphism(const SimpleGraph& a, const SimpleGraph& b);

inline bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  return find_isomorphism(a, b).has_value();
}

/// Whether some vertex is adjacent to every other one. A single vertex counts;
/// the empty graph has none.
bool has_universal_vertex(const SimpleGraph& g);

enum class ExportFormat { Dot, EdgeList, Json };

std::optional<ExportFormat> parse_export_format(std::string_view name);

/// DOT lists isolated vertices first, then every edge in index order. The
/// edge list is one "label_u,label_v" line per edge (u < v by index), lines
/// sorted as strings. JSON is {"vertices":[labels],"edges":[[i,j],...]} with
/// i < j, sorted, no whitespace. Every format ends in a newline.
std::string export_graph(const SimpleGraph& g, ExportFormat format);

/// Parses the JSON export format. Throws GraphError on malformed input.
SimpleGraph import_json_graph(std::string_view text);

}  // namespace powergraph
