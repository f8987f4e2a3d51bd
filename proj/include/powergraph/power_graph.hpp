#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "powergraph/ap.hpp"
#include "powergraph/graph.hpp"
#include "powergraph/group.hpp"

namespace powergraph {

/// A weight function on the ordered vertex pairs of a graph, diagonal
/// included, with values in progressions. Pairs that were never set carry
/// the sentinel (0, 0).
///
/// Only explicitly set entries are stored, row by row and sorted by target,
/// so a power-graph weighting costs O(sum of element orders) memory rather
/// than O(n^2).
class Generalization {
 public:
  struct Entry {
    Vertex target;
    ApPair weight;
  };

  Generalization() = default;
  explicit Generalization(std::size_t vertex_count) : rows_(vertex_count) {}

  std::size_t vertex_count() const noexcept { return rows_.size(); }

  /// Stores `weight` for (u, v). Setting the sentinel erases the entry.
  void set(Vertex u, Vertex v, ApPair weight);

  /// Replaces row u. Sentinel entries are dropped; targets must be distinct.
  void assign_row(Vertex u, std::span<const Entry> entries);

  ApPair at(Vertex u, Vertex v) const;

  /// Non-sentinel entries of row u, ascending by target.
  std::span<const Entry> row(Vertex u) const { return rows_.at(u); }

 private:
  std::vector<std::vector<Entry>> rows_;
};

/// The power weights of a group: W(a, b) = (t, o(a)) where t is the least
/// positive exponent with a^t = b, and the sentinel when b is not a power
/// of a. W(a, a) = (1, o(a)) always.
Generalization power_weights(const FiniteGroup& g);

/// Undirected power graph: distinct a, b adjacent iff one is a positive
/// power of the other. Vertex labels are the group's element labels.
SimpleGraph power_graph(const FiniteGroup& g);

/// Power graph together with the weights it was derived from.
struct PowerGraphBundle {
  FiniteGroup group;
  SimpleGraph graph;
  Generalization weights;
};

/// Builds the weights once and derives the graph from them: a != b are
/// adjacent iff W(a, b) or W(b, a) is not the sentinel.
PowerGraphBundle power_graph_bundle(FiniteGroup g);

/// {m in [1, bound] : a^m = b}, by repeated multiplication. `bound` may be
/// at most 10 * o(a).
std::vector<std::uint64_t> exponent_set_window(const FiniteGroup& g, Element a, Element b,
                                               std::uint64_t bound);

/// One "u v : (t,d)" line per non-sentinel entry, rows in index order.
std::string dump_weights(const Generalization& w);

}  // namespace powergraph
