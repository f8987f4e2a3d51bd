#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "powergraph/graph.hpp"
#include "powergraph/power_graph.hpp"

namespace powergraph {

/// Largest vertex count a product graph may have.
inline constexpr std::size_t kDefaultProductCap = 10000;

/// Graph products on V(a) x V(b). The pair (i, j) is vertex i * |V(b)| + j,
/// matching direct_product of groups, and is labelled "(label_i,label_j)".
///
/// Naming follows the power-graph literature this library serves:
/// "cartesian" is the usual box product and "normal" is what most graph
/// theory texts call the strong product.
enum class ProductKind { Direct, Cartesian, Normal, Generalized };

std::optional<ProductKind> parse_product_kind(std::string_view name);
const char* to_string(ProductKind kind);

/// (g1,g2) ~ (h1,h2) iff g1 ~ h1 and g2 ~ h2.
SimpleGraph direct_product_graph(const SimpleGraph& a, const SimpleGraph& b,
                                 std::size_t cap = kDefaultProductCap);

/// (g1,g2) ~ (h1,h2) iff one coordinate is equal and the other adjacent.
SimpleGraph cartesian_product_graph(const SimpleGraph& a, const SimpleGraph& b,
                                    std::size_t cap = kDefaultProductCap);

/// Union of the direct and cartesian adjacencies.
SimpleGraph normal_product_graph(const SimpleGraph& a, const SimpleGraph& b,
                                 std::size_t cap = kDefaultProductCap);

/// Distinct (g1,g2), (h1,h2) are adjacent iff
///   AP(wa(g1,h1)) and AP(wb(g2,h2)) share a positive integer, or
///   AP(wa(h1,g1)) and AP(wb(h2,g2)) share a positive integer.
/// Only the weights enter the rule; the factor graphs supply vertex counts
/// and labels.
SimpleGraph generalized_product_graph(const SimpleGraph& a, const Generalization& wa,
                                      const SimpleGraph& b, const Generalization& wb,
                                      std::size_t cap = kDefaultProductCap);

/// Weightings that turn the generalized product back into a classical one.
/// On a diagonal pair (x, x) and on an arc (x, y) of the graph they take the
/// values below; every other ordered pair gets the sentinel (0, 0).
///
///   kind            arc      diagonal
///   Direct          (1,1)    (0,0)
///   CartesianLeft   (1,0)    (1,1)
///   CartesianRight  (2,0)    (1,1)
///   Normal          (1,0)    (1,1)
///
/// Direct x Direct gives the direct product, CartesianLeft x CartesianRight
/// the cartesian product, Normal x Normal the normal product.
enum class ClassicalWeightKind { Direct, CartesianLeft, CartesianRight, Normal };

Generalization classical_weights(ClassicalWeightKind kind, const SimpleGraph& g);

}  // namespace powergraph
