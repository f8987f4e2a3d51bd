#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace powergraph {

/// Dense index of a group element, 0..order-1.
using Element = std::uint32_t;

/// Default upper bound on the order of any group the library will build.
inline constexpr std::size_t kDefaultOrderCap = 10000;

enum class GroupErrorKind {
  InvalidOrder,
  NotSquare,
  NotClosed,
  NoIdentity,
  NotLatinSquare,
  NotAssociative,
  OrderOverflow,
  OutOfRange,
  ParseError,
};

const char* to_string(GroupErrorKind kind);

class GroupError : public std::runtime_error {
 public:
  GroupError(GroupErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  GroupErrorKind kind() const noexcept { return kind_; }

 private:
  GroupErrorKind kind_;
};

class FiniteGroup;
namespace detail {
FiniteGroup make_trusted_group(std::size_t order, std::vector<Element> table, Element identity,
                               std::string name, std::vector<std::string> labels);
}  // namespace detail

/// A finite group given by its full multiplication table.
///
/// Elements are the indices 0..order()-1 and `multiply(i, j)` is the entry
/// in row i, column j. Values are immutable once constructed, and every
/// construction path validates the group axioms unless the table comes from
/// one of the built-in families below.
class FiniteGroup {
 public:
  /// Validates `table` (closure, Latin square, identity, associativity) and
  /// builds the group. The identity is detected, not assumed to be 0.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<Element>>& table,
                                       std::string name = "G");

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }
  const std::string& name() const noexcept { return name_; }

  Element multiply(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }

  /// Least k >= 1 with a^k = e.
  std::uint32_t element_order(Element a) const;
  std::span<const std::uint32_t> element_orders() const noexcept { return orders_; }

  /// a^k with a^0 = e. The exponent is reduced modulo o(a) first.
  Element power(Element a, std::uint64_t k) const;

  /// Least t >= 1 with a^t = b, or nullopt when b is not in <a>.
  std::optional<std::uint32_t> smallest_exponent(Element a, Element b) const;

  const std::string& label(Element a) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Row-major view of the multiplication table.
  std::span<const Element> table() const noexcept { return table_; }

 private:
  friend FiniteGroup detail::make_trusted_group(std::size_t, std::vector<Element>, Element,
                                               std::string, std::vector<std::string>);

  FiniteGroup(std::size_t order, std::vector<Element> table, Element identity, std::string name,
              std::vector<std::string> labels);

  void check(Element a) const;

  std::size_t order_;
  std::vector<Element> table_;
  Element identity_;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> orders_;
};

// Built-in families. All of them place the identity at index 0.

/// Z_n under addition mod n.
FiniteGroup cyclic(std::size_t n);

/// Symmetry group of the regular n-gon, order 2n. Index k < n is the
/// rotation r^k and index n + k is the reflection s r^k, with s r = r^-1 s.
FiniteGroup dihedral(std::size_t n);

/// Permutations of {1..n} for 1 <= n <= 5, in lexicographic order of
/// one-line notation; composition is (p q)(i) = p(q(i)).
FiniteGroup symmetric(std::size_t n);

/// The quaternion group {1, -1, i, -i, j, -j, k, -k}, in that index order.
FiniteGroup quaternion8();

/// Componentwise product. The pair (i, j) is encoded as i * g2.order() + j.
FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2,
                           std::size_t order_cap = kDefaultOrderCap);

inline Element encode_pair(Element i, Element j, std::size_t right_order) {
  return static_cast<Element>(static_cast<std::size_t>(i) * right_order + j);
}

inline std::pair<Element, Element> decode_pair(Element v, std::size_t right_order) {
  return {static_cast<Element>(v / right_order), static_cast<Element>(v % right_order)};
}

/// Reads the text Cayley-table format: the order n on the first line, then n
/// rows of n whitespace-separated 0-based indices. Lines whose first
/// non-blank character is '#' are skipped.
FiniteGroup read_cayley_table(std::istream& in, std::string name = "G");
FiniteGroup load_cayley_table(const std::string& path);

void write_cayley_table(std::ostream& out, const FiniteGroup& g);

}  // namespace powergraph
