#include "powergraph/group.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace powergraph {

namespace {

// Exhaustive associativity scan up to this order; above it, Light's test
// over a generating set, which is exact but only O(n^2 |S|).
constexpr std::size_t kExhaustiveAssociativityLimit = 64;

std::string cell(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

void fail_associativity(std::size_t i, std::size_t j, std::size_t k) {
  throw GroupError(GroupErrorKind::NotAssociative,
                   "table is not associative at (" + std::to_string(i) + "*" + std::to_string(j) +
                       ")*" + std::to_string(k));
}

// Smallest generating set found greedily by submagma closure.
std::vector<Element> greedy_generators(std::span<const Element> t, std::size_t n, Element e) {
  std::vector<Element> gens;
  std::vector<char> in(n, 0);
  std::vector<Element> members{e};
  in[e] = 1;
  for (Element cand = 0; cand < n; ++cand) {
    if (in[cand]) continue;
    gens.push_back(cand);
    in[cand] = 1;
    members.push_back(cand);
    for (bool grew = true; grew;) {
      grew = false;
      const std::size_t m = members.size();
      for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
          Element z = t[static_cast<std::size_t>(members[x]) * n + members[y]];
          if (!in[z]) {
            in[z] = 1;
            members.push_back(z);
            grew = true;
          }
        }
      }
    }
    if (members.size() == n) break;
  }
  return gens;
}

void check_associative(std::span<const Element> t, std::size_t n, Element e) {
  auto mul = [&](std::size_t a, std::size_t b) { return t[a * n + b]; };
  if (n <= kExhaustiveAssociativityLimit) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (mul(mul(i, j), k) != mul(i, mul(j, k))) fail_associativity(i, j, k);
    return;
  }
  // If (x g) y = x (g y) for all x, y and every g in a generating set, the
  // elements with that property form a submagma containing the generators.
  for (Element g : greedy_generators(t, n, e))
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (mul(mul(x, g), y) != mul(x, mul(g, y))) fail_associativity(x, g, y);
}

}  // namespace

const char* to_string(GroupErrorKind kind) {
  switch (kind) {
    case GroupErrorKind::InvalidOrder: return "InvalidOrder";
    case GroupErrorKind::NotSquare: return "NotSquare";
    case GroupErrorKind::NotClosed: return "NotClosed";
    case GroupErrorKind::NoIdentity: return "NoIdentity";
    case GroupErrorKind::NotLatinSquare: return "NotLatinSquare";
    case GroupErrorKind::NotAssociative: return "NotAssociative";
    case GroupErrorKind::OrderOverflow: return "OrderOverflow";
    case GroupErrorKind::OutOfRange: return "OutOfRange";
    case GroupErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table, Element identity,
                         std::string name, std::vector<std::string> labels)
    : order_(order),
      table_(std::move(table)),
      identity_(identity),
      name_(std::move(name)),
      labels_(std::move(labels)),
      orders_(order, 0) {
  for (std::size_t a = 0; a < order_; ++a) {
    std::uint32_t k = 1;
    for (Element x = static_cast<Element>(a); x != identity_; x = multiply(x, static_cast<Element>(a))) ++k;
    orders_[a] = k;
  }
}

FiniteGroup detail::make_trusted_group(std::size_t order, std::vector<Element> table,
                                       Element identity, std::string name,
                                       std::vector<std::string> labels) {
  return FiniteGroup(order, std::move(table), identity, std::move(name), std::move(labels));
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<Element>>& table,
                                           std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw GroupError(GroupErrorKind::InvalidOrder, "Cayley table is empty");
  if (n > kDefaultOrderCap)
    throw GroupError(GroupErrorKind::OrderOverflow,
                     "order " + std::to_string(n) + " exceeds cap " +
                         std::to_string(kDefaultOrderCap));
  for (std::size_t i = 0; i < n; ++i)
    if (table[i].size() != n)
      throw GroupError(GroupErrorKind::NotSquare,
                       "row " + std::to_string(i) + " has " + std::to_string(table[i].size()) +
                           " entries, expected " + std::to_string(n));

  std::vector<Element> flat(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n)
        throw GroupError(GroupErrorKind::NotClosed, "entry " + std::to_string(table[i][j]) +
                                                        " out of range at cell " + cell(i, j));
      flat[i * n + j] = table[i][j];
    }
  }

  std::optional<Element> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = flat[e * n + i] == i && flat[i * n + e] == i;
    if (ok) identity = static_cast<Element>(e);
  }
  if (!identity) throw GroupError(GroupErrorKind::NoIdentity, "no two-sided identity element");

  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[flat[i * n + j]]++)
        throw GroupError(GroupErrorKind::NotLatinSquare,
                         "row " + std::to_string(i) + " repeats " +
                             std::to_string(flat[i * n + j]) + " at cell " + cell(i, j));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[flat[i * n + j]]++)
        throw GroupError(GroupErrorKind::NotLatinSquare,
                         "column " + std::to_string(j) + " repeats " +
                             std::to_string(flat[i * n + j]) + " at cell " + cell(i, j));
    }
  }

  check_associative(flat, n, *identity);
  return FiniteGroup(n, std::move(flat), *identity, std::move(name), index_labels(n));
}

void FiniteGroup::check(Element a) const {
  if (a >= order_)
    throw GroupError(GroupErrorKind::OutOfRange, "element " + std::to_string(a) +
                                                     " out of range for group of order " +
                                                     std::to_string(order_));
}

std::uint32_t FiniteGroup::element_order(Element a) const {
  check(a);
  return orders_[a];
}

Element FiniteGroup::power(Element a, std::uint64_t k) const {
  check(a);
  k %= orders_[a];
  Element x = identity_;
  for (std::uint64_t i = 0; i < k; ++i) x = multiply(x, a);
  return x;
}

std::optional<std::uint32_t> FiniteGroup::smallest_exponent(Element a, Element b) const {
  check(a);
  check(b);
  Element x = a;
  for (std::uint32_t t = 1; t <= orders_[a]; ++t) {
    if (x == b) return t;
    x = multiply(x, a);
  }
  return std::nullopt;
}

const std::string& FiniteGroup::label(Element a) const {
  check(a);
  return labels_[a];
}

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw GroupError(GroupErrorKind::InvalidOrder, "cyclic group needs n >= 1");
  if (n > kDefaultOrderCap)
    throw GroupError(GroupErrorKind::OrderOverflow, "C" + std::to_string(n) + " exceeds order cap");
  std::vector<Element> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Element>((i + j) % n);
  return detail::make_trusted_group(n, std::move(t), 0, "C" + std::to_string(n), index_labels(n));
}

FiniteGroup dihedral(std::size_t n) {
  if (n == 0) throw GroupError(GroupErrorKind::InvalidOrder, "dihedral group needs n >= 1");
  if (2 * n > kDefaultOrderCap)
    throw GroupError(GroupErrorKind::OrderOverflow, "D" + std::to_string(n) + " exceeds order cap");
  const std::size_t m = 2 * n;
  std::vector<Element> t(m * m);
  std::vector<std::string> labels(m);
  for (std::size_t x = 0; x < m; ++x) {
    labels[x] = (x < n ? "r" : "s") + std::to_string(x % n);
    for (std::size_t y = 0; y < m; ++y) {
      const std::size_t a = x % n;
      const std::size_t b = y % n;
      std::size_t z;
      if (x < n && y < n) z = (a + b) % n;               // r^a r^b = r^(a+b)
      else if (x < n) z = n + (b + n - a) % n;           // r^a s r^b = s r^(b-a)
      else if (y < n) z = n + (a + b) % n;               // s r^a r^b = s r^(a+b)
      else z = (b + n - a) % n;                          // s r^a s r^b = r^(b-a)
      t[x * m + y] = static_cast<Element>(z);
    }
  }
  return detail::make_trusted_group(m, std::move(t), 0, "D" + std::to_string(n), std::move(labels));
}

FiniteGroup symmetric(std::size_t n) {
  if (n == 0 || n > 5)
    throw GroupError(GroupErrorKind::InvalidOrder, "symmetric group needs 1 <= n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const std::size_t m = perms.size();
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<Element> t(m * m);
  std::vector<std::string> labels(m);
  std::vector<int> comp(n);
  for (std::size_t x = 0; x < m; ++x) {
    for (int v : perms[x]) labels[x] += static_cast<char>('1' + v);
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t i = 0; i < n; ++i) comp[i] = perms[x][perms[y][i]];
      t[x * m + y] = index_of(comp);
    }
  }
  return detail::make_trusted_group(m, std::move(t), 0, "S" + std::to_string(n), std::move(labels));
}

FiniteGroup quaternion8() {
  // Element 2u + s is (-1)^s times the unit u in {1, i, j, k}.
  // kUnit[u][v] and kSign[u][v] give the product of units u and v.
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<Element> t(64);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int sign = (x % 2) ^ (y % 2) ^ kSign[u][v];
      t[x * 8 + y] = static_cast<Element>(2 * kUnit[u][v] + sign);
    }
  }
  return detail::make_trusted_group(8, std::move(t), 0, "Q8",
                                    {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2, std::size_t order_cap) {
  const std::size_t n1 = g1.order();
  const std::size_t n2 = g2.order();
  if (n1 * n2 > order_cap)
    throw GroupError(GroupErrorKind::OrderOverflow,
                     g1.name() + "x" + g2.name() + " has order " + std::to_string(n1 * n2) +
                         ", above cap " + std::to_string(order_cap));
  const std::size_t m = n1 * n2;
  std::vector<Element> t(m * m);
  std::vector<std::string> labels(m);
  for (Element a1 = 0; a1 < n1; ++a1) {
    for (Element a2 = 0; a2 < n2; ++a2) {
      const Element x = encode_pair(a1, a2, n2);
      labels[x] = "(" + g1.label(a1) + "," + g2.label(a2) + ")";
      for (Element b1 = 0; b1 < n1; ++b1)
        for (Element b2 = 0; b2 < n2; ++b2)
          t[static_cast<std::size_t>(x) * m + encode_pair(b1, b2, n2)] =
              encode_pair(g1.multiply(a1, b1), g2.multiply(a2, b2), n2);
    }
  }
  return detail::make_trusted_group(m, std::move(t), encode_pair(g1.identity(), g2.identity(), n2),
                                    g1.name() + "x" + g2.name(), std::move(labels));
}

FiniteGroup read_cayley_table(std::istream& in, std::string name) {
  std::vector<long long> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    std::string tok;
    while (row >> tok) {
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v < 0)
        throw GroupError(GroupErrorKind::ParseError,
                         "line " + std::to_string(line_no) + ": bad entry '" + tok + "'");
      values.push_back(v);
    }
  }
  if (values.empty()) throw GroupError(GroupErrorKind::ParseError, "missing order line");
  const long long n = values.front();
  if (n <= 0) throw GroupError(GroupErrorKind::InvalidOrder, "order must be positive");
  if (static_cast<std::size_t>(n) > kDefaultOrderCap)
    throw GroupError(GroupErrorKind::OrderOverflow, "order " + std::to_string(n) + " exceeds cap");
  const std::size_t size = static_cast<std::size_t>(n);
  if (values.size() - 1 != size * size)
    throw GroupError(GroupErrorKind::NotSquare, "expected " + std::to_string(size * size) +
                                                    " entries, found " +
                                                    std::to_string(values.size() - 1));
  std::vector<std::vector<Element>> table(size, std::vector<Element>(size));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const long long v = values[1 + i * size + j];
      if (v >= n)
        throw GroupError(GroupErrorKind::NotClosed,
                         "entry " + std::to_string(v) + " out of range at cell " + cell(i, j));
      table[i][j] = static_cast<Element>(v);
    }
  }
  return FiniteGroup::from_cayley_table(table, std::move(name));
}

FiniteGroup load_cayley_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GroupError(GroupErrorKind::ParseError, "cannot open '" + path + "'");
  return read_cayley_table(in, "cayley:" + path);
}

void write_cayley_table(std::ostream& out, const FiniteGroup& g) {
  const std::size_t n = g.order();
  out << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << g.multiply(static_cast<Element>(i), static_cast<Element>(j));
    }
    out << '\n';
  }
}

}  // namespace powergraph
