#include "powergraph/ap.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace powergraph {

std::string to_string(const ApPair& p) {
  return "(" + std::to_string(p.start) + "," + std::to_string(p.step) + ")";
}

bool ap_contains(const ApPair& p, std::uint64_t m) noexcept {
  if (m < p.start) return false;
  if (p.step == 0) return m == p.start;
  return (m - p.start) % p.step == 0;
}

bool aps_intersect_positively(const ApPair& p, const ApPair& q) noexcept {
  if (p.step == 0 && q.step == 0) return p.start == q.start && p.start >= 1;
  if (p.step == 0) return p.start >= 1 && ap_contains(q, p.start);
  if (q.step == 0) return q.start >= 1 && ap_contains(p, q.start);
  // Both progressions are infinite: a common element exists iff the starts
  // agree modulo gcd(steps), and then common elements are unbounded.
  const std::uint64_t g = std::gcd(p.step, q.step);
  return p.start % g == q.start % g;
}

bool aps_intersect_oracle(const ApPair& p, const ApPair& q) {
  const std::uint64_t lcm = std::lcm(std::max<std::uint64_t>(p.step, 1),
                                     std::max<std::uint64_t>(q.step, 1));
  const std::uint64_t bound = std::max(p.start, q.start) + 2 * lcm;

  auto members = [bound](const ApPair& a) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = a.start; m <= bound; m += a.step) {
      out.push_back(m);
      if (a.step == 0) break;
    }
    return out;
  };
  const auto left = members(p);
  const auto right = members(q);
  std::size_t i = 0, j = 0;
  while (i < left.size() && j < right.size()) {
    if (left[i] < right[j]) ++i;
    else if (right[j] < left[i]) ++j;
    else if (left[i] >= 1) return true;
    else ++i, ++j;
  }
  return false;
}

}  // namespace powergraph
