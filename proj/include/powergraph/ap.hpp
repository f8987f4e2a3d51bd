#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace powergraph {

/// The arithmetic progression {start + k * step : k >= 0} over the
/// nonnegative integers. A zero step denotes the singleton {start}, so the
/// sentinel (0, 0) is the set {0}, which contains no positive integer.
struct ApPair {
  std::uint64_t start = 0;
  std::uint64_t step = 0;

  friend auto operator<=>(const ApPair&, const ApPair&) = default;

  bool is_sentinel() const noexcept { return start == 0 && step == 0; }
};

inline constexpr ApPair kSentinel{0, 0};

std::string to_string(const ApPair& p);

bool ap_contains(const ApPair& p, std::uint64_t m) noexcept;

/// True iff the two progressions share an element m >= 1. Decided with a
/// gcd congruence; no enumeration.
bool aps_intersect_positively(const ApPair& p, const ApPair& q) noexcept;

/// Enumeration-based reference for aps_intersect_positively. Walks both
/// progressions up to max(p.start, q.start) + 2 * lcm(max(p.step, 1),
/// max(q.step, 1)). Only meant for small arguments.
bool aps_intersect_oracle(const ApPair& p, const ApPair& q);

}  // namespace powergraph
