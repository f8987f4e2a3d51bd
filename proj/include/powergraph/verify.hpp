#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "powergraph/graph.hpp"
#include "powergraph/group.hpp"

namespace powergraph {

/// Outcome of checking one claim on one instance. A failing instance always
/// carries a nonempty counterexample.
struct InstanceResult {
  std::string instance;
  bool passed = true;
  std::string detail;
  std::string counterexample;
  double seconds = 0.0;
};

struct ClaimReport {
  std::string claim;
  std::string description;
  std::vector<InstanceResult> instances;
  std::size_t skipped = 0;
  double seconds = 0.0;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

// Claim identifiers used in reports.
inline constexpr const char* kClaimPowerProduct = "power-product";
inline constexpr const char* kClaimCartesianObstruction = "cartesian-obstruction";
inline constexpr const char* kClaimExponentProgression = "exponent-progression";
inline constexpr const char* kClaimClassicalProducts = "classical-products";

/// P(g1 x g2) is labelled-equal to the generalized product of P(g1) and
/// P(g2) under their power weights.
InstanceResult check_power_product(const FiniteGroup& g1, const FiniteGroup& g2);

/// For nontrivial g1, g2: P(g1 x g2) is not isomorphic to the cartesian
/// product P(g1) [] P(g2), the cartesian product has no universal vertex and
/// the power graph has one.
InstanceResult check_cartesian_obstruction(const FiniteGroup& g1, const FiniteGroup& g2);

/// For every ordered pair (a, b): {m in [1, 3 o(a)] : a^m = b} equals the
/// members of AP(W(a, b)) in that window.
InstanceResult check_exponent_progression(const FiniteGroup& g);

/// The generalized product with the classical weightings equals the direct,
/// cartesian and normal products of a and b.
InstanceResult check_classical_products(const SimpleGraph& a, const SimpleGraph& b);

/// Random graph on `vertices` vertices with each edge present with
/// probability 1/2. Uses only raw engine output, so a given seed produces
/// the same graph on every platform.
SimpleGraph random_graph(std::size_t vertices, std::mt19937_64& rng);

struct NamedGroup {
  std::string spec;
  FiniteGroup group;
};

/// C1..C12, C2xC2, C2xC4, D3, D4, D5, Q8, S3, S4, keeping those with order
/// at most max_order.
std::vector<NamedGroup> builtin_family(std::size_t max_order);

struct VerifyOptions {
  std::size_t max_order = 36;
  std::uint64_t seed = 0;
  std::size_t random_pairs = 50;
  std::size_t random_max_vertices = 8;
};

/// Runs every claim over the built-in family: all ordered pairs with
/// product order <= max_order for the power-product and cartesian claims,
/// each family member for the exponent claim, and `random_pairs` seeded
/// random graph pairs for the classical-product claim.
std::vector<ClaimReport> verify_all(const VerifyOptions& options);

/// Deterministic text summary (no timings). With `verbose`, one line per
/// instance follows each claim's summary line; failures are always listed
/// with their counterexamples.
std::string format_reports(const std::vector<ClaimReport>& reports, bool verbose = false);

}  // namespace powergraph
