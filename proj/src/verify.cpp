#include "powergraph/verify.hpp"

#include <chrono>
#include <cstdio>

#include "powergraph/power_graph.hpp"
#include "powergraph/products.hpp"

namespace powergraph {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_edges(const SimpleGraph& labels_from, const std::vector<Edge>& edges) {
  std::string out;
  for (const auto& [u, v] : edges) {
    if (!out.empty()) out += " ";
    out += "{" + labels_from.label(u) + "," + labels_from.label(v) + "}";
  }
  return out;
}

std::string format_set(const std::vector<std::uint64_t>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out + "}";
}

// Compares two graphs on the same vertex set and fills the result.
void compare_labeled(InstanceResult& result, const std::string& what, const SimpleGraph& expected,
                     const SimpleGraph& actual) {
  if (graphs_equal_labeled(expected, actual)) return;
  result.passed = false;
  if (!result.counterexample.empty()) result.counterexample += "; ";
  if (expected.vertex_count() != actual.vertex_count()) {
    result.counterexample += what + ": vertex counts " + std::to_string(expected.vertex_count()) +
                             " vs " + std::to_string(actual.vertex_count());
    return;
  }
  result.counterexample +=
      what + ": edges in exactly one side: " +
      format_edges(expected, edge_symmetric_difference(expected, actual));
}

}  // namespace

std::size_t ClaimReport::failures() const {
  std::size_t n = 0;
  for (const auto& inst : instances) n += inst.passed ? 0 : 1;
  return n;
}

InstanceResult check_power_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const auto start = Clock::now();
  InstanceResult result;
  result.instance = g1.name() + " , " + g2.name();

  const auto left = power_graph_bundle(g1);
  const auto right = power_graph_bundle(g2);
  const SimpleGraph expected = power_graph(direct_product(g1, g2));
  const SimpleGraph actual =
      generalized_product_graph(left.graph, left.weights, right.graph, right.weights);

  result.detail = "power graph edges " + std::to_string(expected.edge_count()) +
                  ", generalized product edges " + std::to_string(actual.edge_count());
  compare_labeled(result, "power graph vs generalized product", expected, actual);
  result.seconds = seconds_since(start);
  return result;
}

InstanceResult check_cartesian_obstruction(const FiniteGroup& g1, const FiniteGroup& g2) {
  const auto start = Clock::now();
  InstanceResult result;
  result.instance = g1.name() + " , " + g2.name();

  const SimpleGraph power = power_graph(direct_product(g1, g2));
  const SimpleGraph cartesian = cartesian_product_graph(power_graph(g1), power_graph(g2));
  const auto witness = find_isomorphism(power, cartesian);
  const bool cartesian_universal = has_universal_vertex(cartesian);
  const bool power_universal = has_universal_vertex(power);

  result.detail = "power graph edges " + std::to_string(power.edge_count()) +
                  ", cartesian edges " + std::to_string(cartesian.edge_count());
  if (witness) {
    result.passed = false;
    std::string map;
    for (std::size_t v = 0; v < witness->size(); ++v)
      map += (v ? " " : "") + std::to_string((*witness)[v]);
    result.counterexample = "isomorphism found: " + map;
  }
  if (cartesian_universal) {
    result.passed = false;
    result.counterexample += std::string(result.counterexample.empty() ? "" : "; ") +
                             "cartesian product has a universal vertex";
  }
  if (!power_universal) {
    result.passed = false;
    result.counterexample += std::string(result.counterexample.empty() ? "" : "; ") +
                             "power graph has no universal vertex";
  }
  result.seconds = seconds_since(start);
  return result;
}

InstanceResult check_exponent_progression(const FiniteGroup& g) {
  const auto start = Clock::now();
  InstanceResult result;
  result.instance = g.name();
  const auto weights = power_weights(g);
  std::size_t pairs = 0;
  for (Element a = 0; a < g.order(); ++a) {
    const std::uint64_t window = 3ULL * g.element_order(a);
    for (Element b = 0; b < g.order(); ++b) {
      ++pairs;
      const auto brute = exponent_set_window(g, a, b, window);
      const ApPair w = weights.at(a, b);
      std::vector<std::uint64_t> predicted;
      for (std::uint64_t m = 1; m <= window; ++m)
        if (ap_contains(w, m)) predicted.push_back(m);
      if (brute != predicted && result.passed) {
        result.passed = false;
        result.counterexample = "a=" + g.label(a) + " b=" + g.label(b) + " W=" + to_string(w) +
                                " exponents " + format_set(brute) + " progression " +
                                format_set(predicted);
      }
    }
  }
  result.detail = std::to_string(pairs) + " ordered pairs";
  result.seconds = seconds_since(start);
  return result;
}

InstanceResult check_classical_products(const SimpleGraph& a, const SimpleGraph& b) {
  const auto start = Clock::now();
  InstanceResult result;
  result.instance = std::to_string(a.vertex_count()) + "v/" + std::to_string(a.edge_count()) +
                    "e , " + std::to_string(b.vertex_count()) + "v/" +
                    std::to_string(b.edge_count()) + "e";

  using K = ClassicalWeightKind;
  compare_labeled(result, "direct", direct_product_graph(a, b),
                  generalized_product_graph(a, classical_weights(K::Direct, a), b,
                                            classical_weights(K::Direct, b)));
  compare_labeled(result, "cartesian", cartesian_product_graph(a, b),
                  generalized_product_graph(a, classical_weights(K::CartesianLeft, a), b,
                                            classical_weights(K::CartesianRight, b)));
  compare_labeled(result, "normal", normal_product_graph(a, b),
                  generalized_product_graph(a, classical_weights(K::Normal, a), b,
                                            classical_weights(K::Normal, b)));
  result.seconds = seconds_since(start);
  return result;
}

SimpleGraph random_graph(std::size_t vertices, std::mt19937_64& rng) {
  SimpleGraph g(vertices);
  for (Vertex u = 0; u < vertices; ++u)
    for (Vertex v = u + 1; v < vertices; ++v)
      if (rng() >> 63) g.add_edge(u, v);
  return g;
}

std::vector<NamedGroup> builtin_family(std::size_t max_order) {
  std::vector<NamedGroup> family;
  auto add = [&](FiniteGroup g) {
    if (g.order() <= max_order) {
      std::string name = g.name();
      family.push_back({std::move(name), std::move(g)});
    }
  };
  for (std::size_t n = 1; n <= 12; ++n) add(cyclic(n));
  add(direct_product(cyclic(2), cyclic(2)));
  add(direct_product(cyclic(2), cyclic(4)));
  for (std::size_t n = 3; n <= 5; ++n) add(dihedral(n));
  add(quaternion8());
  add(symmetric(3));
  add(symmetric(4));
  return family;
}

std::vector<ClaimReport> verify_all(const VerifyOptions& options) {
  const auto family = builtin_family(options.max_order);

  ClaimReport power{kClaimPowerProduct,
                    "P(G1 x G2) equals the generalized product of P(G1), P(G2) under power weights",
                    {}, 0, 0.0};
  ClaimReport cartesian{kClaimCartesianObstruction,
                        "P(G1 x G2) is not isomorphic to P(G1) [] P(G2) for nontrivial G1, G2",
                        {}, 0, 0.0};
  ClaimReport progression{kClaimExponentProgression,
                          "{m : a^m = b} is the progression AP(W(a, b))", {}, 0, 0.0};
  ClaimReport classical{kClaimClassicalProducts,
                        "classical weightings reproduce direct, cartesian and normal products",
                        {}, 0, 0.0};

  for (const auto& left : family) {
    for (const auto& right : family) {
      if (left.group.order() * right.group.order() > options.max_order) continue;
      power.instances.push_back(check_power_product(left.group, right.group));
      if (left.group.order() == 1 || right.group.order() == 1) {
        ++cartesian.skipped;
        continue;
      }
      cartesian.instances.push_back(check_cartesian_obstruction(left.group, right.group));
    }
    progression.instances.push_back(check_exponent_progression(left.group));
  }

  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.random_pairs; ++i) {
    const std::size_t na = 1 + rng() % options.random_max_vertices;
    const std::size_t nb = 1 + rng() % options.random_max_vertices;
    const SimpleGraph a = random_graph(na, rng);
    const SimpleGraph b = random_graph(nb, rng);
    auto result = check_classical_products(a, b);
    result.instance = "#" + std::to_string(i) + " " + result.instance;
    classical.instances.push_back(std::move(result));
  }

  std::vector<ClaimReport> reports{std::move(power), std::move(cartesian), std::move(progression),
                                   std::move(classical)};
  for (auto& r : reports)
    for (const auto& inst : r.instances) r.seconds += inst.seconds;
  return reports;
}

std::string format_reports(const std::vector<ClaimReport>& reports, bool verbose) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-24s %9s %7s %7s %8s\n", "claim", "instances", "passed",
                "failed", "skipped");
  out += line;
  std::size_t total_failures = 0;
  for (const auto& r : reports) {
    const std::size_t failed = r.failures();
    total_failures += failed;
    std::snprintf(line, sizeof line, "%-24s %9zu %7zu %7zu %8zu\n", r.claim.c_str(),
                  r.instances.size(), r.instances.size() - failed, failed, r.skipped);
    out += line;
  }
  for (const auto& r : reports) {
    if (!verbose && r.passed()) continue;
    out += "\n" + r.claim + ": " + r.description + "\n";
    for (const auto& inst : r.instances) {
      if (!verbose && inst.passed) continue;
      out += std::string("  [") + (inst.passed ? "pass" : "FAIL") + "] " + inst.instance;
      if (!inst.detail.empty()) out += ": " + inst.detail;
      out += "\n";
      if (!inst.passed) out += "    counterexample: " + inst.counterexample + "\n";
    }
  }
  out += std::string("\nresult: ") + (total_failures == 0 ? "PASS" : "FAIL") + " (" +
         std::to_string(total_failures) + " failing instances)\n";
  return out;
}

}  // namespace powergraph
