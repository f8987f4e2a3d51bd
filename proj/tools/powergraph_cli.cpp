// powergraph: build power graphs of finite groups, take graph products and
// run the verification sweeps.
//
// Exit codes: 0 success or pass, 1 semantic negative (not isomorphic, a
// verification failed), 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "powergraph/graph.hpp"
#include "powergraph/group.hpp"
#include "powergraph/group_spec.hpp"
#include "powergraph/power_graph.hpp"
#include "powergraph/products.hpp"
#include "powergraph/verify.hpp"

namespace pg = powergraph;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

struct CommonOptions {
  std::string format = "edgelist";
  std::size_t max_order = 36;
  std::uint64_t seed = 0;
  bool dump_weights = false;
};

pg::ExportFormat export_format(const std::string& name) {
  if (auto f = pg::parse_export_format(name)) return *f;
  throw CLI::ValidationError("--format", "must be one of dot, edgelist, json");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pg::GraphError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_build(const std::string& spec, const CommonOptions& opt) {
  const auto format = export_format(opt.format);
  auto group = pg::parse_group_spec(spec);
  if (opt.dump_weights) {
    std::cout << pg::dump_weights(pg::power_weights(group));
    return kExitOk;
  }
  std::cout << pg::export_graph(pg::power_graph(group), format);
  return kExitOk;
}

int cmd_product(const std::string& kind_name, const std::string& spec1, const std::string& spec2,
                const CommonOptions& opt) {
  const auto format = export_format(opt.format);
  const auto kind = pg::parse_product_kind(kind_name);
  if (!kind)
    throw CLI::ValidationError("kind", "must be one of direct, cartesian, normal, generalized");
  const auto left = pg::power_graph_bundle(pg::parse_group_spec(spec1));
  const auto right = pg::power_graph_bundle(pg::parse_group_spec(spec2));

  if (opt.dump_weights) {
    std::cout << "# " << left.group.name() << "\n" << pg::dump_weights(left.weights);
    std::cout << "# " << right.group.name() << "\n" << pg::dump_weights(right.weights);
    return kExitOk;
  }

  pg::SimpleGraph result;
  switch (*kind) {
    case pg::ProductKind::Direct: result = pg::direct_product_graph(left.graph, right.graph); break;
    case pg::ProductKind::Cartesian:
      result = pg::cartesian_product_graph(left.graph, right.graph);
      break;
    case pg::ProductKind::Normal: result = pg::normal_product_graph(left.graph, right.graph); break;
    case pg::ProductKind::Generalized:
      result = pg::generalized_product_graph(left.graph, left.weights, right.graph, right.weights);
      break;
  }
  std::cout << pg::export_graph(result, format);
  return kExitOk;
}

int cmd_verify_theorem(const std::string& spec1, const std::string& spec2) {
  const auto g1 = pg::parse_group_spec(spec1);
  const auto g2 = pg::parse_group_spec(spec2);
  pg::ClaimReport report{pg::kClaimPowerProduct,
                         "P(G1 x G2) equals the generalized product of P(G1), P(G2) under power "
                         "weights",
                         {pg::check_power_product(g1, g2)}, 0, 0.0};
  report.seconds = report.instances.front().seconds;
  std::cout << pg::format_reports({report}, /*verbose=*/true);
  std::cerr << "wall time " << report.seconds << " s\n";
  return report.passed() ? kExitOk : kExitNegative;
}

int cmd_verify_all(const CommonOptions& opt, bool verbose) {
  if (opt.max_order > 64)
    throw CLI::ValidationError("--max-order", "verify-all is capped at 64");
  pg::VerifyOptions options;
  options.max_order = opt.max_order;
  options.seed = opt.seed;
  const auto start = std::chrono::steady_clock::now();
  const auto reports = pg::verify_all(options);
  std::cout << pg::format_reports(reports, verbose);
  for (const auto& r : reports) std::cerr << r.claim << ": " << r.seconds << " s\n";
  std::cerr << "wall time "
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
            << " s\n";
  for (const auto& r : reports)
    if (!r.passed()) return kExitNegative;
  return kExitOk;
}

int cmd_iso(const std::string& file1, const std::string& file2) {
  const auto a = pg::import_json_graph(read_file(file1));
  const auto b = pg::import_json_graph(read_file(file2));
  const auto witness = pg::find_isomorphism(a, b);
  if (!witness) {
    std::cout << "not isomorphic\n";
    return kExitNegative;
  }
  std::cout << "isomorphic\n";
  for (pg::Vertex v = 0; v < witness->size(); ++v)
    std::cout << a.label(v) << " -> " << b.label((*witness)[v]) << "\n";
  return kExitOk;
}

int cmd_stats(const std::string& spec) {
  const auto group = pg::parse_group_spec(spec);
  const auto graph = pg::power_graph(group);
  std::map<std::uint32_t, std::size_t> order_counts;
  for (auto o : group.element_orders()) ++order_counts[o];
  std::size_t universal = 0;
  for (pg::Vertex v = 0; v < graph.vertex_count(); ++v)
    if (graph.degree(v) + 1 == graph.vertex_count()) ++universal;

  std::cout << "group: " << group.name() << "\n";
  std::cout << "order: " << group.order() << "\n";
  std::cout << "identity: " << group.label(group.identity()) << "\n";
  std::cout << "element orders:";
  for (const auto& [o, count] : order_counts) std::cout << " " << o << ":" << count;
  std::cout << "\n";
  std::cout << "power graph vertices: " << graph.vertex_count() << "\n";
  std::cout << "power graph edges: " << graph.edge_count() << "\n";
  std::cout << "universal vertices: " << universal << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power graphs of finite groups and their graph products"};
  app.require_subcommand(1);
  app.footer(
      "Group expressions: C<n> | D<n> | S<n> | Q8 | cayley:<path>, joined by 'x' for direct "
      "products (left-associative; a cayley atom must come last). D<n> has order 2n.");

  CommonOptions opt;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format: dot, edgelist or json")
        ->capture_default_str();
  };

  std::string spec1, spec2, kind, file1, file2;
  bool verbose = false;

  auto* build = app.add_subcommand("build", "Print the power graph of a group");
  build->add_option("group", spec1, "Group expression")->required();
  add_format(build);
  build->add_flag("--dump-weights", opt.dump_weights, "Print the power weight table instead");

  auto* product = app.add_subcommand("product", "Print a product of two power graphs");
  product->add_option("kind", kind, "direct, cartesian, normal or generalized")->required();
  product->add_option("left", spec1, "Left group expression")->required();
  product->add_option("right", spec2, "Right group expression")->required();
  add_format(product);
  product->add_flag("--dump-weights", opt.dump_weights, "Print both power weight tables instead");

  auto* verify_theorem = app.add_subcommand(
      "verify-theorem", "Check P(G1 x G2) against the generalized product of P(G1) and P(G2)");
  verify_theorem->add_option("left", spec1, "Left group expression")->required();
  verify_theorem->add_option("right", spec2, "Right group expression")->required();

  auto* verify_all = app.add_subcommand("verify-all", "Run every verification sweep");
  verify_all->add_option("--max-order", opt.max_order, "Largest product order to sweep (<= 64)")
      ->capture_default_str();
  verify_all->add_option("--seed", opt.seed, "Seed for the random graph pairs")
      ->capture_default_str();
  verify_all->add_flag("--verbose", verbose, "List every instance");

  auto* iso = app.add_subcommand("iso", "Test two JSON graphs for isomorphism");
  iso->add_option("first", file1, "JSON graph file")->required();
  iso->add_option("second", file2, "JSON graph file")->required();

  auto* stats = app.add_subcommand("stats", "Summarize a group and its power graph");
  stats->add_option("group", spec1, "Group expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*build) return cmd_build(spec1, opt);
    if (*product) return cmd_product(kind, spec1, spec2, opt);
    if (*verify_theorem) return cmd_verify_theorem(spec1, spec2);
    if (*verify_all) return cmd_verify_all(opt, verbose);
    if (*iso) return cmd_iso(file1, file2);
    if (*stats) return cmd_stats(spec1);
  } catch (const pg::SpecParseError& e) {
    std::cerr << "error: bad group expression " << e.what() << "\n";
  } catch (const pg::GroupError& e) {
    std::cerr << "error: " << pg::to_string(e.kind()) << ": " << e.what() << "\n";
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}
