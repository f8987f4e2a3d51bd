#include "powergraph/graph.hpp"

#include <algorithm>
#include <json.hpp>

namespace powergraph {

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_dot(const SimpleGraph& g) {
  std::string out = "graph {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) out += "  " + dot_quote(g.label(v)) + ";\n";
  for (const auto& [u, v] : g.edges())
    out += "  " + dot_quote(g.label(u)) + " -- " + dot_quote(g.label(v)) + ";\n";
  out += "}\n";
  return out;
}

std::string to_edge_list(const SimpleGraph& g) {
  std::vector<std::string> lines;
  lines.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) lines.push_back(g.label(u) + "," + g.label(v));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) out += line + "\n";
  return out;
}

std::string to_json(const SimpleGraph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = g.labels();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges()) doc["edges"].push_back({u, v});
  return doc.dump() + "\n";
}

}  // namespace

std::optional<ExportFormat> parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::Dot;
  if (name == "edgelist") return ExportFormat::EdgeList;
  if (name == "json") return ExportFormat::Json;
  return std::nullopt;
}

std::string export_graph(const SimpleGraph& g, ExportFormat format) {
  switch (format) {
    case ExportFormat::Dot: return to_dot(g);
    case ExportFormat::EdgeList: return to_edge_list(g);
    case ExportFormat::Json: return to_json(g);
  }
  return {};
}

SimpleGraph import_json_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") ||
      !doc["vertices"].is_array() || !doc["edges"].is_array())
    throw GraphError("graph JSON needs \"vertices\" and \"edges\" arrays");

  std::vector<std::string> labels;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw GraphError("vertex labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  const std::size_t n = labels.size();
  SimpleGraph g(n, std::move(labels));
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw GraphError("each edge must be a pair of vertex indices");
    const auto u = e[0].get<std::uint64_t>();
    const auto v = e[1].get<std::uint64_t>();
    if (u >= g.vertex_count() || v >= g.vertex_count())
      throw GraphError("edge index out of range");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

}  // namespace powergraph
