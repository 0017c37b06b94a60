#include "ofg/graph_export.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ofg/errors.hpp"

namespace ofg {

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "dot") return GraphFormat::Dot;
  if (name == "json") return GraphFormat::Json;
  if (name == "csv") return GraphFormat::Csv;
  throw ValidationError(ErrorCode::BadFormat,
                        "unknown graph format '" + std::string(name) +
                            "' (expected dot, json, or csv)");
}

namespace {

std::string to_dot(const FlipGraph& g) {
  std::ostringstream os;
  os << "graph " << (g.name.empty() ? "ofg" : g.name) << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    os << "  \"" << g.vertex(v).str() << "\";\n";
  for (const FlipGraph::Edge& e : g.edges)
    os << "  \"" << g.vertex(e.u).str() << "\" -- \"" << g.vertex(e.v).str()
       << "\" [label=\"" << e.face << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const FlipGraph& g) {
  nlohmann::ordered_json doc;
  doc["degree"] = g.degree;
  doc["multigraph"] = g.multigraph;
  nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
  for (int v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.vertex(v).str());
  doc["vertices"] = std::move(vertices);
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const FlipGraph::Edge& e : g.edges)
    edges.push_back({e.u, e.v, e.face});
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

std::string to_csv(const FlipGraph& g) {
  std::ostringstream os;
  os << "u_mv,v_mv,face\n";
  for (const FlipGraph::Edge& e : g.edges)
    os << g.vertex(e.u).str() << ',' << g.vertex(e.v).str() << ',' << e.face
       << '\n';
  return os.str();
}

}  // namespace

std::string export_graph(const FlipGraph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::Dot: return to_dot(g);
    case GraphFormat::Json: return to_json(g);
    case GraphFormat::Csv: return to_csv(g);
  }
  throw ValidationError(ErrorCode::BadFormat, "unknown graph format selector");
}

FlipGraph graph_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(ErrorCode::BadFormat,
                          std::string("graph document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("degree") || !doc.contains("vertices") ||
      !doc.contains("edges"))
    throw ValidationError(ErrorCode::BadFormat,
                          "graph document needs degree, vertices, edges");

  FlipGraph g;
  g.degree = doc["degree"].get<int>();
  g.multigraph = doc.value("multigraph", false);
  g.name = "ofg_a" + std::to_string(g.degree);

  for (const auto& v : doc["vertices"]) {
    MVAssignment mv = MVAssignment::from_string(v.get<std::string>());
    if (mv.degree() != g.degree)
      throw ValidationError(ErrorCode::DegreeMismatch,
                            "vertex " + mv.str() + " does not match degree " +
                                std::to_string(g.degree));
    g.vertex_masks.push_back(mv.mask());
  }
  if (!std::is_sorted(g.vertex_masks.begin(), g.vertex_masks.end()))
    throw ValidationError(ErrorCode::BadFormat,
                          "graph vertices must be ascending by packed value");

  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 3)
      throw ValidationError(ErrorCode::BadFormat,
                            "each edge must be a [u, v, face] triple");
    FlipGraph::Edge edge{e[0].get<std::int32_t>(), e[1].get<std::int32_t>(),
                         e[2].get<std::int32_t>()};
    if (edge.u < 0 || edge.u >= g.vertex_count() || edge.v < 0 ||
        edge.v >= g.vertex_count() || edge.face < 1 || edge.face > g.degree)
      throw ValidationError(ErrorCode::BadFormat, "edge endpoint out of range");
    g.edges.push_back(edge);
  }
  return g;
}

}  // namespace ofg
