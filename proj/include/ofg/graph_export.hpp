#ifndef OFG_GRAPH_EXPORT_HPP
#define OFG_GRAPH_EXPORT_HPP

#include <string>
#include <string_view>

#include "ofg/flip_graph.hpp"

namespace ofg {

enum class GraphFormat { Dot, Json, Csv };

GraphFormat parse_graph_format(std::string_view name);

// Deterministic exporters: vertices ascending by mask, edges presorted.
//   dot:  graph <name> { "MMMV"; ... "MMMV" -- "MVVV" [label="2"]; ... }
//   json: {"degree":..,"multigraph":..,"vertices":[..],"edges":[[u,v,face],..]}
//         with u, v indices into the vertices array
//   csv:  header u_mv,v_mv,face then one edge per row
std::string export_graph(const FlipGraph& g, GraphFormat format);

FlipGraph graph_from_json(const std::string& text);

}  // namespace ofg

#endif  // OFG_GRAPH_EXPORT_HPP
