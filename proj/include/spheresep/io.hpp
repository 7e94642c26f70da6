#pragma once

// Text formats: arrangement JSON, edge lists, covers, minor models,
// separator id lists. Parse failures throw Error with kParse and, for JSON
// syntax errors, the line and column.

#include <string>
#include <vector>

#include "spheresep/asdim.hpp"
#include "spheresep/geometry.hpp"
#include "spheresep/graph.hpp"
#include "spheresep/minors.hpp"

namespace spheresep {

/// {"dim": d, "objects": [{"kind": "sphere", "center": [...], "radius": r} |
///  {"kind": "chord", "normal": [...], "offset": c}], "labels": [...]}
/// with "labels" optional.
Arrangement arrangement_from_json(const std::string& text);
std::string arrangement_to_json(const Arrangement& arr);

/// First line "n m", then m lines "i j [w]" with 0-based ids.
std::string graph_to_edge_list(const Graph& g);
std::string graph_to_edge_list(const WeightedGraph& g);
/// Rejects weights other than 1.
Graph graph_from_edge_list(const std::string& text);
WeightedGraph weighted_graph_from_edge_list(const std::string& text);

/// {"r": r, "D": D, "families": [[[ids...], ...], ...]}
std::string cover_to_json(const Cover& cover);
Cover cover_from_json(const std::string& text);

/// {"h": h, "depth": r, "bags": [[ids...], ...], "roots": [ids...]}
std::string model_to_json(const MinorModel& m);
MinorModel model_from_json(const std::string& text);

/// Vertex ids separated by commas and/or whitespace.
std::vector<Vertex> parse_vertex_list(const std::string& text);

}  // namespace spheresep
