#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "graph.hpp"

namespace tokenslide {

/// Parses one graph6 line. Accepts an optional ">>graph6<<" header and the
/// long (63+ vertices) size prefix.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// Non-empty lines of a graph6 file, one graph each.
std::vector<Graph> parse_graph6_lines(std::string_view text);

/// {"n": int, "edges": [[u,v],...], "names": [...]} with edges sorted.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

std::string export_dot(const Graph& g, std::string_view name = "G");

}  // namespace tokenslide
