#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tetrasym/graph.hpp"

namespace tetrasym {

enum class GraphFormat { edges, dot, json };

GraphFormat parse_graph_format(std::string_view s);

/// One "u v" line per edge, u < v, sorted.
void write_edge_list(std::ostream& out, const Graph& g);
/// Undirected DOT; labels become node labels when present.
void write_dot(std::ostream& out, const Graph& g, std::string_view name = "G");
/// {"n": ..., "edges": [[u, v], ...], "labels": [...]}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

void write_graph(std::ostream& out, const Graph& g, GraphFormat format);
std::string format_graph(const Graph& g, GraphFormat format);

/// Reads "u v" lines; the vertex count is one more than the largest index
/// unless given.
Graph read_edge_list(std::istream& in, std::size_t n = 0);

}  // namespace tetrasym
