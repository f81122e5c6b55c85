#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "vertexfreq/graph.hpp"

namespace vertexfreq {

enum class GraphFormat { kEdgeList, kJson, kDot };

/// Parses "edgelist", "json" or "dot". Throws InvalidArgument otherwise.
GraphFormat parse_graph_format(std::string_view name);

/// Edge-list text: first record N, then one "u v" pair per record. '#'
/// starts a comment that runs to the end of the line.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// {"n": N, "edges": [[u, v], ...]} with edges sorted.
Graph read_graph_json(std::istream& in);
std::string graph_to_json(const Graph& g);

/// Undirected DOT: graph { u -- v; }.
std::string graph_to_dot(const Graph& g);

/// Reads a graph in the given format (DOT is export-only).
Graph read_graph(std::istream& in, GraphFormat format);

/// Format implied by a path's extension: .json is JSON, anything else is an
/// edge list.
GraphFormat format_from_path(std::string_view path);

void write_graph(std::ostream& out, const Graph& g, GraphFormat format);

}  // namespace vertexfreq
