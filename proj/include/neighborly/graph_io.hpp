#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "neighborly/graph.hpp"

namespace neighborly::io {

// graph6 (McKay), header-less. Throws ParseError with the byte offset.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);
/// One graph per non-empty line; a leading ">>graph6<<" header is skipped.
std::vector<Graph> read_graph6_stream(std::string_view text);

// DIMACS graph: "p edge n m" then "e u v" lines, 1-indexed; "c" comments.
std::string to_dimacs_graph(const Graph& g);
Graph from_dimacs_graph(std::string_view text);

// JSON edge list: {"n": int, "edges": [[u,v],...], "roles": {"v": "tag", ...}}.
// Roles are emitted only for non-plain tags.
std::string to_json(const Graph& g);
Graph from_json(std::string_view text);

enum class GraphFormat { Graph6, Dimacs, Json };

/// Guesses the format from the first non-space character.
GraphFormat detect_graph_format(std::string_view text);
Graph parse_graph(std::string_view text, GraphFormat format);
Graph parse_graph(std::string_view text);
std::string emit_graph(const Graph& g, GraphFormat format);

} // namespace neighborly::io
