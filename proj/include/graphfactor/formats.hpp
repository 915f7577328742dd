#pragma once

#include <string>
#include <string_view>

#include "graphfactor/graph.hpp"

namespace graphfactor {

enum class Graph6Fault { BadHeader, Truncated, TrailingGarbage };

struct Graph6Error : ParseError {
    Graph6Error(Graph6Fault f, const std::string& what) : ParseError(what), fault(f) {}
    Graph6Fault fault;
};

/// Decode one graph6 line (simple graphs, n <= 62). Upper-triangle
/// column-major bit order, 6-bit chunks offset by 63.
Multigraph parse_graph6(std::string_view text);

/// Encode a simple graph (no loops, all multiplicities 1, n <= 62) as graph6.
std::string emit_graph6(const Multigraph& g);

/// Edge-list text: first non-comment line is n, then "u v" or "u v mult"
/// lines; '#' starts a comment; u == v is a loop. Repeated pairs accumulate.
Multigraph parse_edge_list(std::string_view text);

/// Canonical edge-list text, parseable by parse_edge_list.
std::string emit_edge_list(const Multigraph& g);

/// DOT text; parallel edges are emitted repeatedly, loops as self-edges.
std::string emit_dot(const Multigraph& g);

} // namespace graphfactor
