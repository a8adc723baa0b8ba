#pragma once

#include "dihom/digraph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dihom {

// {"vertices": n, "edges": [[u, v], ...], "labels": [...]}; loops as [v, v].
struct GraphFile {
    Digraph graph;
    std::vector<std::string> labels;  // empty when absent
};

// Throws ParseError with the line and column of the offending token.
GraphFile parse_graph_file(std::string_view text);
Digraph parse_digraph(std::string_view text);
// Edges in sorted order, one line.
std::string emit_digraph(const Digraph& G, const std::vector<std::string>& labels = {});

// "0,3,2" -> VertexMap.
VertexMap parse_vertex_map(std::string_view text);

// Named family or a graph file path: Cn cycle, Kn transitive tournament,
// Ln directed path, In and Jn the bidirected and directed looped intervals,
// Rn rotational tournament, Sn sphere tournament, ONE the looped vertex.
Digraph resolve_graph(const std::string& spec);

} // namespace dihom
