#pragma once

#include "dihom/digraph.hpp"

#include <cstddef>
#include <vector>

namespace dihom {

// Connectivity of the 1-skeleton of Hom(G,H). Throws EmptyHom.
bool is_connected_hom(const Digraph& G, const Digraph& H);
// Largest distance in that 1-skeleton. Throws EmptyHom or Disconnected.
std::size_t diameter(const Digraph& G, const Digraph& H);

// Path f -> min(f,g) -> g in Hom(G, K_n): first lowers the vertices where g
// is smaller, by increasing g value, then raises those where f is smaller.
// Its length is the number of vertices where f and g differ.
std::vector<VertexMap> meet_path(const VertexMap& f, const VertexMap& g, const Digraph& G, int n);

struct OrientedColoring {
    int chromatic_number = 0;
    Digraph witness;  // first tournament of that size admitting a map
    VertexMap map;    // first homomorphism into it
};

// Searches tournaments of increasing size up to 7. Throws HasLoop, or
// SizeCapExceeded when no tournament on 7 vertices suffices.
OrientedColoring oriented_chromatic_number(const Digraph& G);

} // namespace dihom
