#pragma once

#include "dihom/digraph.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace dihom {

// Edges i -> j for all i < j.
Digraph transitive_tournament(int n);
// 0 -> 1 -> ... -> n-1.
Digraph directed_path(int n);
// 0 -> 1 -> ... -> n-1 -> 0, n >= 3.
Digraph directed_cycle(int n);
// Looped path on 0..n with both orientations of every step.
Digraph interval_bidirected(int n);
// Looped path on 0..n with forward steps only.
Digraph interval_directed_looped(int n);
// Looped path on 0..n; forward[i] orients the step between i and i+1.
Digraph line_digraph(int n, const std::vector<bool>& forward);
// m + n vertices, all edges from the first block to the second.
Digraph complete_bipartite_digraph(int m, int n);
Digraph looped_vertex();
// i -> i-1, ..., i-(n-1)/2 modulo n, n odd.
Digraph rotational_tournament(int n);

// Three-vertex interval used by the Mycielski construction of the given
// variant.
Digraph mycielski_interval(int variant);
// Variants 1 and 2 have layers (g,0) as 0..n-1, (g,1) as n..2n-1 and the
// identified top layer as 2n. Variant 3 has the bottom class as 0, (g,1) as
// 1..n and the top class as n+1.
Digraph mycielskian(const Digraph& G, int variant);

// Tournament on 2n+3 vertices whose out-neighbourhood complex is an n-sphere.
Digraph sphere_tournament(int n);

// Homotopy hierarchy example: G is a bidirected edge, H the 6-vertex target.
std::pair<Digraph, Digraph> homotopy_hierarchy_fixture();

// Canonical relabeling: lexicographically minimal adjacency bit string over
// all vertex orders, bits read in growing-square order
// (v,v), then (i,v), (v,i) for i < v. Requires at most 8 vertices.
Digraph canonical_form(const Digraph& G);
std::uint64_t canonical_code(const Digraph& G);

bool is_isomorphic(const Digraph& G, const Digraph& H);
std::uint64_t automorphism_group_order(const Digraph& G);

// One canonical representative per isomorphism class, sorted by code.
std::vector<Digraph> enumerate_tournaments(int n);

// Every digraph on n labeled vertices; loops optional.
std::vector<Digraph> all_digraphs(int n, bool with_loops);
// Loopless digraphs with at most one edge per unordered pair.
std::vector<Digraph> all_simple_digraphs(int n);

} // namespace dihom
