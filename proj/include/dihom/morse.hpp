#pragma once

#include "dihom/complexes.hpp"
#include "dihom/homcomplex.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace dihom {

// Partial matching of a poset along covering relations; elements are poset
// indices.
struct Matching {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (lower, upper)
    std::vector<std::size_t> critical;                       // sorted
};

// Throws InvalidMatching unless every pair is a cover, no element is used
// twice and pairs plus critical cells partition P.
void validate_matching(const Poset& P, const Matching& M);

// No directed cycle in the Hasse diagram with matched covers pointing up and
// all others pointing down.
bool is_acyclic_matching(const Poset& P, const Matching& M);

// Sink layers of an acyclic digraph: layer 0 holds the sinks of G, layer 1
// the sinks of what remains, and so on. Throws NotAcyclic.
std::vector<std::vector<int>> sink_layers(const Digraph& G);

struct TournamentMatching {
    HomPoset poset;
    Matching matching;
};

// Peels sinks layer by layer; layer k is matched on the top value n-1-k,
// sinks within a layer in label order. Throws EmptyHom when Hom(G, K_n) has
// no vertex, which covers every cyclic G.
TournamentMatching tournament_matching(const Digraph& G, int n, std::size_t cap = default_cell_cap);

// Same matching checked without materialising the poset. Cells are packed
// into 64-bit codes, so |V(G)| * n must not exceed 64.
struct MatchingReport {
    std::size_t cells = 0;
    std::size_t pairs = 0;
    std::size_t critical = 0;
    bool consistent = true;   // every partner is a cell matched back
    bool acyclic = true;
    std::vector<VertexSet> critical_cell;  // first critical cell found
};

MatchingReport check_tournament_matching(const Digraph& G, int n);

struct CollapseStep {
    Simplex tau;
    Simplex sigma;
    bool operator==(const CollapseStep&) const = default;
};

enum class CollapseStrategy { Lex, Random };

struct CollapseResult {
    std::vector<CollapseStep> log;
    SimplicialComplex remaining;
};

// tau is a nonempty proper face of the facet sigma and lies in no other facet.
bool is_free_pair(const SimplicialComplex& X, const Simplex& tau, const Simplex& sigma);
// Removes every face between tau and sigma. Throws InvalidMatching unless
// (tau, sigma) is free.
SimplicialComplex collapse(const SimplicialComplex& X, const Simplex& tau, const Simplex& sigma);

// Replays the given steps, then collapses free pairs until none is left.
// Lex takes the first facet with a free face and its smallest such face.
CollapseResult collapse_free_pairs(const SimplicialComplex& X, CollapseStrategy strategy = CollapseStrategy::Lex,
                                   std::uint64_t seed = 0, const std::vector<CollapseStep>& replay = {});

// Greedy random collapses; when stuck a random top-dimensional face is
// removed as critical. Returns critical counts per dimension.
std::vector<std::size_t> random_discrete_morse(const SimplicialComplex& X, std::uint64_t seed,
                                               std::size_t cap = default_face_cap);

} // namespace dihom
