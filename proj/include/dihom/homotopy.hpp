#pragma once

#include "dihom/digraph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace dihom {

struct Fold {
    int v;  // removed vertex
    int w;  // its image
    bool operator==(const Fold&) const = default;
};

// Lexicographically smallest (v, w), v != w, with in(v) ⊆ in(w) and
// out(v) ⊆ out(w).
std::optional<Fold> find_fold(const Digraph& G);
std::vector<Fold> all_folds(const Digraph& G);
// Deletes v, compacting labels. Throws InvalidFold.
Digraph fold(const Digraph& G, int v, int w);

struct StiffReduction {
    Digraph result;
    std::vector<Fold> trace;     // in the labels of the graph folded at each step
    std::vector<int> survivors;  // original label of each result vertex
};

// Folds until stiff; lexicographic choices, or uniformly random ones when a
// seed is given.
StiffReduction stiff_reduction(const Digraph& G, std::optional<std::uint64_t> seed = std::nullopt);
bool is_dismantlable(const Digraph& G);

enum class HomotopyRelation { Bi, Di, Line };

bool bihomotopic(const VertexMap& f, const VertexMap& g, const Digraph& G, const Digraph& H);
bool dihomotopic(const VertexMap& f, const VertexMap& g, const Digraph& G, const Digraph& H);
bool line_homotopic(const VertexMap& f, const VertexMap& g, const Digraph& G, const Digraph& H);
bool homotopic(HomotopyRelation r, const VertexMap& f, const VertexMap& g, const Digraph& G, const Digraph& H);

struct HomotopyClasses {
    std::vector<VertexMap> maps;                    // Hom(G,H) in lexicographic order
    std::vector<std::vector<std::size_t>> classes;  // sorted, ordered by first member
    // Raw reachability: reach[i][j] when maps[j] is reachable from maps[i].
    std::vector<std::vector<bool>> reach;
};

// Classes of the equivalence closure of the chosen reachability.
HomotopyClasses homotopy_classes(const Digraph& G, const Digraph& H, HomotopyRelation r);

struct DismantlabilityReport {
    bool dismantlable = false;
    std::vector<bool> connected;  // per witness, then G itself, then the looped vertex
    bool all_connected = true;
    bool consistent = true;       // dismantlable == all_connected
};

DismantlabilityReport dismantlable_iff_connected_check(const Digraph& G, const std::vector<Digraph>& witnesses);

} // namespace dihom
