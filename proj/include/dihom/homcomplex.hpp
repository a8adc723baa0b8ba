#pragma once

#include "dihom/complexes.hpp"
#include "dihom/digraph.hpp"
#include "dihom/homology.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace dihom {

inline constexpr std::size_t default_cell_cap = 1'000'000;

using CellView = std::span<const VertexSet>;

// Throws ShapeMismatch when alpha does not assign subsets of V(H) to V(G).
bool is_multihom(CellView alpha, const Digraph& G, const Digraph& H);

// Cell of Hom(G,H): a nonempty subset of V(H) per vertex of G.
class MultiHom {
public:
    // Throws NotAHomomorphism unless the assignment is a multihomomorphism.
    MultiHom(std::vector<VertexSet> assignments, const Digraph& G, const Digraph& H);

    const std::vector<VertexSet>& assignments() const { return sets_; }
    VertexSet operator[](std::size_t v) const { return sets_[v]; }
    std::size_t size() const { return sets_.size(); }
    int dimension() const;

    bool operator==(const MultiHom&) const = default;

private:
    std::vector<VertexSet> sets_;
};

std::string to_string(CellView alpha);
int cell_dimension(CellView alpha);

// Visits every multihomomorphism (in search order, not sorted); stops early
// when visit returns false.
void for_each_multihom(const Digraph& G, const Digraph& H, const std::function<bool(CellView)>& visit);

// All cells of Hom(G,H), sorted lexicographically by their subset sequences.
class HomPoset {
public:
    HomPoset(Digraph G, Digraph H, std::vector<VertexSet> flat_cells);

    const Digraph& source() const { return G_; }
    const Digraph& target() const { return H_; }
    std::size_t size() const { return stride_ == 0 ? empty_map_cells_ : data_.size() / stride_; }
    CellView cell(std::size_t i) const;
    MultiHom multihom(std::size_t i) const;
    // Index of alpha, or size() if alpha is not a cell.
    std::size_t index_of(CellView alpha) const;
    int dimension(std::size_t i) const { return cell_dimension(cell(i)); }
    int dimension() const;

    // Cell counts per dimension.
    std::vector<std::size_t> census() const;
    long long euler_characteristic() const;

    Poset to_poset() const;
    // Cellular chains of the polyhedral complex, augmented in degree -1.
    ChainComplex cellular_chain_complex() const;

private:
    Digraph G_;
    Digraph H_;
    std::size_t stride_;
    std::size_t empty_map_cells_ = 0;
    std::vector<VertexSet> data_;
};

HomPoset hom_poset(const Digraph& G, const Digraph& H, std::size_t cap = default_cell_cap);

HomologyGroups cellular_homology(const HomPoset& P);
// Reduced homology of Hom(G,H): each weak component of G is handled on its
// own and the factors are combined with the Künneth formula.
HomologyGroups hom_homology(const Digraph& G, const Digraph& H, std::size_t cap = default_cell_cap);

// 1-skeleton of Hom(G,H) on the homomorphisms.
struct HomGraph {
    std::vector<VertexMap> nodes;                   // lexicographic
    std::vector<std::vector<std::uint32_t>> adjacency;
    std::vector<std::size_t> component;             // component id per node
    std::size_t component_count = 0;

    std::size_t edge_count() const;
    std::size_t index_of(const VertexMap& f) const;  // nodes.size() if absent
    // Nonempty and in one piece.
    bool connected() const { return !nodes.empty() && component_count == 1; }
};

HomGraph hom_one_skeleton(const Digraph& G, const Digraph& H);

// The closure ν(X) = out(in(X)) on the face poset of the out-neighbourhood
// complex.
struct NuClosure {
    SimplicialComplex complex;
    std::vector<Simplex> faces;      // face_poset element order
    std::vector<std::size_t> nu;     // element -> element
    std::vector<std::size_t> image;  // sorted fixed points
    Poset image_poset;               // ordered by inclusion
    int image_dimension = -1;        // dimension of its order complex
};

NuClosure closure_nu(const Digraph& G);

struct StaircaseCell {
    std::vector<VertexSet> blocks;                 // S(1), ..., S(m)
    std::vector<std::pair<int, int>> tree_edges;   // (i, a) with a in S(i) - i
    bool certified = false;
};

// Checks the ordering condition and that the shifted blocks form a
// noncrossing spanning tree of the complete bipartite graph K_{m, n-m+1}.
bool staircase_certificate(const std::vector<VertexSet>& blocks, int n,
                           std::vector<std::pair<int, int>>* tree = nullptr);

// Maximal cells of Hom between transitive tournaments on m <= n vertices.
std::vector<StaircaseCell> staircase_cells(int m, int n);

} // namespace dihom
