#pragma once

#include "dihom/digraph.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace dihom {

// Sorted, duplicate-free vertex list.
using Simplex = std::vector<int>;

inline constexpr std::size_t default_face_cap = 1'000'000;

// Abstract simplicial complex stored by its facets. The void complex has no
// facets at all; the complex {∅} has the empty simplex as its only facet.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    // Any generating family; faces are normalised and dominated ones dropped.
    explicit SimplicialComplex(std::vector<Simplex> generators);

    // Caller guarantees pairwise incomparable sorted facets.
    static SimplicialComplex from_facets(std::vector<Simplex> facets);
    static SimplicialComplex empty_face();
    // Δ^S and ∂Δ^S on the given vertices.
    static SimplicialComplex simplex(Simplex vertices);
    static SimplicialComplex simplex_boundary(const Simplex& vertices);

    const std::vector<Simplex>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }
    std::vector<int> vertices() const;
    // -1 for {∅}; the void complex reports -2.
    int dimension() const;
    bool contains(const Simplex& face) const;

    // Nonempty faces grouped by dimension, each group sorted
    // lexicographically.
    std::vector<std::vector<Simplex>> faces(std::size_t cap = default_face_cap) const;
    std::size_t face_count(std::size_t cap = default_face_cap) const;

    const std::vector<std::string>& vertex_labels() const { return labels_; }
    void set_vertex_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

    bool operator==(const SimplicialComplex& o) const { return facets_ == o.facets_; }

private:
    std::vector<Simplex> facets_;
    std::vector<std::string> labels_;
};

std::string to_string(const Simplex& s);
std::string to_string(const SimplicialComplex& X);

SimplicialComplex link(const SimplicialComplex& X, const Simplex& sigma);
SimplicialComplex induced_subcomplex(const SimplicialComplex& X, const Simplex& S);
SimplicialComplex suspension(const SimplicialComplex& X);
long long euler_characteristic(const SimplicialComplex& X, std::size_t cap = default_face_cap);

SimplicialComplex out_neighborhood_complex(const Digraph& G);
SimplicialComplex in_neighborhood_complex(const Digraph& G);
SimplicialComplex directed_clique_complex(const Digraph& G);
// Vertices of X keep their labels; facet F adds a vertex pointing into F.
Digraph universality_graph(const SimplicialComplex& X);

// Finite poset kept as its Hasse diagram.
class Poset {
public:
    using Pair = std::pair<std::size_t, std::size_t>;

    Poset() = default;
    // Strict order given as all pairs a < b; checked for irreflexivity and
    // transitivity.
    static Poset from_relation(std::size_t n, const std::vector<Pair>& less_than,
                               std::vector<std::string> labels = {});
    // Covering pairs a ⋖ b of an acyclic relation.
    static Poset from_covers(std::size_t n, const std::vector<Pair>& covers,
                             std::vector<std::string> labels = {});

    std::size_t size() const { return up_.size(); }
    const std::vector<std::size_t>& upper_covers(std::size_t a) const { return up_.at(a); }
    const std::vector<std::size_t>& lower_covers(std::size_t a) const { return down_.at(a); }
    bool covers(std::size_t a, std::size_t b) const;  // a ⋖ b
    bool less(std::size_t a, std::size_t b) const;
    std::vector<std::size_t> minimal_elements() const;
    std::vector<std::size_t> maximal_elements() const;
    const std::vector<std::string>& labels() const { return labels_; }

private:
    std::vector<std::vector<std::size_t>> up_;
    std::vector<std::vector<std::size_t>> down_;
    std::vector<std::string> labels_;
};

Poset product(const Poset& P, const Poset& Q);

// Nonempty faces by inclusion, in the order of SimplicialComplex::faces.
Poset face_poset(const SimplicialComplex& X, std::size_t cap = default_face_cap);
// Vertices are element indices; facets are the maximal chains.
SimplicialComplex order_complex(const Poset& P, std::size_t cap = default_face_cap);

} // namespace dihom
