#pragma once

#include "dihom/vertex_set.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace dihom {

using Edge = std::pair<int, int>;

// Finite digraph on vertices 0..n-1, loops allowed, at most one edge per
// ordered pair.
class Digraph {
public:
    static constexpr int max_vertices = VertexSet::capacity;

    Digraph() = default;
    explicit Digraph(int n);
    Digraph(int n, std::span<const Edge> edges);
    Digraph(int n, std::initializer_list<Edge> edges);

    int vertex_count() const { return static_cast<int>(out_.size()); }
    std::size_t edge_count() const;
    VertexSet vertices() const { return VertexSet::prefix(vertex_count()); }

    bool has_edge(int u, int v) const;
    // Idempotent; throws InvalidVertex on a bad endpoint.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    VertexSet out_neighbors(int v) const;
    VertexSet in_neighbors(int v) const;
    bool has_loop(int v) const { return has_edge(v, v); }
    VertexSet looped_vertices() const;
    bool is_loopless() const { return looped_vertices().empty(); }

    // Sorted by (source, target).
    std::vector<Edge> edges() const;

    bool operator==(const Digraph& o) const { return out_ == o.out_; }

private:
    void check_vertex(int v) const;

    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
};

std::ostream& operator<<(std::ostream& os, const Digraph& g);

// Vertex map V(G) -> V(H) stored as its image sequence.
class VertexMap {
public:
    VertexMap() = default;
    explicit VertexMap(std::vector<int> image) : image_(std::move(image)) {}
    VertexMap(std::initializer_list<int> image) : image_(image) {}

    std::size_t size() const { return image_.size(); }
    int operator[](std::size_t v) const { return image_[v]; }
    int& operator[](std::size_t v) { return image_[v]; }
    const std::vector<int>& image() const { return image_; }

    auto operator<=>(const VertexMap&) const = default;

private:
    std::vector<int> image_;
};

std::ostream& operator<<(std::ostream& os, const VertexMap& f);

// Throws ShapeMismatch when f does not go from V(G) into V(H).
bool is_homomorphism(const VertexMap& f, const Digraph& G, const Digraph& H);

// Calls visit on each homomorphism in lexicographic order; stops early when
// visit returns false.
void for_each_homomorphism(const Digraph& G, const Digraph& H,
                           const std::function<bool(const VertexMap&)>& visit);
std::vector<VertexMap> enumerate_homomorphisms(const Digraph& G, const Digraph& H);
bool has_homomorphism(const Digraph& G, const Digraph& H);

Digraph product(const Digraph& G, const Digraph& H);
Digraph coproduct(const Digraph& G, const Digraph& H);

// Maps V(G) -> V(H) are indexed by their rank in lexicographic order of
// image sequences.
std::uint64_t map_count(const Digraph& H, const Digraph& G);
VertexMap map_at(const Digraph& H, const Digraph& G, std::uint64_t index);
std::uint64_t map_index(const Digraph& H, const VertexMap& f);

// H^G as a Digraph; throws SizeCapExceeded unless |V(H)|^|V(G)| fits both the
// cap and the vertex bound.
Digraph exponential(const Digraph& H, const Digraph& G, std::uint64_t cap = 1'000'000);

// Digraph whose vertices are vertex maps; not bound by the 64-vertex limit.
struct MapDigraph {
    std::vector<VertexMap> vertices;               // sorted
    std::vector<std::vector<std::uint32_t>> out;   // sorted adjacency

    std::size_t size() const { return vertices.size(); }
    bool has_edge(std::size_t i, std::size_t j) const;
    bool has_loop(std::size_t i) const { return has_edge(i, i); }
    // Index of f, or size() if absent.
    std::size_t index_of(const VertexMap& f) const;
};

// All of H^G with adjacency lists.
MapDigraph exponential_graph(const Digraph& H, const Digraph& G, std::uint64_t cap = 1'000'000);
// (H^G)°: the subgraph induced on the looped vertices, i.e. on Hom(G,H).
MapDigraph exponential_looped_part(const Digraph& H, const Digraph& G);

// classes must partition 0..n-1; class order gives the new labels.
Digraph quotient(const Digraph& G, const std::vector<std::vector<int>>& classes);

Digraph induced_subgraph(const Digraph& G, VertexSet S);
Digraph delete_vertex(const Digraph& G, int v);
Digraph underlying_symmetrization(const Digraph& G);
Digraph looped_part(const Digraph& G);
Digraph reverse(const Digraph& G);

bool contains_bipartite(const Digraph& G, int m, int n);

// Directed cycles include loops.
bool is_acyclic(const Digraph& G);
std::vector<VertexSet> weak_components(const Digraph& G);
bool is_tournament(const Digraph& G);

} // namespace dihom
