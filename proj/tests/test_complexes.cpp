#include "dihom/complexes.hpp"
#include "dihom/constructions.hpp"
#include "dihom/error.hpp"
#include "dihom/homcomplex.hpp"
#include "dihom/homology.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace dihom;

namespace {

SimplicialComplex random_complex(std::mt19937_64& rng, int vertices = 6, int facets = 4)
{
    std::vector<Simplex> gens;
    for (int f = 0; f < facets; ++f) {
        Simplex s;
        for (int v = 0; v < vertices; ++v)
            if (rng() % 2) s.push_back(v);
        if (s.empty()) s.push_back(static_cast<int>(rng() % vertices));
        gens.push_back(s);
    }
    return SimplicialComplex(gens);
}

// Graph on 1..5 with edges 1->2, 3->1, 3->2, 4->1, 3->4, 5->1, 5->3, 5->4, 2->4.
Digraph contractible_example()
{
    return Digraph(5, {{0, 1}, {2, 0}, {2, 1}, {3, 0}, {2, 3}, {4, 0}, {4, 2}, {4, 3}, {1, 3}});
}

} // namespace

TEST_CASE("complex basics")
{
    const SimplicialComplex X({{0, 1}, {1, 2}, {0, 1, 2}, {3}});
    CHECK(X.facets() == std::vector<Simplex>{{0, 1, 2}, {3}});
    CHECK(X.dimension() == 2);
    CHECK(X.contains({0, 2}));
    CHECK_FALSE(X.contains({0, 3}));
    CHECK(X.face_count() == 8);
    CHECK(SimplicialComplex().is_void());
    CHECK(SimplicialComplex().dimension() == -2);
    CHECK(SimplicialComplex::empty_face().dimension() == -1);
    CHECK_FALSE(SimplicialComplex::empty_face() == SimplicialComplex());
    CHECK(SimplicialComplex::simplex_boundary({0, 1, 2}).facets() == std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});
    CHECK_THROWS_AS(SimplicialComplex::simplex({0, 1, 2}).faces(3), Error);
}

TEST_CASE("links, suspension, Euler characteristic")
{
    const auto D = SimplicialComplex::simplex({0, 1, 2});
    CHECK(link(D, {0}).facets() == std::vector<Simplex>{{1, 2}});
    CHECK(link(D, {0, 1, 2}) == SimplicialComplex::empty_face());
    CHECK_THROWS_AS(link(D, {3}), Error);
    CHECK(euler_characteristic(SimplicialComplex::simplex_boundary({0, 1, 2})) == 0);
    CHECK(euler_characteristic(D) == 1);
    CHECK(induced_subcomplex(D, {0, 2}).facets() == std::vector<Simplex>{{0, 2}});

    std::mt19937_64 rng(41);
    for (int t = 0; t < 20; ++t) {
        const auto X = random_complex(rng);
        CHECK(reduced_homology(suspension(X)) == reduced_homology(X).shifted(1));
    }
}

TEST_CASE("neighbourhood complexes")
{
    const auto G = contractible_example();
    CHECK(out_neighborhood_complex(G).facets() == std::vector<Simplex>{{0, 1, 3}, {0, 2, 3}});
    CHECK(in_neighborhood_complex(G).facets() == std::vector<Simplex>{{0, 2}, {1, 2, 4}, {2, 3, 4}});
    CHECK(out_neighborhood_complex(transitive_tournament(5)).facets() == std::vector<Simplex>{{1, 2, 3, 4}});
    CHECK(out_neighborhood_complex(Digraph(3)).is_void());

    std::mt19937_64 rng(43);
    for (int t = 0; t < 100; ++t) {
        const auto H = oracle::random_digraph(5, rng);
        CHECK(in_neighborhood_complex(H) == out_neighborhood_complex(reverse(H)));
        std::vector<Simplex> gens;
        for (int v = 0; v < 5; ++v)
            if (!H.out_neighbors(v).empty()) gens.push_back(H.out_neighbors(v).to_vector());
        CHECK(out_neighborhood_complex(H) == SimplicialComplex(gens));
    }
    for (const auto& T : enumerate_tournaments(5))
        CHECK(reduced_homology(in_neighborhood_complex(T)) == reduced_homology(out_neighborhood_complex(T)));
}

TEST_CASE("universality graph")
{
    const auto D = universality_graph(SimplicialComplex::simplex({0, 1, 2}));
    CHECK(D.vertex_count() == 4);
    CHECK(D.edge_count() == 3);
    const auto B = SimplicialComplex::simplex_boundary({0, 1, 2});
    CHECK(universality_graph(B).vertex_count() == 6);
    CHECK(out_neighborhood_complex(universality_graph(B)) == B);
    CHECK_THROWS_AS(universality_graph(SimplicialComplex()), Error);
    std::mt19937_64 rng(47);
    for (int t = 0; t < 20; ++t) {
        const auto X = random_complex(rng);
        CHECK(out_neighborhood_complex(universality_graph(X)) == X);
    }
}

TEST_CASE("face posets and order complexes")
{
    CHECK(face_poset(SimplicialComplex::simplex({0, 1, 2})).size() == 7);
    CHECK(face_poset(SimplicialComplex::simplex_boundary({0, 1, 2})).size() == 6);

    const auto antichain = Poset::from_covers(4, {});
    CHECK(order_complex(antichain).facets() == std::vector<Simplex>{{0}, {1}, {2}, {3}});
    const auto chain = Poset::from_covers(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(order_complex(chain).facets() == std::vector<Simplex>{{0, 1, 2, 3}});
    CHECK(order_complex(Poset::from_covers(0, {})) == SimplicialComplex::empty_face());

    const auto P = hom_poset(transitive_tournament(2), transitive_tournament(4)).to_poset();
    CHECK(euler_characteristic(order_complex(P)) == 1);

    std::mt19937_64 rng(53);
    for (int t = 0; t < 20; ++t) {
        const auto X = random_complex(rng);
        CHECK(reduced_homology(order_complex(face_poset(X))) == reduced_homology(X));
    }
}

TEST_CASE("poset validation")
{
    CHECK_THROWS_AS(Poset::from_covers(2, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Poset::from_covers(2, {{0, 0}}), Error);
    CHECK_THROWS_AS(Poset::from_relation(3, {{0, 1}, {1, 2}}), Error);
    const auto P = Poset::from_relation(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(P.covers(0, 1));
    CHECK_FALSE(P.covers(0, 2));
    CHECK(P.less(0, 2));
    CHECK(P.minimal_elements() == std::vector<std::size_t>{0});
    CHECK(P.maximal_elements() == std::vector<std::size_t>{2});
}

TEST_CASE("directed clique complex")
{
    CHECK(directed_clique_complex(transitive_tournament(3)).facets() == std::vector<Simplex>{{0, 1, 2}});
    CHECK(directed_clique_complex(directed_cycle(3)).facets() == std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(directed_clique_complex(looped_vertex()).facets() == std::vector<Simplex>{{0}});

    // With every edge doubled it is the ordinary clique complex.
    std::mt19937_64 rng(59);
    for (int t = 0; t < 50; ++t) {
        const auto G = underlying_symmetrization(oracle::random_simple_digraph(6, rng));
        std::vector<Simplex> cliques;
        for (std::uint64_t m = 1; m < 64; ++m) {
            Simplex s;
            for (int v = 0; v < 6; ++v)
                if (m >> v & 1) s.push_back(v);
            bool clique = true;
            for (int a : s)
                for (int b : s)
                    if (a != b && !G.has_edge(a, b)) clique = false;
            if (clique) cliques.push_back(s);
        }
        CHECK(directed_clique_complex(G) == SimplicialComplex(cliques));
    }
}
