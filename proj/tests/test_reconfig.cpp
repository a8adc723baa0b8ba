#include "dihom/constructions.hpp"
#include "dihom/error.hpp"
#include "dihom/homcomplex.hpp"
#include "dihom/homology.hpp"
#include "dihom/reconfig.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace dihom;

namespace {

int hamming(const VertexMap& f, const VertexMap& g)
{
    int d = 0;
    for (std::size_t v = 0; v < f.size(); ++v) d += f[v] != g[v];
    return d;
}

} // namespace

TEST_CASE("diameters into transitive tournaments")
{
    CHECK(diameter(transitive_tournament(3), transitive_tournament(5)) == 3);
    CHECK(diameter(transitive_tournament(3), transitive_tournament(4)) == 3);
    CHECK(diameter(transitive_tournament(3), transitive_tournament(3)) == 0);
    CHECK(diameter(Digraph(2), transitive_tournament(3)) == 2);

    std::mt19937_64 rng(200);
    for (int t = 0; t < 200; ++t) {
        const int k = 1 + static_cast<int>(rng() % 5);
        const auto G = oracle::random_acyclic(k, rng);
        int n = 1;
        while (!has_homomorphism(G, transitive_tournament(n))) ++n;
        n += static_cast<int>(rng() % 3);
        CHECK(is_connected_hom(G, transitive_tournament(n)));
        CHECK(diameter(G, transitive_tournament(n)) <= static_cast<std::size_t>(k));
    }
}

TEST_CASE("meet paths")
{
    std::mt19937_64 rng(500);
    int pairs = 0;
    while (pairs < 500) {
        const auto G = oracle::random_acyclic(2 + static_cast<int>(rng() % 4), rng);
        const int n = 5 + static_cast<int>(rng() % 2);
        const auto homs = enumerate_homomorphisms(G, transitive_tournament(n));
        if (homs.empty()) continue;
        const auto& f = homs[rng() % homs.size()];
        const auto& g = homs[rng() % homs.size()];
        ++pairs;
        const auto path = meet_path(f, g, G, n);
        REQUIRE(!path.empty());
        CHECK(path.front() == f);
        CHECK(path.back() == g);
        CHECK(path.size() == static_cast<std::size_t>(hamming(f, g)) + 1);
        for (const auto& h : path) CHECK(is_homomorphism(h, G, transitive_tournament(n)));
        for (std::size_t i = 1; i < path.size(); ++i) CHECK(hamming(path[i - 1], path[i]) == 1);
    }
    CHECK_THROWS_AS(meet_path({0, 0}, {0, 1}, transitive_tournament(2), 3), Error);
}

TEST_CASE("cyclic sources")
{
    const auto S = hom_one_skeleton(directed_cycle(3), directed_cycle(3));
    CHECK(S.nodes.size() == 3);
    CHECK(S.component_count == 3);
    CHECK_FALSE(is_connected_hom(directed_cycle(3), directed_cycle(3)));
    try {
        diameter(directed_cycle(3), directed_cycle(3));
        FAIL("expected Disconnected");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Disconnected);
    }
    try {
        is_connected_hom(directed_cycle(3), transitive_tournament(5));
        FAIL("expected EmptyHom");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyHom);
    }
}

TEST_CASE("oriented chromatic number")
{
    CHECK(oriented_chromatic_number(directed_cycle(3)).chromatic_number == 3);
    CHECK(oriented_chromatic_number(directed_cycle(5)).chromatic_number == 5);
    CHECK(oriented_chromatic_number(directed_cycle(4)).chromatic_number == 4);
    for (int n = 1; n <= 6; ++n) CHECK(oriented_chromatic_number(transitive_tournament(n)).chromatic_number == n);
    CHECK(oriented_chromatic_number(Digraph(3)).chromatic_number == 1);
    const auto c = oriented_chromatic_number(directed_path(4));
    CHECK(c.chromatic_number == 3);
    CHECK(is_homomorphism(c.map, directed_path(4), c.witness));
    CHECK_THROWS_AS(oriented_chromatic_number(looped_vertex()), Error);
    CHECK_THROWS_AS(oriented_chromatic_number(Digraph(2, {{0, 1}, {1, 0}})), Error);
}

TEST_CASE("non-transitive target with contractible Hom")
{
    const Digraph T(4, {{1, 0}, {0, 2}, {2, 1}, {2, 3}, {1, 3}, {0, 3}});
    CHECK(hom_homology(transitive_tournament(2), T).is_trivial());
    CHECK(is_connected_hom(transitive_tournament(2), T));
}
