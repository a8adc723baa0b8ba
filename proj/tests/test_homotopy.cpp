#include "dihom/constructions.hpp"
#include "dihom/error.hpp"
#include "dihom/homcomplex.hpp"
#include "dihom/homology.hpp"
#include "dihom/homotopy.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace dihom;

TEST_CASE("folds")
{
    const Digraph C(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}});
    REQUIRE(find_fold(C).has_value());
    CHECK(*find_fold(C) == Fold{3, 2});
    CHECK(fold(C, 3, 2) == directed_cycle(3));
    CHECK_THROWS_AS(fold(C, 0, 1), Error);
    CHECK_THROWS_AS(fold(C, 3, 3), Error);

    for (int n = 1; n <= 6; ++n) {
        CHECK_FALSE(find_fold(transitive_tournament(n)).has_value());
        CHECK_FALSE(is_dismantlable(transitive_tournament(n)));
    }
    const auto I = interval_bidirected(4);
    CHECK(*find_fold(I) == Fold{0, 1});
    const auto S = stiff_reduction(I);
    CHECK(S.result == looped_vertex());
    CHECK(S.trace.size() == 4);
    CHECK(is_dismantlable(I));
    CHECK(is_dismantlable(looped_vertex()));

    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        const auto G = oracle::random_digraph(5, rng, 0.5, 0.3);
        for (auto [v, w] : all_folds(G)) {
            CHECK(G.in_neighbors(v) - VertexSet::singleton(v) ==
                  (G.in_neighbors(v) - VertexSet::singleton(v) & G.in_neighbors(w)));
            CHECK(fold(G, v, w).vertex_count() == 4);
        }
    }
}

TEST_CASE("stiff reduction is confluent")
{
    std::mt19937_64 rng(50);
    for (int t = 0; t < 50; ++t) {
        const auto G = oracle::random_digraph(3 + static_cast<int>(rng() % 5), rng, 0.5, 0.4);
        const auto base = stiff_reduction(G);
        CHECK_FALSE(find_fold(base.result).has_value());
        CHECK(base.survivors.size() == static_cast<std::size_t>(base.result.vertex_count()));
        VertexSet kept;
        for (int v : base.survivors) kept.insert(v);
        CHECK(is_isomorphic(induced_subgraph(G, kept), base.result));
        for (std::uint64_t seed = 0; seed < 5; ++seed)
            CHECK(is_isomorphic(stiff_reduction(G, seed).result, base.result));
    }
}

TEST_CASE("folding the target preserves Hom homology")
{
    std::mt19937_64 rng(61);
    int done = 0;
    while (done < 30) {
        const auto H = oracle::random_digraph(4, rng, 0.6, 0.5);
        const auto f = find_fold(H);
        if (!f) continue;
        const auto G = oracle::random_digraph(2 + static_cast<int>(rng() % 2), rng, 0.5, 0.3);
        ++done;
        CHECK(hom_homology(G, H) == hom_homology(G, fold(H, f->v, f->w)));
    }
}

TEST_CASE("homotopy hierarchy fixture")
{
    const auto [G, H] = homotopy_hierarchy_fixture();
    const auto bi = homotopy_classes(G, H, HomotopyRelation::Bi);
    const auto di = homotopy_classes(G, H, HomotopyRelation::Di);
    const auto line = homotopy_classes(G, H, HomotopyRelation::Line);
    REQUIRE(line.maps == std::vector<VertexMap>{{0, 1}, {1, 0}, {2, 3}, {3, 2}, {4, 5}, {5, 4}});
    CHECK(bi.classes.size() == 6);
    CHECK(line.classes == std::vector<std::vector<std::size_t>>{{0, 3, 4}, {1, 2, 5}});

    CHECK(dihomotopic({0, 1}, {3, 2}, G, H));
    CHECK_FALSE(dihomotopic({3, 2}, {0, 1}, G, H));
    CHECK_FALSE(dihomotopic({0, 1}, {4, 5}, G, H));
    CHECK_FALSE(dihomotopic({4, 5}, {0, 1}, G, H));
    CHECK(line_homotopic({0, 1}, {4, 5}, G, H));
    CHECK_FALSE(line_homotopic({0, 1}, {1, 0}, G, H));
    CHECK_FALSE(bihomotopic({0, 1}, {3, 2}, G, H));
    CHECK(di.reach[0][3]);
    CHECK_FALSE(di.reach[3][0]);
    CHECK_THROWS_AS(dihomotopic({0, 2}, {0, 1}, G, H), Error);
}

TEST_CASE("homotopy relations refine each other")
{
    std::mt19937_64 rng(71);
    for (int t = 0; t < 60; ++t) {
        const auto G = oracle::random_digraph(2 + static_cast<int>(rng() % 2), rng, 0.5, 0.2);
        const auto H = oracle::random_digraph(3 + static_cast<int>(rng() % 2), rng, 0.6, 0.5);
        const auto bi = homotopy_classes(G, H, HomotopyRelation::Bi);
        const auto di = homotopy_classes(G, H, HomotopyRelation::Di);
        const auto line = homotopy_classes(G, H, HomotopyRelation::Line);
        const auto n = bi.maps.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (bi.reach[i][j]) CHECK(di.reach[i][j]);
                if (di.reach[i][j]) CHECK(line.reach[i][j]);
                CHECK(bi.reach[i][j] == bi.reach[j][i]);
                CHECK(line.reach[i][j] == line.reach[j][i]);
            }
        CHECK(bi.classes.size() >= line.classes.size());
        CHECK(di.classes == line.classes);

        const auto S = hom_one_skeleton(G, H);
        REQUIRE(S.nodes == bi.maps);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(bi.reach[i][j] == (S.component[i] == S.component[j]));
    }
}

TEST_CASE("dismantlable iff Hom complexes connected")
{
    const std::vector<Digraph> witnesses{transitive_tournament(2), directed_cycle(3), interval_bidirected(2)};
    for (const auto& G : {looped_vertex(), interval_bidirected(2), interval_bidirected(4)}) {
        const auto R = dismantlable_iff_connected_check(G, witnesses);
        CHECK(R.dismantlable);
        CHECK(R.all_connected);
        CHECK(R.consistent);
    }
    const auto K = dismantlable_iff_connected_check(transitive_tournament(3), witnesses);
    CHECK_FALSE(K.dismantlable);
    CHECK_FALSE(K.all_connected);
    CHECK(K.consistent);
    CHECK(K.connected.size() == witnesses.size() + 2);
    CHECK_FALSE(K.connected.back());
    CHECK(hom_one_skeleton(transitive_tournament(3), transitive_tournament(3)).nodes.size() == 1);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        const auto G = oracle::random_digraph(4, rng, 0.6, 0.6);
        CHECK(dismantlable_iff_connected_check(G, witnesses).consistent);
    }
}
