#include "dihom/complexes.hpp"
#include "dihom/constructions.hpp"
#include "dihom/error.hpp"
#include "dihom/homology.hpp"
#include "dihom/morse.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <optional>
#include <random>
#include <set>

using namespace dihom;

namespace {

std::optional<ErrorCode> code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

int height(const Digraph& G)
{
    return static_cast<int>(sink_layers(G).size());
}

} // namespace

TEST_CASE("matching validation and acyclicity")
{
    const auto X = SimplicialComplex::simplex_boundary({0, 1, 2});
    const auto P = face_poset(X);
    // Faces: 0,1,2 then {0,1},{0,2},{1,2}.
    REQUIRE(P.size() == 6);
    Matching none;
    for (std::size_t i = 0; i < P.size(); ++i) none.critical.push_back(i);
    CHECK(is_acyclic_matching(P, none));

    Matching loop{{{0, 3}, {1, 5}, {2, 4}}, {}};
    CHECK_FALSE(is_acyclic_matching(P, loop));
    Matching open{{{1, 3}, {2, 5}}, {0, 4}};
    CHECK(is_acyclic_matching(P, open));

    CHECK(code_of([&] { validate_matching(P, Matching{{{0, 5}}, {1, 2, 3, 4}}); }) == ErrorCode::InvalidMatching);
    CHECK(code_of([&] { validate_matching(P, Matching{{{0, 3}, {0, 4}}, {1, 2, 5}}); }) ==
          ErrorCode::InvalidMatching);
    CHECK(code_of([&] { validate_matching(P, Matching{{{0, 3}}, {1, 2}}); }) == ErrorCode::InvalidMatching);

    // a, b < e1, e2: matching both covers closes a 2-cycle of length four.
    const auto Q = Poset::from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK_FALSE(is_acyclic_matching(Q, Matching{{{0, 2}, {1, 3}}, {}}));
    CHECK(is_acyclic_matching(Q, Matching{{{0, 2}}, {1, 3}}));
}

TEST_CASE("sink layers")
{
    const Digraph G(4, {{0, 1}, {1, 2}, {0, 3}});
    CHECK(sink_layers(G) == std::vector<std::vector<int>>{{2, 3}, {1}, {0}});
    CHECK(code_of([] { sink_layers(directed_cycle(3)); }) == ErrorCode::NotAcyclic);
}

TEST_CASE("tournament matching")
{
    const auto M = tournament_matching(transitive_tournament(2), 3);
    CHECK(M.poset.size() == 5);
    CHECK(M.matching.critical.size() == 1);
    CHECK(is_acyclic_matching(M.poset.to_poset(), M.matching));

    CHECK(code_of([] { tournament_matching(directed_cycle(3), 5); }) == ErrorCode::EmptyHom);
    CHECK(code_of([] { check_tournament_matching(directed_cycle(3), 5); }) == ErrorCode::EmptyHom);
    CHECK(code_of([] { tournament_matching(directed_path(4), 3); }) == ErrorCode::EmptyHom);
    CHECK(code_of([] { check_tournament_matching(Digraph(9), 8); }) == ErrorCode::SizeCapExceeded);

    const auto L = tournament_matching(directed_path(3), 4);
    CHECK(L.matching.critical.size() == 1);
    CHECK(is_acyclic_matching(L.poset.to_poset(), L.matching));
    const auto R = check_tournament_matching(directed_path(3), 4);
    CHECK(R.cells == L.poset.size());
    CHECK(R.pairs == L.matching.pairs.size());
    CHECK(R.critical == 1);
    CHECK(R.consistent);
    CHECK(R.acyclic);
}

TEST_CASE("tournament matching over small acyclic digraphs")
{
    std::set<std::uint64_t> seen;
    int checked = 0;
    for (int k = 1; k <= 4; ++k)
        for (const auto& G : all_simple_digraphs(k)) {
            if (!is_acyclic(G) || !seen.insert(canonical_code(G) * 8 + static_cast<unsigned>(k)).second) continue;
            const int h = height(G);
            for (int n = h; n <= h + 1; ++n) {
                const auto E = tournament_matching(G, n);
                const auto I = check_tournament_matching(G, n);
                const bool acyclic = is_acyclic_matching(E.poset.to_poset(), E.matching);
                CHECK(E.matching.critical.size() == 1);
                CHECK(acyclic);
                CHECK(I.cells == E.poset.size());
                CHECK(I.pairs == E.matching.pairs.size());
                CHECK(I.critical == E.matching.critical.size());
                CHECK(I.acyclic == acyclic);
                CHECK(I.consistent);
                ++checked;
            }
        }
    CHECK(checked > 50);
}

TEST_CASE("implicit checker detects a cycle")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        const auto G = oracle::random_acyclic(5, rng);
        const auto I = check_tournament_matching(G, height(G) + 1);
        CHECK(I.critical == 1);
        CHECK(I.acyclic);
        CHECK(I.consistent);
    }
}

TEST_CASE("collapses")
{
    const auto simplex = SimplicialComplex::simplex({0, 1, 2, 3});
    const auto R = collapse_free_pairs(simplex);
    CHECK(R.remaining.facets() == std::vector<Simplex>{{3}});
    CHECK(R.log.front() == CollapseStep{{0}, {0, 1, 2, 3}});
    const auto boundary = SimplicialComplex::simplex_boundary({0, 1, 2});
    CHECK(collapse_free_pairs(boundary).log.empty());
    CHECK_FALSE(is_free_pair(boundary, {0}, {0, 1}));
    CHECK(code_of([&] { collapse(boundary, {0}, {0, 1}); }) == ErrorCode::InvalidMatching);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto r = collapse_free_pairs(simplex, CollapseStrategy::Random, seed);
        CHECK(r.remaining.facets().size() == 1);
        CHECK(r.remaining.facets()[0].size() == 1);
    }

    const auto X = out_neighborhood_complex(sphere_tournament(1));
    const auto lex = collapse_free_pairs(X);
    CHECK(lex.log == std::vector<CollapseStep>{{{3}, {0, 2, 3}}, {{4}, {0, 4}}});
    CHECK(lex.remaining == SimplicialComplex::simplex_boundary({0, 1, 2}));
    const auto replay = collapse_free_pairs(X, CollapseStrategy::Lex, 0, {{{4}, {0, 4}}, {{3}, {0, 2, 3}}});
    CHECK(replay.remaining == SimplicialComplex::simplex_boundary({0, 1, 2}));
    CHECK(code_of([&] { collapse_free_pairs(X, CollapseStrategy::Lex, 0, {{{0}, {0, 4}}}); }) ==
          ErrorCode::InvalidMatching);
}

TEST_CASE("random discrete Morse functions")
{
    const auto simplex = SimplicialComplex::simplex({0, 1, 2, 3, 4});
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        CHECK(random_discrete_morse(simplex, seed) == std::vector<std::size_t>{1, 0, 0, 0, 0});
    const auto boundary = SimplicialComplex::simplex_boundary({0, 1, 2});
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        CHECK(random_discrete_morse(boundary, seed) == std::vector<std::size_t>{1, 1});

    const auto contractible = order_complex(hom_poset(transitive_tournament(3), transitive_tournament(5)).to_poset());
    bool perfect = false;
    for (std::uint64_t seed = 0; seed < 20 && !perfect; ++seed)
        perfect = random_discrete_morse(contractible, seed) == std::vector<std::size_t>{1, 0, 0};
    CHECK(perfect);

    // Weak Morse inequalities and the Euler characteristic.
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        const auto G = oracle::random_simple_digraph(4 + static_cast<int>(rng() % 4), rng);
        const auto X = out_neighborhood_complex(G);
        if (X.is_void() || X.dimension() < 0) continue;
        const auto c = random_discrete_morse(X, rng());
        const auto H = reduced_homology(X);
        long long alternating = 0;
        for (std::size_t d = 0; d < c.size(); ++d) {
            const auto betti = static_cast<std::size_t>(H.rank(static_cast<int>(d))) + (d == 0 ? 1 : 0);
            CHECK(c[d] >= betti);
            alternating += (d % 2 ? -1 : 1) * static_cast<long long>(c[d]);
        }
        CHECK(alternating == euler_characteristic(X));
    }
}
