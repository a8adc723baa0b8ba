#include "dihom/complexes.hpp"
#include "dihom/constructions.hpp"
#include "dihom/error.hpp"
#include "dihom/homology.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace dihom;

namespace {

std::int64_t det(const std::vector<std::vector<std::int64_t>>& m)
{
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    std::int64_t d = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<std::int64_t>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<std::int64_t> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        d += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
    }
    return d;
}

// d_k = gcd of k x k minors; invariant factors are d_k / d_{k-1}.
std::vector<std::uint64_t> factors_by_minors(const DenseMatrix& m)
{
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<std::uint64_t> out;
    std::int64_t prev = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        std::int64_t g = 0;
        std::vector<bool> rs(rows, false), cs(cols, false);
        std::fill(rs.begin(), rs.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
            std::fill(cs.begin(), cs.end(), false);
            std::fill(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(k), true);
            do {
                std::vector<std::vector<std::int64_t>> sub;
                for (std::size_t r = 0; r < rows; ++r) {
                    if (!rs[r]) continue;
                    std::vector<std::int64_t> row;
                    for (std::size_t c = 0; c < cols; ++c)
                        if (cs[c]) row.push_back(m[r][c]);
                    sub.push_back(row);
                }
                g = std::gcd(g, det(sub));
            } while (std::prev_permutation(cs.begin(), cs.end()));
        } while (std::prev_permutation(rs.begin(), rs.end()));
        if (g == 0) break;
        out.push_back(static_cast<std::uint64_t>(g / prev));
        prev = g;
    }
    return out;
}

SimplicialComplex random_complex(std::mt19937_64& rng, int vertices, int facets, int max_size)
{
    std::vector<Simplex> gens;
    for (int f = 0; f < facets; ++f) {
        Simplex s;
        for (int v = 0; v < vertices; ++v)
            if (rng() % 2) s.push_back(v);
        while (static_cast<int>(s.size()) > max_size) s.erase(s.begin() + static_cast<std::ptrdiff_t>(rng() % s.size()));
        if (s.empty()) s.push_back(static_cast<int>(rng() % vertices));
        gens.push_back(s);
    }
    return SimplicialComplex(gens);
}

// Six-vertex projective plane.
SimplicialComplex projective_plane()
{
    return SimplicialComplex({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4},
                              {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
}

} // namespace

TEST_CASE("Smith normal form")
{
    CHECK(smith_normal_form(DenseMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).invariant_factors ==
          std::vector<std::uint64_t>{1, 1, 1});
    CHECK(smith_normal_form(DenseMatrix{{0, 0}, {0, 0}}).rank == 0);
    CHECK(smith_normal_form(DenseMatrix{}).rank == 0);
    CHECK(smith_normal_form(DenseMatrix{{2, 4}, {6, 8}}).invariant_factors == std::vector<std::uint64_t>{2, 4});

    std::mt19937_64 rng(61);
    for (int t = 0; t < 300; ++t) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        DenseMatrix m(r, std::vector<std::int64_t>(c));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<std::int64_t>(rng() % 13) - 6;
        const auto S = smith_normal_form(m);
        CHECK(S.invariant_factors == factors_by_minors(m));
        CHECK(S.rank == S.invariant_factors.size());
        for (std::size_t i = 1; i < S.invariant_factors.size(); ++i)
            CHECK(S.invariant_factors[i] % S.invariant_factors[i - 1] == 0);

        SparseMatrix sp{r, c, std::vector<std::vector<SparseMatrix::Entry>>(c)};
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t i = 0; i < r; ++i)
                if (m[i][j]) sp.columns[j].emplace_back(static_cast<std::uint32_t>(i), m[i][j]);
        CHECK(smith_normal_form(sp).invariant_factors == S.invariant_factors);
    }
}

TEST_CASE("Smith normal form beyond 64-bit intermediates")
{
    // U * diag(1, 6) * V with large unimodular factors.
    const std::int64_t a = 1'000'000'000LL;
    const DenseMatrix U{{1, a}, {0, 1}}, D{{1, 0}, {0, 6}}, V{{1, 0}, {a, 1}};
    auto mul = [](const DenseMatrix& x, const DenseMatrix& y) {
        DenseMatrix z(2, std::vector<std::int64_t>(2, 0));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) z[i][j] += x[i][k] * y[k][j];
        return z;
    };
    const auto M = mul(mul(U, D), V);
    CHECK(smith_normal_form(M).invariant_factors == std::vector<std::uint64_t>{1, 6});

    const std::int64_t t32 = std::int64_t{1} << 32;
    CHECK(smith_normal_form(DenseMatrix{{3 * t32, 0}, {0, 5 * t32}}).invariant_factors ==
          std::vector<std::uint64_t>{std::uint64_t(t32), std::uint64_t(15 * t32)});
    const std::int64_t big = std::int64_t{1} << 40;
    try {
        smith_normal_form(DenseMatrix{{big, 0}, {0, big + 1}});
        FAIL("expected overflow");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ArithmeticOverflow);
    }
}

TEST_CASE("invariant factors")
{
    CHECK(invariant_factors({2, 3}) == std::vector<std::uint64_t>{6});
    CHECK(invariant_factors({2, 2, 1}) == std::vector<std::uint64_t>{2, 2});
    CHECK(invariant_factors({4, 6}) == std::vector<std::uint64_t>{2, 12});
}

TEST_CASE("chain complexes")
{
    const auto C1 = chain_complex(SimplicialComplex::simplex({0, 1}));
    REQUIRE(C1.boundaries.size() >= 3);
    const auto& d1 = C1.boundaries[2];
    CHECK(d1.rows == 2);
    CHECK(d1.cols == 1);
    CHECK(d1.columns[0] == std::vector<SparseMatrix::Entry>{{0, -1}, {1, 1}});

    const auto C = chain_complex(SimplicialComplex::simplex_boundary({0, 1, 2}));
    CHECK(smith_normal_form(C.boundaries[2]).rank == 2);

    std::mt19937_64 rng(67);
    for (int t = 0; t < 50; ++t) CHECK(boundary_squares_to_zero(chain_complex(random_complex(rng, 7, 5, 5))));
}

TEST_CASE("reduced homology of known spaces")
{
    auto row = [](std::initializer_list<std::vector<int>> outs) {
        Digraph T(5);
        int v = 0;
        for (const auto& o : outs) {
            for (int w : o) T.add_edge(v, w);
            ++v;
        }
        return T;
    };
    const auto h12 = reduced_homology(out_neighborhood_complex(row({{3, 4}, {0, 4}, {0, 1}, {1, 2}, {2, 3}})));
    CHECK(h12.rank(0) == 0);
    CHECK(h12.rank(1) == 1);
    CHECK(h12.top_degree() == 1);
    const auto h11 = reduced_homology(out_neighborhood_complex(row({{4}, {0, 3}, {0, 1}, {0, 2}, {1, 2, 3}})));
    CHECK(h11.rank(0) == 1);
    CHECK(h11.rank(1) == 2);
    CHECK(h11.top_degree() == 1);

    const auto s3 = reduced_homology(SimplicialComplex::simplex_boundary({0, 1, 2, 3}));
    CHECK(s3.rank(2) == 1);
    CHECK(s3.top_degree() == 2);

    const auto rp2 = reduced_homology(projective_plane());
    CHECK(rp2.rank(1) == 0);
    CHECK(rp2.torsion(1) == std::vector<std::uint64_t>{2});
    CHECK(rp2.top_degree() == 1);

    HomologyGroups empty;
    empty.set(-1, {1, {}});
    CHECK(reduced_homology(SimplicialComplex::empty_face()) == empty);
    CHECK(reduced_homology(SimplicialComplex()).is_trivial());
    CHECK(to_string(h11) == "{0: Z, 1: Z^2}");
}

TEST_CASE("homology agrees with rank computations mod p")
{
    std::mt19937_64 rng(71);
    for (int t = 0; t < 60; ++t) {
        const auto X = random_complex(rng, 7, 6, 4);
        const auto h = reduced_homology(X);
        const auto betti = oracle::reduced_betti(X.facets());
        const auto betti2 = oracle::reduced_betti(X.facets(), 2);
        for (std::size_t i = 0; i < betti.size(); ++i) {
            const int d = static_cast<int>(i) - 1;
            CHECK(h.rank(d) == betti[i]);
            std::size_t even = 0;
            for (auto q : h.torsion(d)) even += q % 2 == 0;
            std::size_t even_below = 0;
            for (auto q : h.torsion(d - 1)) even_below += q % 2 == 0;
            // Universal coefficients over Z/2.
            CHECK(betti2[i] == h.rank(d) + even + even_below);
        }
        long long alternating = 0;
        for (int d = -1; d <= X.dimension(); ++d) alternating += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(h.rank(d));
        CHECK(euler_characteristic(X) == 1 + alternating);
    }
}

TEST_CASE("Kunneth formula against product posets")
{
    const auto S1 = SimplicialComplex::simplex_boundary({0, 1, 2});
    const auto torus = kunneth_product(reduced_homology(S1), reduced_homology(S1));
    CHECK(torus.rank(0) == 0);
    CHECK(torus.rank(1) == 2);
    CHECK(torus.rank(2) == 1);

    const auto rp2 = reduced_homology(projective_plane());
    const auto rr = kunneth_product(rp2, rp2);
    CHECK(rr.torsion(1) == std::vector<std::uint64_t>{2, 2});
    CHECK(rr.torsion(2) == std::vector<std::uint64_t>{2});
    CHECK(rr.torsion(3) == std::vector<std::uint64_t>{2});

    std::mt19937_64 rng(73);
    for (int t = 0; t < 10; ++t) {
        const auto X = random_complex(rng, 4, 3, 3), Y = random_complex(rng, 4, 3, 3);
        const auto P = product(face_poset(X), face_poset(Y));
        CHECK(homology_of_poset(P) == kunneth_product(reduced_homology(X), reduced_homology(Y)));
    }
    const auto circle = face_poset(S1);
    const auto proj = face_poset(SimplicialComplex({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                                    {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}}));
    CHECK(homology_of_poset(product(circle, proj)) == kunneth_product(reduced_homology(S1), rp2));
}

TEST_CASE("Leray property")
{
    CHECK(is_n_leray(SimplicialComplex::simplex({0, 1, 2, 3}), 0).holds);
    const auto X = out_neighborhood_complex(sphere_tournament(1));
    const auto r = is_n_leray(X, 1);
    CHECK_FALSE(r.holds);
    CHECK(r.face.empty());
    CHECK(r.degree == 1);
    CHECK(is_n_leray(X, 2).holds);
    CHECK_FALSE(is_n_leray(SimplicialComplex::simplex_boundary({0, 1, 2}), 0).holds);
    // A path of two edges has a disconnected vertex link.
    const auto bad = is_n_leray(SimplicialComplex({{0, 1}, {1, 2}}), 0);
    CHECK_FALSE(bad.holds);
    CHECK(bad.face == Simplex{1});
    CHECK(bad.degree == 0);
}

TEST_CASE("higher homology vanishes on small simple digraphs")
{
    for (int m = 1; m <= 5; ++m)
        for (const auto& G : all_simple_digraphs(m)) {
            const auto X = out_neighborhood_complex(G);
            if (X.is_void()) continue;
            // Smallest k with m <= 2k + 2.
            const int k = std::max(0, (m - 1) / 2);
            const auto h = reduced_homology(X);
            for (int i = k; i <= h.top_degree(); ++i) CHECK(h[i].trivial());
        }
}
