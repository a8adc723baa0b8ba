#pragma once

#include "dihom/complexes.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dihom {

// Finitely generated abelian group Z^rank ⊕ Z/t1 ⊕ ... with t1 | t2 | ...
struct AbelianGroup {
    std::size_t rank = 0;
    std::vector<std::uint64_t> torsion;

    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroup&) const = default;
};

std::string to_string(const AbelianGroup& g);

// Rewrites a list of cyclic orders as invariant factors d1 | d2 | ...,
// dropping ones.
std::vector<std::uint64_t> invariant_factors(const std::vector<std::uint64_t>& cyclic_orders);

// Reduced homology groups in degrees -1, 0, 1, ...
class HomologyGroups {
public:
    const AbelianGroup& operator[](int degree) const;
    void set(int degree, AbelianGroup g);

    std::size_t rank(int degree) const { return (*this)[degree].rank; }
    const std::vector<std::uint64_t>& torsion(int degree) const { return (*this)[degree].torsion; }
    // Highest degree carrying a nontrivial group, or -2 when all vanish.
    int top_degree() const;
    bool is_trivial() const { return top_degree() == -2; }
    // Degree i of the result is degree i-k of this.
    HomologyGroups shifted(int k) const;

    bool operator==(const HomologyGroups& o) const;

private:
    std::vector<AbelianGroup> groups_;  // groups_[i] is degree i-1
};

std::string to_string(const HomologyGroups& h);

// Column-major sparse integer matrix.
struct SparseMatrix {
    using Entry = std::pair<std::uint32_t, std::int64_t>;

    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<Entry>> columns;  // each sorted by row

    std::size_t nonzeros() const;
};

using DenseMatrix = std::vector<std::vector<std::int64_t>>;

struct SmithForm {
    std::size_t rank = 0;
    // Nonzero diagonal of the Smith form, d1 | d2 | ... | d_rank.
    std::vector<std::uint64_t> invariant_factors;
};

// 64-bit arithmetic with overflow detection, redone in arbitrary precision
// on overflow. Throws ArithmeticOverflow only if a factor exceeds 64 bits.
SmithForm smith_normal_form(const DenseMatrix& m);
SmithForm smith_normal_form(const SparseMatrix& m);

// Augmented chain complex: index k holds dimension k-1, so index 0 is the
// copy of Z in degree -1 that makes the homology reduced.
struct ChainComplex {
    std::vector<std::size_t> ranks;
    // boundaries[k] : C_{k-1} -> C_{k-2}; boundaries[0] is the zero map.
    std::vector<SparseMatrix> boundaries;
    // Simplices per dimension when built from a simplicial complex.
    std::vector<std::vector<Simplex>> faces;
};

ChainComplex chain_complex(const SimplicialComplex& X, std::size_t cap = default_face_cap);
bool boundary_squares_to_zero(const ChainComplex& C);

HomologyGroups reduced_homology(const ChainComplex& C);
HomologyGroups reduced_homology(const SimplicialComplex& X, std::size_t cap = default_face_cap);
HomologyGroups homology_of_poset(const Poset& P, std::size_t cap = default_face_cap);

// Reduced homology of X × Y from that of two nonempty spaces.
HomologyGroups kunneth_product(const HomologyGroups& x, const HomologyGroups& y);

struct LerayCheck {
    bool holds = true;
    Simplex face;     // first violating face when !holds
    int degree = 0;   // degree of the nonvanishing group
};

// Checks H̃_i(lk σ) = 0 for i >= n over every face σ, the empty face first.
LerayCheck is_n_leray(const SimplicialComplex& X, int n, std::size_t cap = default_face_cap);

} // namespace dihom
