#include "dihom/homology.hpp"

#include "dihom/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace dihom {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct OverflowSignal {};

// int64 that throws OverflowSignal instead of wrapping.
class Checked {
public:
    Checked() = default;
    Checked(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

    std::int64_t value() const { return v_; }

    friend Checked operator+(Checked a, Checked b)
    {
        std::int64_t r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowSignal{};
        return r;
    }
    friend Checked operator-(Checked a, Checked b)
    {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowSignal{};
        return r;
    }
    friend Checked operator*(Checked a, Checked b)
    {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowSignal{};
        return r;
    }
    friend Checked operator/(Checked a, Checked b)
    {
        if (a.v_ == std::numeric_limits<std::int64_t>::min() && b.v_ == -1) throw OverflowSignal{};
        return a.v_ / b.v_;
    }
    friend Checked operator%(Checked a, Checked b)
    {
        if (b.v_ == -1) return 0;
        return a.v_ % b.v_;
    }
    Checked operator-() const { return Checked(0) - *this; }
    Checked& operator+=(Checked b) { return *this = *this + b; }
    Checked& operator-=(Checked b) { return *this = *this - b; }

    friend bool operator==(Checked a, Checked b) { return a.v_ == b.v_; }
    friend auto operator<=>(Checked a, Checked b) { return a.v_ <=> b.v_; }

private:
    std::int64_t v_ = 0;
};

Checked magnitude(Checked a) { return a < Checked(0) ? -a : a; }
BigInt magnitude(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

std::uint64_t to_u64(Checked a) { return static_cast<std::uint64_t>(a.value()); }
std::uint64_t to_u64(const BigInt& a)
{
    if (a > BigInt(std::numeric_limits<std::uint64_t>::max()))
        fail(ErrorCode::ArithmeticOverflow, "invariant factor exceeds 64 bits");
    return a.convert_to<std::uint64_t>();
}

template <class T>
using Dense = std::vector<std::vector<T>>;

// Nonzero diagonal of the Smith form, pivoting on the smallest magnitude.
template <class T>
std::vector<T> dense_smith(Dense<T> A)
{
    const std::size_t m = A.size();
    const std::size_t n = m == 0 ? 0 : A[0].size();
    std::vector<T> diag;
    const T zero(0);
    auto swap_cols = [&A, m](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < m; ++i) std::swap(A[i][a], A[i][b]);
    };
    for (std::size_t t = 0; t < m && t < n; ++t) {
        bool found = false;
        std::size_t pi = t, pj = t;
        T best = zero;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (A[i][j] != zero && (!found || magnitude(A[i][j]) < best)) {
                    found = true;
                    best = magnitude(A[i][j]);
                    pi = i;
                    pj = j;
                }
        if (!found) break;
        std::swap(A[t], A[pi]);
        swap_cols(t, pj);
        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (A[i][t] == zero) continue;
                const T q = A[i][t] / A[t][t];
                if (q != zero)
                    for (std::size_t j = t; j < n; ++j) A[i][j] -= q * A[t][j];
                if (A[i][t] != zero) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (A[t][j] == zero) continue;
                const T q = A[t][j] / A[t][t];
                if (q != zero)
                    for (std::size_t i = t; i < m; ++i) A[i][j] -= q * A[i][t];
                if (A[t][j] != zero) clean = false;
            }
            if (!clean) {
                // A remainder smaller than the pivot sits in row or column t.
                std::size_t bi = t, bj = t;
                T b = magnitude(A[t][t]);
                for (std::size_t i = t + 1; i < m; ++i)
                    if (A[i][t] != zero && magnitude(A[i][t]) < b) {
                        b = magnitude(A[i][t]);
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (A[t][j] != zero && magnitude(A[t][j]) < b) {
                        b = magnitude(A[t][j]);
                        bi = t;
                        bj = j;
                    }
                std::swap(A[t], A[bi]);
                swap_cols(t, bj);
                continue;
            }
            bool divisible = true;
            for (std::size_t i = t + 1; i < m && divisible; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (A[i][j] % A[t][t] != zero) {
                        for (std::size_t k = t; k < n; ++k) A[t][k] += A[i][k];
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        diag.push_back(magnitude(A[t][t]));
    }
    return diag;
}

template <class T>
SmithForm finish(std::size_t units, const std::vector<T>& rest)
{
    SmithForm s;
    s.rank = units + rest.size();
    s.invariant_factors.assign(units, 1);
    for (const auto& d : rest) s.invariant_factors.push_back(to_u64(d));
    return s;
}

template <class T>
SmithForm dense_impl(const DenseMatrix& m)
{
    Dense<T> A(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) A[i].assign(m[i].begin(), m[i].end());
    return finish<T>(0, dense_smith(std::move(A)));
}

// Eliminates on ±1 pivots while any exist, then hands the remainder to the
// dense routine.
template <class T>
SmithForm sparse_impl(const SparseMatrix& M)
{
    using RowEntry = std::pair<std::uint32_t, T>;
    std::vector<std::vector<RowEntry>> rows(M.rows);
    std::vector<std::vector<std::uint32_t>> col_rows(M.cols);
    for (std::size_t c = 0; c < M.cols; ++c)
        for (auto [r, v] : M.columns[c])
            if (v != 0) {
                rows[r].emplace_back(static_cast<std::uint32_t>(c), T(v));
                col_rows[c].push_back(r);
            }
    auto entry = [&rows](std::uint32_t r, std::uint32_t c) -> const T* {
        const auto& row = rows[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const RowEntry& e, std::uint32_t col) { return e.first < col; });
        return it != row.end() && it->first == c ? &it->second : nullptr;
    };
    std::vector<char> row_dead(M.rows, 0), col_dead(M.cols, 0);
    std::vector<std::uint32_t> order(M.cols);
    std::iota(order.begin(), order.end(), 0U);
    std::size_t units = 0;
    const T zero(0), one(1);
    std::vector<RowEntry> merged;
    bool progress = true;
    while (progress) {
        progress = false;
        std::stable_sort(order.begin(), order.end(), [&col_rows](std::uint32_t a, std::uint32_t b) {
            return col_rows[a].size() < col_rows[b].size();
        });
        for (auto c : order) {
            if (col_dead[c]) continue;
            auto& cr = col_rows[c];
            std::sort(cr.begin(), cr.end());
            cr.erase(std::unique(cr.begin(), cr.end()), cr.end());
            cr.erase(std::remove_if(cr.begin(), cr.end(),
                                    [&](std::uint32_t r) { return row_dead[r] || entry(r, c) == nullptr; }),
                     cr.end());
            if (cr.empty()) {
                col_dead[c] = 1;
                continue;
            }
            std::uint32_t p = 0;
            bool have = false;
            for (auto r : cr)
                if (magnitude(*entry(r, c)) == one && (!have || rows[r].size() < rows[p].size())) {
                    p = r;
                    have = true;
                }
            if (!have) continue;
            const T pv = *entry(p, c);
            const auto& prow = rows[p];
            for (auto r : cr) {
                if (r == p) continue;
                const T factor = *entry(r, c) * pv;
                merged.clear();
                auto& row = rows[r];
                std::size_t i = 0, j = 0;
                while (i < row.size() || j < prow.size()) {
                    if (j == prow.size() || (i < row.size() && row[i].first < prow[j].first)) {
                        merged.push_back(row[i++]);
                    } else if (i == row.size() || prow[j].first < row[i].first) {
                        merged.emplace_back(prow[j].first, zero - factor * prow[j].second);
                        col_rows[prow[j].first].push_back(r);
                        ++j;
                    } else {
                        T v = row[i].second - factor * prow[j].second;
                        if (v != zero) merged.emplace_back(row[i].first, v);
                        ++i;
                        ++j;
                    }
                }
                row.swap(merged);
            }
            row_dead[p] = 1;
            col_dead[c] = 1;
            cr.clear();
            ++units;
            progress = true;
        }
    }
    std::vector<std::uint32_t> live_rows;
    std::map<std::uint32_t, std::size_t> live_cols;
    for (std::uint32_t r = 0; r < M.rows; ++r) {
        if (row_dead[r] || rows[r].empty()) continue;
        live_rows.push_back(r);
        for (const auto& e : rows[r]) live_cols.emplace(e.first, 0);
    }
    std::size_t k = 0;
    for (auto& [c, idx] : live_cols) idx = k++;
    Dense<T> A(live_rows.size(), std::vector<T>(live_cols.size(), zero));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
        for (const auto& e : rows[live_rows[i]]) A[i][live_cols[e.first]] = e.second;
    return finish<T>(units, dense_smith(std::move(A)));
}

} // namespace

std::string to_string(const AbelianGroup& g)
{
    if (g.trivial()) return "0";
    std::string out;
    if (g.rank > 0) out = g.rank == 1 ? "Z" : "Z^" + std::to_string(g.rank);
    for (auto t : g.torsion) out += (out.empty() ? "" : " + ") + ("Z/" + std::to_string(t));
    return out;
}

std::vector<std::uint64_t> invariant_factors(const std::vector<std::uint64_t>& cyclic_orders)
{
    std::map<std::uint64_t, std::vector<std::uint64_t>> powers;  // prime -> prime powers
    for (auto n : cyclic_orders) {
        if (n == 0) fail(ErrorCode::InvalidRange, "cyclic order must be positive");
        for (std::uint64_t p = 2; p * p <= n; ++p) {
            if (n % p) continue;
            std::uint64_t q = 1;
            while (n % p == 0) {
                n /= p;
                q *= p;
            }
            powers[p].push_back(q);
        }
        if (n > 1) powers[n].push_back(n);
    }
    std::size_t count = 0;
    for (auto& [p, qs] : powers) {
        std::sort(qs.rbegin(), qs.rend());
        count = std::max(count, qs.size());
    }
    std::vector<std::uint64_t> out(count, 1);
    for (const auto& [p, qs] : powers)
        for (std::size_t i = 0; i < qs.size(); ++i) out[count - 1 - i] *= qs[i];
    return out;
}

const AbelianGroup& HomologyGroups::operator[](int degree) const
{
    static const AbelianGroup zero;
    const auto i = static_cast<std::size_t>(degree + 1);
    return degree < -1 || i >= groups_.size() ? zero : groups_[i];
}

void HomologyGroups::set(int degree, AbelianGroup g)
{
    if (degree < -1) fail(ErrorCode::InvalidRange, "homology degree below -1");
    const auto i = static_cast<std::size_t>(degree + 1);
    if (i >= groups_.size()) groups_.resize(i + 1);
    groups_[i] = std::move(g);
}

int HomologyGroups::top_degree() const
{
    for (auto i = groups_.size(); i-- > 0;)
        if (!groups_[i].trivial()) return static_cast<int>(i) - 1;
    return -2;
}

HomologyGroups HomologyGroups::shifted(int k) const
{
    HomologyGroups out;
    for (int d = -1; d <= top_degree(); ++d)
        if (!(*this)[d].trivial()) out.set(d + k, (*this)[d]);
    return out;
}

bool HomologyGroups::operator==(const HomologyGroups& o) const
{
    const int top = std::max(top_degree(), o.top_degree());
    for (int d = -1; d <= top; ++d)
        if (!((*this)[d] == o[d])) return false;
    return true;
}

std::string to_string(const HomologyGroups& h)
{
    std::string out = "{";
    const int lo = h[-1].trivial() ? 0 : -1;
    const int hi = std::max(h.top_degree(), 0);
    for (int d = lo; d <= hi; ++d)
        out += (d == lo ? "" : ", ") + std::to_string(d) + ": " + to_string(h[d]);
    return out + "}";
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : columns) n += c.size();
    return n;
}

SmithForm smith_normal_form(const DenseMatrix& m)
{
    for (const auto& row : m)
        if (row.size() != m.front().size()) fail(ErrorCode::ShapeMismatch, "ragged matrix");
    if (m.empty()) return {};
    try {
        return dense_impl<Checked>(m);
    } catch (const OverflowSignal&) {
        return dense_impl<BigInt>(m);
    }
}

SmithForm smith_normal_form(const SparseMatrix& m)
{
    if (m.columns.size() != m.cols) fail(ErrorCode::ShapeMismatch, "column count mismatch");
    try {
        return sparse_impl<Checked>(m);
    } catch (const OverflowSignal&) {
        return sparse_impl<BigInt>(m);
    }
}

ChainComplex chain_complex(const SimplicialComplex& X, std::size_t cap)
{
    ChainComplex C;
    if (X.is_void()) return C;
    C.faces = X.faces(cap);
    C.ranks.push_back(1);
    C.boundaries.push_back(SparseMatrix{0, 1, {{}}});
    for (std::size_t d = 0; d < C.faces.size(); ++d) {
        const auto& here = C.faces[d];
        C.ranks.push_back(here.size());
        SparseMatrix B;
        B.cols = here.size();
        B.columns.resize(here.size());
        if (d == 0) {
            B.rows = 1;
            for (auto& col : B.columns) col.emplace_back(0, 1);
        } else {
            const auto& lower = C.faces[d - 1];
            B.rows = lower.size();
            for (std::size_t j = 0; j < here.size(); ++j) {
                for (std::size_t i = 0; i < here[j].size(); ++i) {
                    Simplex face = here[j];
                    face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                    const auto row = std::lower_bound(lower.begin(), lower.end(), face) - lower.begin();
                    B.columns[j].emplace_back(static_cast<std::uint32_t>(row), i % 2 == 0 ? 1 : -1);
                }
                std::sort(B.columns[j].begin(), B.columns[j].end());
            }
        }
        C.boundaries.push_back(std::move(B));
    }
    return C;
}

bool boundary_squares_to_zero(const ChainComplex& C)
{
    for (std::size_t k = 1; k + 1 < C.boundaries.size(); ++k) {
        const auto& lo = C.boundaries[k];
        const auto& hi = C.boundaries[k + 1];
        if (hi.rows != lo.cols) return false;
        for (const auto& col : hi.columns) {
            std::map<std::uint32_t, std::int64_t> acc;
            for (auto [mid, v] : col)
                for (auto [r, w] : lo.columns[mid]) acc[r] += v * w;
            for (auto [r, s] : acc)
                if (s != 0) return false;
        }
    }
    return true;
}

HomologyGroups reduced_homology(const ChainComplex& C)
{
    HomologyGroups h;
    std::vector<SmithForm> snf;
    for (const auto& B : C.boundaries) snf.push_back(smith_normal_form(B));
    for (std::size_t k = 0; k < C.ranks.size(); ++k) {
        const std::size_t in = snf[k].rank;
        const std::size_t out = k + 1 < snf.size() ? snf[k + 1].rank : 0;
        AbelianGroup g;
        g.rank = C.ranks[k] - in - out;
        if (k + 1 < snf.size())
            for (auto d : snf[k + 1].invariant_factors)
                if (d > 1) g.torsion.push_back(d);
        if (!g.trivial()) h.set(static_cast<int>(k) - 1, std::move(g));
    }
    return h;
}

HomologyGroups reduced_homology(const SimplicialComplex& X, std::size_t cap)
{
    return reduced_homology(chain_complex(X, cap));
}

HomologyGroups homology_of_poset(const Poset& P, std::size_t cap)
{
    return reduced_homology(order_complex(P, cap), cap);
}

namespace {

std::vector<AbelianGroup> unreduced(const HomologyGroups& h)
{
    std::vector<AbelianGroup> u(static_cast<std::size_t>(std::max(h.top_degree(), 0)) + 1);
    for (std::size_t d = 0; d < u.size(); ++d) u[d] = h[static_cast<int>(d)];
    u[0].rank += 1;
    return u;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

} // namespace

HomologyGroups kunneth_product(const HomologyGroups& x, const HomologyGroups& y)
{
    if (x.rank(-1) > 0 || y.rank(-1) > 0) {
        HomologyGroups empty;
        empty.set(-1, AbelianGroup{1, {}});
        return empty;
    }
    const auto ux = unreduced(x);
    const auto uy = unreduced(y);
    const std::size_t top = ux.size() + uy.size();
    std::vector<std::size_t> rank(top, 0);
    std::vector<std::vector<std::uint64_t>> cyclic(top);
    for (std::size_t i = 0; i < ux.size(); ++i)
        for (std::size_t j = 0; j < uy.size(); ++j) {
            const auto& a = ux[i];
            const auto& b = uy[j];
            rank[i + j] += a.rank * b.rank;
            for (auto s : a.torsion)
                for (std::size_t r = 0; r < b.rank; ++r) cyclic[i + j].push_back(s);
            for (auto t : b.torsion)
                for (std::size_t r = 0; r < a.rank; ++r) cyclic[i + j].push_back(t);
            for (auto s : a.torsion)
                for (auto t : b.torsion) {
                    const auto g = gcd_u64(s, t);
                    if (g > 1) {
                        cyclic[i + j].push_back(g);      // tensor
                        cyclic[i + j + 1].push_back(g);  // Tor
                    }
                }
        }
    HomologyGroups out;
    for (std::size_t d = 0; d < top; ++d) {
        AbelianGroup g{rank[d] - (d == 0 ? 1 : 0), invariant_factors(cyclic[d])};
        if (!g.trivial()) out.set(static_cast<int>(d), std::move(g));
    }
    return out;
}

LerayCheck is_n_leray(const SimplicialComplex& X, int n, std::size_t cap)
{
    auto check = [n, cap](const SimplicialComplex& L, const Simplex& face) -> LerayCheck {
        const auto h = reduced_homology(L, cap);
        for (int d = std::max(n, -1); d <= h.top_degree(); ++d)
            if (!h[d].trivial()) return LerayCheck{false, face, d};
        return {};
    };
    if (X.is_void()) return {};
    if (auto r = check(X, {}); !r.holds) return r;
    for (const auto& group : X.faces(cap))
        for (const auto& face : group)
            if (auto r = check(link(X, face), face); !r.holds) return r;
    return {};
}

} // namespace dihom
