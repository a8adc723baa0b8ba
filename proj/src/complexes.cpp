#include "dihom/complexes.hpp"

#include "dihom/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace dihom {

namespace {

bool fits_word(const std::vector<Simplex>& sets)
{
    for (const auto& s : sets)
        if (!s.empty() && (s.front() < 0 || s.back() >= VertexSet::capacity)) return false;
    return true;
}

VertexSet to_set(const Simplex& s)
{
    VertexSet out;
    for (int v : s) out.insert(v);
    return out;
}

// Drops dominated sets; returns the survivors in lexicographic order.
std::vector<Simplex> minimize(std::vector<Simplex> sets)
{
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    std::sort(sets.begin(), sets.end(), [](const Simplex& a, const Simplex& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<Simplex> kept;
    if (fits_word(sets)) {
        std::vector<VertexSet> kept_bits;
        for (auto& s : sets) {
            const VertexSet b = to_set(s);
            if (std::none_of(kept_bits.begin(), kept_bits.end(),
                             [b](VertexSet k) { return b.is_subset_of(k); })) {
                kept_bits.push_back(b);
                kept.push_back(std::move(s));
            }
        }
    } else {
        for (auto& s : sets) {
            if (std::none_of(kept.begin(), kept.end(), [&s](const Simplex& k) {
                    return std::includes(k.begin(), k.end(), s.begin(), s.end());
                }))
                kept.push_back(std::move(s));
        }
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

void sort_unique(std::vector<Simplex>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

SimplicialComplex::SimplicialComplex(std::vector<Simplex> generators)
    : facets_(minimize(std::move(generators)))
{
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Simplex> facets)
{
    SimplicialComplex X;
    std::sort(facets.begin(), facets.end());
    X.facets_ = std::move(facets);
    return X;
}

SimplicialComplex SimplicialComplex::empty_face() { return from_facets({Simplex{}}); }

SimplicialComplex SimplicialComplex::simplex(Simplex vertices)
{
    return SimplicialComplex(std::vector<Simplex>{std::move(vertices)});
}

SimplicialComplex SimplicialComplex::simplex_boundary(const Simplex& vertices)
{
    std::vector<Simplex> gens;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        Simplex f = vertices;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        gens.push_back(std::move(f));
    }
    return SimplicialComplex(std::move(gens));
}

std::vector<int> SimplicialComplex::vertices() const
{
    std::vector<int> vs;
    for (const auto& f : facets_) vs.insert(vs.end(), f.begin(), f.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

int SimplicialComplex::dimension() const
{
    int d = -2;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

bool SimplicialComplex::contains(const Simplex& face) const
{
    return std::any_of(facets_.begin(), facets_.end(), [&face](const Simplex& f) {
        return std::includes(f.begin(), f.end(), face.begin(), face.end());
    });
}

std::vector<std::vector<Simplex>> SimplicialComplex::faces(std::size_t cap) const
{
    const int dim = dimension();
    std::vector<std::vector<Simplex>> out(static_cast<std::size_t>(std::max(dim + 1, 0)));
    std::size_t raw = 0;
    auto distinct = [&out] {
        std::size_t total = 0;
        for (auto& group : out) {
            sort_unique(group);
            total += group.size();
        }
        return total;
    };
    auto too_many = [cap](std::size_t count) {
        fail(ErrorCode::SizeCapExceeded,
             "complex has more than " + std::to_string(std::max(count, cap)) + " faces, cap " +
                 std::to_string(cap));
    };
    for (const auto& f : facets_) {
        const auto k = f.size();
        if (k >= 63 || (std::uint64_t{1} << k) - 1 > cap) too_many(cap + 1);
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
            Simplex s;
            for (std::size_t i = 0; i < k; ++i)
                if ((mask >> i) & 1U) s.push_back(f[i]);
            out[s.size() - 1].push_back(std::move(s));
        }
        raw += (std::size_t{1} << k) - 1;
        if (raw > 4 * cap) {
            raw = distinct();
            if (raw > cap) too_many(raw);
        }
    }
    if (const auto total = distinct(); total > cap) too_many(total);
    return out;
}

std::size_t SimplicialComplex::face_count(std::size_t cap) const
{
    std::size_t total = 0;
    for (const auto& group : faces(cap)) total += group.size();
    return total;
}

std::string to_string(const Simplex& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

std::string to_string(const SimplicialComplex& X)
{
    if (X.is_void()) return "<void>";
    std::string out = "<";
    for (std::size_t i = 0; i < X.facets().size(); ++i) out += (i ? " " : "") + to_string(X.facets()[i]);
    return out + ">";
}

SimplicialComplex link(const SimplicialComplex& X, const Simplex& sigma)
{
    Simplex s = sigma;
    std::sort(s.begin(), s.end());
    if (!X.contains(s)) fail(ErrorCode::FaceNotInComplex, to_string(s) + " is not a face");
    std::vector<Simplex> gens;
    for (const auto& f : X.facets()) {
        if (!std::includes(f.begin(), f.end(), s.begin(), s.end())) continue;
        Simplex rest;
        std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(rest));
        gens.push_back(std::move(rest));
    }
    return SimplicialComplex(std::move(gens));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& X, const Simplex& S)
{
    if (X.is_void()) return X;
    Simplex s = S;
    std::sort(s.begin(), s.end());
    std::vector<Simplex> gens;
    for (const auto& f : X.facets()) {
        Simplex part;
        std::set_intersection(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(part));
        gens.push_back(std::move(part));
    }
    return SimplicialComplex(std::move(gens));
}

SimplicialComplex suspension(const SimplicialComplex& X)
{
    const auto vs = X.vertices();
    const int a = vs.empty() ? 0 : vs.back() + 1;
    std::vector<Simplex> gens;
    for (const auto& f : X.facets()) {
        for (int apex : {a, a + 1}) {
            Simplex g = f;
            g.push_back(apex);
            gens.push_back(std::move(g));
        }
    }
    return SimplicialComplex(std::move(gens));
}

long long euler_characteristic(const SimplicialComplex& X, std::size_t cap)
{
    long long chi = 0;
    const auto groups = X.faces(cap);
    for (std::size_t d = 0; d < groups.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(groups[d].size());
    return chi;
}

namespace {

SimplicialComplex neighborhood_complex(const Digraph& G, bool out)
{
    std::vector<Simplex> gens;
    for (int v = 0; v < G.vertex_count(); ++v) {
        const VertexSet nb = out ? G.out_neighbors(v) : G.in_neighbors(v);
        if (!nb.empty()) gens.push_back(nb.to_vector());
    }
    return SimplicialComplex(std::move(gens));
}

} // namespace

SimplicialComplex out_neighborhood_complex(const Digraph& G) { return neighborhood_complex(G, true); }

SimplicialComplex in_neighborhood_complex(const Digraph& G) { return neighborhood_complex(G, false); }

SimplicialComplex directed_clique_complex(const Digraph& G)
{
    std::unordered_set<std::uint64_t> cliques;
    std::vector<std::pair<VertexSet, VertexSet>> stack;  // clique, vertices that may follow
    for (int v = 0; v < G.vertex_count(); ++v)
        stack.emplace_back(VertexSet::singleton(v), G.out_neighbors(v) - VertexSet::singleton(v));
    while (!stack.empty()) {
        auto [S, next] = stack.back();
        stack.pop_back();
        if (!cliques.insert(S.bits()).second) continue;
        for (int w : next) stack.emplace_back(S | VertexSet::singleton(w), (next & G.out_neighbors(w)) - VertexSet::singleton(w));
    }
    std::vector<Simplex> facets;
    for (auto bits : cliques) {
        const VertexSet S(bits);
        bool maximal = true;
        for (int w : G.vertices() - S)
            if (cliques.contains((S | VertexSet::singleton(w)).bits())) {
                maximal = false;
                break;
            }
        if (maximal) facets.push_back(S.to_vector());
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

Digraph universality_graph(const SimplicialComplex& X)
{
    const auto vs = X.vertices();
    if (vs.empty()) fail(ErrorCode::EmptyComplex, "complex has no nonempty facet");
    const int base = vs.back() + 1;
    Digraph G(base + static_cast<int>(X.facets().size()));
    for (std::size_t i = 0; i < X.facets().size(); ++i)
        for (int v : X.facets()[i]) G.add_edge(base + static_cast<int>(i), v);
    return G;
}

namespace {

void check_labels(std::size_t n, const std::vector<std::string>& labels)
{
    if (!labels.empty() && labels.size() != n)
        fail(ErrorCode::InvalidPoset, "label count does not match element count");
}

} // namespace

Poset Poset::from_covers(std::size_t n, const std::vector<Pair>& covers, std::vector<std::string> labels)
{
    check_labels(n, labels);
    Poset P;
    P.up_.resize(n);
    P.down_.resize(n);
    for (auto [a, b] : covers) {
        if (a >= n || b >= n) fail(ErrorCode::InvalidPoset, "cover pair outside element range");
        if (a == b) fail(ErrorCode::InvalidPoset, "reflexive cover pair");
        P.up_[a].push_back(b);
        P.down_[b].push_back(a);
    }
    for (auto* lists : {&P.up_, &P.down_})
        for (auto& l : *lists) {
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
        }
    std::vector<std::size_t> indeg(n), stack;
    for (std::size_t a = 0; a < n; ++a) indeg[a] = P.down_[a].size();
    for (std::size_t a = 0; a < n; ++a)
        if (indeg[a] == 0) stack.push_back(a);
    std::size_t seen = 0;
    while (!stack.empty()) {
        auto a = stack.back();
        stack.pop_back();
        ++seen;
        for (auto b : P.up_[a])
            if (--indeg[b] == 0) stack.push_back(b);
    }
    if (seen != n) fail(ErrorCode::InvalidPoset, "cover relation has a cycle");
    P.labels_ = std::move(labels);
    return P;
}

Poset Poset::from_relation(std::size_t n, const std::vector<Pair>& less_than, std::vector<std::string> labels)
{
    check_labels(n, labels);
    const std::size_t words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> above(n, std::vector<std::uint64_t>(words));
    auto test = [](const std::vector<std::uint64_t>& row, std::size_t b) { return (row[b / 64] >> (b % 64)) & 1U; };
    for (auto [a, b] : less_than) {
        if (a >= n || b >= n) fail(ErrorCode::InvalidPoset, "relation pair outside element range");
        if (a == b) fail(ErrorCode::InvalidPoset, "relation is not irreflexive");
        above[a][b / 64] |= std::uint64_t{1} << (b % 64);
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!test(above[a], b)) continue;
            for (std::size_t w = 0; w < words; ++w)
                if (above[b][w] & ~above[a][w]) fail(ErrorCode::InvalidPoset, "relation is not transitive");
        }
    std::vector<Pair> covers;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!test(above[a], b)) continue;
            bool cover = true;
            for (std::size_t c = 0; c < n && cover; ++c)
                if (test(above[a], c) && test(above[c], b)) cover = false;
            if (cover) covers.emplace_back(a, b);
        }
    return from_covers(n, covers, std::move(labels));
}

bool Poset::covers(std::size_t a, std::size_t b) const
{
    const auto& u = up_.at(a);
    return std::binary_search(u.begin(), u.end(), b);
}

bool Poset::less(std::size_t a, std::size_t b) const
{
    if (a == b) return false;
    std::vector<char> seen(size(), 0);
    std::vector<std::size_t> stack{a};
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (auto y : up_[x]) {
            if (y == b) return true;
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
        }
    }
    return false;
}

std::vector<std::size_t> Poset::minimal_elements() const
{
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < size(); ++a)
        if (down_[a].empty()) out.push_back(a);
    return out;
}

std::vector<std::size_t> Poset::maximal_elements() const
{
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < size(); ++a)
        if (up_[a].empty()) out.push_back(a);
    return out;
}

Poset product(const Poset& P, const Poset& Q)
{
    const std::size_t m = Q.size();
    std::vector<Poset::Pair> covers;
    for (std::size_t p = 0; p < P.size(); ++p)
        for (std::size_t q = 0; q < m; ++q) {
            for (auto p2 : P.upper_covers(p)) covers.emplace_back(p * m + q, p2 * m + q);
            for (auto q2 : Q.upper_covers(q)) covers.emplace_back(p * m + q, p * m + q2);
        }
    std::vector<std::string> labels;
    if (!P.labels().empty() && !Q.labels().empty())
        for (std::size_t p = 0; p < P.size(); ++p)
            for (std::size_t q = 0; q < m; ++q) labels.push_back("(" + P.labels()[p] + "," + Q.labels()[q] + ")");
    return Poset::from_covers(P.size() * m, covers, std::move(labels));
}

Poset face_poset(const SimplicialComplex& X, std::size_t cap)
{
    const auto groups = X.faces(cap);
    std::vector<std::size_t> offset(groups.size() + 1, 0);
    for (std::size_t d = 0; d < groups.size(); ++d) offset[d + 1] = offset[d] + groups[d].size();
    std::vector<Poset::Pair> covers;
    std::vector<std::string> labels;
    labels.reserve(offset.back());
    for (std::size_t d = 0; d < groups.size(); ++d)
        for (std::size_t i = 0; i < groups[d].size(); ++i) {
            const auto& f = groups[d][i];
            labels.push_back(to_string(f));
            if (d == 0) continue;
            for (std::size_t k = 0; k < f.size(); ++k) {
                Simplex g = f;
                g.erase(g.begin() + static_cast<std::ptrdiff_t>(k));
                const auto& lower = groups[d - 1];
                const auto j = static_cast<std::size_t>(std::lower_bound(lower.begin(), lower.end(), g) - lower.begin());
                covers.emplace_back(offset[d - 1] + j, offset[d] + i);
            }
        }
    return Poset::from_covers(offset.back(), covers, std::move(labels));
}

SimplicialComplex order_complex(const Poset& P, std::size_t cap)
{
    if (P.size() == 0) return SimplicialComplex::empty_face();
    std::vector<Simplex> chains;
    std::vector<int> path;
    // Depth-first walk over saturated chains from each minimal element.
    std::vector<std::pair<std::size_t, std::size_t>> stack;  // element, next upper cover
    for (auto m : P.minimal_elements()) {
        stack.emplace_back(m, 0);
        path.push_back(static_cast<int>(m));
        while (!stack.empty()) {
            auto& [x, next] = stack.back();
            const auto& up = P.upper_covers(x);
            if (up.empty()) {
                Simplex c = path;
                std::sort(c.begin(), c.end());
                chains.push_back(std::move(c));
                if (chains.size() > cap)
                    fail(ErrorCode::SizeCapExceeded, "more than " + std::to_string(cap) + " maximal chains");
            }
            if (next < up.size()) {
                const auto y = up[next++];
                stack.emplace_back(y, 0);
                path.push_back(static_cast<int>(y));
            } else {
                stack.pop_back();
                path.pop_back();
            }
        }
    }
    auto X = SimplicialComplex::from_facets(std::move(chains));
    X.set_vertex_labels(P.labels());
    return X;
}

} // namespace dihom
