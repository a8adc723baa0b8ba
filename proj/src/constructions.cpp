#include "dihom/constructions.hpp"

#include "dihom/error.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace dihom {

namespace {

void require_size(bool ok, const std::string& what)
{
    if (!ok) fail(ErrorCode::InvalidSize, what);
}

} // namespace

Digraph transitive_tournament(int n)
{
    require_size(n >= 1, "transitive tournament needs n >= 1");
    Digraph G(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) G.add_edge(i, j);
    return G;
}

Digraph directed_path(int n)
{
    require_size(n >= 1, "path needs n >= 1");
    Digraph G(n);
    for (int i = 0; i + 1 < n; ++i) G.add_edge(i, i + 1);
    return G;
}

Digraph directed_cycle(int n)
{
    require_size(n >= 3, "cycle needs n >= 3");
    Digraph G(n);
    for (int i = 0; i < n; ++i) G.add_edge(i, (i + 1) % n);
    return G;
}

Digraph line_digraph(int n, const std::vector<bool>& forward)
{
    require_size(n >= 1, "interval needs n >= 1");
    if (forward.size() != static_cast<std::size_t>(n))
        fail(ErrorCode::ShapeMismatch, "need one orientation per step");
    Digraph G(n + 1);
    for (int i = 0; i <= n; ++i) G.add_edge(i, i);
    for (int i = 0; i < n; ++i) {
        if (forward[i])
            G.add_edge(i, i + 1);
        else
            G.add_edge(i + 1, i);
    }
    return G;
}

Digraph interval_directed_looped(int n)
{
    return line_digraph(n, std::vector<bool>(static_cast<std::size_t>(std::max(n, 0)), true));
}

Digraph interval_bidirected(int n)
{
    Digraph G = interval_directed_looped(n);
    for (int i = 0; i < n; ++i) G.add_edge(i + 1, i);
    return G;
}

Digraph complete_bipartite_digraph(int m, int n)
{
    require_size(m >= 1 && n >= 1, "bipartite blocks must be nonempty");
    Digraph G(m + n);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < n; ++b) G.add_edge(a, m + b);
    return G;
}

Digraph looped_vertex() { return Digraph(1, {{0, 0}}); }

Digraph rotational_tournament(int n)
{
    require_size(n >= 1 && n % 2 == 1, "rotational tournament needs odd n");
    Digraph G(n);
    for (int i = 0; i < n; ++i)
        for (int d = 1; d <= (n - 1) / 2; ++d) G.add_edge(i, ((i - d) % n + n) % n);
    return G;
}

Digraph mycielski_interval(int variant)
{
    switch (variant) {
    case 1: return Digraph(3, {{0, 0}, {0, 1}, {1, 2}});
    case 2: return Digraph(3, {{0, 0}, {1, 0}, {2, 1}});
    case 3: return Digraph(3, {{1, 1}, {0, 1}, {1, 2}});
    default: fail(ErrorCode::InvalidVariant, "variant " + std::to_string(variant) + " not in {1,2,3}");
    }
}

Digraph mycielskian(const Digraph& G, int variant)
{
    const Digraph I = mycielski_interval(variant);
    const int n = G.vertex_count();
    require_size(n >= 1, "Mycielskian needs a nonempty graph");
    const Digraph P = product(G, I);
    auto layer = [n](int i) {
        std::vector<int> c;
        for (int g = 0; g < n; ++g) c.push_back(g * 3 + i);
        return c;
    };
    std::vector<std::vector<int>> classes;
    if (variant == 3) classes.push_back(layer(0));
    for (int i = variant == 3 ? 1 : 0; i < 2; ++i)
        for (int g : layer(i)) classes.push_back({g});
    classes.push_back(layer(2));
    return quotient(P, classes);
}

Digraph sphere_tournament(int n)
{
    require_size(n >= 1, "sphere tournament needs n >= 1");
    const int N = 2 * n + 3;
    Digraph T(N);
    // Out-neighbourhoods are given on 1-based labels.
    auto add = [&T](int from, int to) { T.add_edge(from - 1, to - 1); };
    if (n == 1) {
        for (int w : {1, 3, 4}) add(5, w);
        for (int w : {2, 3}) add(4, w);
        for (int w : {1, 2}) add(3, w);
        for (int w : {1, 5}) add(2, w);
        add(1, 4);
        return T;
    }
    for (int i = n + 2; i <= N; ++i)
        for (int w = 1; w < i; ++w)
            if (w != i - n - 2) add(i, w);
    for (int i = 2; i <= n + 1; ++i) {
        for (int w = 1; w < i; ++w) add(i, w);
        add(i, n + 2 + i);
    }
    add(1, n + 3);
    return T;
}

std::pair<Digraph, Digraph> homotopy_hierarchy_fixture()
{
    Digraph G(2, {{0, 1}, {1, 0}});
    Digraph H(6, {{0, 2}, {1, 3}, {0, 1}, {1, 0}, {2, 3}, {3, 2}, {4, 2}, {5, 3}, {4, 5}, {5, 4}});
    return {G, H};
}

namespace {

constexpr int canonical_max = 8;

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Digraph& G) : G_(G), n_(G.vertex_count()) {}

    std::vector<int> run()
    {
        std::vector<int> perm;
        descend(perm, VertexSet{}, 0, 0);
        return best_perm_;
    }

    std::uint64_t best_code() const { return best_; }

private:
    // Bits contributed when vertex x takes position k after perm[0..k).
    std::uint64_t block(const std::vector<int>& perm, int x) const
    {
        std::uint64_t b = G_.has_edge(x, x) ? 1 : 0;
        for (int p : perm) {
            b = (b << 1) | (G_.has_edge(p, x) ? 1U : 0U);
            b = (b << 1) | (G_.has_edge(x, p) ? 1U : 0U);
        }
        return b;
    }

    void descend(std::vector<int>& perm, VertexSet used, std::uint64_t prefix, int len)
    {
        const int total = n_ * n_;
        const int k = static_cast<int>(perm.size());
        if (k == n_) {
            if (!found_ || prefix < best_) {
                best_ = prefix;
                best_perm_ = perm;
                found_ = true;
            }
            return;
        }
        for (int x = 0; x < n_; ++x) {
            if (used.contains(x)) continue;
            const int blen = 2 * k + 1;
            const std::uint64_t next = (prefix << blen) | block(perm, x);
            if (found_ && next > (best_ >> (total - len - blen))) continue;
            perm.push_back(x);
            used.insert(x);
            descend(perm, used, next, len + blen);
            used.erase(x);
            perm.pop_back();
        }
    }

    const Digraph& G_;
    int n_;
    bool found_ = false;
    std::uint64_t best_ = 0;
    std::vector<int> best_perm_;
};

Digraph relabel(const Digraph& G, const std::vector<int>& order)
{
    std::vector<int> pos(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<int>(k);
    Digraph R(G.vertex_count());
    for (auto [u, v] : G.edges()) R.add_edge(pos[u], pos[v]);
    return R;
}

void check_canonical_size(const Digraph& G)
{
    if (G.vertex_count() > canonical_max)
        fail(ErrorCode::SizeCapExceeded, "canonical form limited to " + std::to_string(canonical_max) +
                                             " vertices");
}

// Counts bijections V(G) -> V(H) that are isomorphisms, stopping after
// `limit` of them.
class IsoSearch {
public:
    IsoSearch(const Digraph& G, const Digraph& H) : G_(G), H_(H), n_(G.vertex_count()) {}

    std::uint64_t count(std::uint64_t limit)
    {
        limit_ = limit;
        found_ = 0;
        if (n_ != H_.vertex_count() || G_.edge_count() != H_.edge_count()) return 0;
        std::vector<int> image;
        descend(image, VertexSet{});
        return found_;
    }

private:
    bool compatible(int v, int x) const
    {
        return G_.out_neighbors(v).size() == H_.out_neighbors(x).size() &&
               G_.in_neighbors(v).size() == H_.in_neighbors(x).size() &&
               G_.has_loop(v) == H_.has_loop(x);
    }

    void descend(std::vector<int>& image, VertexSet used)
    {
        const int v = static_cast<int>(image.size());
        if (v == n_) {
            ++found_;
            return;
        }
        for (int x = 0; x < n_ && found_ < limit_; ++x) {
            if (used.contains(x) || !compatible(v, x)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = G_.has_edge(u, v) == H_.has_edge(image[u], x) &&
                     G_.has_edge(v, u) == H_.has_edge(x, image[u]);
            if (!ok) continue;
            image.push_back(x);
            descend(image, used | VertexSet::singleton(x));
            image.pop_back();
        }
    }

    const Digraph& G_;
    const Digraph& H_;
    int n_;
    std::uint64_t limit_ = 0;
    std::uint64_t found_ = 0;
};

} // namespace

Digraph canonical_form(const Digraph& G)
{
    check_canonical_size(G);
    return relabel(G, CanonicalSearch(G).run());
}

std::uint64_t canonical_code(const Digraph& G)
{
    check_canonical_size(G);
    CanonicalSearch s(G);
    s.run();
    return s.best_code();
}

bool is_isomorphic(const Digraph& G, const Digraph& H) { return IsoSearch(G, H).count(1) == 1; }

std::uint64_t automorphism_group_order(const Digraph& G)
{
    return IsoSearch(G, G).count(~std::uint64_t{0});
}

std::vector<Digraph> enumerate_tournaments(int n)
{
    require_size(n >= 1, "tournaments need n >= 1");
    if (n > 7) fail(ErrorCode::SizeCapExceeded, "tournament enumeration limited to 7 vertices");
    std::map<std::uint64_t, Digraph> classes{{canonical_code(Digraph(1)), Digraph(1)}};
    for (int k = 2; k <= n; ++k) {
        std::map<std::uint64_t, Digraph> next;
        for (const auto& [code, T] : classes) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
                Digraph E(k);
                for (auto [u, v] : T.edges()) E.add_edge(u, v);
                for (int s = 0; s < k - 1; ++s) {
                    if ((mask >> s) & 1U)
                        E.add_edge(k - 1, s);
                    else
                        E.add_edge(s, k - 1);
                }
                const auto c = canonical_code(E);
                if (!next.contains(c)) next.emplace(c, canonical_form(E));
            }
        }
        classes = std::move(next);
    }
    std::vector<Digraph> out;
    for (auto& [code, T] : classes) out.push_back(std::move(T));
    return out;
}

std::vector<Digraph> all_digraphs(int n, bool with_loops)
{
    require_size(n >= 0 && n <= 4, "exhaustive digraph listing limited to 4 vertices");
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v || with_loops) slots.emplace_back(u, v);
    std::vector<Digraph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        Digraph G(n);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1U) G.add_edge(slots[i].first, slots[i].second);
        out.push_back(std::move(G));
    }
    return out;
}

std::vector<Digraph> all_simple_digraphs(int n)
{
    require_size(n >= 0 && n <= 5, "exhaustive simple digraph listing limited to 5 vertices");
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
    std::vector<Digraph> out;
    out.reserve(total);
    for (std::uint64_t code = 0; code < total; ++code) {
        Digraph G(n);
        auto c = code;
        for (auto [u, v] : pairs) {
            if (c % 3 == 1) G.add_edge(u, v);
            if (c % 3 == 2) G.add_edge(v, u);
            c /= 3;
        }
        out.push_back(std::move(G));
    }
    return out;
}

} // namespace dihom
