#include "dihom/digraph.hpp"

#include "dihom/error.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <string>

namespace dihom {

Digraph::Digraph(int n)
{
    if (n < 0) fail(ErrorCode::InvalidSize, "negative vertex count");
    if (n > max_vertices)
        fail(ErrorCode::SizeCapExceeded, std::to_string(n) + " vertices exceeds " +
                                             std::to_string(max_vertices));
    out_.assign(static_cast<std::size_t>(n), VertexSet{});
    in_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Digraph::Digraph(int n, std::span<const Edge> edges) : Digraph(n)
{
    for (auto [u, v] : edges) add_edge(u, v);
}

Digraph::Digraph(int n, std::initializer_list<Edge> edges)
    : Digraph(n, std::span<const Edge>(edges.begin(), edges.size()))
{
}

void Digraph::check_vertex(int v) const
{
    if (v < 0 || v >= vertex_count())
        fail(ErrorCode::InvalidVertex, "vertex " + std::to_string(v) + " not in 0.." +
                                           std::to_string(vertex_count() - 1));
}

std::size_t Digraph::edge_count() const
{
    std::size_t m = 0;
    for (auto s : out_) m += static_cast<std::size_t>(s.size());
    return m;
}

bool Digraph::has_edge(int u, int v) const
{
    check_vertex(u);
    check_vertex(v);
    return out_[u].contains(v);
}

void Digraph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    out_[u].insert(v);
    in_[v].insert(u);
}

void Digraph::remove_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    out_[u].erase(v);
    in_[v].erase(u);
}

VertexSet Digraph::out_neighbors(int v) const
{
    check_vertex(v);
    return out_[v];
}

VertexSet Digraph::in_neighbors(int v) const
{
    check_vertex(v);
    return in_[v];
}

VertexSet Digraph::looped_vertices() const
{
    VertexSet s;
    for (int v = 0; v < vertex_count(); ++v)
        if (out_[v].contains(v)) s.insert(v);
    return s;
}

std::vector<Edge> Digraph::edges() const
{
    std::vector<Edge> es;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : out_[u]) es.emplace_back(u, v);
    return es;
}

std::ostream& operator<<(std::ostream& os, const Digraph& g)
{
    os << "Digraph(" << g.vertex_count() << ", {";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        os << (first ? "" : ", ") << u << "->" << v;
        first = false;
    }
    return os << "})";
}

std::ostream& operator<<(std::ostream& os, const VertexMap& f)
{
    os << '(';
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    return os << ')';
}

bool is_homomorphism(const VertexMap& f, const Digraph& G, const Digraph& H)
{
    if (f.size() != static_cast<std::size_t>(G.vertex_count()))
        fail(ErrorCode::ShapeMismatch, "map has " + std::to_string(f.size()) +
                                           " entries, source has " +
                                           std::to_string(G.vertex_count()) + " vertices");
    for (std::size_t v = 0; v < f.size(); ++v)
        if (f[v] < 0 || f[v] >= H.vertex_count())
            fail(ErrorCode::ShapeMismatch, "image " + std::to_string(f[v]) + " outside target");
    for (auto [u, v] : G.edges())
        if (!H.has_edge(f[u], f[v])) return false;
    return true;
}

namespace {

class HomSearch {
public:
    HomSearch(const Digraph& G, const Digraph& H,
              const std::function<bool(const VertexMap&)>& visit)
        : G_(G), H_(H), visit_(visit), n_(G.vertex_count()),
          levels_(static_cast<std::size_t>(n_) + 1,
                  std::vector<VertexSet>(static_cast<std::size_t>(n_))),
          f_(std::vector<int>(static_cast<std::size_t>(n_), 0))
    {
        const VertexSet all = H.vertices();
        const VertexSet looped = H.looped_vertices();
        for (int v = 0; v < n_; ++v) levels_[0][v] = G.has_loop(v) ? looped : all;
    }

    void run() { descend(0); }

private:
    bool descend(int v)
    {
        if (v == n_) return visit_(f_);
        const auto& cand = levels_[v];
        auto& next = levels_[v + 1];
        const VertexSet out_v = G_.out_neighbors(v);
        const VertexSet in_v = G_.in_neighbors(v);
        for (int x : cand[v]) {
            bool ok = true;
            for (int w = v + 1; w < n_ && ok; ++w) {
                VertexSet c = cand[w];
                if (out_v.contains(w)) c &= H_.out_neighbors(x);
                if (in_v.contains(w)) c &= H_.in_neighbors(x);
                next[w] = c;
                ok = !c.empty();
            }
            if (!ok) continue;
            f_[v] = x;
            if (!descend(v + 1)) return false;
        }
        return true;
    }

    const Digraph& G_;
    const Digraph& H_;
    const std::function<bool(const VertexMap&)>& visit_;
    int n_;
    std::vector<std::vector<VertexSet>> levels_;
    VertexMap f_;
};

} // namespace

void for_each_homomorphism(const Digraph& G, const Digraph& H,
                           const std::function<bool(const VertexMap&)>& visit)
{
    HomSearch(G, H, visit).run();
}

std::vector<VertexMap> enumerate_homomorphisms(const Digraph& G, const Digraph& H)
{
    std::vector<VertexMap> out;
    for_each_homomorphism(G, H, [&](const VertexMap& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

bool has_homomorphism(const Digraph& G, const Digraph& H)
{
    bool found = false;
    for_each_homomorphism(G, H, [&](const VertexMap&) {
        found = true;
        return false;
    });
    return found;
}

Digraph product(const Digraph& G, const Digraph& H)
{
    const int m = H.vertex_count();
    Digraph P(G.vertex_count() * m);
    for (auto [g, g2] : G.edges())
        for (auto [h, h2] : H.edges()) P.add_edge(g * m + h, g2 * m + h2);
    return P;
}

Digraph coproduct(const Digraph& G, const Digraph& H)
{
    const int s = G.vertex_count();
    Digraph C(s + H.vertex_count());
    for (auto [u, v] : G.edges()) C.add_edge(u, v);
    for (auto [u, v] : H.edges()) C.add_edge(u + s, v + s);
    return C;
}

std::uint64_t map_count(const Digraph& H, const Digraph& G)
{
    std::uint64_t count = 1;
    const auto base = static_cast<std::uint64_t>(H.vertex_count());
    for (int i = 0; i < G.vertex_count(); ++i) {
        if (base != 0 && count > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        count *= base;
    }
    return count;
}

VertexMap map_at(const Digraph& H, const Digraph& G, std::uint64_t index)
{
    const auto base = static_cast<std::uint64_t>(H.vertex_count());
    std::vector<int> image(static_cast<std::size_t>(G.vertex_count()));
    for (auto v = image.size(); v-- > 0;) {
        image[v] = static_cast<int>(index % base);
        index /= base;
    }
    return VertexMap(std::move(image));
}

std::uint64_t map_index(const Digraph& H, const VertexMap& f)
{
    const auto base = static_cast<std::uint64_t>(H.vertex_count());
    std::uint64_t index = 0;
    for (std::size_t v = 0; v < f.size(); ++v) index = index * base + static_cast<std::uint64_t>(f[v]);
    return index;
}

namespace {

void check_map_cap(const Digraph& H, const Digraph& G, std::uint64_t cap)
{
    const auto count = map_count(H, G);
    if (count > cap)
        fail(ErrorCode::SizeCapExceeded,
             "exponential graph has " +
                 (count == std::numeric_limits<std::uint64_t>::max() ? std::string("more than 2^64")
                                                                     : std::to_string(count)) +
                 " vertices, cap " + std::to_string(cap));
}

// Targets g with (f, g) an edge of H^G: g(w) must lie in the common
// out-neighbourhood of f over the in-neighbours of w.
std::vector<VertexSet> allowed_successors(const Digraph& H, const Digraph& G, const VertexMap& f)
{
    std::vector<VertexSet> allowed(static_cast<std::size_t>(G.vertex_count()), H.vertices());
    for (auto [v, w] : G.edges()) allowed[w] &= H.out_neighbors(f[v]);
    return allowed;
}

} // namespace

Digraph exponential(const Digraph& H, const Digraph& G, std::uint64_t cap)
{
    check_map_cap(H, G, cap);
    const auto count = map_count(H, G);
    if (count > static_cast<std::uint64_t>(Digraph::max_vertices))
        fail(ErrorCode::SizeCapExceeded, "exponential graph has " + std::to_string(count) +
                                             " vertices; use exponential_graph beyond 64");
    const MapDigraph big = exponential_graph(H, G, cap);
    Digraph E(static_cast<int>(count));
    for (std::size_t i = 0; i < big.size(); ++i)
        for (auto j : big.out[i]) E.add_edge(static_cast<int>(i), static_cast<int>(j));
    return E;
}

bool MapDigraph::has_edge(std::size_t i, std::size_t j) const
{
    const auto& o = out.at(i);
    return std::binary_search(o.begin(), o.end(), static_cast<std::uint32_t>(j));
}

std::size_t MapDigraph::index_of(const VertexMap& f) const
{
    auto it = std::lower_bound(vertices.begin(), vertices.end(), f);
    if (it == vertices.end() || *it != f) return vertices.size();
    return static_cast<std::size_t>(it - vertices.begin());
}

MapDigraph exponential_graph(const Digraph& H, const Digraph& G, std::uint64_t cap)
{
    check_map_cap(H, G, cap);
    const auto count = map_count(H, G);
    if (count > std::numeric_limits<std::uint32_t>::max())
        fail(ErrorCode::SizeCapExceeded, "exponential graph index overflow");
    const int k = G.vertex_count();
    MapDigraph E;
    E.vertices.reserve(count);
    E.out.resize(count);
    for (std::uint64_t i = 0; i < count; ++i) E.vertices.push_back(map_at(H, G, i));
    const auto base = static_cast<std::uint64_t>(H.vertex_count());
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto allowed = allowed_successors(H, G, E.vertices[i]);
        if (std::any_of(allowed.begin(), allowed.end(), [](VertexSet s) { return s.empty(); }))
            continue;
        // Odometer over the product of the allowed sets, in lexicographic order.
        std::vector<std::vector<int>> choices;
        for (auto s : allowed) choices.push_back(s.to_vector());
        std::vector<std::size_t> pos(static_cast<std::size_t>(k), 0);
        while (true) {
            std::uint64_t idx = 0;
            for (int v = 0; v < k; ++v) idx = idx * base + static_cast<std::uint64_t>(choices[v][pos[v]]);
            E.out[i].push_back(static_cast<std::uint32_t>(idx));
            int v = k - 1;
            while (v >= 0 && ++pos[v] == choices[v].size()) pos[v--] = 0;
            if (v < 0) break;
        }
    }
    return E;
}

MapDigraph exponential_looped_part(const Digraph& H, const Digraph& G)
{
    MapDigraph E;
    E.vertices = enumerate_homomorphisms(G, H);
    E.out.resize(E.vertices.size());
    for (std::size_t i = 0; i < E.size(); ++i) {
        const auto allowed = allowed_successors(H, G, E.vertices[i]);
        for (std::size_t j = 0; j < E.size(); ++j) {
            const auto& g = E.vertices[j];
            bool edge = true;
            for (std::size_t w = 0; w < g.size() && edge; ++w) edge = allowed[w].contains(g[w]);
            if (edge) E.out[i].push_back(static_cast<std::uint32_t>(j));
        }
    }
    return E;
}

Digraph quotient(const Digraph& G, const std::vector<std::vector<int>>& classes)
{
    const int n = G.vertex_count();
    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (classes[c].empty()) fail(ErrorCode::MalformedPartition, "empty class");
        for (int v : classes[c]) {
            if (v < 0 || v >= n)
                fail(ErrorCode::MalformedPartition, "vertex " + std::to_string(v) + " out of range");
            if (cls[v] != -1)
                fail(ErrorCode::MalformedPartition, "vertex " + std::to_string(v) + " in two classes");
            cls[v] = static_cast<int>(c);
        }
    }
    for (int v = 0; v < n; ++v)
        if (cls[v] == -1) fail(ErrorCode::MalformedPartition, "vertex " + std::to_string(v) + " missing");
    Digraph Q(static_cast<int>(classes.size()));
    for (auto [u, v] : G.edges()) Q.add_edge(cls[u], cls[v]);
    return Q;
}

Digraph induced_subgraph(const Digraph& G, VertexSet S)
{
    if (!S.is_subset_of(G.vertices())) fail(ErrorCode::InvalidVertex, "subset outside vertex set");
    std::vector<int> label(static_cast<std::size_t>(G.vertex_count()), -1);
    int next = 0;
    for (int v : S) label[v] = next++;
    Digraph sub(next);
    for (auto [u, v] : G.edges())
        if (S.contains(u) && S.contains(v)) sub.add_edge(label[u], label[v]);
    return sub;
}

Digraph delete_vertex(const Digraph& G, int v)
{
    if (v < 0 || v >= G.vertex_count()) fail(ErrorCode::InvalidVertex, "vertex " + std::to_string(v));
    auto S = G.vertices();
    S.erase(v);
    return induced_subgraph(G, S);
}

Digraph underlying_symmetrization(const Digraph& G)
{
    Digraph S(G.vertex_count());
    for (auto [u, v] : G.edges()) {
        S.add_edge(u, v);
        S.add_edge(v, u);
    }
    return S;
}

Digraph looped_part(const Digraph& G) { return induced_subgraph(G, G.looped_vertices()); }

Digraph reverse(const Digraph& G)
{
    Digraph R(G.vertex_count());
    for (auto [u, v] : G.edges()) R.add_edge(v, u);
    return R;
}

namespace {

bool bipartite_search(const Digraph& G, int start, int m, int n, VertexSet A, VertexSet common)
{
    if ((common - A).size() < n) return false;
    if (A.size() == m) return true;
    for (int a = start; a < G.vertex_count(); ++a)
        if (bipartite_search(G, a + 1, m, n, A | VertexSet::singleton(a), common & G.out_neighbors(a)))
            return true;
    return false;
}

} // namespace

bool contains_bipartite(const Digraph& G, int m, int n)
{
    if (m < 1 || n < 1) fail(ErrorCode::InvalidSize, "bipartite block sizes must be positive");
    if (m + n > G.vertex_count()) return false;
    return bipartite_search(G, 0, m, n, VertexSet{}, G.vertices());
}

bool is_acyclic(const Digraph& G)
{
    const int n = G.vertex_count();
    std::vector<int> indeg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) indeg[v] = G.in_neighbors(v).size();
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int w : G.out_neighbors(v))
            if (--indeg[w] == 0) stack.push_back(w);
    }
    return seen == n;
}

std::vector<VertexSet> weak_components(const Digraph& G)
{
    std::vector<VertexSet> comps;
    VertexSet unseen = G.vertices();
    while (!unseen.empty()) {
        VertexSet comp = VertexSet::singleton(unseen.min());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next |= G.out_neighbors(v) | G.in_neighbors(v);
            frontier = next - comp;
            comp |= next;
        }
        comps.push_back(comp);
        unseen -= comp;
    }
    return comps;
}

bool is_tournament(const Digraph& G)
{
    const int n = G.vertex_count();
    for (int u = 0; u < n; ++u) {
        if (G.has_loop(u)) return false;
        for (int v = u + 1; v < n; ++v)
            if (G.has_edge(u, v) == G.has_edge(v, u)) return false;
    }
    return true;
}

} // namespace dihom
