#include "dihom/homotopy.hpp"

#include "dihom/constructions.hpp"
#include "dihom/error.hpp"
#include "dihom/homcomplex.hpp"

#include <algorithm>
#include <random>

namespace dihom {

namespace {

bool folds_onto(const Digraph& G, int v, int w)
{
    return v != w && G.in_neighbors(v).is_subset_of(G.in_neighbors(w)) &&
           G.out_neighbors(v).is_subset_of(G.out_neighbors(w));
}

} // namespace

std::optional<Fold> find_fold(const Digraph& G)
{
    for (int v = 0; v < G.vertex_count(); ++v)
        for (int w = 0; w < G.vertex_count(); ++w)
            if (folds_onto(G, v, w)) return Fold{v, w};
    return std::nullopt;
}

std::vector<Fold> all_folds(const Digraph& G)
{
    std::vector<Fold> out;
    for (int v = 0; v < G.vertex_count(); ++v)
        for (int w = 0; w < G.vertex_count(); ++w)
            if (folds_onto(G, v, w)) out.push_back({v, w});
    return out;
}

Digraph fold(const Digraph& G, int v, int w)
{
    if (v < 0 || w < 0 || v >= G.vertex_count() || w >= G.vertex_count() || !folds_onto(G, v, w))
        fail(ErrorCode::InvalidFold, "(" + std::to_string(v) + ", " + std::to_string(w) + ") is not a fold");
    return delete_vertex(G, v);
}

StiffReduction stiff_reduction(const Digraph& G, std::optional<std::uint64_t> seed)
{
    StiffReduction R{G, {}, {}};
    for (int v = 0; v < G.vertex_count(); ++v) R.survivors.push_back(v);
    std::mt19937_64 rng(seed.value_or(0));
    while (true) {
        std::optional<Fold> step;
        if (seed) {
            const auto options = all_folds(R.result);
            if (!options.empty())
                step = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
        } else {
            step = find_fold(R.result);
        }
        if (!step) break;
        R.result = fold(R.result, step->v, step->w);
        R.trace.push_back(*step);
        R.survivors.erase(R.survivors.begin() + step->v);
    }
    return R;
}

bool is_dismantlable(const Digraph& G)
{
    const auto R = stiff_reduction(G);
    return R.result.vertex_count() == 1 && R.result.has_loop(0);
}

namespace {

void require_hom(const VertexMap& f, const Digraph& G, const Digraph& H)
{
    if (!is_homomorphism(f, G, H)) {
        std::string s;
        for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
        fail(ErrorCode::NotAHomomorphism, "(" + s + ") is not a homomorphism");
    }
}

// Adjacency of (H^G)° restricted to the given relation.
std::vector<std::vector<std::uint32_t>> relation_graph(const MapDigraph& E, HomotopyRelation r)
{
    std::vector<std::vector<std::uint32_t>> adj(E.size());
    for (std::size_t i = 0; i < E.size(); ++i)
        for (auto j : E.out[i]) {
            if (j == i) continue;
            switch (r) {
            case HomotopyRelation::Bi:
                if (E.has_edge(j, i)) adj[i].push_back(j);
                break;
            case HomotopyRelation::Di:
                adj[i].push_back(j);
                break;
            case HomotopyRelation::Line:
                adj[i].push_back(j);
                adj[j].push_back(static_cast<std::uint32_t>(i));
                break;
            }
        }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return adj;
}

std::vector<bool> reachable_from(const std::vector<std::vector<std::uint32_t>>& adj, std::size_t s)
{
    std::vector<bool> seen(adj.size(), false);
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (auto y : adj[x])
            if (!seen[y]) {
                seen[y] = true;
                stack.push_back(y);
            }
    }
    return seen;
}

} // namespace

bool homotopic(HomotopyRelation r, const VertexMap& f, const VertexMap& g, const Digraph& G, const Digraph& H)
{
    require_hom(f, G, H);
    require_hom(g, G, H);
    const auto E = exponential_looped_part(H, G);
    return reachable_from(relation_graph(E, r), E.index_of(f))[E.index_of(g)];
}

bool bihomotopic(const VertexMap& f, const VertexMap& g, const Digraph& G, const Digraph& H)
{
    return homotopic(HomotopyRelation::Bi, f, g, G, H);
}

bool dihomotopic(const VertexMap& f, const VertexMap& g, const Digraph& G, const Digraph& H)
{
    return homotopic(HomotopyRelation::Di, f, g, G, H);
}

bool line_homotopic(const VertexMap& f, const VertexMap& g, const Digraph& G, const Digraph& H)
{
    return homotopic(HomotopyRelation::Line, f, g, G, H);
}

HomotopyClasses homotopy_classes(const Digraph& G, const Digraph& H, HomotopyRelation r)
{
    const auto E = exponential_looped_part(H, G);
    const auto adj = relation_graph(E, r);
    HomotopyClasses C;
    C.maps = E.vertices;
    for (std::size_t i = 0; i < E.size(); ++i) C.reach.push_back(reachable_from(adj, i));
    std::vector<std::vector<std::uint32_t>> sym(E.size());
    for (std::size_t i = 0; i < E.size(); ++i)
        for (auto j : adj[i]) {
            sym[i].push_back(j);
            sym[j].push_back(static_cast<std::uint32_t>(i));
        }
    std::vector<bool> placed(E.size(), false);
    for (std::size_t i = 0; i < E.size(); ++i) {
        if (placed[i]) continue;
        const auto seen = reachable_from(sym, i);
        std::vector<std::size_t> cls;
        for (std::size_t j = 0; j < E.size(); ++j)
            if (seen[j]) {
                cls.push_back(j);
                placed[j] = true;
            }
        C.classes.push_back(std::move(cls));
    }
    return C;
}

DismantlabilityReport dismantlable_iff_connected_check(const Digraph& G, const std::vector<Digraph>& witnesses)
{
    DismantlabilityReport R;
    R.dismantlable = is_dismantlable(G);
    auto tests = witnesses;
    tests.push_back(G);
    tests.push_back(looped_vertex());
    for (const auto& T : tests) {
        const bool c = hom_one_skeleton(T, G).connected();
        R.connected.push_back(c);
        R.all_connected = R.all_connected && c;
    }
    R.consistent = R.dismantlable == R.all_connected;
    return R;
}

} // namespace dihom
