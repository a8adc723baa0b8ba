#include "dihom/reconfig.hpp"

#include "dihom/constructions.hpp"
#include "dihom/error.hpp"
#include "dihom/homcomplex.hpp"

#include <algorithm>
#include <numeric>

namespace dihom {

namespace {

HomGraph nonempty_skeleton(const Digraph& G, const Digraph& H)
{
    auto S = hom_one_skeleton(G, H);
    if (S.nodes.empty()) fail(ErrorCode::EmptyHom, "Hom(G,H) has no vertex");
    return S;
}

} // namespace

bool is_connected_hom(const Digraph& G, const Digraph& H) { return nonempty_skeleton(G, H).connected(); }

std::size_t diameter(const Digraph& G, const Digraph& H)
{
    const auto S = nonempty_skeleton(G, H);
    if (!S.connected())
        fail(ErrorCode::Disconnected, "Hom(G,H) has " + std::to_string(S.component_count) + " components");
    std::size_t best = 0;
    std::vector<std::size_t> dist(S.nodes.size());
    std::vector<std::size_t> queue(S.nodes.size());
    const std::size_t unseen = S.nodes.size();
    for (std::size_t s = 0; s < S.nodes.size(); ++s) {
        std::fill(dist.begin(), dist.end(), unseen);
        dist[s] = 0;
        std::size_t head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            const auto x = queue[head++];
            best = std::max(best, dist[x]);
            for (auto y : S.adjacency[x])
                if (dist[y] == unseen) {
                    dist[y] = dist[x] + 1;
                    queue[tail++] = y;
                }
        }
    }
    return best;
}

std::vector<VertexMap> meet_path(const VertexMap& f, const VertexMap& g, const Digraph& G, int n)
{
    const Digraph K = transitive_tournament(n);
    for (const auto* m : {&f, &g})
        if (!is_homomorphism(*m, G, K)) fail(ErrorCode::NotAHomomorphism, "endpoint is not a homomorphism");
    const int k = G.vertex_count();
    std::vector<int> lower, raise;
    for (int v = 0; v < k; ++v) {
        if (g[v] < f[v]) lower.push_back(v);
        if (f[v] < g[v]) raise.push_back(v);
    }
    std::stable_sort(lower.begin(), lower.end(), [&g](int a, int b) { return g[a] < g[b]; });
    std::stable_sort(raise.begin(), raise.end(), [&f](int a, int b) { return f[a] < f[b]; });

    std::vector<VertexMap> path{f};
    VertexMap cur = f;
    for (int v : lower) {
        cur[v] = g[v];
        path.push_back(cur);
    }
    // h -> g retraces the path g -> h, which lowers g to f on raise.
    std::vector<VertexMap> back;
    VertexMap rev = g;
    for (int v : raise) {
        rev[v] = f[v];
        back.push_back(rev);
    }
    if (!back.empty()) back.pop_back();
    path.insert(path.end(), back.rbegin(), back.rend());
    if (!raise.empty()) path.push_back(g);
    return path;
}

OrientedColoring oriented_chromatic_number(const Digraph& G)
{
    if (!G.is_loopless()) fail(ErrorCode::HasLoop, "a looped digraph has no oriented colouring");
    for (int n = 1; n <= 7; ++n)
        for (const auto& T : enumerate_tournaments(n)) {
            OrientedColoring R;
            bool found = false;
            for_each_homomorphism(G, T, [&](const VertexMap& f) {
                R.map = f;
                found = true;
                return false;
            });
            if (found) {
                R.chromatic_number = n;
                R.witness = T;
                return R;
            }
        }
    fail(ErrorCode::SizeCapExceeded, "oriented chromatic number exceeds 7");
}

} // namespace dihom
