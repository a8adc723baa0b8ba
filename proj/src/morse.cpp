#include "dihom/morse.hpp"

#include "dihom/constructions.hpp"
#include "dihom/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <unordered_map>

namespace dihom {

void validate_matching(const Poset& P, const Matching& M)
{
    std::vector<char> used(P.size(), 0);
    auto claim = [&](std::size_t x) {
        if (x >= P.size()) fail(ErrorCode::InvalidMatching, "element " + std::to_string(x) + " out of range");
        if (used[x]) fail(ErrorCode::InvalidMatching, "element " + std::to_string(x) + " used twice");
        used[x] = 1;
    };
    for (auto [a, b] : M.pairs) {
        claim(a);
        claim(b);
        if (!P.covers(a, b))
            fail(ErrorCode::InvalidMatching, std::to_string(a) + " is not covered by " + std::to_string(b));
    }
    for (auto c : M.critical) claim(c);
    if (std::find(used.begin(), used.end(), 0) != used.end())
        fail(ErrorCode::InvalidMatching, "pairs and critical cells miss an element");
}

bool is_acyclic_matching(const Poset& P, const Matching& M)
{
    validate_matching(P, M);
    std::vector<std::size_t> up_partner(P.size(), P.size());
    for (auto [a, b] : M.pairs) up_partner[a] = b;
    // Modified Hasse diagram: a -> b for a matched pair, b -> a otherwise.
    std::vector<std::vector<std::size_t>> out(P.size());
    std::vector<std::size_t> indegree(P.size(), 0);
    for (std::size_t a = 0; a < P.size(); ++a)
        for (auto b : P.upper_covers(a)) {
            if (up_partner[a] == b) {
                out[a].push_back(b);
                ++indegree[b];
            } else {
                out[b].push_back(a);
                ++indegree[a];
            }
        }
    std::vector<std::size_t> ready;
    for (std::size_t x = 0; x < P.size(); ++x)
        if (indegree[x] == 0) ready.push_back(x);
    std::size_t seen = 0;
    while (!ready.empty()) {
        auto x = ready.back();
        ready.pop_back();
        ++seen;
        for (auto y : out[x])
            if (--indegree[y] == 0) ready.push_back(y);
    }
    return seen == P.size();
}

std::vector<std::vector<int>> sink_layers(const Digraph& G)
{
    std::vector<std::vector<int>> layers;
    VertexSet rest = G.vertices();
    while (!rest.empty()) {
        std::vector<int> layer;
        for (int v : rest)
            if ((G.out_neighbors(v) & rest).empty()) layer.push_back(v);
        if (layer.empty()) fail(ErrorCode::NotAcyclic, "digraph has a directed cycle");
        for (int v : layer) rest.erase(v);
        layers.push_back(std::move(layer));
    }
    return layers;
}

namespace {

struct Step {
    int vertex;
    int value;
};

std::vector<Step> matching_steps(const Digraph& G, int n)
{
    if (n < 1) fail(ErrorCode::InvalidSize, "tournament needs at least one vertex");
    if (G.vertex_count() > 0 && !has_homomorphism(G, transitive_tournament(n)))
        fail(ErrorCode::EmptyHom, "no homomorphism into the transitive tournament on " + std::to_string(n) +
                                      " vertices");
    std::vector<Step> steps;
    const auto layers = sink_layers(G);
    for (std::size_t k = 0; k < layers.size(); ++k)
        for (int v : layers[k]) steps.push_back({v, n - 1 - static_cast<int>(k)});
    return steps;
}

enum class Role { Critical, Lower, Upper };

} // namespace

TournamentMatching tournament_matching(const Digraph& G, int n, std::size_t cap)
{
    const auto steps = matching_steps(G, n);
    TournamentMatching R{hom_poset(G, transitive_tournament(n), cap), {}};
    const auto& P = R.poset;
    std::vector<VertexSet> partner;
    for (std::size_t i = 0; i < P.size(); ++i) {
        const auto c = P.cell(i);
        Role role = Role::Critical;
        for (auto [a, t] : steps) {
            if (c[a] == VertexSet::singleton(t)) continue;
            partner.assign(c.begin(), c.end());
            if (c[a].contains(t)) {
                role = Role::Upper;
                partner[a].erase(t);
            } else {
                role = Role::Lower;
                partner[a].insert(t);
            }
            break;
        }
        if (role == Role::Critical) {
            R.matching.critical.push_back(i);
            continue;
        }
        const auto j = P.index_of(partner);
        if (j == P.size()) fail(ErrorCode::InvalidMatching, "partner of " + to_string(c) + " is not a cell");
        if (role == Role::Lower) R.matching.pairs.emplace_back(i, j);
    }
    return R;
}

MatchingReport check_tournament_matching(const Digraph& G, int n)
{
    const int k = G.vertex_count();
    if (k * n > 64) fail(ErrorCode::SizeCapExceeded, "cells do not fit in 64 bits");
    const auto steps = matching_steps(G, n);
    const Digraph K = transitive_tournament(n);
    const std::uint64_t full = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    const auto edges = G.edges();
    std::vector<std::uint64_t> out_of(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) out_of[x] = K.out_neighbors(x).bits();

    auto slot = [&](std::uint64_t code, int v) { return (code >> (v * n)) & full; };
    auto is_cell = [&](std::uint64_t code) {
        for (int v = 0; v < k; ++v)
            if (slot(code, v) == 0) return false;
        for (auto [v, w] : edges) {
            std::uint64_t allowed = full;
            for (std::uint64_t s = slot(code, v); s; s &= s - 1) allowed &= out_of[std::countr_zero(s)];
            if (slot(code, w) & ~allowed) return false;
        }
        return true;
    };
    auto classify = [&](std::uint64_t code, std::uint64_t& partner) {
        for (auto [a, t] : steps) {
            const std::uint64_t bit = std::uint64_t{1} << t;
            const std::uint64_t s = slot(code, a);
            if (s == bit) continue;
            const std::uint64_t shifted = bit << (a * n);
            if (s & bit) {
                partner = code & ~shifted;
                return Role::Upper;
            }
            partner = code | shifted;
            return Role::Lower;
        }
        return Role::Critical;
    };

    // 0 unseen, 1 on the DFS stack, 2 finished.
    const int bits = k * n;
    const bool dense = bits <= 26;
    std::vector<std::uint8_t> dense_state(dense ? std::size_t{1} << bits : 0, 0);
    std::unordered_map<std::uint64_t, std::uint8_t> sparse_state;
    auto state = [&](std::uint64_t code) -> std::uint8_t {
        if (dense) return dense_state[code];
        auto it = sparse_state.find(code);
        return it == sparse_state.end() ? 0 : it->second;
    };
    auto set_state = [&](std::uint64_t code, std::uint8_t s) {
        if (dense)
            dense_state[code] = s;
        else
            sparse_state[code] = s;
    };

    struct Frame {
        std::uint64_t code;
        std::uint64_t partner;
        Role role;
        int next;
    };
    MatchingReport report;
    std::vector<Frame> stack;
    auto push = [&](std::uint64_t code) {
        Frame f{code, 0, Role::Critical, 0};
        f.role = classify(code, f.partner);
        set_state(code, 1);
        stack.push_back(f);
    };
    auto dfs = [&](std::uint64_t root) {
        push(root);
        while (!stack.empty() && report.acyclic) {
            Frame& f = stack.back();
            if (f.next > bits) {
                set_state(f.code, 2);
                stack.pop_back();
                continue;
            }
            const int i = f.next++;
            std::uint64_t next;
            if (i == bits) {
                if (f.role != Role::Lower) continue;
                next = f.partner;
            } else {
                const std::uint64_t bit = std::uint64_t{1} << i;
                if (!(f.code & bit) || std::popcount(slot(f.code, i / n)) < 2) continue;
                next = f.code & ~bit;
                if (f.role == Role::Upper && next == f.partner) continue;
            }
            const auto s = state(next);
            if (s == 1)
                report.acyclic = false;
            else if (s == 0)
                push(next);
        }
        stack.clear();
    };

    std::vector<VertexSet> scratch;
    for_each_multihom(G, K, [&](CellView c) {
        std::uint64_t code = 0;
        for (int v = 0; v < k; ++v) code |= c[v].bits() << (v * n);
        ++report.cells;
        std::uint64_t partner = 0;
        switch (classify(code, partner)) {
        case Role::Critical:
            if (report.critical++ == 0) report.critical_cell.assign(c.begin(), c.end());
            break;
        case Role::Lower: {
            ++report.pairs;
            std::uint64_t back = 0;
            if (!is_cell(partner) || classify(partner, back) != Role::Upper || back != code)
                report.consistent = false;
            break;
        }
        case Role::Upper:
            break;
        }
        if (report.acyclic && report.consistent && state(code) == 0) dfs(code);
        return true;
    });
    return report;
}

bool is_free_pair(const SimplicialComplex& X, const Simplex& tau, const Simplex& sigma)
{
    if (tau.empty() || tau.size() >= sigma.size()) return false;
    if (!std::includes(sigma.begin(), sigma.end(), tau.begin(), tau.end())) return false;
    const auto& F = X.facets();
    if (std::find(F.begin(), F.end(), sigma) == F.end()) return false;
    for (const auto& other : F)
        if (other != sigma && std::includes(other.begin(), other.end(), tau.begin(), tau.end())) return false;
    return true;
}

SimplicialComplex collapse(const SimplicialComplex& X, const Simplex& tau, const Simplex& sigma)
{
    if (!is_free_pair(X, tau, sigma))
        fail(ErrorCode::InvalidMatching, "(" + to_string(tau) + ", " + to_string(sigma) + ") is not a free pair");
    std::vector<Simplex> gens;
    for (const auto& f : X.facets())
        if (f != sigma) gens.push_back(f);
    for (int x : tau) {
        Simplex face;
        for (int y : sigma)
            if (y != x) face.push_back(y);
        gens.push_back(std::move(face));
    }
    SimplicialComplex Y(std::move(gens));
    Y.set_vertex_labels(X.vertex_labels());
    return Y;
}

namespace {

// Free faces of sigma, smallest first.
std::vector<Simplex> free_faces(const SimplicialComplex& X, const Simplex& sigma, bool first_only)
{
    std::vector<Simplex> out;
    const int d = static_cast<int>(sigma.size());
    for (int size = 1; size < d; ++size) {
        std::vector<bool> pick(static_cast<std::size_t>(d), false);
        std::fill(pick.begin(), pick.begin() + size, true);
        std::vector<Simplex> level;
        do {
            Simplex tau;
            for (int i = 0; i < d; ++i)
                if (pick[i]) tau.push_back(sigma[i]);
            level.push_back(std::move(tau));
        } while (std::prev_permutation(pick.begin(), pick.end()));
        for (auto& tau : level)
            if (is_free_pair(X, tau, sigma)) {
                out.push_back(std::move(tau));
                if (first_only) return out;
            }
    }
    return out;
}

} // namespace

CollapseResult collapse_free_pairs(const SimplicialComplex& X, CollapseStrategy strategy, std::uint64_t seed,
                                   const std::vector<CollapseStep>& replay)
{
    CollapseResult R{{}, X};
    for (const auto& step : replay) {
        R.remaining = collapse(R.remaining, step.tau, step.sigma);
        R.log.push_back(step);
    }
    std::mt19937_64 rng(seed);
    while (true) {
        std::vector<CollapseStep> options;
        for (const auto& sigma : R.remaining.facets()) {
            for (auto& tau : free_faces(R.remaining, sigma, strategy == CollapseStrategy::Lex))
                options.push_back({std::move(tau), sigma});
            if (strategy == CollapseStrategy::Lex && !options.empty()) break;
        }
        if (options.empty()) break;
        std::size_t pick = 0;
        if (strategy == CollapseStrategy::Random)
            pick = std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng);
        R.remaining = collapse(R.remaining, options[pick].tau, options[pick].sigma);
        R.log.push_back(std::move(options[pick]));
    }
    return R;
}

std::vector<std::size_t> random_discrete_morse(const SimplicialComplex& X, std::uint64_t seed, std::size_t cap)
{
    const auto groups = X.faces(cap);
    std::vector<Simplex> faces;
    std::vector<int> dim;
    std::map<Simplex, std::size_t> index;
    for (std::size_t d = 0; d < groups.size(); ++d)
        for (const auto& f : groups[d]) {
            index.emplace(f, faces.size());
            faces.push_back(f);
            dim.push_back(static_cast<int>(d));
        }
    const std::size_t N = faces.size();
    std::vector<std::vector<std::size_t>> down(N), up(N);
    for (std::size_t i = 0; i < N; ++i) {
        if (faces[i].size() < 2) continue;
        for (std::size_t j = 0; j < faces[i].size(); ++j) {
            Simplex b = faces[i];
            b.erase(b.begin() + static_cast<std::ptrdiff_t>(j));
            const auto k = index.at(b);
            down[i].push_back(k);
            up[k].push_back(i);
        }
    }
    std::vector<std::size_t> cofaces(N);
    for (std::size_t i = 0; i < N; ++i) cofaces[i] = up[i].size();
    std::vector<char> alive(N, 1);
    std::vector<std::size_t> critical(groups.size(), 0);
    std::size_t remaining = N;
    std::mt19937_64 rng(seed);

    auto remove = [&](std::size_t i) {
        alive[i] = 0;
        --remaining;
        for (auto b : down[i]) --cofaces[b];
    };
    while (remaining > 0) {
        std::vector<std::size_t> free;
        for (std::size_t i = 0; i < N; ++i)
            if (alive[i] && cofaces[i] == 1) free.push_back(i);
        if (!free.empty()) {
            // One pass of random collapses over the current free faces.
            std::shuffle(free.begin(), free.end(), rng);
            for (auto tau : free) {
                if (!alive[tau] || cofaces[tau] != 1) continue;
                std::size_t sigma = N;
                for (auto s : up[tau])
                    if (alive[s]) sigma = s;
                remove(sigma);
                remove(tau);
            }
            continue;
        }
        int top = -1;
        for (std::size_t i = 0; i < N; ++i)
            if (alive[i]) top = std::max(top, dim[i]);
        std::vector<std::size_t> candidates;
        for (std::size_t i = 0; i < N; ++i)
            if (alive[i] && dim[i] == top) candidates.push_back(i);
        const auto c = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
        ++critical[static_cast<std::size_t>(top)];
        remove(c);
    }
    return critical;
}

} // namespace dihom
