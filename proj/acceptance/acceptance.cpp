// Acceptance run: one PASS/FAIL line per criterion.
// Usage: acceptance [criterion ...]

#include "dihom/cli.hpp"
#include "dihom/complexes.hpp"
#include "dihom/constructions.hpp"
#include "dihom/error.hpp"
#include "dihom/graph_io.hpp"
#include "dihom/homcomplex.hpp"
#include "dihom/homology.hpp"
#include "dihom/homotopy.hpp"
#include "dihom/morse.hpp"
#include "dihom/reconfig.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace dihom;
using Json = nlohmann::json;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

HomologyGroups groups(std::vector<std::pair<int, std::size_t>> ranks)
{
    HomologyGroups h;
    for (auto [d, r] : ranks) h.set(d, {r, {}});
    return h;
}

std::string to_string(const Digraph& G) { return emit_digraph(G); }

HomologyGroups point() { return HomologyGroups{}; }

std::vector<Digraph> iso_classes(int n, const std::function<bool(const Digraph&)>& keep, bool loops)
{
    std::set<std::uint64_t> seen;
    std::vector<Digraph> out;
    for (const auto& G : loops ? all_digraphs(n, true) : all_simple_digraphs(n))
        if (keep(G) && seen.insert(canonical_code(G)).second) out.push_back(G);
    return out;
}

Digraph random_digraph(int n, std::mt19937_64& rng, double p, double loop_p)
{
    std::uniform_real_distribution<double> coin(0, 1);
    Digraph G(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (coin(rng) < (u == v ? loop_p : p)) G.add_edge(u, v);
    return G;
}

Digraph random_simple(int n, std::mt19937_64& rng, double p = 0.5)
{
    std::uniform_real_distribution<double> coin(0, 1);
    Digraph G(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) coin(rng) < 0.5 ? G.add_edge(u, v) : G.add_edge(v, u);
    return G;
}

Digraph random_acyclic(int n, std::mt19937_64& rng, double p = 0.4)
{
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_real_distribution<double> coin(0, 1);
    Digraph G(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p) G.add_edge(order[i], order[j]);
    return G;
}

Digraph from_out_lists(const std::vector<std::vector<int>>& out)
{
    Digraph G(static_cast<int>(out.size()));
    for (std::size_t u = 0; u < out.size(); ++u)
        for (int v : out[u]) G.add_edge(static_cast<int>(u), v);
    return G;
}

// Five-vertex tournaments as out-lists, with their nonzero reduced Betti numbers.
struct TableRow {
    std::vector<std::vector<int>> out;
    std::vector<std::pair<int, std::size_t>> betti;
};

const std::vector<TableRow> table_rows{
    {{{}, {0}, {0, 1}, {0, 1, 2}, {0, 1, 2, 3}}, {}},
    {{{2}, {0}, {1}, {0, 1, 2}, {0, 1, 2, 3}}, {}},
    {{{}, {0, 3}, {0, 1}, {0, 2}, {0, 1, 2, 3}}, {}},
    {{{3}, {0}, {0, 1}, {1, 2}, {0, 1, 2, 3}}, {}},
    {{{}, {0}, {0, 1, 4}, {0, 1, 2}, {0, 1, 3}}, {}},
    {{{}, {0, 3, 4}, {0, 1}, {0, 2}, {0, 2, 3}}, {}},
    {{{3}, {0}, {0, 1}, {1, 2, 4}, {0, 1, 2}}, {{0, 1}}},
    {{{3}, {0}, {0, 1, 4}, {1, 2}, {0, 1, 3}}, {}},
    {{{3, 4}, {0}, {0, 1}, {1, 2}, {1, 2, 3}}, {}},
    {{{3}, {0, 4}, {0, 1}, {1, 2}, {0, 2, 3}}, {{1, 1}}},
    {{{4}, {0, 3}, {0, 1}, {0, 2}, {1, 2, 3}}, {{0, 1}, {1, 2}}},
    {{{3, 4}, {0, 4}, {0, 1}, {1, 2}, {2, 3}}, {{1, 1}}},
};

std::vector<int> sorted_outdegrees(const Digraph& G)
{
    std::vector<int> d;
    for (int v = 0; v < G.vertex_count(); ++v) d.push_back(G.out_neighbors(v).size());
    std::sort(d.rbegin(), d.rend());
    return d;
}

Outcome table1()
{
    Outcome o;
    std::ostringstream out, err;
    o.require(cli::run({"table1"}, out, err) == 0, "table1 failed: " + err.str());
    if (!o.pass) return o;
    const auto rows = Json::parse(out.str())["rows"];
    o.require(rows.size() == 12, "expected 12 classes, got " + std::to_string(rows.size()));
    std::vector<bool> used(rows.size(), false);
    for (std::size_t r = 0; r < table_rows.size() && o.pass; ++r) {
        const auto T = from_out_lists(table_rows[r].out);
        const auto degrees = sorted_outdegrees(T);
        std::size_t hit = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto adj = rows[i]["adjacency"].get<std::vector<std::vector<int>>>();
            if (rows[i]["outdegrees"].get<std::vector<int>>() == degrees && is_isomorphic(from_out_lists(adj), T)) {
                hit = i;
                break;
            }
        }
        o.require(hit != rows.size(), "row " + std::to_string(r + 1) + " has no matching class");
        if (!o.pass) break;
        o.require(!used[hit], "row " + std::to_string(r + 1) + " matched twice");
        used[hit] = true;
        std::vector<std::pair<int, std::size_t>> got;
        for (const auto& g : rows[hit]["homology"]) {
            o.require(g["torsion"].empty(), "torsion in row " + std::to_string(r + 1));
            if (g["rank"].get<std::size_t>() > 0) got.emplace_back(g["dim"].get<int>(), g["rank"].get<std::size_t>());
        }
        o.require(got == table_rows[r].betti, "homology differs in row " + std::to_string(r + 1));
        o.require(reduced_homology(out_neighborhood_complex(T)) == groups(table_rows[r].betti),
                  "library homology differs in row " + std::to_string(r + 1));
    }
    if (o.pass) o.detail = "12 classes, all rows match";
    return o;
}

Outcome mobius()
{
    Outcome o;
    const auto T7 = resolve_graph(std::string(DIHOM_DATA_DIR) + "/T7.json");
    o.require(T7 == rotational_tournament(7), "T7 fixture differs from the rotational tournament");
    const auto P = hom_poset(directed_cycle(3), T7);
    const auto H = homology_of_poset(P.to_poset());
    o.require(H == groups({{1, 1}}), "homology " + to_string(H));
    const auto c = P.census();
    o.require(c.size() == 3, "census has " + std::to_string(c.size()) + " dimensions");
    if (!o.pass) return o;
    const long long chi = static_cast<long long>(c[0]) - static_cast<long long>(c[1]) + static_cast<long long>(c[2]);
    o.require(chi == 0, "Euler characteristic " + std::to_string(chi));
    o.detail = std::to_string(c[0]) + "-" + std::to_string(c[1]) + "+" + std::to_string(c[2]) + " = 0, H1 = Z";
    return o;
}

Outcome circle()
{
    Outcome o;
    const auto S = hom_one_skeleton(directed_cycle(3), rotational_tournament(5));
    o.require(S.nodes.size() == 15, std::to_string(S.nodes.size()) + " homomorphisms");
    o.require(S.edge_count() == 15, std::to_string(S.edge_count()) + " edges");
    const auto P = hom_poset(directed_cycle(3), rotational_tournament(5));
    o.require(P.dimension() == 1, "dimension " + std::to_string(P.dimension()));
    o.require(homology_of_poset(P.to_poset()) == groups({{1, 1}}), "H1 is not Z");
    if (o.pass) o.detail = "15 vertices, 15 edges, H1 = Z";
    return o;
}

Outcome collapsibility()
{
    Outcome o;
    std::size_t instances = 0, explicit_checked = 0, poset_homology = 0, empty = 0;
    for (int k = 1; k <= 5 && o.pass; ++k)
        for (const auto& G : iso_classes(k, [](const Digraph& g) { return is_acyclic(g); }, false)) {
            for (int n = 2; n <= 5 && o.pass; ++n) {
                const auto name = to_string(G) + " into K" + std::to_string(n);
                if (!has_homomorphism(G, transitive_tournament(n))) {
                    bool empty_hom = false;
                    try {
                        check_tournament_matching(G, n);
                    } catch (const Error& e) {
                        empty_hom = e.code() == ErrorCode::EmptyHom;
                    }
                    o.require(empty_hom, name + ": expected EmptyHom");
                    ++empty;
                    continue;
                }
                ++instances;
                const auto R = check_tournament_matching(G, n);
                o.require(R.critical == 1, name + ": " + std::to_string(R.critical) + " critical cells");
                o.require(R.acyclic && R.consistent, name + ": matching not acyclic");
                if (R.cells <= 20000) {
                    const auto M = tournament_matching(G, n);
                    const auto P = M.poset.to_poset();
                    ++explicit_checked;
                    o.require(M.poset.size() == R.cells && M.matching.critical.size() == 1 &&
                                  is_acyclic_matching(P, M.matching),
                              name + ": explicit matching disagrees");
                    if (R.cells <= 300) {
                        ++poset_homology;
                        o.require(homology_of_poset(P) == point(), name + ": order complex not acyclic");
                    } else {
                        o.require(cellular_homology(M.poset) == point(), name + ": cellular homology nontrivial");
                    }
                } else {
                    o.require(hom_homology(G, transitive_tournament(n)) == point(), name + ": homology nontrivial");
                }
            }
        }
    if (o.pass)
        o.detail = std::to_string(instances) + " nonempty cases (" + std::to_string(explicit_checked) +
                   " explicit, " + std::to_string(poset_homology) + " via order complex), " + std::to_string(empty) +
                   " empty";
    return o;
}

Outcome diameters()
{
    Outcome o;
    for (int m = 2; m <= 6; ++m)
        for (int n = m + 1; n <= 6; ++n) {
            const auto d = diameter(transitive_tournament(m), transitive_tournament(n));
            o.require(d == static_cast<std::size_t>(m),
                      "diameter(K" + std::to_string(m) + ",K" + std::to_string(n) + ") = " + std::to_string(d));
        }
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 200 && o.pass; ++t) {
        const int k = 1 + static_cast<int>(rng() % 5);
        const auto G = random_acyclic(k, rng);
        int n = static_cast<int>(sink_layers(G).size()) + static_cast<int>(rng() % 3);
        n = std::max(n, 2);
        const auto K = transitive_tournament(n);
        o.require(diameter(G, K) <= static_cast<std::size_t>(k), "diameter above |V(G)| for " + to_string(G));
        const auto homs = enumerate_homomorphisms(G, K);
        const auto& f = homs[rng() % homs.size()];
        const auto& g = homs[rng() % homs.size()];
        const auto path = meet_path(f, g, G, n);
        std::size_t hamming = 0;
        for (std::size_t v = 0; v < f.size(); ++v) hamming += f[v] != g[v];
        o.require(path.size() == hamming + 1 && path.front() == f && path.back() == g,
                  "meet path length differs from Hamming distance");
        for (std::size_t i = 0; i < path.size(); ++i) {
            o.require(is_homomorphism(path[i], G, K), "meet path leaves Hom");
            if (i > 0) {
                std::size_t step = 0;
                for (std::size_t v = 0; v < f.size(); ++v) step += path[i - 1][v] != path[i][v];
                o.require(step == 1, "meet path step changes " + std::to_string(step) + " vertices");
            }
        }
    }
    if (o.pass) o.detail = "15 tournament pairs, 200 random instances";
    return o;
}

Outcome spheres()
{
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
        const auto H = reduced_homology(out_neighborhood_complex(sphere_tournament(n)));
        o.require(H == groups({{n, 1}}), "sphere " + std::to_string(n) + ": " + to_string(H));
    }
    const auto X = out_neighborhood_complex(sphere_tournament(1));
    const std::vector<CollapseStep> named{{{4}, {0, 4}}, {{3}, {0, 2, 3}}};
    bool free_in_order = is_free_pair(X, named[0].tau, named[0].sigma);
    if (free_in_order) free_in_order = is_free_pair(collapse(X, named[0].tau, named[0].sigma), named[1].tau, named[1].sigma);
    o.require(free_in_order, "named pairs are not free in order");
    if (!o.pass) return o;
    const auto R = collapse_free_pairs(X, CollapseStrategy::Lex, 0, named);
    o.require(R.log.size() >= 2 && R.log[0] == named[0] && R.log[1] == named[1], "log does not start with the named pairs");
    o.require(R.remaining == SimplicialComplex::simplex_boundary({0, 1, 2}), "ends at " + to_string(R.remaining));
    o.require(R.log.size() == 2, "extra collapses after the named pairs");
    if (o.pass) o.detail = "S1, S2, S3; two named collapses reach the boundary of {0,1,2}";
    return o;
}

SimplicialComplex with_disjoint(const SimplicialComplex& X, Simplex extra)
{
    auto facets = X.facets();
    facets.push_back(std::move(extra));
    return SimplicialComplex(std::move(facets));
}

Outcome mycielski()
{
    Outcome o;
    std::mt19937_64 rng(31);
    int done = 0;
    while (done < 30 && o.pass) {
        const auto G = random_digraph(2 + static_cast<int>(rng() % 4), rng, 0.4, 0.15);
        const auto N = out_neighborhood_complex(G);
        if (N.is_void()) continue;
        ++done;
        const auto H = reduced_homology(N);
        const auto verts = N.vertices();
        const int fresh = G.vertex_count() + 1;

        const auto h3 = reduced_homology(out_neighborhood_complex(mycielskian(G, 3)));
        o.require(h3 == H.shifted(1), "M3 of " + to_string(G) + ": " + to_string(h3) + " vs " + to_string(H));
        o.require(h3 == reduced_homology(suspension(N)), "M3 differs from the suspension for " + to_string(G));

        const auto h1 = reduced_homology(out_neighborhood_complex(mycielskian(G, 1)));
        o.require(h1 == reduced_homology(with_disjoint(N, {fresh})), "M1 of " + to_string(G));

        const auto N2 = out_neighborhood_complex(mycielskian(G, 2));
        Simplex block;
        for (std::size_t i = 0; i < verts.size(); ++i) block.push_back(fresh + static_cast<int>(i));
        const auto disjoint = with_disjoint(N, block);
        o.require(reduced_homology(N2) == reduced_homology(disjoint), "M2 of " + to_string(G));
        o.require(N2.facets().size() == disjoint.facets().size() && N2.face_count() == disjoint.face_count() &&
                      N2.vertices().size() == disjoint.vertices().size(),
                  "M2 face numbers of " + to_string(G));
        o.require(h1 == reduced_homology(N2), "M1 and M2 differ for " + to_string(G));
    }
    if (o.pass) o.detail = "30 digraphs, M1, M2 and M3";
    return o;
}

Outcome leray()
{
    Outcome o;
    std::size_t checked = 0;
    for (int n = 1; n <= 4 && o.pass; ++n)
        for (const auto& G : all_simple_digraphs(n)) {
            const auto r = is_n_leray(out_neighborhood_complex(G), 1);
            o.require(r.holds, to_string(G) + " is not 1-Leray");
            ++checked;
        }
    std::mt19937_64 rng(6);
    for (int t = 0; t < 200 && o.pass; ++t) {
        const auto G = random_simple(6, rng, 0.5 + 0.5 * (t % 2));
        const auto H = reduced_homology(out_neighborhood_complex(G));
        o.require(H.top_degree() <= 1, to_string(G) + ": " + to_string(H));
    }
    if (o.pass) o.detail = std::to_string(checked) + " labeled digraphs 1-Leray, 200 random with H_i = 0 for i >= 2";
    return o;
}

Outcome structural()
{
    Outcome o;
    std::mt19937_64 rng(9);
    int adj = 0, prod = 0, covariant = 0, contravariant = 0, inout = 0, edge = 0;
    while (adj < 60 && o.pass) {
        const auto A = random_digraph(1 + static_cast<int>(rng() % 3), rng, 0.4, 0.3);
        const auto B = random_digraph(1 + static_cast<int>(rng() % 2), rng, 0.4, 0.5);
        const auto C = random_digraph(2 + static_cast<int>(rng() % 2), rng, 0.6, 0.5);
        const auto left = hom_poset(product(A, B), C);
        if (left.size() == 0 || left.size() > 2000) continue;
        ++adj;
        o.require(homology_of_poset(left.to_poset()) == hom_homology(A, exponential(C, B)),
                  "adjunction fails for " + to_string(A) + ", " + to_string(B) + ", " + to_string(C));
    }
    while (prod < 60 && o.pass) {
        const auto T = random_digraph(1 + static_cast<int>(rng() % 2), rng, 0.5, 0.3);
        const auto G = random_digraph(2 + static_cast<int>(rng() % 2), rng, 0.6, 0.5);
        const auto H = random_digraph(2 + static_cast<int>(rng() % 2), rng, 0.6, 0.5);
        const auto P = hom_poset(T, G), Q = hom_poset(T, H);
        if (P.size() == 0 || Q.size() == 0 || P.size() * Q.size() > 400) continue;
        ++prod;
        o.require(hom_homology(T, product(G, H)) == homology_of_poset(product(P.to_poset(), Q.to_poset())),
                  "product fails for " + to_string(T) + ", " + to_string(G) + ", " + to_string(H));
    }
    while ((covariant < 60 || contravariant < 60) && o.pass) {
        const auto G = random_digraph(3 + static_cast<int>(rng() % 2), rng, 0.55, 0.5);
        const auto f = find_fold(G);
        if (!f) continue;
        const auto small = fold(G, f->v, f->w);
        const auto H = random_digraph(2 + static_cast<int>(rng() % 2), rng, 0.5, 0.4);
        if (covariant < 60) {
            ++covariant;
            o.require(hom_homology(H, G) == hom_homology(H, small),
                      "folding the target fails for " + to_string(H) + ", " + to_string(G));
        }
        if (contravariant < 60 && G.vertex_count() <= 4) {
            ++contravariant;
            o.require(hom_homology(G, H) == hom_homology(small, H),
                      "folding the source fails for " + to_string(G) + ", " + to_string(H));
        }
    }
    while (inout < 60 && o.pass) {
        const auto G = random_digraph(3 + static_cast<int>(rng() % 4), rng, 0.4, 0.2);
        ++inout;
        o.require(reduced_homology(out_neighborhood_complex(G)) == reduced_homology(in_neighborhood_complex(G)),
                  "out and in complexes differ for " + to_string(G));
    }
    while (edge < 60 && o.pass) {
        const auto G = random_digraph(2 + static_cast<int>(rng() % 4), rng, 0.4, 0.2);
        ++edge;
        o.require(hom_homology(transitive_tournament(2), G) == homology_of_poset(face_poset(out_neighborhood_complex(G))),
                  "Hom(K2,G) differs from the neighbourhood complex for " + to_string(G));
    }
    if (o.pass)
        o.detail = "adjunction " + std::to_string(adj) + ", product " + std::to_string(prod) + ", folding " +
                   std::to_string(covariant) + "+" + std::to_string(contravariant) + ", out/in " +
                   std::to_string(inout) + ", edge " + std::to_string(edge);
    return o;
}

Outcome hierarchy()
{
    Outcome o;
    const auto [G, H] = homotopy_hierarchy_fixture();
    const VertexMap a{0, 1}, b{3, 2}, c{4, 5};
    o.require(dihomotopic(a, b, G, H) && !bihomotopic(a, b, G, H), "no dihomotopic, not bihomotopic witness");
    o.require(line_homotopic(a, c, G, H) && !dihomotopic(a, c, G, H) && !dihomotopic(c, a, G, H),
              "no line homotopic, not dihomotopic witness");
    std::mt19937_64 rng(10);
    std::size_t pairs = 0;
    for (int t = 0; t < 300 && o.pass; ++t) {
        const auto S = random_digraph(1 + static_cast<int>(rng() % 3), rng, 0.5, 0.3);
        const auto T = random_digraph(2 + static_cast<int>(rng() % 3), rng, 0.6, 0.5);
        const auto bi = homotopy_classes(S, T, HomotopyRelation::Bi);
        const auto di = homotopy_classes(S, T, HomotopyRelation::Di);
        const auto line = homotopy_classes(S, T, HomotopyRelation::Line);
        for (std::size_t i = 0; i < bi.maps.size(); ++i)
            for (std::size_t j = 0; j < bi.maps.size(); ++j) {
                ++pairs;
                o.require(!bi.reach[i][j] || di.reach[i][j], "bi without di");
                o.require(!di.reach[i][j] || line.reach[i][j], "di without line");
            }
    }
    if (o.pass) o.detail = "fixture witnesses, " + std::to_string(pairs) + " sampled pairs";
    return o;
}

Outcome dismantlability()
{
    Outcome o;
    std::vector<Digraph> graphs;
    for (int n = 1; n <= 3; ++n)
        for (auto& G : iso_classes(n, [](const Digraph&) { return true; }, true)) graphs.push_back(std::move(G));
    std::size_t dismantlable = 0;
    for (const auto& G : graphs) {
        const bool d = is_dismantlable(G);
        bool connected = true;
        for (const auto& T : graphs)
            if (!hom_one_skeleton(T, G).connected()) {
                connected = false;
                break;
            }
        dismantlable += d;
        o.require(d == connected, to_string(G) + (d ? " dismantlable but disconnected" : " connected everywhere"));
    }
    if (o.pass)
        o.detail = std::to_string(graphs.size()) + " classes, " + std::to_string(dismantlable) + " dismantlable";
    return o;
}

Outcome staircase()
{
    Outcome o;
    o.require(staircase_cells(2, 4).size() == 3, "(2,4) count");
    o.require(staircase_cells(3, 5).size() == 6, "(3,5) count");
    std::size_t cells = 0;
    for (int m = 2; m <= 6; ++m)
        for (int n = m; n <= 6; ++n)
            for (const auto& c : staircase_cells(m, n)) {
                ++cells;
                o.require(c.certified, "uncertified maximal cell in (" + std::to_string(m) + "," + std::to_string(n) + ")");
            }
    for (int m = 1; m <= 6; ++m)
        for (int n = m; n <= 6; ++n) {
            const auto chi = hom_poset(transitive_tournament(m), transitive_tournament(n)).euler_characteristic();
            o.require(chi == 1, "chi(P(K" + std::to_string(m) + ",K" + std::to_string(n) + ")) = " + std::to_string(chi));
        }
    if (o.pass) o.detail = std::to_string(cells) + " maximal cells certified, chi = 1 for m <= n <= 6";
    return o;
}

struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
};

const Criterion criteria[] = {
    {1, "table of 5-vertex tournaments", table1},
    {2, "Mobius strip", mobius},
    {3, "circle", circle},
    {4, "collapsibility into transitive tournaments", collapsibility},
    {5, "reconfiguration diameter", diameters},
    {6, "sphere tournaments", spheres},
    {7, "Mycielskian suspension", mycielski},
    {8, "Leray and vanishing", leray},
    {9, "structural homology identities", structural},
    {10, "homotopy hierarchy", hierarchy},
    {11, "dismantlability and connectivity", dismantlability},
    {12, "staircase cells", staircase},
};

} // namespace

int main(int argc, char** argv)
{
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
    int failed = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && !only.count(c.id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2d %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
