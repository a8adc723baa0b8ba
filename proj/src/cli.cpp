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

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <random>

namespace dihom::cli {

namespace {

using Json = nlohmann::ordered_json;

Json graph_json(const Digraph& G)
{
    Json edges = Json::array();
    for (auto [u, v] : G.edges()) edges.push_back({u, v});
    return {{"vertices", G.vertex_count()}, {"edges", edges}};
}

Json homology_json(const HomologyGroups& h)
{
    Json out = Json::array();
    const int top = std::max(0, h.top_degree());
    for (int d = h[-1].trivial() ? 0 : -1; d <= top; ++d)
        out.push_back({{"dim", d}, {"rank", h.rank(d)}, {"torsion", h.torsion(d)}});
    return out;
}

Json map_json(const VertexMap& f) { return f.image(); }

Json facets_json(const SimplicialComplex& X)
{
    Json out = Json::array();
    for (const auto& f : X.facets()) out.push_back(f);
    return out;
}

std::vector<int> out_lists_key(const Digraph& G)
{
    std::vector<int> deg;
    for (int v = 0; v < G.vertex_count(); ++v) deg.push_back(G.out_neighbors(v).size());
    std::sort(deg.rbegin(), deg.rend());
    return deg;
}

Json adjacency_json(const Digraph& G)
{
    Json out = Json::array();
    for (int v = 0; v < G.vertex_count(); ++v) out.push_back(G.out_neighbors(v).to_vector());
    return out;
}

struct Options {
    std::uint64_t seed = 0;
    bool seeded = false;
    std::size_t cap = default_cell_cap;
    std::string format = "json";
};

void print_table(const Json& j, std::ostream& out, const std::string& indent = "")
{
    for (const auto& [key, value] : j.items()) {
        if (key == "homology" || key.ends_with("_homology")) {
            HomologyGroups h;
            for (const auto& e : value)
                h.set(e["dim"].get<int>(), AbelianGroup{e["rank"].get<std::size_t>(),
                                                        e["torsion"].get<std::vector<std::uint64_t>>()});
            out << indent << key << ": " << to_string(h) << "\n";
        } else if (value.is_object()) {
            out << indent << key << ":\n";
            print_table(value, out, indent + "  ");
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            out << indent << key << ":\n";
            for (const auto& row : value) {
                out << indent << "  -\n";
                print_table(row, out, indent + "    ");
            }
        } else {
            out << indent << key << ": " << value.dump() << "\n";
        }
    }
}

Json cmd_hom(const std::string& g, const std::string& h, const Options& o)
{
    const auto G = resolve_graph(g), H = resolve_graph(h);
    const auto P = hom_poset(G, H, o.cap);
    Json j;
    j["cells"] = P.size();
    j["census"] = P.census();
    j["dimension"] = P.dimension();
    j["euler_characteristic"] = P.euler_characteristic();
    j["connected"] = hom_one_skeleton(G, H).connected();
    j["homology"] = homology_json(hom_homology(G, H, o.cap));
    return j;
}

Json cmd_homology(const std::vector<std::string>& hom, const std::string& nbd, const std::string& clique, bool in,
                  bool order_complex, const Options& o)
{
    Json j;
    if (!hom.empty()) {
        const auto G = resolve_graph(hom[0]), H = resolve_graph(hom[1]);
        j["complex"] = "hom";
        j["homology"] = homology_json(order_complex ? homology_of_poset(hom_poset(G, H, o.cap).to_poset(), o.cap)
                                                    : hom_homology(G, H, o.cap));
    } else if (!nbd.empty()) {
        const auto G = resolve_graph(nbd);
        j["complex"] = in ? "in-neighbourhood" : "out-neighbourhood";
        j["homology"] = homology_json(reduced_homology(in ? in_neighborhood_complex(G) : out_neighborhood_complex(G)));
    } else {
        j["complex"] = "directed clique";
        j["homology"] = homology_json(reduced_homology(directed_clique_complex(resolve_graph(clique))));
    }
    return j;
}

Json leray_json(const SimplicialComplex& X, int n)
{
    const auto r = is_n_leray(X, n);
    Json j{{"n", n}, {"holds", r.holds}};
    if (!r.holds) j["witness"] = {{"face", r.face}, {"degree", r.degree}};
    return j;
}

// Smallest n for which X is n-Leray.
int leray_number(const SimplicialComplex& X)
{
    int n = 0;
    while (!is_n_leray(X, n).holds) ++n;
    return n;
}

Json cmd_nbd(const std::string& g, int check, int exhaustive)
{
    Json j;
    if (exhaustive >= 0) {
        const int n = std::max(check, 0);
        std::size_t checked = 0;
        Json failures = Json::array();
        for (int k = 1; k <= exhaustive; ++k)
            for (const auto& G : all_simple_digraphs(k)) {
                ++checked;
                const auto r = is_n_leray(out_neighborhood_complex(G), n);
                if (!r.holds) failures.push_back({{"graph", graph_json(G)}, {"face", r.face}, {"degree", r.degree}});
            }
        j["max_vertices"] = exhaustive;
        j["n"] = n;
        j["checked"] = checked;
        j["all_pass"] = failures.empty();
        j["failures"] = failures;
        return j;
    }
    const auto G = resolve_graph(g);
    const auto out = out_neighborhood_complex(G), in = in_neighborhood_complex(G);
    j["out_facets"] = facets_json(out);
    j["in_facets"] = facets_json(in);
    j["out_homology"] = homology_json(reduced_homology(out));
    j["in_homology"] = homology_json(reduced_homology(in));
    j["leray_number"] = out.is_void() ? 0 : leray_number(out);
    if (check >= 0) j["leray"] = leray_json(out, check);
    return j;
}

Json cmd_fold(const std::string& g, const Options& o)
{
    const auto G = resolve_graph(g);
    const auto R = stiff_reduction(G, o.seeded ? std::optional<std::uint64_t>(o.seed) : std::nullopt);
    Json trace = Json::array();
    std::vector<int> alive;
    for (int v = 0; v < G.vertex_count(); ++v) alive.push_back(v);
    for (const auto& f : R.trace) {
        trace.push_back({{"vertex", alive[f.v]}, {"onto", alive[f.w]}});
        alive.erase(alive.begin() + f.v);
    }
    return {{"trace", trace},
            {"stiff", graph_json(R.result)},
            {"survivors", R.survivors},
            {"dismantlable", R.result.vertex_count() == 1 && R.result.has_loop(0)}};
}

Json cmd_reconfig(const std::string& g, int n, const Options& o)
{
    const auto G = resolve_graph(g);
    const auto K = transitive_tournament(n);
    const auto S = hom_one_skeleton(G, K);
    if (S.nodes.empty()) fail(ErrorCode::EmptyHom, "no homomorphism into the transitive tournament");
    Json j;
    j["homomorphisms"] = S.nodes.size();
    j["edges"] = S.edge_count();
    j["connected"] = S.connected();
    j["components"] = S.component_count;
    if (S.connected()) j["diameter"] = diameter(G, K);
    std::size_t a = 0, b = S.nodes.size() - 1;
    if (o.seeded) {
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<std::size_t> pick(0, S.nodes.size() - 1);
        a = pick(rng);
        b = pick(rng);
    }
    Json path = Json::array();
    for (const auto& f : meet_path(S.nodes[a], S.nodes[b], G, n)) path.push_back(map_json(f));
    j["meet_path"] = path;
    return j;
}

Json cmd_homotopy(const std::string& g, const std::string& h, const std::string& fs, const std::string& gs)
{
    const auto G = resolve_graph(g), H = resolve_graph(h);
    const auto f = parse_vertex_map(fs), k = parse_vertex_map(gs);
    return {{"f", map_json(f)},
            {"g", map_json(k)},
            {"bihomotopic", bihomotopic(f, k, G, H)},
            {"dihomotopic", dihomotopic(f, k, G, H)},
            {"dihomotopic_reverse", dihomotopic(k, f, G, H)},
            {"line_homotopic", line_homotopic(f, k, G, H)}};
}

Json cmd_table1()
{
    Json rows = Json::array();
    for (const auto& T : enumerate_tournaments(5))
        rows.push_back({{"adjacency", adjacency_json(T)},
                        {"outdegrees", out_lists_key(T)},
                        {"homology", homology_json(reduced_homology(out_neighborhood_complex(T)))}});
    return {{"count", rows.size()}, {"rows", rows}};
}

Json cmd_tournaments(int n)
{
    Json rows = Json::array();
    for (const auto& T : enumerate_tournaments(n))
        rows.push_back({{"adjacency", adjacency_json(T)},
                        {"outdegrees", out_lists_key(T)},
                        {"automorphisms", automorphism_group_order(T)}});
    return {{"n", n}, {"count", rows.size()}, {"rows", rows}};
}

Json cmd_mycielski(const std::string& g, int variant)
{
    const auto G = resolve_graph(g);
    const auto M = mycielskian(G, variant);
    return {{"variant", variant},
            {"graph", graph_json(M)},
            {"source_homology", homology_json(reduced_homology(out_neighborhood_complex(G)))},
            {"homology", homology_json(reduced_homology(out_neighborhood_complex(M)))}};
}

Json cmd_sphere(int n, bool collapse)
{
    const auto T = sphere_tournament(n);
    const auto X = out_neighborhood_complex(T);
    Json j{{"n", n},
           {"graph", graph_json(T)},
           {"facets", facets_json(X)},
           {"homology", homology_json(reduced_homology(X))}};
    if (collapse) {
        const auto R = collapse_free_pairs(X);
        Json log = Json::array();
        for (const auto& s : R.log) log.push_back({{"tau", s.tau}, {"sigma", s.sigma}});
        j["collapse_log"] = log;
        j["remaining_facets"] = facets_json(R.remaining);
    }
    return j;
}

Json cmd_morse(const std::string& g, int n, const Options& o)
{
    const auto G = resolve_graph(g);
    Json j;
    if (G.vertex_count() * n <= 64) {
        const auto r = check_tournament_matching(G, n);
        j = {{"cells", r.cells},
             {"pairs", r.pairs},
             {"critical", r.critical},
             {"consistent", r.consistent},
             {"acyclic", r.acyclic}};
        if (!r.critical_cell.empty()) j["critical_cell"] = to_string(r.critical_cell);
    } else {
        const auto R = tournament_matching(G, n, o.cap);
        j = {{"cells", R.poset.size()},
             {"pairs", R.matching.pairs.size()},
             {"critical", R.matching.critical.size()},
             {"consistent", true},
             {"acyclic", is_acyclic_matching(R.poset.to_poset(), R.matching)}};
        if (!R.matching.critical.empty()) j["critical_cell"] = to_string(R.poset.cell(R.matching.critical.front()));
    }
    return j;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hom complexes of directed graphs"};
    app.name("dihom");
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--seed", o.seed, "random seed")->each([&o](const std::string&) { o.seeded = true; });
    app.add_option("--cap", o.cap, "cell cap");
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}));

    std::string g, h, fs, gs, nbd_graph, clique_graph;
    std::vector<std::string> hom_pair;
    int n = 0, variant = 0, check = -1, exhaustive = -1;
    bool in = false, order = false, collapse = false;
    std::function<Json()> action;

    auto* hom = app.add_subcommand("hom", "cell census and homology of Hom(G,H)");
    hom->add_option("G", g)->required();
    hom->add_option("H", h)->required();
    hom->callback([&] { action = [&] { return cmd_hom(g, h, o); }; });

    auto* homology = app.add_subcommand("homology", "reduced homology of a complex");
    auto* hom_opt = homology->add_option("--hom", hom_pair, "Hom(G,H)")->expected(2);
    auto* nbd_opt = homology->add_option("--nbd", nbd_graph, "neighbourhood complex of G");
    auto* clique_opt = homology->add_option("--clique", clique_graph, "directed clique complex of G");
    homology->add_flag("--in", in, "use in-neighbourhoods");
    homology->add_flag("--order-complex", order, "go through the order complex");
    hom_opt->excludes(nbd_opt, clique_opt);
    nbd_opt->excludes(clique_opt);
    homology->callback([&] {
        if (hom_pair.empty() && nbd_graph.empty() && clique_graph.empty())
            throw CLI::RequiredError("one of --hom, --nbd, --clique");
        action = [&] { return cmd_homology(hom_pair, nbd_graph, clique_graph, in, order, o); };
    });

    auto* nbd = app.add_subcommand("nbd", "neighbourhood complexes and the Leray property");
    nbd->add_option("G", g);
    nbd->add_option("--check-leray", check, "check the n-Leray property");
    nbd->add_option("--exhaustive", exhaustive, "check every simple digraph up to this size")
        ->check(CLI::Range(1, 5));
    nbd->callback([&] {
        if (g.empty() && exhaustive < 0) throw CLI::RequiredError("G or --exhaustive");
        action = [&] { return cmd_nbd(g, check, exhaustive); };
    });

    auto* fold = app.add_subcommand("fold", "stiff reduction");
    fold->add_option("G", g)->required();
    fold->callback([&] { action = [&] { return cmd_fold(g, o); }; });

    auto* reconfig = app.add_subcommand("reconfig", "reconfiguration graph of Hom(G, K_n)");
    reconfig->add_option("G", g)->required();
    reconfig->add_option("n", n)->required()->check(CLI::Range(1, 64));
    reconfig->callback([&] { action = [&] { return cmd_reconfig(g, n, o); }; });

    auto* homotopy = app.add_subcommand("homotopy", "homotopy relations between two maps");
    homotopy->add_option("G", g)->required();
    homotopy->add_option("H", h)->required();
    homotopy->add_option("f", fs)->required();
    homotopy->add_option("g", gs)->required();
    homotopy->callback([&] { action = [&] { return cmd_homotopy(g, h, fs, gs); }; });

    auto* table1 = app.add_subcommand("table1", "tournaments on five vertices");
    table1->callback([&] { action = [] { return cmd_table1(); }; });

    auto* tournaments = app.add_subcommand("tournaments", "tournaments up to isomorphism");
    tournaments->add_option("n", n)->required()->check(CLI::Range(1, 7));
    tournaments->callback([&] { action = [&] { return cmd_tournaments(n); }; });

    auto* mycielski = app.add_subcommand("mycielski", "directed Mycielskian");
    mycielski->add_option("G", g)->required();
    mycielski->add_option("variant", variant)->required()->check(CLI::Range(1, 3));
    mycielski->callback([&] { action = [&] { return cmd_mycielski(g, variant); }; });

    auto* sphere = app.add_subcommand("sphere", "sphere tournament");
    sphere->add_option("n", n)->required()->check(CLI::Range(1, 30));
    sphere->add_flag("--collapse", collapse, "collapse free pairs");
    sphere->callback([&] { action = [&] { return cmd_sphere(n, collapse); }; });

    auto* morse = app.add_subcommand("morse", "tournament matching on Hom(G, K_n)");
    morse->add_option("G", g)->required();
    morse->add_option("n", n)->required()->check(CLI::Range(1, 64));
    morse->callback([&] { action = [&] { return cmd_morse(g, n, o); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    try {
        const Json result = action();
        if (o.format == "table")
            print_table(result, out);
        else
            out << result.dump(2) << "\n";
        return 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace dihom::cli
