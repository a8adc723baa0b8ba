#include "dihom/cli.hpp"
#include "dihom/constructions.hpp"
#include "dihom/error.hpp"
#include "dihom/graph_io.hpp"
#include "oracle.hpp"

#include <doctest.h>
#include <json.hpp>

#include <random>
#include <sstream>

using namespace dihom;
using Json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DIHOM_DATA_DIR) + "/" + name; }

} // namespace

TEST_CASE("graph files round-trip")
{
    std::mt19937_64 rng(100);
    for (int t = 0; t < 100; ++t) {
        const auto G = oracle::random_digraph(1 + static_cast<int>(rng() % 10), rng, 0.3, 0.2);
        const auto text = emit_digraph(G);
        CHECK(parse_digraph(text) == G);
        CHECK(emit_digraph(parse_digraph(text)) == text);
    }
    const auto f = parse_graph_file(R"({"vertices": 2, "edges": [[0, 1]], "labels": ["a", "b"]})");
    CHECK(f.labels == std::vector<std::string>{"a", "b"});
    CHECK(emit_digraph(Digraph(0)) == R"({"vertices": 0, "edges": []})");
    CHECK(parse_digraph(R"({"vertices": 1, "edges": [[0, 0]]})") == looped_vertex());
}

TEST_CASE("graph file errors carry a position")
{
    const std::string text = "{\n  \"vertices\": 3,\n  \"edges\": [[0, 1], [1, 2],\n            [0, 1]]\n}";
    try {
        parse_digraph(text);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(e.column() == 13);
        CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
    }
    auto position = [](const std::string& s) {
        try {
            parse_digraph(s);
        } catch (const ParseError& e) {
            return std::pair{e.line(), e.column()};
        }
        return std::pair<std::size_t, std::size_t>{0, 0};
    };
    CHECK(position(R"({"vertices": 2, "edges": [[0, 2]]})").first == 1);
    CHECK(position("{\"vertices\": 2,\n\"edges\": [[0 1]]}").first == 2);
    CHECK(position(R"({"vertices": 2})").first == 0);
    CHECK_THROWS_AS(parse_digraph(R"({"edges": []})"), ParseError);
    CHECK_THROWS_AS(parse_digraph(R"({"vertices": -1, "edges": []})"), ParseError);
    CHECK_THROWS_AS(parse_digraph(R"({"vertices": 2, "edges": [[0]]})"), ParseError);
    CHECK_THROWS_AS(parse_digraph(R"({"vertices": 2, "edges": [], "colour": 1})"), ParseError);
    CHECK_THROWS_AS(parse_digraph(R"({"vertices": 2, "edges": [], "labels": ["a"]})"), ParseError);
    CHECK_THROWS_AS(parse_digraph(R"({"vertices": 70, "edges": []})"), ParseError);
}

TEST_CASE("shipped fixtures")
{
    CHECK(resolve_graph(data("T7.json")) == rotational_tournament(7));
    CHECK(resolve_graph(data("S2.json")) == sphere_tournament(2));
    const auto [G, H] = homotopy_hierarchy_fixture();
    CHECK(resolve_graph(data("hierarchy_G.json")) == G);
    CHECK(resolve_graph(data("hierarchy_H.json")) == H);
    CHECK(resolve_graph("ONE") == looped_vertex());
    CHECK(resolve_graph("L3") == directed_path(3));
    CHECK(parse_vertex_map("0,3,2") == VertexMap{0, 3, 2});
    CHECK_THROWS_AS(parse_vertex_map("0,,2"), ParseError);
    CHECK_THROWS_AS(resolve_graph(data("missing.json")), ParseError);
}

TEST_CASE("exit codes")
{
    CHECK(run({"hom", "K2", "K4"}).code == 0);
    const auto empty = run({"morse", "C3", "5"});
    CHECK(empty.code == 1);
    CHECK(empty.err.find("EmptyHom") != std::string::npos);
    CHECK(run({"hom", "K2", data("missing.json")}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"reconfig", "K2"}).code == 2);
    CHECK(run({"table1", "--format", "xml"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("commands")
{
    const auto t1 = Json::parse(run({"table1"}).out);
    CHECK(t1["count"] == 12);
    CHECK(t1["rows"].size() == 12);

    const auto h = Json::parse(run({"homology", "--hom", "C3", data("T7.json")}).out);
    bool circle = false;
    for (const auto& g : h["homology"]) circle = circle || (g["dim"] == 1 && g["rank"] == 1);
    CHECK(circle);

    const auto leray = Json::parse(run({"nbd", "--check-leray", "1", "--exhaustive", "4"}).out);
    CHECK(leray["all_pass"] == true);

    const auto hom = Json::parse(run({"hom", "K2", "K4"}).out);
    CHECK(hom["cells"] == 17);
    CHECK(hom["census"] == Json::array({6, 8, 3}));

    const auto m = Json::parse(run({"morse", "L3", "4"}).out);
    CHECK(m["critical"] == 1);
    CHECK(m["acyclic"] == true);

    const auto t = Json::parse(run({"tournaments", "5"}).out);
    CHECK(t["count"] == 12);

    const auto r = run({"homotopy", data("hierarchy_G.json"), data("hierarchy_H.json"), "0,1", "3,2"});
    REQUIRE(r.code == 0);
    const auto rel = Json::parse(r.out);
    CHECK(rel["bihomotopic"] == false);
    CHECK(rel["dihomotopic"] == true);
    CHECK(rel["line_homotopic"] == true);
    CHECK(rel["dihomotopic_reverse"] == false);

    CHECK(run({"sphere", "1", "--collapse"}).code == 0);
    CHECK(run({"fold", "I3"}).code == 0);
    CHECK(run({"reconfig", "K3", "5"}).code == 0);
    CHECK(run({"mycielski", "C3", "2"}).code == 0);
    CHECK(run({"table1", "--format", "table"}).out.find("rows") != std::string::npos);
}

TEST_CASE("output is deterministic")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"hom", "C3", "R5"}, {"fold", "--seed", "4", "I3"}, {"sphere", "2", "--collapse"}, {"table1"}}) {
        const auto a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}
