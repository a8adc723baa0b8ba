#include "dihom/graph_io.hpp"

#include "dihom/constructions.hpp"
#include "dihom/error.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace dihom {

namespace {

using nlohmann::json;

struct Position {
    int line = 1;
    int column = 1;
};

Position position_of(std::string_view text, std::size_t offset)
{
    Position p;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++p.line;
            p.column = 1;
        } else {
            ++p.column;
        }
    }
    return p;
}

// Offsets of top-level keys and of the elements of top-level arrays, found
// by a scan of text that already parsed as JSON.
struct Layout {
    std::map<std::string, std::size_t> keys;
    std::map<std::string, std::vector<std::size_t>> elements;
};

Layout scan_layout(std::string_view text)
{
    Layout L;
    int depth = 0;
    std::string key;
    bool expect_element = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (depth == 2 && expect_element && c != ']') {
            L.elements[key].push_back(i);
            expect_element = false;
        }
        if (c == '"') {
            const std::size_t start = i;
            std::string s;
            for (++i; i < text.size() && text[i] != '"'; ++i) {
                if (text[i] == '\\') ++i;
                s += text[i];
            }
            if (depth == 1) {
                std::size_t j = i + 1;
                while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
                if (j < text.size() && text[j] == ':') {
                    key = s;
                    L.keys.emplace(s, start);
                }
            }
            continue;
        }
        if (c == '[' || c == '{') {
            ++depth;
            if (depth == 2 && c == '[') expect_element = true;
        } else if (c == ']' || c == '}') {
            --depth;
        } else if (c == ',' && depth == 2) {
            expect_element = true;
        }
    }
    return L;
}

[[noreturn]] void parse_fail(std::string_view text, std::size_t offset, const std::string& what)
{
    const auto p = position_of(text, offset);
    throw ParseError(what, p.line, p.column);
}

int as_int(const json& v, std::string_view text, std::size_t offset, const std::string& what)
{
    if (!v.is_number_integer()) parse_fail(text, offset, what + " must be an integer");
    const auto x = v.get<long long>();
    if (x < 0 || x > 64) parse_fail(text, offset, what + " out of range");
    return static_cast<int>(x);
}

} // namespace

GraphFile parse_graph_file(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        parse_fail(text, e.byte > 0 ? e.byte - 1 : 0, "malformed JSON");
    }
    if (!doc.is_object()) parse_fail(text, 0, "expected an object");
    const auto L = scan_layout(text);
    for (const auto& [k, _] : doc.items())
        if (k != "vertices" && k != "edges" && k != "labels") parse_fail(text, L.keys.at(k), "unknown field " + k);
    if (!doc.contains("vertices")) parse_fail(text, 0, "missing field vertices");
    const int n = as_int(doc["vertices"], text, L.keys.at("vertices"), "vertices");

    GraphFile out{Digraph(n), {}};
    if (doc.contains("edges")) {
        const auto& edges = doc["edges"];
        if (!edges.is_array()) parse_fail(text, L.keys.at("edges"), "edges must be an array");
        const auto& offsets = L.elements.count("edges") ? L.elements.at("edges") : std::vector<std::size_t>{};
        std::set<Edge> seen;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const std::size_t at = i < offsets.size() ? offsets[i] : 0;
            const auto& e = edges[i];
            if (!e.is_array() || e.size() != 2) parse_fail(text, at, "edge must be a pair [u, v]");
            const int u = as_int(e[0], text, at, "edge endpoint");
            const int v = as_int(e[1], text, at, "edge endpoint");
            if (u >= n || v >= n) parse_fail(text, at, "edge endpoint out of range");
            if (!seen.emplace(u, v).second)
                parse_fail(text, at, "duplicate edge [" + std::to_string(u) + ", " + std::to_string(v) + "]");
            out.graph.add_edge(u, v);
        }
    }
    if (doc.contains("labels")) {
        const auto& labels = doc["labels"];
        const std::size_t at = L.keys.at("labels");
        if (!labels.is_array() || labels.size() != static_cast<std::size_t>(n))
            parse_fail(text, at, "labels must be an array with one entry per vertex");
        const auto& offsets = L.elements.count("labels") ? L.elements.at("labels") : std::vector<std::size_t>{};
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (!labels[i].is_string()) parse_fail(text, i < offsets.size() ? offsets[i] : at, "label must be a string");
            out.labels.push_back(labels[i].get<std::string>());
        }
    }
    return out;
}

Digraph parse_digraph(std::string_view text) { return parse_graph_file(text).graph; }

std::string emit_digraph(const Digraph& G, const std::vector<std::string>& labels)
{
    std::string s = "{\"vertices\": " + std::to_string(G.vertex_count()) + ", \"edges\": [";
    bool first = true;
    for (auto [u, v] : G.edges()) {
        s += (first ? "[" : ", [") + std::to_string(u) + ", " + std::to_string(v) + "]";
        first = false;
    }
    s += "]";
    if (!labels.empty()) s += ", \"labels\": " + json(labels).dump();
    return s + "}";
}

VertexMap parse_vertex_map(std::string_view text)
{
    std::vector<int> image;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        const auto token = text.substr(pos, end - pos);
        int x = 0;
        auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
        if (ec != std::errc() || p != token.data() + token.size() || token.empty() || x < 0)
            throw ParseError("bad map entry '" + std::string(token) + "'", 1, static_cast<int>(pos) + 1);
        image.push_back(x);
        pos = end + 1;
    }
    return VertexMap(std::move(image));
}

Digraph resolve_graph(const std::string& spec)
{
    static const std::regex family("([CKLIJRS])([0-9]+)");
    std::smatch m;
    if (spec == "ONE") return looped_vertex();
    if (std::regex_match(spec, m, family)) {
        const int n = std::stoi(m[2]);
        switch (m[1].str()[0]) {
        case 'C': return directed_cycle(n);
        case 'K': return transitive_tournament(n);
        case 'L': return directed_path(n);
        case 'I': return interval_bidirected(n);
        case 'J': return interval_directed_looped(n);
        case 'R': return rotational_tournament(n);
        case 'S': return sphere_tournament(n);
        }
    }
    std::ifstream in(spec);
    if (!in) throw ParseError("cannot open graph file " + spec, 0, 0);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_digraph(buf.str());
}

} // namespace dihom
