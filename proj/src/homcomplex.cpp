#include "dihom/homcomplex.hpp"

#include "dihom/error.hpp"

#include <algorithm>
#include <numeric>

namespace dihom {

namespace {

VertexSet common_out(const Digraph& H, VertexSet S)
{
    VertexSet c = H.vertices();
    for (int x : S) c &= H.out_neighbors(x);
    return c;
}

} // namespace

bool is_multihom(CellView alpha, const Digraph& G, const Digraph& H)
{
    if (alpha.size() != static_cast<std::size_t>(G.vertex_count()))
        fail(ErrorCode::ShapeMismatch, "assignment has " + std::to_string(alpha.size()) +
                                           " entries, source has " + std::to_string(G.vertex_count()));
    for (auto S : alpha)
        if (!S.is_subset_of(H.vertices())) fail(ErrorCode::ShapeMismatch, "assignment leaves the target");
    if (std::any_of(alpha.begin(), alpha.end(), [](VertexSet S) { return S.empty(); })) return false;
    for (auto [v, w] : G.edges())
        if (!alpha[w].is_subset_of(common_out(H, alpha[v]))) return false;
    return true;
}

MultiHom::MultiHom(std::vector<VertexSet> assignments, const Digraph& G, const Digraph& H)
    : sets_(std::move(assignments))
{
    if (!is_multihom(sets_, G, H)) fail(ErrorCode::NotAHomomorphism, "not a multihomomorphism: " + to_string(sets_));
}

int MultiHom::dimension() const { return cell_dimension(sets_); }

std::string to_string(CellView alpha)
{
    std::string out = "[";
    for (std::size_t v = 0; v < alpha.size(); ++v) out += (v ? "," : "") + to_string(Simplex(alpha[v].to_vector()));
    return out + "]";
}

int cell_dimension(CellView alpha)
{
    int d = 0;
    for (auto S : alpha) d += S.size() - 1;
    return d;
}

namespace {

class MultiHomSearch {
public:
    MultiHomSearch(const Digraph& G, const Digraph& H, const std::function<bool(CellView)>& visit)
        : G_(G), H_(H), visit_(visit), k_(G.vertex_count()),
          levels_(static_cast<std::size_t>(k_) + 1, std::vector<VertexSet>(static_cast<std::size_t>(k_))),
          alpha_(static_cast<std::size_t>(k_))
    {
        for (int v = 0; v < k_; ++v) levels_[0][v] = G.has_loop(v) ? H.looped_vertices() : H.vertices();
    }

    void run() { assign(0); }

private:
    bool assign(int v)
    {
        if (v == k_) return visit_(alpha_);
        return grow(v, VertexSet{}, levels_[v][v], H_.vertices(), H_.vertices());
    }

    // Extends S by members of avail larger than max(S); supersets of an
    // infeasible set are infeasible, so they are never generated.
    bool grow(int v, VertexSet S, VertexSet avail, VertexSet cout, VertexSet cin)
    {
        const bool looped = G_.has_loop(v);
        for (int x : avail) {
            const VertexSet S2 = S | VertexSet::singleton(x);
            const VertexSet out2 = cout & H_.out_neighbors(x);
            const VertexSet in2 = cin & H_.in_neighbors(x);
            if (!feasible(v, out2, in2)) continue;
            alpha_[v] = S2;
            if (!assign(v + 1)) return false;
            VertexSet rest = avail - VertexSet::prefix(x + 1);
            if (looped) rest &= H_.out_neighbors(x) & H_.in_neighbors(x);
            if (!grow(v, S2, rest, out2, in2)) return false;
        }
        return true;
    }

    bool feasible(int v, VertexSet out_common, VertexSet in_common)
    {
        const auto& cur = levels_[v];
        auto& next = levels_[v + 1];
        for (int w = v + 1; w < k_; ++w) {
            VertexSet c = cur[w];
            if (G_.has_edge(v, w)) c &= out_common;
            if (G_.has_edge(w, v)) c &= in_common;
            if (c.empty()) return false;
            next[w] = c;
        }
        return true;
    }

    const Digraph& G_;
    const Digraph& H_;
    const std::function<bool(CellView)>& visit_;
    int k_;
    std::vector<std::vector<VertexSet>> levels_;
    std::vector<VertexSet> alpha_;
};

bool cell_less(CellView a, CellView b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

void for_each_multihom(const Digraph& G, const Digraph& H, const std::function<bool(CellView)>& visit)
{
    MultiHomSearch(G, H, visit).run();
}

HomPoset::HomPoset(Digraph G, Digraph H, std::vector<VertexSet> flat_cells)
    : G_(std::move(G)), H_(std::move(H)), stride_(static_cast<std::size_t>(G_.vertex_count()))
{
    if (stride_ == 0) {
        empty_map_cells_ = 1;
        return;
    }
    const std::size_t n = flat_cells.size() / stride_;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto view = [&](std::size_t i) { return CellView(flat_cells.data() + i * stride_, stride_); };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cell_less(view(a), view(b)); });
    data_.reserve(flat_cells.size());
    for (auto i : order) data_.insert(data_.end(), view(i).begin(), view(i).end());
}

CellView HomPoset::cell(std::size_t i) const
{
    if (i >= size()) fail(ErrorCode::InvalidRange, "cell index out of range");
    return stride_ == 0 ? CellView() : CellView(data_.data() + i * stride_, stride_);
}

MultiHom HomPoset::multihom(std::size_t i) const
{
    auto c = cell(i);
    return MultiHom(std::vector<VertexSet>(c.begin(), c.end()), G_, H_);
}

std::size_t HomPoset::index_of(CellView alpha) const
{
    if (alpha.size() != stride_) return size();
    if (stride_ == 0) return 0;
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (cell_less(cell(mid), alpha))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < size() && std::equal(alpha.begin(), alpha.end(), cell(lo).begin())) return lo;
    return size();
}

int HomPoset::dimension() const
{
    int d = -1;
    for (std::size_t i = 0; i < size(); ++i) d = std::max(d, dimension(i));
    return d;
}

std::vector<std::size_t> HomPoset::census() const
{
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i < size(); ++i) {
        const auto d = static_cast<std::size_t>(dimension(i));
        if (d >= c.size()) c.resize(d + 1, 0);
        ++c[d];
    }
    return c;
}

long long HomPoset::euler_characteristic() const
{
    long long chi = 0;
    const auto c = census();
    for (std::size_t d = 0; d < c.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(c[d]);
    return chi;
}

Poset HomPoset::to_poset() const
{
    std::vector<Poset::Pair> covers;
    std::vector<std::string> labels;
    std::vector<VertexSet> face;
    for (std::size_t i = 0; i < size(); ++i) {
        const auto c = cell(i);
        labels.push_back(to_string(c));
        face.assign(c.begin(), c.end());
        for (std::size_t v = 0; v < stride_; ++v) {
            if (c[v].size() < 2) continue;
            for (int x : c[v]) {
                face[v].erase(x);
                covers.emplace_back(index_of(face), i);
                face[v].insert(x);
            }
        }
    }
    return Poset::from_covers(size(), covers, std::move(labels));
}

ChainComplex HomPoset::cellular_chain_complex() const
{
    ChainComplex C;
    const auto counts = census();
    C.ranks.push_back(1);
    C.ranks.insert(C.ranks.end(), counts.begin(), counts.end());
    std::vector<std::size_t> local(size());
    {
        std::vector<std::size_t> next(counts.size(), 0);
        for (std::size_t i = 0; i < size(); ++i) local[i] = next[static_cast<std::size_t>(dimension(i))]++;
    }
    C.boundaries.push_back(SparseMatrix{0, 1, {{}}});
    for (std::size_t d = 0; d < counts.size(); ++d) {
        SparseMatrix B;
        B.rows = d == 0 ? 1 : counts[d - 1];
        B.cols = counts[d];
        B.columns.resize(counts[d]);
        C.boundaries.push_back(std::move(B));
    }
    std::vector<VertexSet> face;
    for (std::size_t i = 0; i < size(); ++i) {
        const auto c = cell(i);
        const auto d = static_cast<std::size_t>(dimension(i));
        auto& column = C.boundaries[d + 1].columns[local[i]];
        if (d == 0) {
            column.emplace_back(0, 1);
            continue;
        }
        face.assign(c.begin(), c.end());
        int prefix = 0;
        for (std::size_t v = 0; v < stride_; ++v) {
            if (c[v].size() >= 2) {
                int pos = 0;
                for (int x : c[v]) {
                    face[v].erase(x);
                    const auto j = index_of(face);
                    column.emplace_back(static_cast<std::uint32_t>(local[j]), (prefix + pos) % 2 == 0 ? 1 : -1);
                    face[v].insert(x);
                    ++pos;
                }
            }
            prefix += c[v].size() - 1;
        }
        std::sort(column.begin(), column.end());
    }
    return C;
}

HomPoset hom_poset(const Digraph& G, const Digraph& H, std::size_t cap)
{
    std::vector<VertexSet> flat;
    std::size_t count = 0;
    for_each_multihom(G, H, [&](CellView alpha) {
        if (++count > cap)
            fail(ErrorCode::SizeCapExceeded, "Hom complex has more than " + std::to_string(cap) + " cells");
        flat.insert(flat.end(), alpha.begin(), alpha.end());
        return true;
    });
    return HomPoset(G, H, std::move(flat));
}

HomologyGroups cellular_homology(const HomPoset& P) { return reduced_homology(P.cellular_chain_complex()); }

namespace {

HomologyGroups point_homology() { return {}; }

HomologyGroups empty_homology()
{
    HomologyGroups h;
    h.set(-1, AbelianGroup{1, {}});
    return h;
}

// Hom from one looped vertex: the clique complex on looped vertices joined
// both ways.
HomologyGroups looped_point_homology(const Digraph& H)
{
    const VertexSet looped = H.looped_vertices();
    if (looped.empty()) return empty_homology();
    std::vector<Simplex> cliques;
    std::vector<std::pair<VertexSet, VertexSet>> stack;
    for (int x : looped) stack.emplace_back(VertexSet::singleton(x), looped - VertexSet::prefix(x + 1));
    while (!stack.empty()) {
        auto [S, cand] = stack.back();
        stack.pop_back();
        const int last = S.max();
        cand &= H.out_neighbors(last) & H.in_neighbors(last);
        bool extended = false;
        for (int y : cand) {
            stack.emplace_back(S | VertexSet::singleton(y), cand - VertexSet::prefix(y + 1));
            extended = true;
        }
        if (!extended) cliques.push_back(S.to_vector());
    }
    return reduced_homology(SimplicialComplex(std::move(cliques)));
}

} // namespace

HomologyGroups hom_homology(const Digraph& G, const Digraph& H, std::size_t cap)
{
    HomologyGroups total = point_homology();
    for (auto comp : weak_components(G)) {
        const Digraph C = induced_subgraph(G, comp);
        HomologyGroups h;
        if (C.vertex_count() == 1 && !C.has_loop(0))
            h = H.vertex_count() > 0 ? point_homology() : empty_homology();
        else if (C.vertex_count() == 1)
            h = looped_point_homology(H);
        else
            h = cellular_homology(hom_poset(C, H, cap));
        total = kunneth_product(total, h);
        if (total.rank(-1) > 0) break;
    }
    return total;
}

std::size_t HomGraph::edge_count() const
{
    std::size_t twice = 0;
    for (const auto& a : adjacency) twice += a.size();
    return twice / 2;
}

std::size_t HomGraph::index_of(const VertexMap& f) const
{
    auto it = std::lower_bound(nodes.begin(), nodes.end(), f);
    return it != nodes.end() && *it == f ? static_cast<std::size_t>(it - nodes.begin()) : nodes.size();
}

HomGraph hom_one_skeleton(const Digraph& G, const Digraph& H)
{
    HomGraph S;
    S.nodes = enumerate_homomorphisms(G, H);
    S.adjacency.resize(S.nodes.size());
    std::vector<VertexSet> doubled(static_cast<std::size_t>(G.vertex_count()));
    for (std::size_t i = 0; i < S.nodes.size(); ++i) {
        const auto& f = S.nodes[i];
        for (int v = 0; v < G.vertex_count(); ++v) {
            for (int x = f[v] + 1; x < H.vertex_count(); ++x) {
                VertexMap g = f;
                g[v] = x;
                const auto j = S.index_of(g);
                if (j == S.nodes.size()) continue;
                for (int u = 0; u < G.vertex_count(); ++u) doubled[u] = VertexSet::singleton(f[u]);
                doubled[v].insert(x);
                if (!is_multihom(doubled, G, H)) continue;
                S.adjacency[i].push_back(static_cast<std::uint32_t>(j));
                S.adjacency[j].push_back(static_cast<std::uint32_t>(i));
            }
        }
    }
    for (auto& a : S.adjacency) std::sort(a.begin(), a.end());
    S.component.assign(S.nodes.size(), S.nodes.size());
    for (std::size_t s = 0; s < S.nodes.size(); ++s) {
        if (S.component[s] != S.nodes.size()) continue;
        std::vector<std::size_t> stack{s};
        S.component[s] = S.component_count;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (auto y : S.adjacency[x])
                if (S.component[y] == S.nodes.size()) {
                    S.component[y] = S.component_count;
                    stack.push_back(y);
                }
        }
        ++S.component_count;
    }
    return S;
}

NuClosure closure_nu(const Digraph& G)
{
    NuClosure R;
    R.complex = out_neighborhood_complex(G);
    if (R.complex.is_void()) fail(ErrorCode::EmptyComplex, "out-neighbourhood complex is empty");
    for (const auto& group : R.complex.faces())
        for (const auto& f : group) R.faces.push_back(f);
    std::vector<std::size_t> order(R.faces.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto lookup = [&R](const Simplex& s) {
        for (std::size_t i = 0; i < R.faces.size(); ++i)
            if (R.faces[i] == s) return i;
        fail(ErrorCode::FaceNotInComplex, to_string(s));
    };
    for (const auto& f : R.faces) {
        VertexSet in = G.vertices();
        for (int x : f) in &= G.in_neighbors(x);
        VertexSet out = G.vertices();
        for (int y : in) out &= G.out_neighbors(y);
        R.nu.push_back(lookup(out.to_vector()));
    }
    R.image = R.nu;
    std::sort(R.image.begin(), R.image.end());
    R.image.erase(std::unique(R.image.begin(), R.image.end()), R.image.end());
    std::vector<Poset::Pair> less;
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < R.image.size(); ++a) {
        const auto& fa = R.faces[R.image[a]];
        labels.push_back(to_string(fa));
        for (std::size_t b = 0; b < R.image.size(); ++b) {
            const auto& fb = R.faces[R.image[b]];
            if (a != b && std::includes(fb.begin(), fb.end(), fa.begin(), fa.end())) less.emplace_back(a, b);
        }
    }
    R.image_poset = Poset::from_relation(R.image.size(), less, std::move(labels));
    // Longest chain, counted in elements.
    std::vector<int> height(R.image.size(), 0);
    std::vector<std::size_t> by_size(R.image.size());
    std::iota(by_size.begin(), by_size.end(), std::size_t{0});
    std::sort(by_size.begin(), by_size.end(),
              [&R](std::size_t a, std::size_t b) { return R.faces[R.image[a]].size() < R.faces[R.image[b]].size(); });
    int longest = 0;
    for (auto a : by_size) {
        height[a] = 1;
        for (auto b : R.image_poset.lower_covers(a)) height[a] = std::max(height[a], height[b] + 1);
        longest = std::max(longest, height[a]);
    }
    R.image_dimension = longest - 1;
    return R;
}

bool staircase_certificate(const std::vector<VertexSet>& blocks, int n, std::vector<std::pair<int, int>>* tree)
{
    const int m = static_cast<int>(blocks.size());
    if (m == 0 || m > n) return false;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (blocks[i].empty() || blocks[j].empty() || blocks[i].max() >= blocks[j].min()) return false;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int x : blocks[i]) {
            if (x - i < 0 || x - i > n - m) return false;
            edges.emplace_back(i, x - i);
        }
    // Spanning tree of K_{m, n-m+1}: right choice count and connected.
    const int nodes = m + (n - m + 1);
    if (static_cast<int>(edges.size()) != nodes - 1) return false;
    std::vector<int> parent(static_cast<std::size_t>(nodes));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int merged = 0;
    for (auto [i, a] : edges) {
        const int r1 = find(i), r2 = find(m + a);
        if (r1 == r2) return false;
        parent[r1] = r2;
        ++merged;
    }
    if (merged != nodes - 1) return false;
    for (auto [i, a] : edges)
        for (auto [j, b] : edges)
            if (i < j && a > b) return false;
    if (tree) *tree = std::move(edges);
    return true;
}

std::vector<StaircaseCell> staircase_cells(int m, int n)
{
    if (m < 2 || m > n) fail(ErrorCode::InvalidRange, "staircase cells need 2 <= m <= n");
    Digraph Km(m), Kn(n);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) Km.add_edge(i, j);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) Kn.add_edge(i, j);
    const auto P = hom_poset(Km, Kn);
    std::vector<StaircaseCell> out;
    std::vector<VertexSet> grown;
    for (std::size_t i = 0; i < P.size(); ++i) {
        const auto c = P.cell(i);
        bool maximal = true;
        for (int v = 0; v < m && maximal; ++v)
            for (int x : Kn.vertices() - c[v]) {
                grown.assign(c.begin(), c.end());
                grown[v].insert(x);
                if (P.index_of(grown) != P.size()) {
                    maximal = false;
                    break;
                }
            }
        if (!maximal) continue;
        StaircaseCell cell;
        cell.blocks.assign(c.begin(), c.end());
        cell.certified = staircase_certificate(cell.blocks, n, &cell.tree_edges);
        out.push_back(std::move(cell));
    }
    return out;
}

} // namespace dihom
