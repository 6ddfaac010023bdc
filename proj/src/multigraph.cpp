#include "posetlab/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace posetlab {

namespace {

struct UnionFind {
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (b < a)
            std::swap(a, b);
        parent[b] = a;
        return true;
    }
    std::vector<int> parent;
};

}  // namespace

std::vector<int> EdgeMask::positions() const
{
    std::vector<int> out;
    out.reserve(count());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
        out.push_back(std::countr_zero(b));
    return out;
}

Multigraph::Multigraph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges))
{
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw Error("duplicate vertex id");
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i - 1].id == edges_[i].id)
            throw Error("duplicate edge id " + std::to_string(edges_[i].id));
    ends_.reserve(edges_.size());
    for (const Edge& e : edges_) {
        if (!has_vertex(e.u) || !has_vertex(e.v))
            throw Error("edge " + std::to_string(e.id) + " has an undeclared endpoint");
        ends_.emplace_back(vertex_position(e.u), vertex_position(e.v));
    }
}

bool Multigraph::has_vertex(VertexId v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Multigraph::has_edge(EdgeId e) const
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                               [](const Edge& a, EdgeId id) { return a.id < id; });
    return it != edges_.end() && it->id == e;
}

int Multigraph::edge_position(EdgeId e) const
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                               [](const Edge& a, EdgeId id) { return a.id < id; });
    if (it == edges_.end() || it->id != e)
        throw Error("unknown edge id " + std::to_string(e));
    return static_cast<int>(it - edges_.begin());
}

int Multigraph::vertex_position(VertexId v) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
        throw Error("unknown vertex id " + std::to_string(v));
    return static_cast<int>(it - vertices_.begin());
}

int Multigraph::valence(VertexId v) const
{
    const int p = vertex_position(v);
    int val = 0;
    for (const auto& [a, b] : ends_)
        val += (a == p) + (b == p);
    return val;
}

int Multigraph::min_valence() const
{
    std::vector<int> val(vertices_.size(), 0);
    for (const auto& [a, b] : ends_) {
        ++val[a];
        ++val[b];
    }
    return val.empty() ? 0 : *std::min_element(val.begin(), val.end());
}

int Multigraph::num_components() const
{
    UnionFind uf(num_vertices());
    int comps = num_vertices();
    for (const auto& [a, b] : ends_)
        comps -= uf.unite(a, b);
    return comps;
}

EdgeMask Multigraph::mask_of(const std::vector<EdgeId>& ids) const
{
    if (edges_.size() > 64)
        throw Error("edge masks support at most 64 edges");
    EdgeMask m;
    for (EdgeId id : ids)
        m = m.with(edge_position(id));
    return m;
}

std::vector<EdgeId> Multigraph::ids_of(EdgeMask mask) const
{
    std::vector<EdgeId> out;
    for (int p : mask.positions())
        out.push_back(edges_.at(p).id);
    return out;
}

VertexId Multigraph::next_vertex_id() const
{
    return vertices_.empty() ? 0 : vertices_.back() + 1;
}

EdgeId Multigraph::next_edge_id() const
{
    return edges_.empty() ? 0 : edges_.back().id + 1;
}

Subgraph::Subgraph(const Multigraph& host, EdgeMask mask) : host_(&host), mask_(mask)
{
    if (!mask.subset_of(host.full_mask()))
        throw Error("subgraph mask exceeds host edge set");
}

std::vector<VertexId> Subgraph::vertex_ids() const
{
    const std::uint64_t support = vertex_support(*host_, mask_);
    std::vector<VertexId> out;
    for (int p = 0; p < host_->num_vertices(); ++p)
        if ((support >> p) & 1U)
            out.push_back(host_->vertices()[p]);
    return out;
}

std::uint64_t vertex_support(const Multigraph& g, EdgeMask mask)
{
    std::uint64_t support = 0;
    for (int p : mask.positions()) {
        auto [a, b] = g.ends(p);
        support |= (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
    }
    return support;
}

MaskShape analyze(const Multigraph& g, EdgeMask mask)
{
    const int n = g.num_vertices();
    UnionFind uf(n);
    std::vector<char> touched(n, 0);
    int edges = 0;
    for (int p : mask.positions()) {
        auto [a, b] = g.ends(p);
        touched[a] = touched[b] = 1;
        uf.unite(a, b);
        ++edges;
    }
    MaskShape s;
    std::vector<int> comp_edges(n, 0), comp_vertices(n, 0);
    for (int v = 0; v < n; ++v) {
        if (!touched[v])
            continue;
        ++s.vertices;
        ++comp_vertices[uf.find(v)];
    }
    for (int p : mask.positions())
        ++comp_edges[uf.find(g.ends(p).first)];
    for (int v = 0; v < n; ++v) {
        if (comp_vertices[v] == 0)
            continue;
        ++s.components;
        if (comp_edges[v] - comp_vertices[v] + 1 > 0)
            ++s.cyclic_components;
    }
    s.rank = edges - s.vertices + s.components;
    return s;
}

bool is_forest(const Multigraph& g, EdgeMask mask)
{
    UnionFind uf(g.num_vertices());
    for (int p : mask.positions()) {
        auto [a, b] = g.ends(p);
        if (!uf.unite(a, b))
            return false;
    }
    return true;
}

bool is_connected(const Multigraph& g, EdgeMask mask)
{
    return !mask.empty() && analyze(g, mask).components == 1;
}

EdgeMask core_mask(const Multigraph& g, EdgeMask mask)
{
    const int n = g.num_vertices();
    std::vector<int> val(n, 0);
    for (int p : mask.positions()) {
        auto [a, b] = g.ends(p);
        ++val[a];
        ++val[b];
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int p : mask.positions()) {
            auto [a, b] = g.ends(p);
            if (a != b && (val[a] == 1 || val[b] == 1)) {
                --val[a];
                --val[b];
                mask = mask.without(p);
                changed = true;
            }
        }
    }
    return mask;
}

int rank(const Multigraph& g)
{
    return g.num_edges() - g.num_vertices() + g.num_components();
}

bool is_separating_edge(const Multigraph& g, EdgeId e)
{
    const int p = g.edge_position(e);
    if (g.edges()[p].is_loop())
        return false;
    UnionFind uf(g.num_vertices());
    int comps = g.num_vertices();
    for (int q = 0; q < g.num_edges(); ++q) {
        if (q == p)
            continue;
        auto [a, b] = g.ends(q);
        comps -= uf.unite(a, b);
    }
    return comps > g.num_components();
}

Multigraph delete_edge(const Multigraph& g, EdgeId e)
{
    const int p = g.edge_position(e);
    std::vector<Edge> edges;
    for (const Edge& x : g.edges())
        if (x.id != e)
            edges.push_back(x);
    std::vector<VertexId> vertices;
    const auto [a, b] = g.ends(p);
    for (int v = 0; v < g.num_vertices(); ++v) {
        const VertexId id = g.vertices()[v];
        const bool endpoint = (v == a || v == b);
        const bool still_used = std::any_of(edges.begin(), edges.end(), [id](const Edge& x) {
            return x.u == id || x.v == id;
        });
        if (!endpoint || still_used)
            vertices.push_back(id);
    }
    return Multigraph(std::move(vertices), std::move(edges));
}

Multigraph collapse_edge(const Multigraph& g, EdgeId e)
{
    const Edge target = g.edges()[g.edge_position(e)];
    if (target.is_loop())
        throw Error("cannot collapse loop " + std::to_string(e));
    const VertexId merged = g.next_vertex_id();
    auto remap = [&](VertexId v) { return (v == target.u || v == target.v) ? merged : v; };
    std::vector<VertexId> vertices;
    for (VertexId v : g.vertices())
        if (v != target.u && v != target.v)
            vertices.push_back(v);
    vertices.push_back(merged);
    std::vector<Edge> edges;
    for (const Edge& x : g.edges())
        if (x.id != e)
            edges.push_back({x.id, remap(x.u), remap(x.v)});
    return Multigraph(std::move(vertices), std::move(edges));
}

Quotient collapse_forest_quotient(const Multigraph& g, EdgeMask forest)
{
    UnionFind uf(g.num_vertices());
    for (int p : forest.positions()) {
        auto [a, b] = g.ends(p);
        if (!uf.unite(a, b))
            throw Error("collapse set contains a cycle");
    }
    // Union-find roots are the smallest position, and positions follow id order.
    Quotient q;
    std::vector<VertexId> vertices;
    for (int v = 0; v < g.num_vertices(); ++v) {
        const VertexId rep = g.vertices()[uf.find(v)];
        q.vertex_map[g.vertices()[v]] = rep;
        if (uf.find(v) == v)
            vertices.push_back(rep);
    }
    std::vector<Edge> edges;
    for (int p = 0; p < g.num_edges(); ++p) {
        if (forest.contains(p))
            continue;
        const Edge& x = g.edges()[p];
        edges.push_back({x.id, q.vertex_map[x.u], q.vertex_map[x.v]});
    }
    q.graph = Multigraph(std::move(vertices), std::move(edges));
    return q;
}

Multigraph collapse_forest(const Multigraph& g, const Subgraph& forest)
{
    if (&forest.host() != &g && !(forest.host() == g))
        throw Error("forest belongs to a different host graph");
    return collapse_forest_quotient(g, forest.mask()).graph;
}

Subgraph core(const Subgraph& h)
{
    return Subgraph(h.host(), core_mask(h.host(), h.mask()));
}

Smoothing smooth_valence_two_detailed(const Multigraph& g, VertexId v)
{
    const int vp = g.vertex_position(v);
    std::vector<int> incident;
    for (int p = 0; p < g.num_edges(); ++p) {
        auto [a, b] = g.ends(p);
        if (a == vp && b == vp)
            throw Error("vertex " + std::to_string(v) + " carries a loop");
        if (a == vp || b == vp)
            incident.push_back(p);
    }
    if (incident.size() != 2)
        throw Error("vertex " + std::to_string(v) + " does not have valence 2");
    const Edge& e1 = g.edges()[incident[0]];
    const Edge& e2 = g.edges()[incident[1]];
    const VertexId far1 = e1.u == v ? e1.v : e1.u;
    const VertexId far2 = e2.u == v ? e2.v : e2.u;
    Smoothing s{Multigraph(), e1.id, e2.id, g.next_edge_id()};
    std::vector<VertexId> vertices;
    for (VertexId x : g.vertices())
        if (x != v)
            vertices.push_back(x);
    std::vector<Edge> edges;
    for (const Edge& x : g.edges())
        if (x.id != e1.id && x.id != e2.id)
            edges.push_back(x);
    edges.push_back({s.merged, std::min(far1, far2), std::max(far1, far2)});
    s.graph = Multigraph(std::move(vertices), std::move(edges));
    return s;
}

Multigraph smooth_valence_two(const Multigraph& g, VertexId v)
{
    return smooth_valence_two_detailed(g, v).graph;
}

std::vector<EdgeMask> forest_masks(const Multigraph& g)
{
    if (g.num_edges() > 30)
        throw Error("forest enumeration limited to 30 edges");
    std::vector<EdgeMask> out;
    const std::uint64_t limit = std::uint64_t{1} << g.num_edges();
    for (std::uint64_t bits = 0; bits < limit; ++bits)
        if (is_forest(g, EdgeMask(bits)))
            out.emplace_back(bits);
    return out;
}

std::vector<EdgeMask> maximal_forest_masks(const Multigraph& g)
{
    const int target = g.num_vertices() - g.num_components();
    std::vector<EdgeMask> out;
    for (EdgeMask m : forest_masks(g))
        if (m.count() == target)
            out.push_back(m);
    return out;
}

std::vector<Subgraph> maximal_forests(const Multigraph& g)
{
    if (!g.connected())
        throw Error("maximal_forests expects a connected graph");
    std::vector<Subgraph> out;
    for (EdgeMask m : maximal_forest_masks(g))
        out.emplace_back(g, m);
    return out;
}

Multigraph subdivide_edge(const Multigraph& g, EdgeId e)
{
    const Edge& old = g.edges()[g.edge_position(e)];
    const VertexId w = g.next_vertex_id();
    std::vector<VertexId> vertices = g.vertices();
    vertices.push_back(w);
    std::vector<Edge> edges;
    for (const Edge& x : g.edges())
        edges.push_back(x.id == e ? Edge{e, old.u, w} : x);
    edges.push_back({g.next_edge_id(), w, old.v});
    return Multigraph(std::move(vertices), std::move(edges));
}

std::string edge_labelled_form(const Multigraph& g)
{
    std::map<VertexId, int> relabel;
    auto label = [&](VertexId v) {
        auto [it, inserted] = relabel.emplace(v, static_cast<int>(relabel.size()));
        return it->second;
    };
    std::ostringstream os;
    for (const Edge& e : g.edges()) {
        int a = label(e.u), b = label(e.v);
        os << e.id << ':' << std::min(a, b) << '-' << std::max(a, b) << ';';
    }
    int isolated = 0;
    for (VertexId v : g.vertices())
        isolated += relabel.count(v) == 0;
    os << "iso=" << isolated;
    return os.str();
}

namespace graphs {

Multigraph rose(int petals)
{
    std::vector<Edge> edges;
    for (int i = 0; i < petals; ++i)
        edges.push_back({i, 0, 0});
    return Multigraph({0}, std::move(edges));
}

Multigraph theta(int k)
{
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        edges.push_back({i, 0, 1});
    return Multigraph({0, 1}, std::move(edges));
}

Multigraph dumbbell()
{
    return Multigraph({0, 1}, {{0, 0, 0}, {1, 0, 1}, {2, 1, 1}});
}

Multigraph cycle(int n)
{
    std::vector<VertexId> vertices(n);
    std::iota(vertices.begin(), vertices.end(), 0);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, i, (i + 1) % n});
    return Multigraph(std::move(vertices), std::move(edges));
}

}  // namespace graphs

}  // namespace posetlab
