#include "posetlab/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "posetlab/complex.hpp"

namespace posetlab {

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix multiplicities(const Multigraph& g)
{
    const int n = g.num_vertices();
    Matrix m(n, std::vector<int>(n, 0));
    for (int p = 0; p < g.num_edges(); ++p) {
        auto [a, b] = g.ends(p);
        if (a == b) {
            ++m[a][a];
        } else {
            ++m[a][b];
            ++m[b][a];
        }
    }
    return m;
}

std::vector<int> upper_triangle(const Matrix& m, const std::vector<int>& order)
{
    const std::size_t n = order.size();
    std::vector<int> out;
    out.reserve(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            out.push_back(m[order[i]][order[j]]);
    return out;
}

std::string format_key(std::size_t n, const std::vector<int>& tri)
{
    std::string s = std::to_string(n) + ":";
    for (std::size_t i = 0; i < tri.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(tri[i]);
    }
    return s;
}

/// Minimal upper triangle over orders that list refinement classes in order.
std::vector<int> canonical_triangle(const Matrix& m)
{
    const int n = static_cast<int>(m.size());
    using Invariant = std::tuple<int, int, std::vector<int>>;
    std::vector<Invariant> inv(n);
    for (int v = 0; v < n; ++v) {
        int degree = 2 * m[v][v];
        std::vector<int> nbrs;
        for (int w = 0; w < n; ++w)
            if (w != v) {
                degree += m[v][w];
                if (m[v][w] > 0)
                    nbrs.push_back(m[v][w]);
            }
        std::sort(nbrs.begin(), nbrs.end());
        inv[v] = {degree, m[v][v], nbrs};
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] < inv[b]; });
    // Class boundaries.
    std::vector<std::pair<int, int>> classes;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && inv[order[j]] == inv[order[i]])
            ++j;
        classes.emplace_back(i, j);
        i = j;
    }
    std::vector<int> best;
    // Odometer over permutations of each class.
    for (auto& [a, b] : classes)
        std::sort(order.begin() + a, order.begin() + b);
    while (true) {
        std::vector<int> tri = upper_triangle(m, order);
        if (best.empty() || tri < best)
            best = std::move(tri);
        std::size_t c = 0;
        for (; c < classes.size(); ++c) {
            auto [a, b] = classes[c];
            if (std::next_permutation(order.begin() + a, order.begin() + b))
                break;
        }
        if (c == classes.size())
            break;
    }
    return best;
}

Multigraph graph_from_triangle(int n, const std::vector<int>& tri)
{
    std::vector<VertexId> vertices(n);
    std::iota(vertices.begin(), vertices.end(), 0);
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j, ++k)
            for (int c = 0; c < tri[k]; ++c)
                edges.push_back({static_cast<EdgeId>(edges.size()), i, j});
    return Multigraph(std::move(vertices), std::move(edges));
}

bool by_size_then_bits(EdgeMask a, EdgeMask b)
{
    return a.count() != b.count() ? a.count() < b.count() : a.bits() < b.bits();
}

void degree_sequences(int remaining_vertices, int remaining_sum, int max_value, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out)
{
    if (remaining_vertices == 0) {
        if (remaining_sum == 0)
            out.push_back(cur);
        return;
    }
    for (int d = std::min(max_value, remaining_sum - 3 * (remaining_vertices - 1)); d >= 3; --d) {
        cur.push_back(d);
        degree_sequences(remaining_vertices - 1, remaining_sum - d, d, cur, out);
        cur.pop_back();
    }
}

/// Fill the upper triangle cell by cell so each row meets its degree.
void realize(const std::vector<int>& degrees, std::vector<int>& left, Matrix& m, int i, int j,
             std::vector<std::vector<int>>& out)
{
    const int n = static_cast<int>(degrees.size());
    if (i == n) {
        out.push_back(upper_triangle(m, [&] {
            std::vector<int> id(n);
            std::iota(id.begin(), id.end(), 0);
            return id;
        }()));
        return;
    }
    if (j == n) {
        if (left[i] == 0)
            realize(degrees, left, m, i + 1, i + 1, out);
        return;
    }
    if (i == j) {
        for (int loops = left[i] / 2; loops >= 0; --loops) {
            m[i][i] = loops;
            left[i] -= 2 * loops;
            realize(degrees, left, m, i, j + 1, out);
            left[i] += 2 * loops;
        }
        m[i][i] = 0;
        return;
    }
    if (j == n - 1) {
        // Last cell of the row takes whatever is left.
        const int c = left[i];
        if (c <= left[j]) {
            m[i][j] = m[j][i] = c;
            left[i] -= c;
            left[j] -= c;
            realize(degrees, left, m, i, j + 1, out);
            left[i] += c;
            left[j] += c;
            m[i][j] = m[j][i] = 0;
        }
        return;
    }
    for (int c = std::min(left[i], left[j]); c >= 0; --c) {
        m[i][j] = m[j][i] = c;
        left[i] -= c;
        left[j] -= c;
        realize(degrees, left, m, i, j + 1, out);
        left[i] += c;
        left[j] += c;
    }
    m[i][j] = m[j][i] = 0;
}

}  // namespace

std::string canonical_key(const Multigraph& g)
{
    const Matrix m = multiplicities(g);
    return format_key(m.size(), canonical_triangle(m));
}

Multigraph graph_from_key(const std::string& key)
{
    const auto colon = key.find(':');
    if (colon == std::string::npos)
        throw Error("graph key needs the form n:entries");
    int n = 0;
    std::vector<int> tri;
    try {
        n = std::stoi(key.substr(0, colon));
        std::stringstream ss(key.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ','))
            tri.push_back(std::stoi(item));
    } catch (const std::exception&) {
        throw Error("malformed graph key '" + key + "'");
    }
    if (n < 1 || static_cast<std::size_t>(n) * (n + 1) / 2 != tri.size())
        throw Error("graph key '" + key + "' has the wrong number of entries");
    for (int x : tri)
        if (x < 0)
            throw Error("graph key '" + key + "' has a negative multiplicity");
    return graph_from_triangle(n, tri);
}

std::vector<CanonicalGraph> enumerate_spine_graphs(int r)
{
    if (r < 2 || r > 4)
        throw Error("enumeration supports ranks 2 to 4");
    std::vector<std::pair<int, std::vector<int>>> jobs;  // (vertices, degree sequence)
    for (int v = 1; v <= 2 * r - 2; ++v) {
        const int e = v + r - 1;
        std::vector<std::vector<int>> seqs;
        std::vector<int> cur;
        degree_sequences(v, 2 * e, 2 * e, cur, seqs);
        for (auto& s : seqs)
            jobs.emplace_back(v, std::move(s));
    }
    std::vector<std::vector<std::string>> found(jobs.size());
    const auto njobs = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t k = 0; k < njobs; ++k) {
        const auto& [v, degrees] = jobs[k];
        std::vector<std::vector<int>> tris;
        std::vector<int> left = degrees;
        Matrix m(v, std::vector<int>(v, 0));
        realize(degrees, left, m, 0, 0, tris);
        std::set<std::string> keys;
        for (const auto& tri : tris) {
            const Multigraph g = graph_from_triangle(v, tri);
            if (g.connected())
                keys.insert(canonical_key(g));
        }
        found[k].assign(keys.begin(), keys.end());
    }
    std::set<std::pair<int, std::string>> all;
    for (const auto& keys : found)
        for (const auto& key : keys)
            all.emplace(std::stoi(key.substr(0, key.find(':'))), key);
    std::vector<CanonicalGraph> out;
    for (const auto& [n, key] : all)
        out.push_back({key, graph_from_key(key)});
    return out;
}

std::vector<EdgeMask> spine_down_set_masks(const Multigraph& g)
{
    std::vector<EdgeMask> f = forest_masks(g);
    std::sort(f.begin(), f.end(), by_size_then_bits);
    return f;
}

FinitePoset spine_down_set(const Multigraph& g)
{
    const std::vector<EdgeMask> f = spine_down_set_masks(g);
    std::vector<std::string> labels;
    for (EdgeMask m : f)
        labels.push_back(subgraph_label(g, m));
    return FinitePoset::from_relation(std::move(labels),
                                      [&](std::size_t i, std::size_t j) { return f[j].subset_of(f[i]); });
}

ZFiber z_fiber(const Multigraph& g, bool connected_only)
{
    if (!g.connected() || rank(g) < 2 || g.min_valence() < 3)
        throw Error("fibres need a connected graph of rank >= 2 with valence >= 3");
    ZFiber z;
    const PosetKind kind = connected_only ? PosetKind::cC : PosetKind::C;
    for (EdgeMask forest : spine_down_set_masks(g)) {
        const Quotient q = collapse_forest_quotient(g, forest);
        const GraphPoset cores = build_poset(q.graph, kind);
        for (EdgeMask m : cores.masks)
            z.elements.push_back({forest, g.mask_of(q.graph.ids_of(m))});
    }
    std::vector<std::string> labels;
    for (const FiberElement& e : z.elements)
        labels.push_back("(" + subgraph_label(g, e.forest) + "," + subgraph_label(g, e.core_part) + ")");
    const auto& el = z.elements;
    z.poset = FinitePoset::from_relation(std::move(labels), [&](std::size_t i, std::size_t j) {
        return el[j].forest.subset_of(el[i].forest) &&
               (el[j].forest | el[j].core_part).subset_of(el[i].forest | el[i].core_part);
    });
    return z;
}

CheckReport verify_fiber(const Multigraph& g, bool connected_only)
{
    CheckReport r;
    r.check = connected_only ? "fiber-connected" : "fiber";
    const ZFiber z = z_fiber(g, connected_only);
    const GraphPoset c = build_poset(g, connected_only ? PosetKind::cC : PosetKind::C);
    auto fail = [&](const std::string& why) {
        r.status = Status::Fail;
        r.detail = why;
        return r;
    };

    // Empty-forest slice against the opposite of C(G).
    std::vector<std::size_t> slice, to_c;
    for (std::size_t i = 0; i < z.elements.size(); ++i)
        if (z.elements[i].forest.empty()) {
            slice.push_back(i);
            const auto idx = c.index_of(z.elements[i].core_part);
            if (!idx)
                return fail("slice element " + z.poset.label(i) + " is not a core subgraph");
            to_c.push_back(*idx);
        }
    if (slice.size() != c.masks.size())
        return fail("slice size " + std::to_string(slice.size()) + " differs from " + std::to_string(c.masks.size()));
    for (std::size_t a = 0; a < slice.size(); ++a)
        for (std::size_t b = 0; b < slice.size(); ++b)
            if (z.poset.leq(slice[a], slice[b]) != c.poset.leq(to_c[b], to_c[a]))
                return fail("slice order differs from the opposite order at " + z.poset.label(slice[a]));

    // Retraction (F, H) -> (empty, core(F + H)).
    std::map<EdgeMask, std::size_t> slice_index;
    for (std::size_t i : slice)
        slice_index[z.elements[i].core_part] = i;
    std::vector<std::size_t> assignment(z.elements.size());
    for (std::size_t i = 0; i < z.elements.size(); ++i) {
        const EdgeMask target = core_mask(g, z.elements[i].forest | z.elements[i].core_part);
        auto it = slice_index.find(target);
        if (it == slice_index.end())
            return fail("retraction of " + z.poset.label(i) + " leaves the slice");
        assignment[i] = it->second;
    }
    if (auto w = PosetMap::order_violation(z.poset, z.poset, assignment))
        return fail("retraction not order preserving at " + z.poset.label(w->x));
    try {
        const ClosureRetraction cr = closure_retraction(z.poset, PosetMap(z.poset, z.poset, assignment));
        if (cr.image_elements != slice)
            return fail("retraction image is not the slice");
    } catch (const RetractionError& e) {
        return fail(std::string(e.what()) + " at " + z.poset.label(e.witness()));
    }

    r.homology = poset_homology(z.poset);
    const HomologyResult hc = poset_homology(c.poset);
    if (r.homology != hc)
        return fail("homology " + r.homology.summary() + " differs from " + hc.summary());
    r.status = Status::Pass;
    r.detail = std::to_string(z.elements.size()) + " elements; " + r.homology.summary();
    return r;
}

FinitePoset apartment(int r)
{
    if (r < 2 || r > 8)
        throw Error("apartments are supported for ranks 2 to 8");
    return proper_boolean_lattice(r);
}

CheckReport verify_apartment(int r)
{
    CheckReport rep;
    rep.check = "apartment";
    rep.homology = poset_homology(apartment(r));
    rep.status = rep.homology.is_sphere(r - 2) ? Status::Pass : Status::Fail;
    rep.detail = "rank " + std::to_string(r) + "; expected S^" + std::to_string(r - 2) + "; " + rep.homology.summary();
    return rep;
}

}  // namespace posetlab
