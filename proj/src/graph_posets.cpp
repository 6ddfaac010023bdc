#include "posetlab/graph_posets.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "posetlab/complex.hpp"

namespace posetlab {

std::string to_string(PosetKind k)
{
    switch (k) {
    case PosetKind::Sub:
        return "sub";
    case PosetKind::For:
        return "for";
    case PosetKind::X:
        return "x";
    case PosetKind::C:
        return "c";
    case PosetKind::cX:
        return "cx";
    case PosetKind::cC:
        return "cc";
    }
    return "?";
}

PosetKind parse_kind(const std::string& s)
{
    std::string t;
    for (char c : s)
        t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    for (PosetKind k : {PosetKind::Sub, PosetKind::For, PosetKind::X, PosetKind::C, PosetKind::cX, PosetKind::cC})
        if (to_string(k) == t)
            return k;
    throw Error("unknown poset kind '" + s + "' (expected sub, for, x, c, cx or cc)");
}

std::string to_string(Status s)
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::HomologyOnly:
        return "homology-only";
    }
    return "fail";
}

bool qualifies(const Multigraph& g, EdgeMask m, PosetKind kind)
{
    const EdgeMask full = g.full_mask();
    if (m.empty() || m == full || !m.subset_of(full))
        return false;
    switch (kind) {
    case PosetKind::Sub:
        return true;
    case PosetKind::For:
        return is_forest(g, m);
    case PosetKind::X:
        return !is_forest(g, m);
    case PosetKind::C:
        return core_mask(g, m) == m;
    case PosetKind::cX:
        return is_connected(g, m) && !is_forest(g, m);
    case PosetKind::cC:
        return is_connected(g, m) && core_mask(g, m) == m;
    }
    return false;
}

std::optional<std::size_t> GraphPoset::index_of(EdgeMask m) const
{
    auto less = [](EdgeMask a, EdgeMask b) {
        return a.count() != b.count() ? a.count() < b.count() : a.bits() < b.bits();
    };
    auto it = std::lower_bound(masks.begin(), masks.end(), m, less);
    if (it == masks.end() || *it != m)
        return std::nullopt;
    return static_cast<std::size_t>(it - masks.begin());
}

std::string subgraph_label(const Multigraph& g, EdgeMask m)
{
    std::string s = "{";
    bool first = true;
    for (EdgeId e : g.ids_of(m)) {
        if (!first)
            s += ",";
        first = false;
        s += std::to_string(e);
    }
    return s + "}";
}

GraphPoset build_poset(const Multigraph& g, PosetKind kind)
{
    if (!g.connected() || g.num_vertices() == 0)
        throw Error("graph posets need a connected graph");
    if (rank(g) < 1)
        throw Error("graph posets need a graph of rank at least 1");
    if (g.num_edges() > 20)
        throw Error("too many edges for exhaustive subgraph enumeration");
    GraphPoset gp;
    const std::uint64_t total = std::uint64_t{1} << g.num_edges();
    for (std::uint64_t b = 1; b + 1 < total; ++b)
        if (qualifies(g, EdgeMask(b), kind))
            gp.masks.emplace_back(b);
    std::sort(gp.masks.begin(), gp.masks.end(), [](EdgeMask a, EdgeMask b) {
        return a.count() != b.count() ? a.count() < b.count() : a.bits() < b.bits();
    });
    std::vector<std::string> labels;
    for (EdgeMask m : gp.masks)
        labels.push_back(subgraph_label(g, m));
    gp.poset = FinitePoset::from_relation(std::move(labels), [&](std::size_t i, std::size_t j) {
        return gp.masks[i].subset_of(gp.masks[j]);
    });
    return gp;
}

HomologyResult poset_homology(const FinitePoset& p)
{
    return reduced_homology(core_order_complex(p));
}

namespace {

void require_spine_graph(const Multigraph& g)
{
    if (!g.connected())
        throw Error("verifier needs a connected graph");
    if (rank(g) < 2)
        throw Error("verifier needs rank at least 2");
    if (g.min_valence() < 3)
        throw Error("verifier needs every vertex of valence at least 3");
}

bool has_separating_edge(const Multigraph& g)
{
    for (const Edge& e : g.edges())
        if (is_separating_edge(g, e.id))
            return true;
    return false;
}

/// Homology free and zero outside `degree`.
bool concentrated_in(const HomologyResult& h, int degree)
{
    if (!h.torsion_free())
        return false;
    for (const DegreeHomology& d : h.degrees())
        if (d.degree != degree && d.betti != 0)
            return false;
    return true;
}

std::optional<Pi1Status> pi1_if_connected(const SimplicialComplex& k, const HomologyResult& h)
{
    if (k.num_vertices() == 0 || !h.zero_in(0))
        return std::nullopt;
    return pi1_triviality(k, h);
}

/// A wedge of d-spheres needs simple connectivity for d >= 2, and a
/// contractibility claim needs it whenever the space is connected.
Status sphere_status(bool homology_ok, int degree, const HomologyResult& h, const std::optional<Pi1Status>& pi1)
{
    if (!homology_ok)
        return Status::Fail;
    const bool needs_pi1 = degree >= 2 || (h.trivial() && degree >= 0);
    if (!needs_pi1)
        return Status::Pass;
    if (pi1 == Pi1Status::Trivial)
        return Status::Pass;
    if (pi1 == Pi1Status::Nontrivial)
        return Status::Fail;
    return Status::HomologyOnly;
}

/// Core map a -> a onto b; empty string on success.
std::string check_core_retraction(const Multigraph& g, PosetKind from, PosetKind to)
{
    const GraphPoset a = build_poset(g, from);
    const GraphPoset b = build_poset(g, to);
    std::vector<std::size_t> assignment(a.masks.size());
    for (std::size_t i = 0; i < a.masks.size(); ++i) {
        const auto idx = a.index_of(core_mask(g, a.masks[i]));
        if (!idx)
            return "core of " + a.poset.label(i) + " leaves " + to_string(from);
        assignment[i] = *idx;
    }
    const std::string name = to_string(from) + "->" + to_string(to);
    if (auto w = PosetMap::order_violation(a.poset, a.poset, assignment))
        return name + ": core map not order preserving at " + a.poset.label(w->x) + " <= " + a.poset.label(w->y);
    const PosetMap f(a.poset, a.poset, assignment);
    ClosureRetraction r;
    try {
        r = closure_retraction(a.poset, f);
    } catch (const RetractionError& e) {
        return name + ": " + e.what() + " (witness " + a.poset.label(e.witness()) + ")";
    }
    if (!r.direction.decreasing)
        return name + ": core map is not decreasing";
    std::vector<EdgeMask> image;
    for (std::size_t i : r.image_elements)
        image.push_back(a.masks[i]);
    std::vector<EdgeMask> expected = b.masks;
    std::sort(image.begin(), image.end());
    std::sort(expected.begin(), expected.end());
    if (image != expected)
        return name + ": image differs from " + to_string(to);
    if (poset_homology(a.poset) != poset_homology(b.poset))
        return name + ": homology differs";
    return {};
}

}  // namespace

CheckReport verify_X_sphericity(const Multigraph& g)
{
    require_spine_graph(g);
    CheckReport r;
    r.check = "x-sphericity";
    const int n = rank(g);
    const GraphPoset x = build_poset(g, PosetKind::X);
    const SimplicialComplex k = core_order_complex(x.poset);
    r.homology = reduced_homology(k);
    r.pi1 = pi1_if_connected(k, r.homology);
    if (has_separating_edge(g)) {
        r.status = sphere_status(r.homology.trivial(), 0, r.homology, r.pi1);
        r.detail = "separating edge; expected contractible; " + r.homology.summary();
    } else {
        r.status = sphere_status(r.homology.is_wedge_of_spheres(n - 2), n - 2, r.homology, r.pi1);
        r.detail = "no separating edge; expected wedge of " + std::to_string(n - 2) + "-spheres; " +
                   r.homology.summary();
    }
    return r;
}

CheckReport verify_cX_sphericity(const Multigraph& g)
{
    require_spine_graph(g);
    CheckReport r;
    r.check = "cx-sphericity";
    const int n = rank(g);
    const GraphPoset cx = build_poset(g, PosetKind::cX);
    const SimplicialComplex k = core_order_complex(cx.poset);
    r.homology = reduced_homology(k);
    r.pi1 = pi1_if_connected(k, r.homology);
    r.status = sphere_status(concentrated_in(r.homology, n - 2), n - 2, r.homology, r.pi1);
    r.detail = "expected free homology in degree " + std::to_string(n - 2) + "; " + r.homology.summary();
    const std::string retraction = check_core_retraction(g, PosetKind::cX, PosetKind::cC);
    if (!retraction.empty()) {
        r.status = Status::Fail;
        r.detail += "; " + retraction;
    }
    return r;
}

CheckReport verify_core_retractions(const Multigraph& g)
{
    if (rank(g) < 1)
        throw Error("core retractions need rank at least 1");
    CheckReport r;
    r.check = "core-retraction";
    r.homology = poset_homology(build_poset(g, PosetKind::X).poset);
    std::vector<std::string> problems;
    for (auto [from, to] : {std::pair{PosetKind::X, PosetKind::C}, std::pair{PosetKind::cX, PosetKind::cC}}) {
        std::string msg = check_core_retraction(g, from, to);
        if (!msg.empty())
            problems.push_back(msg);
    }
    r.status = problems.empty() ? Status::Pass : Status::Fail;
    r.detail = problems.empty() ? "x->c and cx->cc certified" : problems.front();
    return r;
}

CheckReport verify_valence_two(const Multigraph& g, VertexId v)
{
    const Smoothing s = smooth_valence_two_detailed(g, v);
    CheckReport r;
    r.check = "valence2";
    const GraphPoset a = build_poset(g, PosetKind::cX);
    const GraphPoset b = build_poset(s.graph, PosetKind::cX);

    auto phi = [&](EdgeMask m) {
        std::vector<EdgeId> ids = g.ids_of(m);
        const bool h1 = std::count(ids.begin(), ids.end(), s.first) > 0;
        const bool h2 = std::count(ids.begin(), ids.end(), s.second) > 0;
        std::erase(ids, s.first);
        std::erase(ids, s.second);
        if (h1 && h2)
            ids.push_back(s.merged);
        return s.graph.mask_of(ids);
    };
    auto psi = [&](EdgeMask m) {
        std::vector<EdgeId> ids = s.graph.ids_of(m);
        if (std::count(ids.begin(), ids.end(), s.merged) > 0) {
            std::erase(ids, s.merged);
            ids.push_back(s.first);
            ids.push_back(s.second);
        }
        return g.mask_of(ids);
    };

    auto fail = [&](const std::string& why) {
        r.status = Status::Fail;
        r.detail = why;
        return r;
    };
    std::vector<std::size_t> phi_map(a.masks.size()), psi_map(b.masks.size());
    for (std::size_t i = 0; i < a.masks.size(); ++i) {
        const auto j = b.index_of(phi(a.masks[i]));
        if (!j)
            return fail("phi" + a.poset.label(i) + " is not in cX(G^v)");
        phi_map[i] = *j;
    }
    for (std::size_t j = 0; j < b.masks.size(); ++j) {
        const auto i = a.index_of(psi(b.masks[j]));
        if (!i)
            return fail("psi" + b.poset.label(j) + " is not in cX(G)");
        psi_map[j] = *i;
    }
    if (auto w = PosetMap::order_violation(a.poset, b.poset, phi_map))
        return fail("phi not order preserving at " + a.poset.label(w->x));
    if (auto w = PosetMap::order_violation(b.poset, a.poset, psi_map))
        return fail("psi not order preserving at " + b.poset.label(w->x));
    for (std::size_t i = 0; i < a.masks.size(); ++i)
        if (!a.masks[psi_map[phi_map[i]]].subset_of(a.masks[i]))
            return fail("psi(phi(H)) not inside H for H = " + a.poset.label(i));
    for (std::size_t j = 0; j < b.masks.size(); ++j)
        if (phi_map[psi_map[j]] != j)
            return fail("phi(psi(K)) != K for K = " + b.poset.label(j));
    r.homology = poset_homology(a.poset);
    const HomologyResult hv = poset_homology(b.poset);
    if (r.homology != hv)
        return fail("homology differs: " + r.homology.summary() + " vs " + hv.summary());
    r.status = Status::Pass;
    r.detail = "smoothed vertex " + std::to_string(v) + "; " + r.homology.summary();
    return r;
}

CheckReport forest_generator_count(const Multigraph& g)
{
    if (!g.connected())
        throw Error("forest generators need a connected graph");
    if (rank(g) < 2)
        throw Error("forest generators need rank at least 2");
    if (has_separating_edge(g))
        throw Error("forest generators need a graph without separating edges");
    CheckReport r;
    r.check = "forest-generators";
    const int n = rank(g);
    const int d = n - 2;
    const GraphPoset x = build_poset(g, PosetKind::X);
    const SimplicialComplex k = order_complex(x.poset);
    r.homology = reduced_homology(k);
    const auto trees = maximal_forest_masks(g);

    SparseIntMatrix span;
    span.rows = k.count(d);
    if (d + 1 <= k.dimension())
        span = boundary_matrix(k, d + 1);
    const std::size_t boundary_rank = smith_normal_form(span).rank;
    const SparseIntMatrix dd = boundary_matrix(k, d);

    for (EdgeMask tree : trees) {
        const std::vector<int> rest = g.full_mask().minus(tree).positions();
        if (static_cast<int>(rest.size()) != n)
            throw Error("maximal forest with unexpected complement size");
        std::vector<int> perm(rest.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::map<std::size_t, long long> cycle;
        do {
            int perm_sign = 1;
            for (std::size_t i = 0; i < perm.size(); ++i)
                for (std::size_t j = i + 1; j < perm.size(); ++j)
                    if (perm[i] > perm[j])
                        perm_sign = -perm_sign;
            std::vector<int> simplex;
            EdgeMask m = tree;
            for (int step = 0; step + 1 < n; ++step) {
                m = m.with(rest[perm[step]]);
                const auto idx = x.index_of(m);
                if (!idx)
                    throw Error("forest-dual subgraph missing from X(G)");
                simplex.push_back(*k.local_index(static_cast<VertexLabel>(*idx)));
            }
            int sort_sign = 1;
            for (std::size_t i = 0; i < simplex.size(); ++i)
                for (std::size_t j = i + 1; j < simplex.size(); ++j)
                    if (simplex[i] > simplex[j])
                        sort_sign = -sort_sign;
            std::sort(simplex.begin(), simplex.end());
            cycle[*k.find(simplex)] += perm_sign * sort_sign;
        } while (std::next_permutation(perm.begin(), perm.end()));

        std::map<std::size_t, long long> image;
        for (const Triplet& t : dd.entries)
            if (auto it = cycle.find(t.col); it != cycle.end())
                image[t.row] += t.value * it->second;
        for (auto [row, value] : image)
            if (value != 0) {
                r.status = Status::Fail;
                r.detail = "forest-dual chain is not a cycle";
                return r;
            }
        const std::size_t col = span.cols++;
        for (auto [row, value] : cycle)
            if (value != 0)
                span.entries.push_back({row, col, value});
    }
    const std::size_t total_rank = smith_normal_form(span).rank;
    const std::size_t span_rank = total_rank - boundary_rank;
    const std::size_t betti = r.homology.betti(d);
    r.status = span_rank == betti ? Status::Pass : Status::Fail;
    r.detail = "N=" + std::to_string(trees.size()) + " forests; span rank " + std::to_string(span_rank) +
               ", b~" + std::to_string(d) + "=" + std::to_string(betti);
    return r;
}

CheckReport verify_sub_sphere(const Multigraph& g)
{
    CheckReport r;
    r.check = "sub-sphere";
    const int dim = g.num_edges() - 2;
    r.homology = poset_homology(build_poset(g, PosetKind::Sub).poset);
    r.status = r.homology.is_sphere(dim) ? Status::Pass : Status::Fail;
    r.detail = "expected S^" + std::to_string(dim) + "; " + r.homology.summary();
    return r;
}

CheckReport verify_duality(const Multigraph& g)
{
    CheckReport r;
    r.check = "duality";
    const GraphPoset sub = build_poset(g, PosetKind::Sub);
    const GraphPoset forests = build_poset(g, PosetKind::For);
    const GraphPoset x = build_poset(g, PosetKind::X);
    std::vector<std::size_t> q;
    std::vector<EdgeMask> rest;
    for (std::size_t i = 0; i < sub.masks.size(); ++i) {
        if (forests.index_of(sub.masks[i]))
            q.push_back(i);
        else
            rest.push_back(sub.masks[i]);
    }
    if (rest != x.masks) {
        r.status = Status::Fail;
        r.detail = "X(G) differs from Sub(G) minus For(G)";
        return r;
    }
    const DualityReport d = alexander_duality_check(sub.poset, q, g.num_edges() - 2);
    r.homology = d.subposet;
    if (!d.hypothesis_ok) {
        r.status = Status::Fail;
        r.detail = "Sub(G) is not a homology sphere";
    } else if (!d.duality_ok) {
        r.status = Status::Fail;
        r.detail = "duality fails in degree " + std::to_string(d.failing_degrees.front());
    } else {
        r.status = Status::Pass;
        r.detail = "For: " + d.subposet.summary() + "; X cohomology: " + d.complement.summary();
    }
    return r;
}

CheckReport verify_forest_poset(const Multigraph& g)
{
    CheckReport r;
    r.check = "forest-poset";
    r.homology = poset_homology(build_poset(g, PosetKind::For).poset);
    if (has_separating_edge(g)) {
        r.status = r.homology.trivial() ? Status::Pass : Status::Fail;
        r.detail = "separating edge; expected acyclic; " + r.homology.summary();
    } else {
        const int degree = g.num_vertices() - 2;
        r.status = concentrated_in(r.homology, degree) ? Status::Pass : Status::Fail;
        r.detail = "expected free homology in degree " + std::to_string(degree) + "; " + r.homology.summary();
    }
    return r;
}

}  // namespace posetlab
