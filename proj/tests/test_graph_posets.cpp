#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "posetlab/enumerate.hpp"
#include "posetlab/graph_posets.hpp"

using namespace posetlab;

namespace {

bool support_connected(const Multigraph& g, std::uint64_t m)
{
    const int n = g.num_vertices();
    std::vector<std::vector<int>> adj(n);
    std::vector<char> touched(n, 0);
    for (int p = 0; p < g.num_edges(); ++p)
        if ((m >> p) & 1U) {
            const auto [a, b] = g.ends(p);
            adj[a].push_back(b);
            adj[b].push_back(a);
            touched[a] = touched[b] = 1;
        }
    int start = -1;
    for (int v = 0; v < n; ++v)
        if (touched[v])
            start = v;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    for (int v = 0; v < n; ++v)
        if (touched[v] && !seen[v])
            return false;
    return true;
}

bool all_degrees_two(const Multigraph& g, std::uint64_t m)
{
    std::vector<int> deg(g.num_vertices(), 0);
    for (int p = 0; p < g.num_edges(); ++p)
        if ((m >> p) & 1U) {
            const auto [a, b] = g.ends(p);
            ++deg[a];
            ++deg[b];
        }
    for (int d : deg)
        if (d == 1)
            return false;
    return true;
}

bool oracle_member(const Multigraph& g, std::uint64_t m, PosetKind k)
{
    const bool forest = oracle::is_forest(g, m);
    switch (k) {
    case PosetKind::Sub:
        return true;
    case PosetKind::For:
        return forest;
    case PosetKind::X:
        return !forest;
    case PosetKind::C:
        return all_degrees_two(g, m);
    case PosetKind::cX:
        return !forest && support_connected(g, m);
    case PosetKind::cC:
        return all_degrees_two(g, m) && support_connected(g, m);
    }
    return false;
}

const PosetKind kAll[] = {PosetKind::Sub, PosetKind::For, PosetKind::X, PosetKind::C, PosetKind::cX, PosetKind::cC};

std::vector<CanonicalGraph> low_rank()
{
    auto g = enumerate_spine_graphs(2);
    for (auto& c : enumerate_spine_graphs(3))
        g.push_back(c);
    return g;
}

bool separating(const Multigraph& g)
{
    for (const Edge& e : g.edges())
        if (is_separating_edge(g, e.id))
            return true;
    return false;
}

}  // namespace

TEST_CASE("poset membership agrees with independent predicates")
{
    for (const auto& cg : low_rank()) {
        const Multigraph& g = cg.graph;
        const std::uint64_t full = (std::uint64_t{1} << g.num_edges()) - 1;
        for (PosetKind k : kAll) {
            const GraphPoset gp = build_poset(g, k);
            std::vector<std::uint64_t> expected;
            for (std::uint64_t m = 1; m < full; ++m)
                if (oracle_member(g, m, k))
                    expected.push_back(m);
            REQUIRE(gp.masks.size() == expected.size());
            std::vector<std::uint64_t> got;
            for (EdgeMask m : gp.masks)
                got.push_back(m.bits());
            std::sort(got.begin(), got.end());
            CHECK(got == expected);
            for (std::size_t i = 0; i < gp.masks.size(); ++i) {
                CHECK(gp.index_of(gp.masks[i]) == i);
                for (std::size_t j = 0; j < gp.masks.size(); ++j)
                    CHECK(gp.poset.leq(i, j) == ((gp.masks[i].bits() & ~gp.masks[j].bits()) == 0));
            }
        }
    }
}

TEST_CASE("dumbbell poset sizes")
{
    const Multigraph d = graphs::dumbbell();
    CHECK(build_poset(d, PosetKind::Sub).poset.size() == 6);
    CHECK(build_poset(d, PosetKind::For).poset.size() == 1);
    CHECK(build_poset(d, PosetKind::X).poset.size() == 5);
    CHECK(build_poset(d, PosetKind::C).poset.size() == 3);
    CHECK(build_poset(d, PosetKind::cX).poset.size() == 4);
    CHECK(build_poset(d, PosetKind::cC).poset.size() == 2);
    CHECK(subgraph_label(d, EdgeMask(0b101)) == "{0,2}");
    CHECK(parse_kind("cX") == PosetKind::cX);
    CHECK_THROWS_AS(parse_kind("y"), Error);
    CHECK_THROWS_AS(build_poset(Multigraph({0, 1}, {{0, 0, 1}}), PosetKind::Sub), Error);
    CHECK(build_poset(graphs::cycle(1), PosetKind::Sub).poset.empty());
    CHECK_THROWS_AS(build_poset(Multigraph({0, 1}, {{0, 0, 0}}), PosetKind::Sub), Error);
}

TEST_CASE("homology of every poset agrees with the chain-count Euler characteristic")
{
    for (const auto& cg : low_rank())
        for (PosetKind k : kAll) {
            const GraphPoset gp = build_poset(cg.graph, k);
            const HomologyResult h = poset_homology(gp.poset);
            long long chi = 0;
            for (const DegreeHomology& d : h.degrees())
                chi += (d.degree % 2 ? -1 : 1) * static_cast<long long>(d.betti);
            CHECK(chi == oracle::reduced_euler(gp.poset));
        }
}

TEST_CASE("rank 2 cX values")
{
    const auto cx = [](const Multigraph& g) { return poset_homology(build_poset(g, PosetKind::cX).poset); };
    CHECK(cx(graphs::theta()).is_wedge_of_spheres(0));
    CHECK(cx(graphs::theta()).betti(0) == 2);
    CHECK(cx(graphs::rose(2)).betti(0) == 1);
    CHECK(cx(graphs::dumbbell()).betti(0) == 1);
    CHECK(cx(graphs::dumbbell()).is_wedge_of_spheres(0));
}

TEST_CASE("X sphericity on rank 2 and 3")
{
    for (const auto& cg : low_rank()) {
        const CheckReport r = verify_X_sphericity(cg.graph);
        CHECK_MESSAGE(r.status == Status::Pass, cg.key, " ", r.detail);
        const int n = rank(cg.graph);
        if (separating(cg.graph)) {
            CHECK(r.homology.trivial());
        } else {
            CHECK(r.homology.is_wedge_of_spheres(n - 2));
        }
        const CheckReport c = verify_cX_sphericity(cg.graph);
        CHECK_MESSAGE(c.status == Status::Pass, cg.key, " ", c.detail);
        CHECK(c.homology.torsion_free());
        CHECK((c.homology.trivial() || c.homology.concentrated_degree() == n - 2));
    }
    CHECK_THROWS_AS(verify_X_sphericity(graphs::cycle(3)), Error);
}

TEST_CASE("core retractions")
{
    for (const auto& cg : low_rank()) {
        const CheckReport r = verify_core_retractions(cg.graph);
        CHECK_MESSAGE(r.status == Status::Pass, cg.key, " ", r.detail);
        CHECK(poset_homology(build_poset(cg.graph, PosetKind::X).poset) ==
              poset_homology(build_poset(cg.graph, PosetKind::C).poset));
        CHECK(poset_homology(build_poset(cg.graph, PosetKind::cX).poset) ==
              poset_homology(build_poset(cg.graph, PosetKind::cC).poset));
    }
}

TEST_CASE("valence-two maps on subdivided graphs")
{
    int tested = 0;
    for (const auto& cg : low_rank())
        for (const Edge& e : cg.graph.edges()) {
            const Multigraph s = subdivide_edge(cg.graph, e.id);
            const VertexId w = s.vertices().back();
            REQUIRE(s.valence(w) == 2);
            const CheckReport r = verify_valence_two(s, w);
            CHECK_MESSAGE(r.status == Status::Pass, cg.key, " e", e.id, " ", r.detail);
            CHECK(r.homology == poset_homology(build_poset(cg.graph, PosetKind::cX).poset));
            ++tested;
        }
    CHECK(tested >= 5);
    CHECK_THROWS_AS(verify_valence_two(graphs::theta(), 0), Error);
}

TEST_CASE("forest generators span the top homology")
{
    const CheckReport t = forest_generator_count(graphs::theta());
    CHECK(t.status == Status::Pass);
    CHECK(t.homology.betti(0) == 2);
    for (const auto& cg : low_rank()) {
        if (separating(cg.graph)) {
            CHECK_THROWS_AS(forest_generator_count(cg.graph), Error);
            continue;
        }
        const CheckReport r = forest_generator_count(cg.graph);
        CHECK_MESSAGE(r.status == Status::Pass, cg.key, " ", r.detail);
    }
}

TEST_CASE("Sub is a sphere and duality holds")
{
    for (const auto& cg : low_rank()) {
        const CheckReport s = verify_sub_sphere(cg.graph);
        CHECK_MESSAGE(s.status == Status::Pass, cg.key, " ", s.detail);
        CHECK(s.homology.is_sphere(cg.graph.num_edges() - 2));
        const CheckReport d = verify_duality(cg.graph);
        CHECK_MESSAGE(d.status == Status::Pass, cg.key, " ", d.detail);
        const CheckReport f = verify_forest_poset(cg.graph);
        CHECK_MESSAGE(f.status == Status::Pass, cg.key, " ", f.detail);

        // For and X directly: H~_i(For) = H~^{E-3-i}(X)
        const int e = cg.graph.num_edges();
        const HomologyResult hf = poset_homology(build_poset(cg.graph, PosetKind::For).poset);
        const HomologyResult cx = cohomology_from_homology(poset_homology(build_poset(cg.graph, PosetKind::X).poset));
        for (int i = -1; i <= e - 2; ++i) {
            const int j = e - 3 - i;
            CHECK(hf.betti(i) == cx.betti(j));
            CHECK(hf.torsion(i) == cx.torsion(j));
        }
    }
}

TEST_CASE("status strings")
{
    CHECK(to_string(Status::Pass) == "pass");
    CHECK(to_string(Status::Fail) == "fail");
    CHECK(to_string(Status::HomologyOnly) == "homology-only");
}

TEST_CASE("core complexes give the same homology as full order complexes")
{
    for (const auto& cg : low_rank())
        for (PosetKind k : kAll) {
            const FinitePoset p = build_poset(cg.graph, k).poset;
            const SimplicialComplex full = order_complex(p);
            const SimplicialComplex core = core_order_complex(p);
            CHECK(core.num_vertices() <= full.num_vertices());
            CHECK(reduced_homology(core) == reduced_homology(full));
            if (full.num_vertices() && reduced_homology(full).zero_in(0)) {
                const Pi1Status a = pi1_triviality(core);
                const Pi1Status b = pi1_triviality(full);
                if (a != Pi1Status::Unknown && b != Pi1Status::Unknown)
                    CHECK(a == b);
            }
        }
}
