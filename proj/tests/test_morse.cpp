#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include <random>

#include "oracles.hpp"
#include "posetlab/enumerate.hpp"
#include "posetlab/morse.hpp"

using namespace posetlab;

namespace {

MorseFunction with_values(const FinitePoset& p, std::vector<long long> v)
{
    MorseFunction mf{p, {}};
    for (long long x : v)
        mf.value.emplace_back(x);
    return mf;
}

FinitePoset random_poset(std::mt19937& rng, std::size_t n)
{
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("p" + std::to_string(i));
        for (std::size_t j = 0; j < i; ++j)
            if (rng() % 3 == 0)
                covers.emplace_back(j, i);
    }
    return FinitePoset::from_relation(labels, [&](std::size_t a, std::size_t b) {
        if (a == b)
            return true;
        // reachability along the generating pairs
        std::vector<char> seen(n, 0);
        std::vector<std::size_t> stack{a};
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            for (auto [u, w] : covers)
                if (u == x && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        return static_cast<bool>(seen[b]);
    });
}

}  // namespace

TEST_CASE("dumbbell core poset is a cone")
{
    const GraphPoset c = build_poset(graphs::dumbbell(), PosetKind::C);
    const auto mf = morse_search(c.poset, 3);
    REQUIRE(mf);
    const MorseReport r = morse_verify(*mf);
    CHECK(r.certifies_contractible());
    CHECK(r.vacuous);
    CHECK(c.poset.label(*r.star_center) == "{0,2}");
}

TEST_CASE("hand-built two-level function on C(dumbbell)")
{
    const GraphPoset c = build_poset(graphs::dumbbell(), PosetKind::C);
    const std::size_t top = *c.index_of(EdgeMask(0b101));
    std::vector<long long> v(c.poset.size(), 1);
    v[top] = 0;
    const MorseReport r = morse_verify(with_values(c.poset, v));
    // {top} alone is not the star of top
    CHECK_FALSE(r.star_center);
    CHECK(r.sublevel0 == std::vector<std::size_t>{top});
    CHECK(r.levels_are_antichains);
    REQUIRE(r.links.size() == 2);
    for (const LinkReport& l : r.links) {
        CHECK(l.verdict == LinkVerdict::Contractible);
        CHECK(l.cone == top);
        CHECK(descending_link(with_values(c.poset, v), l.element).vertex_ids() == std::vector<VertexLabel>{
                                                                                    static_cast<VertexLabel>(top)});
    }
    CHECK(r.all_contractible);
    CHECK_FALSE(r.certifies_contractible());

    // reversed: loops at 0, top at 1; sublevel is not a star
    std::vector<long long> w(c.poset.size(), 0);
    w[top] = 1;
    const MorseReport bad = morse_verify(with_values(c.poset, w));
    CHECK_FALSE(bad.star_center);
    REQUIRE(bad.links.size() == 1);
    CHECK(bad.links[0].verdict == LinkVerdict::Obstructed);
    CHECK(bad.links[0].homology.betti(0) == 1);
    CHECK_FALSE(bad.certifies_contractible());
}

TEST_CASE("empty links and non-antichain levels are reported")
{
    const FinitePoset chain = FinitePoset::from_covers({"a", "b", "c"}, {{0, 1}, {1, 2}});
    const MorseReport r = morse_verify(with_values(chain, {0, 1, 1}));
    CHECK_FALSE(r.levels_are_antichains);
    const FinitePoset anti = FinitePoset::from_covers({"a", "b"}, {});
    const MorseReport e = morse_verify(with_values(anti, {0, 1}));
    REQUIRE(e.links.size() == 1);
    CHECK(e.links[0].verdict == LinkVerdict::Empty);
    CHECK_FALSE(e.certifies_contractible());
    CHECK_THROWS_AS(morse_verify(with_values(anti, {0})), Error);
    CHECK_THROWS_AS(morse_search(anti, 4), Error);
}

TEST_CASE("rank 3 certificates exist exactly for separating-edge graphs")
{
    for (const auto& cg : enumerate_spine_graphs(3)) {
        bool sep = false;
        for (const Edge& e : cg.graph.edges())
            sep = sep || is_separating_edge(cg.graph, e.id);
        const CheckReport r = verify_morse(cg.graph);
        CHECK_MESSAGE(r.status == Status::Pass, cg.key, " ", r.detail);
        const GraphPoset c = build_poset(cg.graph, PosetKind::C);
        const auto mf = morse_search(c.poset, 3);
        CHECK(mf.has_value() == sep);
        if (mf) {
            CHECK(morse_verify(*mf).certifies_contractible());
            CHECK(oracle::reduced_euler(c.poset) == 0);
        }
    }
    const GraphPoset theta = build_poset(graphs::theta(), PosetKind::C);
    CHECK_FALSE(morse_search(theta.poset, 3));
    CHECK_FALSE(poset_homology(theta.poset).trivial());
}

TEST_CASE("found certificates imply acyclic order complexes")
{
    std::mt19937 rng(5);
    int found = 0;
    for (int t = 0; t < 150; ++t) {
        const FinitePoset p = random_poset(rng, 3 + rng() % 7);
        const auto mf = morse_search(p, 3);
        if (!mf)
            continue;
        ++found;
        CHECK(morse_verify(*mf).certifies_contractible());
        CHECK(reduced_homology(order_complex(p)).trivial());
    }
    CHECK(found > 10);
}

TEST_CASE("search result does not depend on thread count")
{
    const int saved = omp_get_max_threads();
    for (const auto& cg : enumerate_spine_graphs(3)) {
        const GraphPoset c = build_poset(cg.graph, PosetKind::C);
        omp_set_num_threads(1);
        const auto a = morse_search(c.poset, 3);
        omp_set_num_threads(4);
        const auto b = morse_search(c.poset, 3);
        REQUIRE(a.has_value() == b.has_value());
        if (a)
            CHECK(a->value == b->value);
    }
    omp_set_num_threads(saved);
}
