#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "posetlab/complex.hpp"
#include "posetlab/homology.hpp"
#include "posetlab/poset.hpp"

using namespace posetlab;

namespace {

FinitePoset random_poset(std::mt19937& rng, std::size_t n)
{
    // Random DAG on index order, closed transitively by from_covers.
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng() % 3 == 0)
                rel.emplace_back(i, j);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back("p" + std::to_string(i));
    return FinitePoset::from_covers(labels, rel);
}

// Chains by plain recursion over index order (an independent count).
void count_chains(const FinitePoset& p, std::vector<std::size_t>& chain, std::vector<std::size_t>& counts)
{
    if (!chain.empty()) {
        if (counts.size() < chain.size())
            counts.resize(chain.size());
        ++counts[chain.size() - 1];
    }
    for (std::size_t j = 0; j < p.size(); ++j) {
        bool ok = chain.empty() || p.less(chain.back(), j);
        if (ok) {
            chain.push_back(j);
            count_chains(p, chain, counts);
            chain.pop_back();
        }
    }
}

}  // namespace

TEST_CASE("validation rejects non-orders")
{
    CHECK_THROWS_AS(FinitePoset::from_relation({"a", "b"}, [](std::size_t, std::size_t) { return true; }), Error);
    CHECK_THROWS_AS(FinitePoset::from_relation({"a", "b", "c"},
                                               [](std::size_t i, std::size_t j) {
                                                   return i == j || (i == 0 && j == 1) || (i == 1 && j == 2);
                                               }),
                    Error);
    CHECK_THROWS_AS(FinitePoset::from_covers({"a", "b"}, {{0, 1}, {1, 0}}), Error);
}

TEST_CASE("basic constructions")
{
    const FinitePoset c = chain_poset(2);
    CHECK(c.size() == 3);
    CHECK(c.leq(0, 2));
    const FinitePoset op = opposite(c);
    CHECK(op.leq(2, 0));
    CHECK(op.covers().size() == 2);

    const FinitePoset b = boolean_lattice(3);
    CHECK(b.size() == 8);
    const std::size_t top = b.maximal_elements().at(0);
    CHECK(down_set(b, top).size() == 8);
    CHECK(up_set(b, top).size() == 1);
    CHECK(proper_boolean_lattice(3).size() == 6);

    const FinitePoset pq = product(chain_poset(1), chain_poset(1));
    CHECK(pq.size() == 4);
    CHECK(order_complex(pq).euler_characteristic() == 1);

    CHECK(cone_point(b).has_value());
    CHECK_FALSE(cone_point(antichain_poset(3)).has_value());
    CHECK_THROWS_AS(b.index_of("nope"), Error);
}

TEST_CASE("linear extension respects the order")
{
    std::mt19937 rng(11);
    for (int t = 0; t < 30; ++t) {
        const FinitePoset p = random_poset(rng, 1 + rng() % 12);
        const auto ext = p.linear_extension();
        std::vector<std::size_t> where(p.size());
        for (std::size_t i = 0; i < ext.size(); ++i)
            where[ext[i]] = i;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < p.size(); ++j)
                if (p.less(i, j))
                    CHECK(where[i] < where[j]);
    }
}

TEST_CASE("order complex matches chain recursion and opposite")
{
    std::mt19937 rng(5);
    for (int t = 0; t < 40; ++t) {
        const FinitePoset p = random_poset(rng, 1 + rng() % 9);
        const SimplicialComplex k = order_complex(p);
        CHECK(k == order_complex_serial(p));
        std::vector<std::size_t> chain, counts;
        count_chains(p, chain, counts);
        REQUIRE(static_cast<int>(counts.size()) == k.dimension() + 1);
        for (std::size_t d = 0; d < counts.size(); ++d)
            CHECK(k.count(static_cast<int>(d)) == counts[d]);
        CHECK(k.same_as(order_complex(opposite(p))));
    }
}

TEST_CASE("product euler characteristic matches chain enumeration")
{
    std::mt19937 rng(3);
    for (int t = 0; t < 20; ++t) {
        const FinitePoset p = random_poset(rng, 1 + rng() % 3);
        const FinitePoset q = random_poset(rng, 1 + rng() % 3);
        const FinitePoset pq = product(p, q);
        CHECK(pq.size() == p.size() * q.size());
        std::vector<std::size_t> chain, counts;
        count_chains(pq, chain, counts);
        long long chi = 0;
        for (std::size_t d = 0; d < counts.size(); ++d)
            chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[d]);
        CHECK(order_complex(pq).euler_characteristic() == chi);
    }
}

TEST_CASE("poset maps and fibers")
{
    const FinitePoset b = boolean_lattice(2);
    CHECK_THROWS_AS(PosetMap(b, b, {3, 0, 0, 0}), Error);
    const PosetMap id = PosetMap::identity(b);
    for (std::size_t x = 0; x < b.size(); ++x)
        CHECK(fiber_down(id, x) == down_set(b, x));
    const PosetMap constant(b, b, std::vector<std::size_t>(b.size(), 1));
    std::vector<std::size_t> elems;
    CHECK(fiber_down(constant, 1, &elems).size() == b.size());
    CHECK(elems.size() == b.size());

    const Monotonicity m = is_monotone(id);
    CHECK(m.decreasing);
    CHECK(m.increasing);
    const FinitePoset a = antichain_poset(2);
    CHECK(is_monotone(PosetMap(a, a, {1, 0})).neither());
}

TEST_CASE("closure retraction certificates")
{
    const FinitePoset b = boolean_lattice(2);
    const ClosureRetraction r = closure_retraction(b, PosetMap::identity(b));
    CHECK(r.image == b);

    // Collapse everything to the bottom: decreasing and idempotent.
    const std::size_t bottom = b.minimal_elements().at(0);
    const ClosureRetraction r2 = closure_retraction(b, PosetMap(b, b, std::vector<std::size_t>(4, bottom)));
    CHECK(r2.image.size() == 1);
    CHECK(r2.direction.decreasing);

    const FinitePoset c = chain_poset(2);
    try {
        closure_retraction(c, PosetMap(c, c, {1, 2, 2}));
        FAIL("expected non-idempotent map to be rejected");
    } catch (const RetractionError& e) {
        CHECK(e.kind() == RetractionFailure::NotIdempotent);
    }
    const FinitePoset a = antichain_poset(2);
    try {
        closure_retraction(a, PosetMap(a, a, {1, 0}));
        FAIL("expected the swap to be rejected");
    } catch (const RetractionError& e) {
        CHECK(e.kind() != RetractionFailure::NotEndomorphic);
    }
}

TEST_CASE("beat point core keeps the homotopy type")
{
    std::mt19937 rng(23);
    for (int t = 0; t < 120; ++t) {
        const FinitePoset p = random_poset(rng, 2 + rng() % 10);
        const auto kept = beat_point_core(p);
        REQUIRE_FALSE(kept.empty());
        CHECK(std::is_sorted(kept.begin(), kept.end()));
        const FinitePoset c = p.induced(kept);
        CHECK(reduced_homology(order_complex(c)) == reduced_homology(order_complex(p)));
        // nothing left to remove
        CHECK(beat_point_core(c).size() == c.size());
    }
    CHECK(beat_point_core(chain_poset(5)).size() == 1);
    CHECK(beat_point_core(proper_boolean_lattice(4)).size() == 14);
    CHECK(beat_point_core(antichain_poset(3)).size() == 3);
}
