#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "posetlab/complex.hpp"
#include "posetlab/homology.hpp"

using namespace posetlab;

namespace {

SimplicialComplex rp2()
{
    return SimplicialComplex::from_facets({0, 1, 2, 3, 4, 5}, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                                                {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

SimplicialComplex random_complex(std::mt19937& rng)
{
    const int n = 3 + static_cast<int>(rng() % 5);
    std::vector<VertexLabel> ids;
    for (int i = 0; i < n; ++i)
        ids.push_back(i);
    std::vector<std::vector<int>> facets;
    const int f = 1 + static_cast<int>(rng() % 7);
    for (int i = 0; i < f; ++i) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (rng() % 2)
                s.push_back(v);
        if (!s.empty())
            facets.push_back(s);
    }
    return SimplicialComplex::from_facets(ids, facets);
}

}  // namespace

TEST_CASE("reduced conventions")
{
    const HomologyResult empty = reduced_homology(SimplicialComplex());
    CHECK(empty.betti(-1) == 1);
    CHECK(empty.is_sphere(-1));
    const HomologyResult point = reduced_homology(full_simplex(0));
    CHECK(point.trivial());
    CHECK(reduced_homology(full_simplex(3)).trivial());
}

TEST_CASE("spheres and points")
{
    CHECK(reduced_homology(simplex_boundary(2)).is_sphere(1));
    CHECK(reduced_homology(simplex_boundary(4)).is_sphere(3));
    const HomologyResult three = reduced_homology(order_complex(antichain_poset(3)));
    CHECK(three.betti(0) == 2);
    CHECK(three.is_wedge_of_spheres(0));
    CHECK(reduced_homology(order_complex(proper_boolean_lattice(3))).is_sphere(1));
    CHECK(reduced_homology(order_complex(proper_boolean_lattice(5))).is_sphere(3));
}

TEST_CASE("torsion and universal coefficients")
{
    const HomologyResult h = reduced_homology(rp2());
    CHECK(h.betti(1) == 0);
    CHECK(h.torsion(1) == std::vector<BigInt>{2});
    CHECK(h.betti(2) == 0);
    CHECK_FALSE(h.torsion_free());
    const HomologyResult c = reduced_cohomology(rp2());
    CHECK(c.torsion(2) == std::vector<BigInt>{2});
    CHECK(c.zero_in(1));
    CHECK(reduced_cohomology(simplex_boundary(2)).betti(1) == 1);
    CHECK(reduced_cohomology(order_complex(antichain_poset(3))).betti(0) == 2);
    CHECK(h.summary() == "H~1=Z/2");
}

TEST_CASE("boundary matrices: parallel equals serial and squares to zero")
{
    std::mt19937 rng(17);
    for (int t = 0; t < 30; ++t) {
        const SimplicialComplex k = random_complex(rng);
        for (int d = 0; d <= k.dimension(); ++d) {
            const SparseIntMatrix a = boundary_matrix(k, d);
            const SparseIntMatrix b = boundary_matrix_serial(k, d);
            CHECK(to_dense(a) == to_dense(b));
            if (d >= 1) {
                const auto lo = to_dense(boundary_matrix(k, d - 1));
                const auto hi = to_dense(a);
                for (std::size_t i = 0; i < lo.size(); ++i)
                    for (std::size_t j = 0; j < hi[0].size(); ++j) {
                        BigInt s = 0;
                        for (std::size_t m = 0; m < hi.size(); ++m)
                            s += lo[i][m] * hi[m][j];
                        CHECK(s == 0);
                    }
            }
        }
    }
}

TEST_CASE("euler identity and rational rank cross-check")
{
    std::mt19937 rng(23);
    for (int t = 0; t < 40; ++t) {
        const SimplicialComplex k = random_complex(rng);
        const HomologyResult h = reduced_homology(k);
        long long lhs = 0, rhs = 0;
        for (int d = -1; d <= k.dimension(); ++d) {
            const long long sign = (d % 2 == 0) ? 1 : -1;
            lhs += sign * static_cast<long long>(k.count(d));
            rhs += sign * static_cast<long long>(h.betti(d));
        }
        CHECK(lhs == rhs);
        for (int d = 1; d <= k.dimension(); ++d) {
            const std::size_t r = rank_mod_p(boundary_matrix(k, d));
            const std::size_t below = d + 1 <= k.dimension() ? rank_mod_p(boundary_matrix(k, d + 1)) : 0;
            CHECK(h.betti(d) == k.count(d) - r - below);
        }
    }
}

TEST_CASE("subdivision and cones")
{
    std::mt19937 rng(29);
    for (int t = 0; t < 15; ++t) {
        const SimplicialComplex k = random_complex(rng);
        CHECK(reduced_homology(barycentric_subdivision(k)) == reduced_homology(k));
    }
    const SimplicialComplex edge = full_simplex(1);
    const SimplicialComplex sd = barycentric_subdivision(edge);
    CHECK(sd.count(0) == 3);
    CHECK(sd.count(1) == 2);
    const SimplicialComplex hex = barycentric_subdivision(simplex_boundary(2));
    CHECK(hex.count(0) == 6);
    CHECK(hex.count(1) == 6);
    CHECK(reduced_homology(barycentric_subdivision(rp2())) == reduced_homology(rp2()));
}

TEST_CASE("alexander duality on small spheres")
{
    const FinitePoset p = proper_boolean_lattice(3);
    std::vector<std::size_t> singletons;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.label(i).find(',') == std::string::npos)
            singletons.push_back(i);
    const DualityReport r = alexander_duality_check(p, singletons, 1);
    CHECK(r.hypothesis_ok);
    CHECK(r.duality_ok);
    CHECK(r.subposet.betti(0) == 2);

    std::vector<std::size_t> all_but_one;
    for (std::size_t i = 1; i < p.size(); ++i)
        all_but_one.push_back(i);
    const DualityReport punctured = alexander_duality_check(p, all_but_one, 1);
    CHECK(punctured.duality_ok);
    CHECK(punctured.subposet.trivial());

    const DualityReport wrong = alexander_duality_check(antichain_poset(3), {0}, 0);
    CHECK_FALSE(wrong.hypothesis_ok);
    CHECK_FALSE(wrong.duality_ok);
}

TEST_CASE("nerves")
{
    const std::vector<VertexLabel> ids{0, 1, 2};
    const std::vector<SimplicialComplex> two_edges{SimplicialComplex::from_facets({0, 1}, {{0, 1}}),
                                                   SimplicialComplex::from_facets({1, 2}, {{0, 1}})};
    const NerveReport a = nerve(two_edges);
    CHECK(a.nerve.count(1) == 1);
    CHECK(reduced_homology(a.nerve).trivial());
    CHECK(a.all_acyclic);

    // Hexagon covered by three arcs of two edges each.
    std::vector<SimplicialComplex> arcs;
    for (int i = 0; i < 3; ++i)
        arcs.push_back(SimplicialComplex::from_facets({2 * i, 2 * i + 1, (2 * i + 2) % 6}, {{0, 1}, {1, 2}}));
    const NerveReport c = nerve(arcs);
    CHECK(c.nerve.count(2) == 0);
    CHECK(reduced_homology(c.nerve).is_sphere(1));
    CHECK(c.all_acyclic);
    CHECK(c.intersections.size() == 6);
}

TEST_CASE("fundamental group checker")
{
    CHECK(pi1_triviality(simplex_boundary(2)) == Pi1Status::Nontrivial);
    CHECK(pi1_triviality(full_simplex(3)) == Pi1Status::Trivial);
    CHECK(pi1_triviality(simplex_skeleton(4, 2)) == Pi1Status::Trivial);
    CHECK(pi1_triviality(simplex_boundary(3)) == Pi1Status::Trivial);
    CHECK(pi1_triviality(barycentric_subdivision(simplex_boundary(3))) == Pi1Status::Trivial);
    CHECK(pi1_triviality(rp2()) == Pi1Status::Nontrivial);
    CHECK(pi1_triviality(full_simplex(0)) == Pi1Status::Trivial);
    CHECK_THROWS_AS(pi1_triviality(order_complex(antichain_poset(2))), Error);
    CHECK_THROWS_AS(pi1_triviality(SimplicialComplex()), Error);
}
