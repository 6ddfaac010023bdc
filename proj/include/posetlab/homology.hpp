#pragma once

/**
 * Reduced integral (co)homology of simplicial complexes, Alexander duality
 * checks, nerves and a best-effort fundamental group triviality test.
 *
 * Conventions: chains include the empty simplex in degree -1, so the void
 * complex has H~_{-1} = Z and every nonempty connected complex has H~_0 = 0.
 */

#include <optional>
#include <string>
#include <vector>

#include "posetlab/complex.hpp"
#include "posetlab/poset.hpp"
#include "posetlab/smith.hpp"

namespace posetlab {

struct DegreeHomology {
    int degree = 0;
    std::size_t betti = 0;
    /// Invariant factors > 1, ascending.
    std::vector<BigInt> torsion;

    bool zero() const { return betti == 0 && torsion.empty(); }
    friend bool operator==(const DegreeHomology&, const DegreeHomology&) = default;
};

class HomologyResult {
public:
    HomologyResult() = default;
    /// Degrees must be consecutive starting at -1.
    explicit HomologyResult(std::vector<DegreeHomology> degrees);

    const std::vector<DegreeHomology>& degrees() const { return degrees_; }
    std::size_t betti(int d) const;
    std::vector<BigInt> torsion(int d) const;
    bool zero_in(int d) const { return betti(d) == 0 && torsion(d).empty(); }
    /// All reduced groups vanish.
    bool trivial() const;
    bool torsion_free() const;
    /// The unique degree with a nonzero group, if exactly one exists.
    std::optional<int> concentrated_degree() const;
    /// Free, concentrated in degree `d`, rank >= 1.
    bool is_wedge_of_spheres(int d) const;
    /// Homology of S^d: Z in degree d only.
    bool is_sphere(int d) const;
    /// Betti numbers for degrees -1 .. top.
    std::vector<std::size_t> betti_numbers() const;
    int top_degree() const { return static_cast<int>(degrees_.size()) - 2; }

    /// Trailing zero degrees are not significant for equality.
    friend bool operator==(const HomologyResult& a, const HomologyResult& b);
    std::string summary() const;

private:
    std::vector<DegreeHomology> degrees_;
};

/// Reduced boundary map C_d -> C_{d-1}; for d = 0 this is the augmentation.
SparseIntMatrix boundary_matrix(const SimplicialComplex& k, int d);
/// Single-threaded reference for boundary_matrix.
SparseIntMatrix boundary_matrix_serial(const SimplicialComplex& k, int d);

HomologyResult reduced_homology(const SimplicialComplex& k);

/// Order complex of the beat-point core of p: the homotopy type of Delta(p),
/// usually with far fewer simplices. Vertex ids are positions in the core.
SimplicialComplex core_order_complex(const FinitePoset& p);
/// Universal coefficients: H~^d free rank = b~_d, torsion = torsion of H~_{d-1}.
HomologyResult cohomology_from_homology(const HomologyResult& h);
HomologyResult reduced_cohomology(const SimplicialComplex& k);

struct DualityReport {
    int sphere_dim = 0;
    bool hypothesis_ok = false;     // Delta(p) has the homology of S^sphere_dim
    bool duality_ok = false;        // every degree matches, torsion included
    HomologyResult ambient;         // H~(Delta(p))
    HomologyResult subposet;        // H~(Delta(q))
    HomologyResult complement;      // H~^*(Delta(p \ q))
    std::vector<int> failing_degrees;
};

/// Checks H~_i(Delta(q)) = H~^{n-i-1}(Delta(p \ q)) for i = -1 .. n, with
/// q given by element indices of p.
DualityReport alexander_duality_check(const FinitePoset& p, const std::vector<std::size_t>& q, int sphere_dim);

struct NerveReport {
    SimplicialComplex nerve;
    /// One entry per nerve simplex (cover indices): is the intersection acyclic?
    std::vector<std::pair<std::vector<int>, bool>> intersections;
    bool all_acyclic = true;
};

/// Nerve of a cover by subcomplexes over one vertex universe. Vertex ids of
/// the nerve are cover indices.
NerveReport nerve(const std::vector<SimplicialComplex>& cover);

enum class Pi1Status { Trivial, Nontrivial, Unknown };
std::string to_string(Pi1Status s);

struct Pi1Options {
    int max_passes = 1000;
    std::size_t max_word_letters = 2'000'000;
};

/// Edge-path presentation on a spanning tree of the 1-skeleton, one relator
/// per triangle, simplified by Tietze moves. Never answers Trivial when
/// H~_1 != 0. Error on disconnected input.
Pi1Status pi1_triviality(const SimplicialComplex& k, const Pi1Options& opts = {});
Pi1Status pi1_triviality(const SimplicialComplex& k, const HomologyResult& h, const Pi1Options& opts = {});

}  // namespace posetlab
