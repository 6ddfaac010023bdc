#pragma once

/**
 * Finite abstract simplicial complexes.
 *
 * Vertices carry 64-bit ids from a shared universe (poset element indices
 * for order complexes) so that complexes built over the same universe can be
 * intersected. Simplices are stored per dimension as flat, lexicographically
 * sorted rows of local vertex indices; a simplex's orientation is the
 * increasing order of its local indices.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "posetlab/error.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

using VertexLabel = std::int64_t;

class SimplicialComplex {
public:
    /// The void complex (no simplices except the empty one).
    SimplicialComplex() = default;

    /// Downward closure of the facets. Facets use local vertex indices into
    /// `vertex_ids`; every listed vertex becomes a 0-simplex.
    static SimplicialComplex from_facets(std::vector<VertexLabel> vertex_ids,
                                         const std::vector<std::vector<int>>& facets);

    /// `cells[d]` holds every d-simplex as a flat run of d+1 sorted local
    /// indices (any order, duplicates allowed). Closure is validated.
    static SimplicialComplex from_cells(std::vector<VertexLabel> vertex_ids, std::vector<std::vector<int>> cells);

    /// -1 for the void complex.
    int dimension() const { return static_cast<int>(cells_.size()) - 1; }
    std::size_t num_vertices() const { return vertex_ids_.size(); }
    /// Number of d-simplices; 1 for d = -1.
    std::size_t count(int d) const;
    std::size_t total_simplices() const;
    std::span<const int> simplex(int d, std::size_t k) const
    {
        return {cells_[d].data() + k * (d + 1), static_cast<std::size_t>(d + 1)};
    }
    const std::vector<int>& cells(int d) const { return cells_.at(d); }
    const std::vector<VertexLabel>& vertex_ids() const { return vertex_ids_; }

    /// Row index of a sorted simplex, if present.
    std::optional<std::size_t> find(std::span<const int> sorted_simplex) const;
    /// Local index of a vertex id, if present.
    std::optional<int> local_index(VertexLabel id) const;

    /// Maximal simplices, as sorted local index lists, in (dimension, lex) order.
    std::vector<std::vector<int>> facets() const;
    long long euler_characteristic() const;

    /// Full subcomplex on the given local vertices.
    SimplicialComplex full_subcomplex(const std::vector<int>& local_vertices) const;
    /// Common simplices, matched by vertex id.
    SimplicialComplex intersection(const SimplicialComplex& other) const;
    /// Same simplices after matching vertex ids.
    bool same_as(const SimplicialComplex& other) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<VertexLabel> vertex_ids_;
    std::vector<std::vector<int>> cells_;
};

/// Chains of the poset; vertex ids are element indices. Chain enumeration is
/// split over minimal chain elements with OpenMP; the output is identical to
/// order_complex_serial.
SimplicialComplex order_complex(const FinitePoset& p);
/// Single-threaded reference for order_complex.
SimplicialComplex order_complex_serial(const FinitePoset& p);

/// Face poset of k (labels are the vertex-id lists of each simplex).
FinitePoset face_poset(const SimplicialComplex& k);
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

/// Boundary of the standard n-simplex on vertices 0..n.
SimplicialComplex simplex_boundary(int n);
SimplicialComplex full_simplex(int n);
/// All faces of dimension <= k of the n-simplex.
SimplicialComplex simplex_skeleton(int n, int k);

}  // namespace posetlab
