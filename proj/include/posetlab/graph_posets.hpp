#pragma once

/**
 * The six subgraph posets of a graph (Sub, For, X, C, cX, cC) and the
 * verifiers that check their homotopy-theoretic statements at the level of
 * exact integer homology.
 */

#include <optional>
#include <string>
#include <vector>

#include "posetlab/homology.hpp"
#include "posetlab/multigraph.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

enum class PosetKind { Sub, For, X, C, cX, cC };

std::string to_string(PosetKind k);
/// Accepts sub, for, x, c, cx, cc (case-insensitive).
PosetKind parse_kind(const std::string& s);

/// Membership predicate for a proper nonempty edge subset.
bool qualifies(const Multigraph& g, EdgeMask m, PosetKind kind);

struct GraphPoset {
    FinitePoset poset;
    /// Element i is the edge subset masks[i]; sorted by size, then mask value.
    std::vector<EdgeMask> masks;

    std::optional<std::size_t> index_of(EdgeMask m) const;
};

/// Label of an edge subset, e.g. "{0,2}" (edge ids).
std::string subgraph_label(const Multigraph& g, EdgeMask m);

/// Errors on disconnected or rank-0 input.
GraphPoset build_poset(const Multigraph& g, PosetKind kind);

enum class Status { Pass, Fail, HomologyOnly };
std::string to_string(Status s);

struct CheckReport {
    std::string check;
    Status status = Status::Fail;
    /// Homology of the main complex of the check.
    HomologyResult homology;
    std::optional<Pi1Status> pi1;
    std::string detail;

    bool ok() const { return status != Status::Fail; }
};

/// Contractible iff a separating edge exists, else a wedge of (n-2)-spheres.
CheckReport verify_X_sphericity(const Multigraph& g);
/// Wedge of (n-2)-spheres, plus the cX -> cC core retraction.
CheckReport verify_cX_sphericity(const Multigraph& g);
/// Core maps X -> C and cX -> cC as closure retractions with equal homology.
CheckReport verify_core_retractions(const Multigraph& g);
/// phi/psi between cX(G) and cX(G^v) and equal homology.
CheckReport verify_valence_two(const Multigraph& g, VertexId v);
/// Cycles from the maximal forests span the top homology of X(G).
CheckReport forest_generator_count(const Multigraph& g);
/// Delta(Sub(G)) has the homology of S^{|E|-2}.
CheckReport verify_sub_sphere(const Multigraph& g);
/// H~_i(For) = H~^{|E|-3-i}(X) inside Sub, and X = Sub \ For.
CheckReport verify_duality(const Multigraph& g);
/// For(G): trivial with a separating edge, else free in degree |V|-2.
CheckReport verify_forest_poset(const Multigraph& g);

/// Order complex homology of a graph poset.
HomologyResult poset_homology(const FinitePoset& p);

}  // namespace posetlab
