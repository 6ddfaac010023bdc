#pragma once

/**
 * Canonical keys and enumeration of spine graphs (connected, min valence 3),
 * plus the local posets around a single graph: forest down-sets, the fibres
 * of pairs (forest, core subgraph of the collapse), and apartments.
 */

#include <string>
#include <vector>

#include "posetlab/graph_posets.hpp"
#include "posetlab/multigraph.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

/// "n:m00,m01,...,m0(n-1),m11,...": vertex count, then the upper triangle
/// (diagonal = loops) of the multiplicity matrix, minimised over vertex
/// orders compatible with a degree/loop/neighbour refinement.
std::string canonical_key(const Multigraph& g);

/// Vertices 0..n-1, edge ids 0.. in upper-triangle order.
Multigraph graph_from_key(const std::string& key);

struct CanonicalGraph {
    std::string key;
    Multigraph graph;
};

/// Connected multigraphs of the given rank with every valence >= 3, one per
/// isomorphism class, sorted by key. Ranks 2..4.
std::vector<CanonicalGraph> enumerate_spine_graphs(int rank);

/// Forests of g (the empty one included) under reverse inclusion.
FinitePoset spine_down_set(const Multigraph& g);
std::vector<EdgeMask> spine_down_set_masks(const Multigraph& g);

struct FiberElement {
    EdgeMask forest;
    /// Lift of the core subgraph of g / forest, as edge positions of g.
    EdgeMask core_part;

    friend bool operator==(const FiberElement&, const FiberElement&) = default;
};

struct ZFiber {
    FinitePoset poset;
    std::vector<FiberElement> elements;
};

/// Pairs (F, H) with F a forest and H a proper (connected, if asked) core
/// subgraph of g / F; (F1, H1) <= (F2, H2) iff F1 contains F2 and
/// F1 + H1 contains F2 + H2.
ZFiber z_fiber(const Multigraph& g, bool connected_only);

/// Homology against C(G) (or cC(G)), the empty-forest slice against the
/// opposite poset, and the retraction onto that slice.
CheckReport verify_fiber(const Multigraph& g, bool connected_only);

/// Proper nonempty subsets of a rank-element basis. Ranks 2..8.
FinitePoset apartment(int rank);
CheckReport verify_apartment(int rank);

}  // namespace posetlab
