#pragma once

/**
 * Finite multigraphs with loops and parallel edges, edge-induced subgraphs
 * and the graph surgery used by the subgraph posets: deletion, collapse,
 * cores, valence-2 smoothing and spanning forests.
 */

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "posetlab/error.hpp"

namespace posetlab {

using VertexId = int;
using EdgeId = int;

struct Edge {
    EdgeId id;
    VertexId u;
    VertexId v;

    bool is_loop() const { return u == v; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Set of edge *positions* of a host graph (bit i = i-th edge in id order).
class EdgeMask {
public:
    constexpr EdgeMask() = default;
    constexpr explicit EdgeMask(std::uint64_t bits) : bits_(bits) {}

    static constexpr EdgeMask single(int pos) { return EdgeMask(std::uint64_t{1} << pos); }
    static constexpr EdgeMask full(int count)
    {
        return EdgeMask(count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool contains(int pos) const { return (bits_ >> pos) & 1U; }
    constexpr bool subset_of(EdgeMask other) const { return (bits_ & ~other.bits_) == 0; }

    constexpr EdgeMask with(int pos) const { return EdgeMask(bits_ | (std::uint64_t{1} << pos)); }
    constexpr EdgeMask without(int pos) const { return EdgeMask(bits_ & ~(std::uint64_t{1} << pos)); }

    constexpr EdgeMask operator|(EdgeMask o) const { return EdgeMask(bits_ | o.bits_); }
    constexpr EdgeMask operator&(EdgeMask o) const { return EdgeMask(bits_ & o.bits_); }
    constexpr EdgeMask minus(EdgeMask o) const { return EdgeMask(bits_ & ~o.bits_); }

    /// Positions in increasing order.
    std::vector<int> positions() const;

    friend constexpr bool operator==(EdgeMask, EdgeMask) = default;
    friend constexpr auto operator<=>(EdgeMask, EdgeMask) = default;

private:
    std::uint64_t bits_ = 0;
};

class Multigraph {
public:
    Multigraph() = default;

    /// Throws Error on duplicate ids or undeclared endpoints.
    Multigraph(std::vector<VertexId> vertices, std::vector<Edge> edges);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    bool has_vertex(VertexId v) const;
    bool has_edge(EdgeId e) const;
    /// Position of the edge in id order. Throws Error on unknown id.
    int edge_position(EdgeId e) const;
    int vertex_position(VertexId v) const;
    /// Endpoint positions of the edge at position `pos`.
    std::pair<int, int> ends(int pos) const { return ends_[pos]; }

    /// Loops count twice.
    int valence(VertexId v) const;
    int min_valence() const;
    int num_components() const;
    bool connected() const { return num_components() <= 1; }

    EdgeMask full_mask() const { return EdgeMask::full(num_edges()); }
    EdgeMask mask_of(const std::vector<EdgeId>& ids) const;
    std::vector<EdgeId> ids_of(EdgeMask mask) const;

    VertexId next_vertex_id() const;
    EdgeId next_edge_id() const;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    std::vector<VertexId> vertices_;         // sorted
    std::vector<Edge> edges_;                // sorted by id
    std::vector<std::pair<int, int>> ends_;  // endpoint positions per edge
};

/// Edge-induced subgraph of a host graph. The host must outlive it.
class Subgraph {
public:
    Subgraph(const Multigraph& host, EdgeMask mask);
    Subgraph(const Multigraph& host, const std::vector<EdgeId>& ids)
        : Subgraph(host, host.mask_of(ids)) {}

    const Multigraph& host() const { return *host_; }
    EdgeMask mask() const { return mask_; }
    std::vector<EdgeId> edge_ids() const { return host_->ids_of(mask_); }
    /// Endpoints of the edges; never contains isolated vertices.
    std::vector<VertexId> vertex_ids() const;
    bool empty() const { return mask_.empty(); }

    friend bool operator==(const Subgraph& a, const Subgraph& b)
    {
        return a.host_ == b.host_ && a.mask_ == b.mask_;
    }

private:
    const Multigraph* host_;
    EdgeMask mask_;
};

/// Component structure of the edge-induced subgraph on `mask`.
struct MaskShape {
    int vertices = 0;
    int components = 0;
    int rank = 0;
    /// Number of components with nontrivial rank.
    int cyclic_components = 0;
};

MaskShape analyze(const Multigraph& g, EdgeMask mask);
bool is_forest(const Multigraph& g, EdgeMask mask);
/// Connected and nonempty.
bool is_connected(const Multigraph& g, EdgeMask mask);
/// Maximal core contained in `mask` (iterated removal of valence-1 edges).
EdgeMask core_mask(const Multigraph& g, EdgeMask mask);
/// Vertex positions touched by the edges of `mask`.
std::uint64_t vertex_support(const Multigraph& g, EdgeMask mask);

/// First Betti number |E| - |V| + #components.
int rank(const Multigraph& g);
bool is_separating_edge(const Multigraph& g, EdgeId e);

/// G - e; isolated vertices left behind are pruned.
Multigraph delete_edge(const Multigraph& g, EdgeId e);
/// G / e; the endpoints merge into a fresh vertex. Rejects loops.
Multigraph collapse_edge(const Multigraph& g, EdgeId e);

struct Quotient {
    Multigraph graph;
    /// Old vertex id -> vertex id in the quotient.
    std::map<VertexId, VertexId> vertex_map;
};

/// Collapse every tree of the forest to one vertex, which takes the smallest
/// vertex id of that tree. Edge ids outside the forest are kept.
Quotient collapse_forest_quotient(const Multigraph& g, EdgeMask forest);
Multigraph collapse_forest(const Multigraph& g, const Subgraph& forest);

Subgraph core(const Subgraph& h);

/// Replace the path e1 v e2 through the valence-2 vertex v by one new edge.
Multigraph smooth_valence_two(const Multigraph& g, VertexId v);

struct Smoothing {
    Multigraph graph;
    EdgeId first;   // e1 (smaller id)
    EdgeId second;  // e2
    EdgeId merged;  // e_v
};
Smoothing smooth_valence_two_detailed(const Multigraph& g, VertexId v);

/// Insert a fresh vertex w into edge e: e keeps its id and runs u-w, a new
/// edge w-v is added. w and the new edge take the next free ids.
Multigraph subdivide_edge(const Multigraph& g, EdgeId e);

/// Spanning trees of a connected graph, in increasing mask order.
std::vector<Subgraph> maximal_forests(const Multigraph& g);
std::vector<EdgeMask> maximal_forest_masks(const Multigraph& g);
/// Every forest (including the empty one), increasing mask order.
std::vector<EdgeMask> forest_masks(const Multigraph& g);

/// Vertex-relabelled form that depends only on the edge-id incidence
/// structure: two graphs with equal forms agree up to renaming vertices.
std::string edge_labelled_form(const Multigraph& g);

namespace graphs {
Multigraph rose(int petals);
/// Two vertices joined by `k` parallel edges (k = 3: theta).
Multigraph theta(int k = 3);
/// Two loops joined by a bar edge (edge ids: loop 0, bar 1, loop 2).
Multigraph dumbbell();
/// Cycle on `n` vertices.
Multigraph cycle(int n);
}  // namespace graphs

}  // namespace posetlab
