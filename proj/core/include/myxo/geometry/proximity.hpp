#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "myxo/geometry/point_set.hpp"

namespace myxo::geom {

enum class GraphFamily : std::uint8_t {
    Delaunay,
    Gabriel,
    Rng,
    Mst,
    ErdosRenyi,
    WattsStrogatz,
    SwarmNetwork, // produced by the agent model's network extraction
};

std::string_view to_string(GraphFamily f);

struct GraphEdge {
    std::uint32_t a = 0; // always a < b
    std::uint32_t b = 0;
    double weight = 1.0;

    bool operator==(const GraphEdge&) const = default;
};

/// Undirected weighted graph. Edges are stored sorted lexicographically by
/// (a, b) with a < b, no self-loops, no duplicates.
struct ProximityGraph {
    std::uint32_t n = 0;
    GraphFamily family = GraphFamily::Delaunay;
    std::vector<GraphEdge> edges;

    bool has_edge(std::uint32_t a, std::uint32_t b) const;
    double total_weight() const;
    std::vector<std::vector<std::uint32_t>> adjacency() const;
    /// True when every edge of this graph is an edge of `other`.
    bool subgraph_of(const ProximityGraph& other) const;

    /// Normalizes edge order and validates the invariants above.
    void finalize();
};

/// Gabriel graph: edge (a,b) iff no third point lies strictly inside the open
/// disc with diameter ab. Points exactly on the circle do not block.
ProximityGraph gabriel(const PointSet& ps);

/// Relative neighbourhood graph: edge (a,b) iff no point c satisfies
/// max(dist(a,c), dist(b,c)) < dist(a,b) (open lune; exact ties keep the edge).
ProximityGraph relative_neighborhood(const PointSet& ps);

/// Delaunay triangulation edges (path graph when all points are collinear).
ProximityGraph delaunay(const PointSet& ps);

/// Euclidean minimum spanning tree. Equal-weight choices are resolved by
/// lexicographic (a, b) edge order, so the output is deterministic.
ProximityGraph mst(const PointSet& ps);

struct ContainmentViolation {
    std::string relation; // e.g. "MST within RNG"
    std::vector<GraphEdge> offending;
};

struct HierarchyResult {
    ProximityGraph mst_graph;
    ProximityGraph rng_graph;
    ProximityGraph gabriel_graph;
    ProximityGraph delaunay_graph;
    std::vector<ContainmentViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Computes all four graphs and checks MST within RNG within Gabriel within
/// Delaunay. A violation is reported, never silently repaired.
HierarchyResult hierarchy(const PointSet& ps);

} // namespace myxo::geom
