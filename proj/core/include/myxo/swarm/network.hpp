#pragma once

#include <cstdint>
#include <vector>

#include "myxo/geometry/proximity.hpp"
#include "myxo/swarm/world.hpp"

namespace myxo::swarm {

struct NetworkReport {
    /// Connected components of the binarized blob (8-connectivity).
    std::uint32_t component_count = 0;
    /// Component id per stimulus node, -1 when no blob cell lies within
    /// engulf_radius of the node.
    std::vector<std::int32_t> node_component;
    /// Node adjacency induced by the blob: the blob's cells are partitioned
    /// into geodesic regions by nearest stimulus node (hop distance through
    /// the blob), and two nodes are adjacent when their regions touch.
    /// Edge weights are Euclidean distances between node positions.
    geom::ProximityGraph graph;

    bool all_nodes_in_one_component() const;
};

/// Binarizes occupancy (or the trail field, per config.network_source) at
/// `threshold` and derives blob connectivity over the stimulus nodes.
/// Throws UsageError when threshold <= 0.
NetworkReport extract_network(const SwarmWorld& world, double threshold);

/// Cell-level entry point over an explicit binarized blob.
NetworkReport extract_network_cells(const std::vector<std::uint8_t>& blob, int width,
                                    int height, const std::vector<StimulusNode>& nodes,
                                    double engulf_radius);

} // namespace myxo::swarm
