#pragma once

#include <cstdint>
#include <vector>

#include "myxo/geometry/proximity.hpp"

namespace myxo::geom {

struct GraphMetrics {
    /// Mean local clustering coefficient (Watts–Strogatz). Nodes of degree
    /// < 2 contribute 0 to the mean.
    double clustering_coefficient = 0.0;
    /// Mean shortest-path length in hops over reachable ordered pairs of
    /// distinct nodes; 0 when no such pair exists.
    double average_path_length = 0.0;
    /// False when some pair of nodes is unreachable (then
    /// average_path_length covers the reachable pairs only).
    bool connected = false;
    /// degree_histogram[d] = number of nodes with degree d.
    std::vector<std::uint64_t> degree_histogram;
};

GraphMetrics metrics(const ProximityGraph& g);

} // namespace myxo::geom
