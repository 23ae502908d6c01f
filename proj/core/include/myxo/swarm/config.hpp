#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "myxo/swarm/params.hpp"

namespace myxo::swarm {

struct NodeSpec {
    int x = 0;
    int y = 0;
    double projection = 10.0; // field units per step when unsuppressed
};

/// Full description of one run: lattice, stimulus nodes, inoculation and
/// every model parameter. Serialized as a `key = value` text file; node and
/// inoculation lines repeat.
struct SwarmConfig {
    int width = 200;
    int height = 200;
    std::vector<NodeSpec> nodes;
    std::size_t inoculation_node = 0;
    std::size_t population = 100;
    SwarmParams params;
    std::string network_source = "occupancy"; // or "trail"
    double network_threshold = 1.0;

    static SwarmConfig from_file(const std::filesystem::path& path);
    static SwarmConfig from_string(const std::string& text);

    /// Canonical text form; from_string(to_string()) round-trips exactly.
    std::string to_string() const;

    /// Throws UsageError on inconsistent values (nodes outside the lattice,
    /// empty node list, bad parameter ranges).
    void validate() const;
};

} // namespace myxo::swarm
