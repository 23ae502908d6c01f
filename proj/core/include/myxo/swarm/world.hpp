#pragma once

#include <cstdint>
#include <vector>

#include "myxo/rng.hpp"
#include "myxo/swarm/config.hpp"
#include "myxo/swarm/params.hpp"

namespace myxo::swarm {

/// Row-major lattice; (x, y) with y as the row, rendered top-down.
template <typename T>
struct Grid {
    int width = 0;
    int height = 0;
    std::vector<T> cells;

    Grid() = default;
    Grid(int w, int h, T fill = T{}) : width(w), height(h), cells(static_cast<std::size_t>(w) * h, fill) {}

    bool in_bounds(int x, int y) const noexcept {
        return x >= 0 && x < width && y >= 0 && y < height;
    }
    T& at(int x, int y) { return cells[static_cast<std::size_t>(y) * width + x]; }
    const T& at(int x, int y) const { return cells[static_cast<std::size_t>(y) * width + x]; }
};

using Field = Grid<double>;

struct Agent {
    double x = 0.0;
    double y = 0.0;
    double heading = 0.0; // radians, kept in [0, 2*pi)
};

struct StimulusNode {
    int x = 0;
    int y = 0;
    double projection = 0.0;
    bool suppressed = false;
};

/// Mean box filter over the in-bounds neighbourhood divided by kernel_size^2,
/// then multiplied by decay_factor. Out-of-bounds contributions are dropped,
/// so borders only remove mass: total mass after one pass is at most
/// decay_factor times the mass before it.
void diffuse_and_decay(Field& field, const SwarmParams& params);

/// Three samples at sensor_offset ahead of the agent, at headings
/// (h - sensor_angle, h, h + sensor_angle), clamped to the lattice. A strictly
/// maximal front sample keeps the heading; a strictly maximal side sample
/// rotates by rotation_angle toward it; exact ties are broken by a uniform
/// choice among the tied options.
double sense_and_orient(const Agent& agent, const Field& field, const SwarmParams& params,
                        SplitMix64& rng);

/// One virtual plasmodium on its lattice. All randomness flows from the
/// constructor seed; identical (config, seed) evolve bit-identically.
class SwarmWorld {
public:
    SwarmWorld(const SwarmConfig& config, std::uint64_t seed);

    /// One full cycle in fixed order: project_and_suppress, per-agent
    /// sense/move in randomized order, diffuse_and_decay, reproduce_and_die.
    void step();

    // Individual phases, exposed for direct testing.
    void project_and_suppress();
    void move_and_deposit(std::size_t agent_index);
    void reproduce_and_die();

    std::uint64_t t() const noexcept { return t_; }
    std::size_t population() const noexcept { return agents_.size(); }
    const std::vector<Agent>& agents() const noexcept { return agents_; }
    /// Mutable agent access; positions are owned by the occupancy grid, so
    /// callers may change headings freely but not cells.
    Agent& agent(std::size_t i) noexcept { return agents_[i]; }
    const std::vector<StimulusNode>& nodes() const noexcept { return nodes_; }
    const Field& field() const noexcept { return field_; }
    const Grid<std::uint16_t>& occupancy() const noexcept { return occupancy_; }
    const SwarmConfig& config() const noexcept { return config_; }

    double field_mass() const;
    int suppressed_count() const;
    SplitMix64& rng() noexcept { return rng_; }

private:
    int count_occupied_disc(const std::vector<std::uint32_t>& disc) const;

    SwarmConfig config_;
    SwarmParams params_;
    Field field_;
    Grid<std::uint16_t> occupancy_;
    std::vector<Agent> agents_;
    std::vector<StimulusNode> nodes_;
    std::vector<std::vector<std::uint32_t>> node_discs_; // in-bounds cell ids per node
    std::vector<std::uint32_t> shuffle_buf_;
    SplitMix64 rng_;
    std::uint64_t t_ = 0;
};

} // namespace myxo::swarm
