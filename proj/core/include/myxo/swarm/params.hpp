#pragma once

#include <numbers>

namespace myxo::swarm {

/// Stochastic growth/death test applied to every agent each step. An agent
/// whose occupied-cell count within the Chebyshev window (own cell excluded)
/// falls in the death range is removed; one whose count falls in the growth
/// range spawns a new agent into a free neighbouring cell. Both happen only
/// when the per-step Bernoulli test at test_probability fires.
struct GrowthParams {
    int window_radius = 4;
    int growth_min = 1;
    int growth_max = 10;
    int death_min = 0;
    int death_max = 0;
    double test_probability = 0.1;
};

/// Model parameters. The source publications give no numbers for these; the
/// defaults are calibration choices that produce visible network formation at
/// desk scale, and every one is overridable through the run configuration.
struct SwarmParams {
    double sensor_offset = 9.0;                      // lattice units ahead
    double sensor_angle = std::numbers::pi / 4.0;    // radians off the heading
    double rotation_angle = std::numbers::pi / 4.0;  // radians per turn
    double step_size = 1.0;                          // lattice units per step
    double deposit_amount = 5.0;                     // field units per move
    int diffusion_kernel_size = 3;                   // odd box width
    double decay_factor = 0.9;                       // field multiplier per step
    int occupancy_limit = 1;                         // agents per cell
    GrowthParams growth;
    double engulf_radius = 5.0;                      // node disc radius, lattice units
    double suppression_factor = 0.0;                 // projection multiplier when engulfed
    bool suppression_permanent = false;              // default: re-evaluated every step

    /// Throws UsageError on out-of-range values.
    void validate() const;
};

} // namespace myxo::swarm
