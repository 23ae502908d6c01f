#pragma once

#include <string>

#include "myxo/io/pgm.hpp"
#include "myxo/swarm/world.hpp"

namespace myxo::swarm {

/// Agent positions: occupied cells darken with occupancy, empty cells white.
io::GrayImage render_agents(const SwarmWorld& world);

/// Chemoattractant field, log-scaled per frame: zero maps to white and pixel
/// values decrease monotonically with field values.
io::GrayImage render_field(const SwarmWorld& world);

/// CSV header and one row per snapshot: t,population,nodes_suppressed,field_mass.
std::string metrics_header();
std::string metrics_row(const SwarmWorld& world);

} // namespace myxo::swarm
