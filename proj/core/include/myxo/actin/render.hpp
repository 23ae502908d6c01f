#pragma once

#include <string>

#include "myxo/actin/automaton.hpp"
#include "myxo/io/pgm.hpp"

namespace myxo::actin {

/// Standard palette: Excited 0 (black), Refractory 128 (grey), Resting 255
/// (white). The two-tone variant renders Refractory as white, matching the
/// black-and-white rendering convention used for C1 diagrams.
io::GrayImage diagram_to_image(const SpaceTimeDiagram& diagram, bool two_tone = false);

/// CSV: header `step,excited_x,excited_y`, one row per recorded step.
std::string activity_to_csv(const ActivitySeries& x, const ActivitySeries& y);

} // namespace myxo::actin
