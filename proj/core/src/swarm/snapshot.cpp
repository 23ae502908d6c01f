#include "myxo/swarm/snapshot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace myxo::swarm {

io::GrayImage render_agents(const SwarmWorld& world) {
    const auto& occ = world.occupancy();
    io::GrayImage img(static_cast<std::size_t>(occ.width), static_cast<std::size_t>(occ.height));
    const int limit = world.config().params.occupancy_limit;
    for (std::size_t i = 0; i < occ.cells.size(); ++i) {
        const int c = std::min<int>(occ.cells[i], limit);
        img.pixels[i] = static_cast<std::uint8_t>(255 - (255 * c) / limit);
    }
    return img;
}

io::GrayImage render_field(const SwarmWorld& world) {
    const auto& field = world.field();
    io::GrayImage img(static_cast<std::size_t>(field.width),
                      static_cast<std::size_t>(field.height));
    const double vmax = *std::max_element(field.cells.begin(), field.cells.end());
    if (vmax <= 0.0) return img; // uniform white
    const double denom = std::log1p(vmax);
    for (std::size_t i = 0; i < field.cells.size(); ++i) {
        const double u = std::log1p(std::max(0.0, field.cells[i])) / denom;
        img.pixels[i] = static_cast<std::uint8_t>(255.0 - std::floor(u * 255.0 + 0.5));
    }
    return img;
}

std::string metrics_header() { return "t,population,nodes_suppressed,field_mass\n"; }

std::string metrics_row(const SwarmWorld& world) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%llu,%zu,%d,%.17g\n",
                  static_cast<unsigned long long>(world.t()), world.population(),
                  world.suppressed_count(), world.field_mass());
    return buf;
}

} // namespace myxo::swarm
