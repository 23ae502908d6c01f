#include "myxo/swarm/world.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "myxo/errors.hpp"

namespace myxo::swarm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double normalize_heading(double h) {
    h = std::fmod(h, kTwoPi);
    if (h < 0.0) h += kTwoPi;
    return h;
}

double sample_clamped(const Field& field, double x, double y) {
    const int cx = std::clamp(static_cast<int>(std::floor(x)), 0, field.width - 1);
    const int cy = std::clamp(static_cast<int>(std::floor(y)), 0, field.height - 1);
    return field.at(cx, cy);
}

// In-bounds cell ids within Euclidean distance radius of (cx, cy).
std::vector<std::uint32_t> disc_cells(int cx, int cy, double radius, int width, int height) {
    std::vector<std::uint32_t> out;
    const int r = static_cast<int>(std::floor(radius));
    const double r2 = radius * radius;
    for (int dy = -r; dy <= r; ++dy) {
        for (int dx = -r; dx <= r; ++dx) {
            if (static_cast<double>(dx) * dx + static_cast<double>(dy) * dy > r2) continue;
            const int x = cx + dx, y = cy + dy;
            if (x < 0 || x >= width || y < 0 || y >= height) continue;
            out.push_back(static_cast<std::uint32_t>(y) * width + x);
        }
    }
    return out;
}

} // namespace

void diffuse_and_decay(Field& field, const SwarmParams& params) {
    const int k = params.diffusion_kernel_size;
    const int r = k / 2;
    const int w = field.width, h = field.height;
    const double scale = params.decay_factor / (static_cast<double>(k) * k);

    // Separable box sums with zero padding outside the lattice.
    static thread_local std::vector<double> tmp;
    tmp.assign(field.cells.size(), 0.0);
    for (int y = 0; y < h; ++y) {
        const double* row = field.cells.data() + static_cast<std::size_t>(y) * w;
        double* out = tmp.data() + static_cast<std::size_t>(y) * w;
        for (int x = 0; x < w; ++x) {
            double sum = 0.0;
            const int lo = std::max(0, x - r), hi = std::min(w - 1, x + r);
            for (int i = lo; i <= hi; ++i) sum += row[i];
            out[x] = sum;
        }
    }
    for (int x = 0; x < w; ++x) {
        for (int y = 0; y < h; ++y) {
            double sum = 0.0;
            const int lo = std::max(0, y - r), hi = std::min(h - 1, y + r);
            for (int j = lo; j <= hi; ++j) sum += tmp[static_cast<std::size_t>(j) * w + x];
            field.cells[static_cast<std::size_t>(y) * w + x] = sum * scale;
        }
    }
}

double sense_and_orient(const Agent& agent, const Field& field, const SwarmParams& params,
                        SplitMix64& rng) {
    const double h = agent.heading;
    const double off = params.sensor_offset;
    const double sa = params.sensor_angle;

    const double front = sample_clamped(field, agent.x + off * std::cos(h),
                                        agent.y + off * std::sin(h));
    const double left = sample_clamped(field, agent.x + off * std::cos(h - sa),
                                       agent.y + off * std::sin(h - sa));
    const double right = sample_clamped(field, agent.x + off * std::cos(h + sa),
                                        agent.y + off * std::sin(h + sa));

    const double best = std::max({front, left, right});
    // 0 = keep heading, 1 = rotate left (negative), 2 = rotate right.
    int choice;
    const bool tf = front == best, tl = left == best, tr = right == best;
    const int tied = tf + tl + tr;
    if (tied == 1) {
        choice = tf ? 0 : tl ? 1 : 2;
    } else {
        auto pick = rng.next_below(static_cast<std::uint64_t>(tied));
        choice = 0;
        for (int c : {0, 1, 2}) {
            const bool is_tied = c == 0 ? tf : c == 1 ? tl : tr;
            if (!is_tied) continue;
            if (pick == 0) {
                choice = c;
                break;
            }
            --pick;
        }
    }
    if (choice == 0) return h;
    return normalize_heading(choice == 1 ? h - params.rotation_angle
                                         : h + params.rotation_angle);
}

SwarmWorld::SwarmWorld(const SwarmConfig& config, std::uint64_t seed)
    : config_(config),
      params_(config.params),
      field_(config.width, config.height, 0.0),
      occupancy_(config.width, config.height, 0),
      rng_(SplitMix64::derive(seed, 0)) {
    config_.validate();

    nodes_.reserve(config_.nodes.size());
    for (const auto& nd : config_.nodes) {
        nodes_.push_back({nd.x, nd.y, nd.projection, false});
        node_discs_.push_back(
            disc_cells(nd.x, nd.y, params_.engulf_radius, config_.width, config_.height));
    }

    // Inoculation: every (cell, occupancy slot) of the inoculation disc is a
    // candidate; a random draw without replacement places the population.
    const auto& disc = node_discs_[config_.inoculation_node];
    std::vector<std::uint32_t> slots;
    slots.reserve(disc.size() * static_cast<std::size_t>(params_.occupancy_limit));
    for (int rep = 0; rep < params_.occupancy_limit; ++rep) {
        slots.insert(slots.end(), disc.begin(), disc.end());
    }
    if (config_.population > slots.size()) {
        throw UsageError("swarm: population " + std::to_string(config_.population) +
                         " exceeds inoculation capacity " + std::to_string(slots.size()));
    }
    for (std::size_t i = slots.size(); i > 1; --i) {
        std::swap(slots[i - 1], slots[rng_.next_below(i)]);
    }
    agents_.reserve(config_.population);
    for (std::size_t i = 0; i < config_.population; ++i) {
        const std::uint32_t cell = slots[i];
        const int cx = static_cast<int>(cell % config_.width);
        const int cy = static_cast<int>(cell / config_.width);
        Agent a;
        a.x = cx + 0.5;
        a.y = cy + 0.5;
        a.heading = rng_.next_double() * kTwoPi;
        agents_.push_back(a);
        ++occupancy_.at(cx, cy);
    }
}

int SwarmWorld::count_occupied_disc(const std::vector<std::uint32_t>& disc) const {
    int occ = 0;
    for (std::uint32_t cell : disc) occ += occupancy_.cells[cell] > 0;
    return occ;
}

void SwarmWorld::project_and_suppress() {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        auto& nd = nodes_[i];
        const auto& disc = node_discs_[i];
        // Engulfed = occupied cells form a strict majority of the disc;
        // exactly half is not suppressed.
        const bool engulfed = 2 * count_occupied_disc(disc) > static_cast<int>(disc.size());
        if (params_.suppression_permanent) {
            nd.suppressed = nd.suppressed || engulfed;
        } else {
            nd.suppressed = engulfed;
        }
        const double effective =
            nd.suppressed ? nd.projection * params_.suppression_factor : nd.projection;
        field_.at(nd.x, nd.y) += effective;
    }
}

void SwarmWorld::move_and_deposit(std::size_t agent_index) {
    Agent& a = agents_[agent_index];
    const double nx = a.x + params_.step_size * std::cos(a.heading);
    const double ny = a.y + params_.step_size * std::sin(a.heading);

    const int cur_cx = static_cast<int>(std::floor(a.x));
    const int cur_cy = static_cast<int>(std::floor(a.y));

    bool blocked = !(nx >= 0.0 && nx < field_.width && ny >= 0.0 && ny < field_.height);
    int dst_cx = 0, dst_cy = 0;
    if (!blocked) {
        dst_cx = static_cast<int>(std::floor(nx));
        dst_cy = static_cast<int>(std::floor(ny));
        const bool same_cell = dst_cx == cur_cx && dst_cy == cur_cy;
        if (!same_cell && occupancy_.at(dst_cx, dst_cy) >=
                              static_cast<std::uint16_t>(params_.occupancy_limit)) {
            blocked = true;
        }
    }

    if (blocked) {
        a.heading = rng_.next_double() * kTwoPi;
        return;
    }
    if (dst_cx != cur_cx || dst_cy != cur_cy) {
        --occupancy_.at(cur_cx, cur_cy);
        ++occupancy_.at(dst_cx, dst_cy);
    }
    a.x = nx;
    a.y = ny;
    field_.at(dst_cx, dst_cy) += params_.deposit_amount;
}

void SwarmWorld::reproduce_and_die() {
    const auto& gp = params_.growth;
    const std::size_t original = agents_.size();
    std::vector<bool> dead(original, false);
    bool any_dead = false;

    for (std::size_t i = 0; i < original; ++i) {
        if (rng_.next_double() >= gp.test_probability) continue;
        const Agent& a = agents_[i];
        const int cx = static_cast<int>(std::floor(a.x));
        const int cy = static_cast<int>(std::floor(a.y));

        int occupied = 0;
        for (int dy = -gp.window_radius; dy <= gp.window_radius; ++dy) {
            for (int dx = -gp.window_radius; dx <= gp.window_radius; ++dx) {
                if (dx == 0 && dy == 0) continue;
                const int x = cx + dx, y = cy + dy;
                if (occupancy_.in_bounds(x, y) && occupancy_.at(x, y) > 0) ++occupied;
            }
        }

        if (occupied >= gp.death_min && occupied <= gp.death_max) {
            dead[i] = true;
            any_dead = true;
            --occupancy_.at(cx, cy);
            continue;
        }
        if (occupied >= gp.growth_min && occupied <= gp.growth_max) {
            // Spawn into a uniformly chosen free Moore-neighbour cell.
            std::array<std::pair<int, int>, 8> free{};
            std::size_t free_count = 0;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    const int x = cx + dx, y = cy + dy;
                    if (occupancy_.in_bounds(x, y) &&
                        occupancy_.at(x, y) <
                            static_cast<std::uint16_t>(params_.occupancy_limit)) {
                        free[free_count++] = {x, y};
                    }
                }
            }
            if (free_count == 0) continue;
            const auto [x, y] = free[rng_.next_below(free_count)];
            Agent child;
            child.x = x + 0.5;
            child.y = y + 0.5;
            child.heading = rng_.next_double() * kTwoPi;
            agents_.push_back(child);
            ++occupancy_.at(x, y);
        }
    }

    if (any_dead) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < agents_.size(); ++i) {
            if (i < original && dead[i]) continue;
            if (w != i) agents_[w] = agents_[i];
            ++w;
        }
        agents_.resize(w);
    }
}

void SwarmWorld::step() {
    project_and_suppress();

    shuffle_buf_.resize(agents_.size());
    for (std::uint32_t i = 0; i < shuffle_buf_.size(); ++i) shuffle_buf_[i] = i;
    for (std::size_t i = shuffle_buf_.size(); i > 1; --i) {
        std::swap(shuffle_buf_[i - 1], shuffle_buf_[rng_.next_below(i)]);
    }
    for (std::uint32_t idx : shuffle_buf_) {
        agents_[idx].heading = sense_and_orient(agents_[idx], field_, params_, rng_);
        move_and_deposit(idx);
    }

    diffuse_and_decay(field_, params_);
    reproduce_and_die();
    ++t_;
}

double SwarmWorld::field_mass() const {
    double sum = 0.0;
    for (double v : field_.cells) sum += v;
    return sum;
}

int SwarmWorld::suppressed_count() const {
    int c = 0;
    for (const auto& nd : nodes_) c += nd.suppressed;
    return c;
}

} // namespace myxo::swarm
