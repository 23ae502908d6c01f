#include "myxo/swarm/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "myxo/errors.hpp"

namespace myxo::swarm {

void SwarmParams::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw UsageError(std::string("swarm params: ") + name + " must be positive");
        }
    };
    positive(sensor_offset, "sensor_offset");
    positive(sensor_angle, "sensor_angle");
    positive(rotation_angle, "rotation_angle");
    positive(step_size, "step_size");
    positive(deposit_amount, "deposit_amount");
    positive(engulf_radius, "engulf_radius");
    if (diffusion_kernel_size < 1 || diffusion_kernel_size % 2 == 0) {
        throw UsageError("swarm params: diffusion_kernel_size must be odd and >= 1");
    }
    if (!(decay_factor > 0.0) || !(decay_factor < 1.0)) {
        throw UsageError("swarm params: decay_factor must lie in (0,1)");
    }
    if (occupancy_limit < 1) throw UsageError("swarm params: occupancy_limit must be >= 1");
    if (suppression_factor < 0.0 || suppression_factor >= 1.0) {
        throw UsageError("swarm params: suppression_factor must lie in [0,1)");
    }
    if (growth.window_radius < 1) throw UsageError("swarm params: window_radius must be >= 1");
    if (growth.test_probability < 0.0 || growth.test_probability > 1.0) {
        throw UsageError("swarm params: test_probability must lie in [0,1]");
    }
    if (growth.growth_min > growth.growth_max || growth.death_min > growth.death_max) {
        throw UsageError("swarm params: growth/death ranges must be ordered");
    }
}

void SwarmConfig::validate() const {
    params.validate();
    if (width < 1 || height < 1) throw UsageError("swarm config: lattice must be non-empty");
    if (nodes.empty()) throw UsageError("swarm config: at least one node required");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto& nd = nodes[i];
        if (nd.x < 0 || nd.x >= width || nd.y < 0 || nd.y >= height) {
            throw UsageError("swarm config: node " + std::to_string(i) + " outside lattice");
        }
        if (nd.projection < 0.0 || !std::isfinite(nd.projection)) {
            throw UsageError("swarm config: node " + std::to_string(i) + " projection invalid");
        }
    }
    if (inoculation_node >= nodes.size()) {
        throw UsageError("swarm config: inoculation node index out of range");
    }
    if (network_source != "occupancy" && network_source != "trail") {
        throw UsageError("swarm config: network_source must be occupancy or trail");
    }
    if (!(network_threshold > 0.0)) {
        throw UsageError("swarm config: network_threshold must be positive");
    }
}

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

double parse_num(const std::string& v, const std::string& key) {
    try {
        std::size_t used = 0;
        const double d = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw UsageError("swarm config: bad number '" + v + "' for key '" + key + "'");
    }
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

SwarmConfig SwarmConfig::from_string(const std::string& text) {
    SwarmConfig cfg;
    cfg.nodes.clear();
    bool saw_inoculate = false;

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        // trim
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError("swarm config line " + std::to_string(lineno) +
                             ": expected 'key = value'");
        }
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t");
            const auto b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        auto& p = cfg.params;
        if (key == "width") cfg.width = static_cast<int>(parse_num(value, key));
        else if (key == "height") cfg.height = static_cast<int>(parse_num(value, key));
        else if (key == "sensor_offset") p.sensor_offset = parse_num(value, key);
        else if (key == "sensor_angle_deg") p.sensor_angle = parse_num(value, key) / kDegPerRad;
        else if (key == "rotation_angle_deg") p.rotation_angle = parse_num(value, key) / kDegPerRad;
        else if (key == "sensor_angle_rad") p.sensor_angle = parse_num(value, key);
        else if (key == "rotation_angle_rad") p.rotation_angle = parse_num(value, key);
        else if (key == "step_size") p.step_size = parse_num(value, key);
        else if (key == "deposit_amount") p.deposit_amount = parse_num(value, key);
        else if (key == "diffusion_kernel") p.diffusion_kernel_size = static_cast<int>(parse_num(value, key));
        else if (key == "decay_factor") p.decay_factor = parse_num(value, key);
        else if (key == "occupancy_limit") p.occupancy_limit = static_cast<int>(parse_num(value, key));
        else if (key == "window_radius") p.growth.window_radius = static_cast<int>(parse_num(value, key));
        else if (key == "growth_min") p.growth.growth_min = static_cast<int>(parse_num(value, key));
        else if (key == "growth_max") p.growth.growth_max = static_cast<int>(parse_num(value, key));
        else if (key == "death_min") p.growth.death_min = static_cast<int>(parse_num(value, key));
        else if (key == "death_max") p.growth.death_max = static_cast<int>(parse_num(value, key));
        else if (key == "test_probability") p.growth.test_probability = parse_num(value, key);
        else if (key == "engulf_radius") p.engulf_radius = parse_num(value, key);
        else if (key == "suppression_factor") p.suppression_factor = parse_num(value, key);
        else if (key == "suppression_permanent") p.suppression_permanent = value == "true" || value == "1";
        else if (key == "network_source") cfg.network_source = value;
        else if (key == "network_threshold") cfg.network_threshold = parse_num(value, key);
        else if (key == "node") {
            std::istringstream vs(value);
            NodeSpec nd;
            if (!(vs >> nd.x >> nd.y >> nd.projection)) {
                throw UsageError("swarm config line " + std::to_string(lineno) +
                                 ": node needs 'x y projection'");
            }
            cfg.nodes.push_back(nd);
        } else if (key == "inoculate") {
            std::istringstream vs(value);
            if (!(vs >> cfg.inoculation_node >> cfg.population)) {
                throw UsageError("swarm config line " + std::to_string(lineno) +
                                 ": inoculate needs 'node_index population'");
            }
            saw_inoculate = true;
        } else {
            throw UsageError("swarm config line " + std::to_string(lineno) +
                             ": unknown key '" + key + "'");
        }
    }
    if (!saw_inoculate) throw UsageError("swarm config: missing 'inoculate = node population'");
    cfg.validate();
    return cfg;
}

SwarmConfig SwarmConfig::from_file(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw RuntimeError("cannot open swarm config " + path.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return from_string(ss.str());
}

std::string SwarmConfig::to_string() const {
    std::ostringstream out;
    const auto& p = params;
    out << "width = " << width << "\n";
    out << "height = " << height << "\n";
    out << "sensor_offset = " << fmt(p.sensor_offset) << "\n";
    out << "sensor_angle_rad = " << fmt(p.sensor_angle) << "\n";
    out << "rotation_angle_rad = " << fmt(p.rotation_angle) << "\n";
    out << "step_size = " << fmt(p.step_size) << "\n";
    out << "deposit_amount = " << fmt(p.deposit_amount) << "\n";
    out << "diffusion_kernel = " << p.diffusion_kernel_size << "\n";
    out << "decay_factor = " << fmt(p.decay_factor) << "\n";
    out << "occupancy_limit = " << p.occupancy_limit << "\n";
    out << "window_radius = " << p.growth.window_radius << "\n";
    out << "growth_min = " << p.growth.growth_min << "\n";
    out << "growth_max = " << p.growth.growth_max << "\n";
    out << "death_min = " << p.growth.death_min << "\n";
    out << "death_max = " << p.growth.death_max << "\n";
    out << "test_probability = " << fmt(p.growth.test_probability) << "\n";
    out << "engulf_radius = " << fmt(p.engulf_radius) << "\n";
    out << "suppression_factor = " << fmt(p.suppression_factor) << "\n";
    out << "suppression_permanent = " << (p.suppression_permanent ? "true" : "false") << "\n";
    out << "network_source = " << network_source << "\n";
    out << "network_threshold = " << fmt(network_threshold) << "\n";
    for (const auto& nd : nodes) {
        out << "node = " << nd.x << " " << nd.y << " " << fmt(nd.projection) << "\n";
    }
    out << "inoculate = " << inoculation_node << " " << population << "\n";
    return out.str();
}

} // namespace myxo::swarm
