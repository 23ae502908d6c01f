#include "myxo/geometry/point_set.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "myxo/errors.hpp"

namespace myxo::geom {

double dist(const Point& a, const Point& b) noexcept { return std::sqrt(dist_sq(a, b)); }

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.size() < 2) {
        throw UsageError("point set needs at least 2 points, got " +
                         std::to_string(points_.size()));
    }
    std::map<std::pair<double, double>, std::size_t> seen;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const Point& p = points_[i];
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw UsageError("point id " + std::to_string(i) + " has non-finite coordinates");
        }
        auto [it, inserted] = seen.emplace(std::make_pair(p.x, p.y), i);
        if (!inserted) {
            throw UsageError("duplicate coordinates: point ids " +
                             std::to_string(it->second) + " and " + std::to_string(i));
        }
    }
}

namespace {

double parse_double(std::string_view field, std::size_t row) {
    double v = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
        throw RuntimeError("points csv row " + std::to_string(row) + ": bad number '" +
                           std::string(field) + "'");
    }
    return v;
}

} // namespace

PointSet load_points(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw RuntimeError("cannot open points file " + path.string());

    std::string line;
    if (!std::getline(f, line)) throw RuntimeError("points file " + path.string() + " is empty");
    // tolerate trailing CR from CRLF files
    auto strip = [](std::string& s) {
        while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
    };
    strip(line);
    if (line != "id,x,y") {
        throw RuntimeError("points file " + path.string() + ": expected header 'id,x,y', got '" +
                           line + "'");
    }

    std::vector<Point> points;
    std::size_t row = 1;
    while (std::getline(f, line)) {
        strip(line);
        if (line.empty()) {
            ++row;
            continue;
        }
        std::istringstream ls(line);
        std::string id_s, x_s, y_s, extra;
        if (!std::getline(ls, id_s, ',') || !std::getline(ls, x_s, ',') ||
            !std::getline(ls, y_s, ',')) {
            throw RuntimeError("points csv row " + std::to_string(row) +
                               ": expected 'id,x,y', got '" + line + "'");
        }
        if (std::getline(ls, extra, ',')) {
            throw RuntimeError("points csv row " + std::to_string(row) + ": too many fields");
        }
        const double id = parse_double(id_s, row);
        if (id != static_cast<double>(points.size())) {
            throw RuntimeError("points csv row " + std::to_string(row) + ": expected id " +
                               std::to_string(points.size()));
        }
        points.push_back({parse_double(x_s, row), parse_double(y_s, row)});
        ++row;
    }
    return PointSet(std::move(points));
}

void save_points(const std::filesystem::path& path, const PointSet& ps) {
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw RuntimeError("cannot open " + path.string() + " for writing");
    f << "id,x,y\n";
    char buf[64];
    for (std::size_t i = 0; i < ps.size(); ++i) {
        // %.17g round-trips doubles exactly
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", i, ps[i].x, ps[i].y);
        f << buf;
    }
    if (!f) throw RuntimeError("short write to " + path.string());
}

} // namespace myxo::geom
