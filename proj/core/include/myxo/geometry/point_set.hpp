#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace myxo::geom {

struct Point {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Point&) const = default;
};

inline double dist_sq(const Point& a, const Point& b) noexcept {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

double dist(const Point& a, const Point& b) noexcept;

/// Planar nuclei coordinates. Point ids are the vector indices. Duplicate
/// coordinates and non-finite values are rejected at construction.
class PointSet {
public:
    PointSet() = default;
    /// Validates: >= 2 points, all finite, no exact duplicates. Throws
    /// UsageError naming the offending ids.
    explicit PointSet(std::vector<Point> points);

    std::size_t size() const noexcept { return points_.size(); }
    const Point& operator[](std::size_t i) const noexcept { return points_[i]; }
    const std::vector<Point>& points() const noexcept { return points_; }

private:
    std::vector<Point> points_;
};

/// Reads a CSV file with header `id,x,y`. Preserves input order; ids in the
/// file must be 0..n-1 in order. Throws RuntimeError naming the offending row
/// on malformed input, UsageError on invariant violations.
PointSet load_points(const std::filesystem::path& path);

/// Writes the CSV format load_points reads. Round-trips exactly.
void save_points(const std::filesystem::path& path, const PointSet& ps);

} // namespace myxo::geom
