#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "myxo/geometry/point_set.hpp"

namespace myxo::geom {

/// Delaunay triangulation of a point set. When every point is collinear there
/// are no triangles and the structure degrades to the sorted hull chain
/// (rendered as a path graph by edge extraction).
struct Triangulation {
    /// Vertex ids per triangle, counterclockwise.
    std::vector<std::array<std::uint32_t, 3>> triangles;
    /// Convex hull vertex ids, counterclockwise (the sorted chain when
    /// collinear == true).
    std::vector<std::uint32_t> hull;
    bool collinear = false;

    /// Unique undirected edges (a < b), sorted lexicographically.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;
};

/// Incremental construction in canonical (x, y)-lexicographic insertion order
/// with exact predicates. Points exactly cocircular are resolved by the
/// insertion order of the canonical sort, never by floating-point noise, so
/// the output depends only on the point set, not on input order.
Triangulation triangulate(const PointSet& ps);

} // namespace myxo::geom
