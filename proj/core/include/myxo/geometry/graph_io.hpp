#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "myxo/geometry/point_set.hpp"
#include "myxo/geometry/proximity.hpp"

namespace myxo::geom {

/// JSON document {"n", "family", "edges": [[a, b, weight], ...]} with edges
/// sorted lexicographically. Locale-independent.
std::string to_json(const ProximityGraph& g);

/// Graphviz DOT. When points are given, nodes carry pinned pos attributes so
/// geometric families render with their true layout.
std::string to_dot(const ProximityGraph& g, const PointSet* points = nullptr);

void write_graph(const std::filesystem::path& path, const ProximityGraph& g,
                 const std::string& format, const PointSet* points = nullptr);

/// Parses the to_json format back into a graph.
ProximityGraph graph_from_json(const std::string& text);

} // namespace myxo::geom
