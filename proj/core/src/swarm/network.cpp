#include "myxo/swarm/network.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>

#include "myxo/errors.hpp"

namespace myxo::swarm {

bool NetworkReport::all_nodes_in_one_component() const {
    if (node_component.empty()) return false;
    return std::all_of(node_component.begin(), node_component.end(),
                       [&](std::int32_t c) { return c >= 0 && c == node_component[0]; });
}

NetworkReport extract_network(const SwarmWorld& world, double threshold) {
    if (!(threshold > 0.0)) throw UsageError("extract_network: threshold must be positive");

    const int w = world.occupancy().width;
    const int h = world.occupancy().height;
    const std::size_t cells = static_cast<std::size_t>(w) * h;

    std::vector<std::uint8_t> blob(cells, 0);
    if (world.config().network_source == "trail") {
        for (std::size_t i = 0; i < cells; ++i) blob[i] = world.field().cells[i] >= threshold;
    } else {
        for (std::size_t i = 0; i < cells; ++i) {
            blob[i] = static_cast<double>(world.occupancy().cells[i]) >= threshold;
        }
    }
    return extract_network_cells(blob, w, h, world.nodes(),
                                 world.config().params.engulf_radius);
}

NetworkReport extract_network_cells(const std::vector<std::uint8_t>& blob, int w, int h,
                                    const std::vector<StimulusNode>& nodes,
                                    double radius) {
    const std::size_t cells = static_cast<std::size_t>(w) * h;

    // 8-connected component labels.
    std::vector<std::int32_t> comp(cells, -1);
    std::uint32_t comp_count = 0;
    std::vector<std::uint32_t> stack;
    for (std::size_t start = 0; start < cells; ++start) {
        if (!blob[start] || comp[start] >= 0) continue;
        const auto label = static_cast<std::int32_t>(comp_count++);
        stack.assign(1, static_cast<std::uint32_t>(start));
        comp[start] = label;
        while (!stack.empty()) {
            const std::uint32_t cell = stack.back();
            stack.pop_back();
            const int cx = static_cast<int>(cell) % w;
            const int cy = static_cast<int>(cell) / w;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    const int x = cx + dx, y = cy + dy;
                    if (x < 0 || x >= w || y < 0 || y >= h) continue;
                    const std::size_t nb = static_cast<std::size_t>(y) * w + x;
                    if (blob[nb] && comp[nb] < 0) {
                        comp[nb] = label;
                        stack.push_back(static_cast<std::uint32_t>(nb));
                    }
                }
            }
        }
    }

    NetworkReport report;
    report.component_count = comp_count;

    // Node -> component: majority component over blob cells in the engulf
    // disc, smaller component id on ties.
    const int r = static_cast<int>(std::floor(radius));
    report.node_component.assign(nodes.size(), -1);
    std::vector<std::vector<std::uint32_t>> node_seed_cells(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::map<std::int32_t, int> votes;
        for (int dy = -r; dy <= r; ++dy) {
            for (int dx = -r; dx <= r; ++dx) {
                if (static_cast<double>(dx) * dx + static_cast<double>(dy) * dy >
                    radius * radius)
                    continue;
                const int x = nodes[i].x + dx, y = nodes[i].y + dy;
                if (x < 0 || x >= w || y < 0 || y >= h) continue;
                const std::size_t cell = static_cast<std::size_t>(y) * w + x;
                if (!blob[cell]) continue;
                ++votes[comp[cell]];
                node_seed_cells[i].push_back(static_cast<std::uint32_t>(cell));
            }
        }
        std::int32_t best = -1;
        int best_votes = 0;
        for (auto [label, count] : votes) {
            if (count > best_votes) {
                best = label;
                best_votes = count;
            }
        }
        report.node_component[i] = best;
    }

    // Geodesic regions: multi-source BFS through the blob, seeded with each
    // node's disc cells. First claim wins; seeds are queued in node order so
    // equal distances resolve deterministically to the lower node id.
    std::vector<std::int32_t> owner(cells, -1);
    std::queue<std::uint32_t> q;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::uint32_t cell : node_seed_cells[i]) {
            if (owner[cell] < 0) {
                owner[cell] = static_cast<std::int32_t>(i);
                q.push(cell);
            }
        }
    }
    while (!q.empty()) {
        const std::uint32_t cell = q.front();
        q.pop();
        const int cx = static_cast<int>(cell) % w;
        const int cy = static_cast<int>(cell) / w;
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                if (dx == 0 && dy == 0) continue;
                const int x = cx + dx, y = cy + dy;
                if (x < 0 || x >= w || y < 0 || y >= h) continue;
                const std::size_t nb = static_cast<std::size_t>(y) * w + x;
                if (blob[nb] && owner[nb] < 0) {
                    owner[nb] = owner[cell];
                    q.push(static_cast<std::uint32_t>(nb));
                }
            }
        }
    }

    // Region adjacency.
    std::set<std::pair<std::uint32_t, std::uint32_t>> links;
    for (std::size_t cell = 0; cell < cells; ++cell) {
        if (owner[cell] < 0) continue;
        const int cx = static_cast<int>(cell) % w;
        const int cy = static_cast<int>(cell) / w;
        for (int dy = 0; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                if (dy == 0 && dx <= 0) continue;
                const int x = cx + dx, y = cy + dy;
                if (x < 0 || x >= w || y < 0 || y >= h) continue;
                const std::size_t nb = static_cast<std::size_t>(y) * w + x;
                if (owner[nb] < 0 || owner[nb] == owner[cell]) continue;
                const auto a = static_cast<std::uint32_t>(std::min(owner[cell], owner[nb]));
                const auto b = static_cast<std::uint32_t>(std::max(owner[cell], owner[nb]));
                links.emplace(a, b);
            }
        }
    }

    report.graph.n = static_cast<std::uint32_t>(nodes.size());
    report.graph.family = geom::GraphFamily::SwarmNetwork;
    for (auto [a, b] : links) {
        const double dx = nodes[a].x - nodes[b].x;
        const double dy = nodes[a].y - nodes[b].y;
        report.graph.edges.push_back({a, b, std::sqrt(dx * dx + dy * dy)});
    }
    report.graph.finalize();
    return report;
}

} // namespace myxo::swarm
