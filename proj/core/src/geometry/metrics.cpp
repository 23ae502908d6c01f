#include "myxo/geometry/metrics.hpp"

#include <algorithm>
#include <queue>

namespace myxo::geom {

GraphMetrics metrics(const ProximityGraph& g) {
    GraphMetrics m;
    const auto adj = g.adjacency();
    const std::uint32_t n = g.n;

    // degree histogram
    std::size_t max_deg = 0;
    for (const auto& nb : adj) max_deg = std::max(max_deg, nb.size());
    m.degree_histogram.assign(max_deg + 1, 0);
    for (const auto& nb : adj) ++m.degree_histogram[nb.size()];

    // mean local clustering
    if (n > 0) {
        double sum = 0.0;
        for (std::uint32_t v = 0; v < n; ++v) {
            const auto& nb = adj[v];
            const std::size_t d = nb.size();
            if (d < 2) continue;
            std::uint64_t links = 0;
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = i + 1; j < d; ++j) {
                    if (g.has_edge(nb[i], nb[j])) ++links;
                }
            }
            sum += 2.0 * static_cast<double>(links) / (static_cast<double>(d) * (d - 1));
        }
        m.clustering_coefficient = sum / static_cast<double>(n);
    }

    // BFS all-pairs hop distances
    std::uint64_t pair_count = 0;
    std::uint64_t dist_sum = 0;
    bool all_reachable = n > 0;
    std::vector<std::int32_t> dist(n);
    for (std::uint32_t src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        std::queue<std::uint32_t> q;
        q.push(src);
        std::uint32_t reached = 1;
        while (!q.empty()) {
            const std::uint32_t v = q.front();
            q.pop();
            for (std::uint32_t w : adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    dist_sum += static_cast<std::uint64_t>(dist[w]);
                    ++pair_count;
                    ++reached;
                    q.push(w);
                }
            }
        }
        if (reached != n) all_reachable = false;
    }
    m.connected = all_reachable;
    m.average_path_length =
        pair_count > 0 ? static_cast<double>(dist_sum) / static_cast<double>(pair_count) : 0.0;
    return m;
}

} // namespace myxo::geom
