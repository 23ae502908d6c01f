#include "myxo/geometry/random_graphs.hpp"

#include <set>
#include <string>

#include "myxo/errors.hpp"
#include "myxo/rng.hpp"

namespace myxo::geom {

ProximityGraph er_random(std::uint32_t n, double p, std::uint64_t seed) {
    if (n < 1) throw UsageError("er_random: n must be >= 1");
    if (p < 0.0 || p > 1.0) throw UsageError("er_random: p must be in [0,1]");

    SplitMix64 rng(seed);
    ProximityGraph g;
    g.n = n;
    g.family = GraphFamily::ErdosRenyi;
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = a + 1; b < n; ++b) {
            if (rng.next_double() < p) g.edges.push_back({a, b, 1.0});
        }
    }
    g.finalize();
    return g;
}

ProximityGraph watts_strogatz(std::uint32_t n, std::uint32_t k, double beta,
                              std::uint64_t seed) {
    if (k < 2 || k % 2 != 0) throw UsageError("watts_strogatz: k must be even and >= 2");
    if (n <= k) throw UsageError("watts_strogatz: need n > k");
    if (beta < 0.0 || beta > 1.0) throw UsageError("watts_strogatz: beta must be in [0,1]");

    std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
    auto key = [](std::uint32_t a, std::uint32_t b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    };
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t j = 1; j <= k / 2; ++j) {
            edges.insert(key(u, (u + j) % n));
        }
    }

    // Rewiring sweeps the lattice one neighbour distance at a time, as in the
    // original construction: round j rewires the (u, u+j) edges in node order.
    SplitMix64 rng(seed);
    for (std::uint32_t j = 1; j <= k / 2; ++j) {
        for (std::uint32_t u = 0; u < n; ++u) {
            if (rng.next_double() >= beta) continue;
            const std::uint32_t v = (u + j) % n;
            if (!edges.contains(key(u, v))) continue; // already rewired away
            // u must have a free non-neighbour; give up quietly if saturated.
            std::uint32_t w = u;
            bool found = false;
            for (int attempt = 0; attempt < 1024; ++attempt) {
                w = static_cast<std::uint32_t>(rng.next_below(n));
                if (w != u && !edges.contains(key(u, w))) {
                    found = true;
                    break;
                }
            }
            if (!found) continue;
            edges.erase(key(u, v));
            edges.insert(key(u, w));
        }
    }

    ProximityGraph g;
    g.n = n;
    g.family = GraphFamily::WattsStrogatz;
    g.edges.reserve(edges.size());
    for (auto [a, b] : edges) g.edges.push_back({a, b, 1.0});
    g.finalize();
    return g;
}

} // namespace myxo::geom
