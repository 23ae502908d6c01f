#include "myxo/geometry/proximity.hpp"

#include <algorithm>
#include <numeric>

#include "myxo/errors.hpp"
#include "myxo/geometry/delaunay.hpp"

namespace myxo::geom {

std::string_view to_string(GraphFamily f) {
    switch (f) {
    case GraphFamily::Delaunay: return "delaunay";
    case GraphFamily::Gabriel: return "gabriel";
    case GraphFamily::Rng: return "rng";
    case GraphFamily::Mst: return "mst";
    case GraphFamily::ErdosRenyi: return "er";
    case GraphFamily::WattsStrogatz: return "ws";
    case GraphFamily::SwarmNetwork: return "swarm";
    }
    return "?";
}

bool ProximityGraph::has_edge(std::uint32_t a, std::uint32_t b) const {
    if (a > b) std::swap(a, b);
    const GraphEdge probe{a, b, 0.0};
    auto it = std::lower_bound(edges.begin(), edges.end(), probe,
                               [](const GraphEdge& l, const GraphEdge& r) {
                                   return std::pair(l.a, l.b) < std::pair(r.a, r.b);
                               });
    return it != edges.end() && it->a == a && it->b == b;
}

double ProximityGraph::total_weight() const {
    double sum = 0.0;
    for (const auto& e : edges) sum += e.weight;
    return sum;
}

std::vector<std::vector<std::uint32_t>> ProximityGraph::adjacency() const {
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (const auto& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    return adj;
}

bool ProximityGraph::subgraph_of(const ProximityGraph& other) const {
    return std::all_of(edges.begin(), edges.end(),
                       [&](const GraphEdge& e) { return other.has_edge(e.a, e.b); });
}

void ProximityGraph::finalize() {
    for (auto& e : edges) {
        if (e.a > e.b) std::swap(e.a, e.b);
        if (e.a == e.b) throw RuntimeError("graph invariant: self-loop on node " +
                                           std::to_string(e.a));
        if (e.b >= n) throw RuntimeError("graph invariant: node id out of range");
    }
    std::sort(edges.begin(), edges.end(), [](const GraphEdge& l, const GraphEdge& r) {
        return std::pair(l.a, l.b) < std::pair(r.a, r.b);
    });
    const auto dup = std::adjacent_find(edges.begin(), edges.end(),
                                        [](const GraphEdge& l, const GraphEdge& r) {
                                            return l.a == r.a && l.b == r.b;
                                        });
    if (dup != edges.end()) {
        throw RuntimeError("graph invariant: duplicate edge (" + std::to_string(dup->a) +
                           "," + std::to_string(dup->b) + ")");
    }
}

namespace {

// Candidate edges: the Delaunay edge set. Both the Gabriel graph and the RNG
// are Delaunay subgraphs, so filtering its edges with the literal predicate
// is equivalent to the O(n^3) definition for point sets in general position,
// and it keeps the n ~ 10^4 nuclei fields tractable.
std::vector<std::pair<std::uint32_t, std::uint32_t>> candidates(const PointSet& ps) {
    return triangulate(ps).edges();
}

bool gabriel_blocked(const PointSet& ps, std::uint32_t a, std::uint32_t b) {
    const Point mid{(ps[a].x + ps[b].x) / 2.0, (ps[a].y + ps[b].y) / 2.0};
    const double quarter = dist_sq(ps[a], ps[b]) / 4.0;
    for (std::size_t c = 0; c < ps.size(); ++c) {
        if (c == a || c == b) continue;
        if (dist_sq(ps[c], mid) < quarter) return true;
    }
    return false;
}

bool rng_blocked(const PointSet& ps, std::uint32_t a, std::uint32_t b) {
    const double d_ab = dist_sq(ps[a], ps[b]);
    for (std::size_t c = 0; c < ps.size(); ++c) {
        if (c == a || c == b) continue;
        if (std::max(dist_sq(ps[a], ps[c]), dist_sq(ps[b], ps[c])) < d_ab) return true;
    }
    return false;
}

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::uint32_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0u);
    }
    std::uint32_t find(std::uint32_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

} // namespace

ProximityGraph gabriel(const PointSet& ps) {
    ProximityGraph g;
    g.n = static_cast<std::uint32_t>(ps.size());
    g.family = GraphFamily::Gabriel;
    for (auto [a, b] : candidates(ps)) {
        if (!gabriel_blocked(ps, a, b)) g.edges.push_back({a, b, dist(ps[a], ps[b])});
    }
    g.finalize();
    return g;
}

ProximityGraph relative_neighborhood(const PointSet& ps) {
    ProximityGraph g;
    g.n = static_cast<std::uint32_t>(ps.size());
    g.family = GraphFamily::Rng;
    for (auto [a, b] : candidates(ps)) {
        if (!rng_blocked(ps, a, b)) g.edges.push_back({a, b, dist(ps[a], ps[b])});
    }
    g.finalize();
    return g;
}

ProximityGraph delaunay(const PointSet& ps) {
    ProximityGraph g;
    g.n = static_cast<std::uint32_t>(ps.size());
    g.family = GraphFamily::Delaunay;
    for (auto [a, b] : candidates(ps)) g.edges.push_back({a, b, dist(ps[a], ps[b])});
    g.finalize();
    return g;
}

ProximityGraph mst(const PointSet& ps) {
    // Kruskal over Delaunay candidates: at least one Euclidean MST is a
    // Delaunay subgraph, so the minimum is attained within this edge set.
    auto cand = candidates(ps);
    std::vector<GraphEdge> pool;
    pool.reserve(cand.size());
    for (auto [a, b] : cand) pool.push_back({a, b, dist(ps[a], ps[b])});
    std::sort(pool.begin(), pool.end(), [](const GraphEdge& l, const GraphEdge& r) {
        return std::tuple(l.weight, l.a, l.b) < std::tuple(r.weight, r.a, r.b);
    });

    ProximityGraph g;
    g.n = static_cast<std::uint32_t>(ps.size());
    g.family = GraphFamily::Mst;
    UnionFind uf(g.n);
    for (const auto& e : pool) {
        if (uf.unite(e.a, e.b)) {
            g.edges.push_back(e);
            if (g.edges.size() + 1 == ps.size()) break;
        }
    }
    if (g.edges.size() + 1 != ps.size()) {
        throw RuntimeError("mst: candidate edge set did not span the point set");
    }
    g.finalize();
    return g;
}

HierarchyResult hierarchy(const PointSet& ps) {
    if (ps.size() < 3) throw UsageError("hierarchy requires at least 3 points");
    HierarchyResult r;
    r.mst_graph = mst(ps);
    r.rng_graph = relative_neighborhood(ps);
    r.gabriel_graph = gabriel(ps);
    r.delaunay_graph = delaunay(ps);

    auto check = [&](const ProximityGraph& inner, const ProximityGraph& outer,
                     const char* relation) {
        ContainmentViolation v{relation, {}};
        for (const auto& e : inner.edges) {
            if (!outer.has_edge(e.a, e.b)) v.offending.push_back(e);
        }
        if (!v.offending.empty()) r.violations.push_back(std::move(v));
    };
    check(r.mst_graph, r.rng_graph, "MST within RNG");
    check(r.rng_graph, r.gabriel_graph, "RNG within Gabriel");
    check(r.gabriel_graph, r.delaunay_graph, "Gabriel within Delaunay");
    return r;
}

} // namespace myxo::geom
