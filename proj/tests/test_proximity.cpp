#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "myxo/errors.hpp"
#include "myxo/geometry/delaunay.hpp"
#include "myxo/rng.hpp"
#include "myxo/geometry/proximity.hpp"
#include "support/oracles.hpp"

using namespace myxo::geom;

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_pairs(const ProximityGraph& g) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(g.edges.size());
    for (const auto& e : g.edges) out.emplace_back(e.a, e.b);
    return out;
}

// Roughly equilateral; floating point cannot represent an exact one.
const PointSet kTriangle({{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}});

} // namespace

TEST_CASE("gabriel: pair, triangle, and tie semantics") {
    const PointSet two({{0.0, 0.0}, {3.0, 4.0}});
    auto g = gabriel(two);
    CHECK(edge_pairs(g) == std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}});
    CHECK(g.edges[0].weight == doctest::Approx(5.0));

    // every diametral disc excludes the opposite vertex
    CHECK(gabriel(kTriangle).edges.size() == 3);

    // c exactly on the diametral circle of (a,b) does not block (open disc):
    // a=(0,0), b=(8,0), c=(4,4) sits exactly on the radius-4 circle.
    const PointSet tie({{0.0, 0.0}, {8.0, 0.0}, {4.0, 4.0}});
    CHECK(gabriel(tie).has_edge(0, 1));
}

TEST_CASE("rng: pair, blocking, and tie semantics") {
    const PointSet two({{0.0, 0.0}, {1.0, 1.0}});
    CHECK(relative_neighborhood(two).edges.size() == 1);

    // c exactly at dist(a,b) from a: the strict lune test keeps the edge.
    // a=(0,0), b=(5,0), c=(3,4): d(a,c) = 5 exactly, d(b,c) < 5.
    const PointSet tie({{0.0, 0.0}, {5.0, 0.0}, {3.0, 4.0}});
    CHECK(relative_neighborhood(tie).has_edge(0, 1));

    // c strictly closer to both blocks: square diagonal
    const PointSet square({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}});
    const auto rng_sq = relative_neighborhood(square);
    CHECK(!rng_sq.has_edge(0, 3));
    CHECK(rng_sq.edges.size() == 4);
}

TEST_CASE("gabriel and rng equal their O(n^3) oracles on random inputs") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
        const auto ps = oracle::random_points(64, seed);
        CHECK(edge_pairs(gabriel(ps)) == oracle::gabriel_edges(ps));
        CHECK(edge_pairs(relative_neighborhood(ps)) == oracle::rng_edges(ps));
    }
}

TEST_CASE("delaunay: small fixed cases") {
    CHECK(delaunay(kTriangle).edges.size() == 3);

    // 4 points in convex position, not cocircular: 4 hull edges + 1 diagonal
    const PointSet quad({{0.0, 0.0}, {4.0, 0.0}, {5.0, 3.0}, {-1.0, 4.0}});
    CHECK(delaunay(quad).edges.size() == 5);

    // collinear input degrades to the path graph
    const PointSet line({{0.0, 0.0}, {1.0, 1.0}, {2.0, 2.0}, {3.0, 3.0}});
    const auto path = delaunay(line);
    CHECK(edge_pairs(path) == std::vector<std::pair<std::uint32_t, std::uint32_t>>{
                                  {0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("delaunay satisfies the empty-circumcircle certificate on random inputs") {
    for (std::uint64_t seed : {10ull, 11ull, 12ull}) {
        const auto ps = oracle::random_points(48, seed);
        const auto tri = triangulate(ps);
        REQUIRE(!tri.collinear);
        for (const auto& t : tri.triangles) {
            REQUIRE(oracle::orient_exact(ps[t[0]], ps[t[1]], ps[t[2]]) > 0);
            for (std::uint32_t p = 0; p < ps.size(); ++p) {
                if (p == t[0] || p == t[1] || p == t[2]) continue;
                // no point strictly inside any circumcircle
                REQUIRE(oracle::incircle_exact(ps[t[0]], ps[t[1]], ps[t[2]], ps[p]) <= 0);
            }
        }
        // Euler count for a triangulation of the convex hull:
        // triangles = 2n - 2 - h, edges = 3n - 3 - h
        const std::size_t n = ps.size(), h = tri.hull.size();
        CHECK(tri.triangles.size() == 2 * n - 2 - h);
        CHECK(tri.edges().size() == 3 * n - 3 - h);
    }
}

TEST_CASE("every gabriel edge is a delaunay edge on random inputs") {
    for (std::uint64_t seed : {21ull, 22ull}) {
        const auto ps = oracle::random_points(32, seed);
        const auto dt = delaunay(ps);
        for (auto [a, b] : oracle::gabriel_edges(ps)) {
            CHECK(dt.has_edge(a, b));
        }
    }
}

TEST_CASE("delaunay output is independent of input order") {
    const auto ps = oracle::random_points(40, 99);
    std::vector<std::uint32_t> perm(ps.size());
    for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
    myxo::SplitMix64 rng(5);
    for (std::size_t i = perm.size(); i > 1; --i) {
        std::swap(perm[i - 1], perm[rng.next_below(i)]);
    }
    std::vector<Point> shuffled(ps.size());
    for (std::uint32_t i = 0; i < perm.size(); ++i) shuffled[perm[i]] = ps[i];
    const PointSet ps2(shuffled);

    auto remap = [&](std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
        // edges of ps2 translated back to original ids
        std::vector<std::uint32_t> inv(perm.size());
        for (std::uint32_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
        for (auto& [a, b] : edges) {
            a = inv[a];
            b = inv[b];
            if (a > b) std::swap(a, b);
        }
        std::sort(edges.begin(), edges.end());
        return edges;
    };
    CHECK(edge_pairs(delaunay(ps)) == remap(edge_pairs(delaunay(ps2))));
}

TEST_CASE("mst: basics and deterministic tie-breaking") {
    const PointSet two({{0.0, 0.0}, {1.0, 2.0}});
    const auto t2 = mst(two);
    REQUIRE(t2.edges.size() == 1);

    // isosceles with exactly tied double weights: d(0,1) == d(1,2) == sqrt(2)
    const PointSet iso({{0.0, 0.0}, {1.0, 1.0}, {2.0, 0.0}});
    const auto t3 = mst(iso);
    CHECK(edge_pairs(t3) ==
          std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}, {1, 2}});

    // approximately equilateral: any 2 sides, total weight 2s
    const auto te = mst(kTriangle);
    CHECK(te.edges.size() == 2);
    CHECK(te.total_weight() == doctest::Approx(2.0).epsilon(1e-12));

    // four corners of a square with exact weight ties: lexicographic pick
    const PointSet sq({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}});
    CHECK(edge_pairs(mst(sq)) ==
          std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}, {0, 2}, {1, 3}});
}

TEST_CASE("mst matches brute-force enumeration for n <= 7") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        for (std::size_t n : {5u, 6u, 7u}) {
            const auto ps = oracle::random_points(n, seed * 31 + n);
            const auto t = mst(ps);
            REQUIRE(t.edges.size() == n - 1);
            CHECK(t.total_weight() ==
                  doctest::Approx(oracle::mst_weight_bruteforce(ps)).epsilon(1e-12));
        }
    }
}

TEST_CASE("hierarchy: containment chain on fixed and random inputs") {
    // An exactly representable isosceles stand-in for the equilateral case:
    // d(0,2) == d(1,2) tie exactly in doubles, so the strict lune/disc rules
    // keep all 3 edges. (A true equilateral has irrational coordinates whose
    // rounding breaks the tie.)
    const PointSet iso({{0.0, 0.0}, {2.0, 0.0}, {1.0, 2.0}});
    const auto tri_h = hierarchy(iso);
    CHECK(tri_h.ok());
    CHECK(tri_h.mst_graph.edges.size() == 2);
    CHECK(tri_h.rng_graph.edges.size() == 3);
    CHECK(tri_h.gabriel_graph.edges.size() == 3);
    CHECK(tri_h.delaunay_graph.edges.size() == 3);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto ps = oracle::random_points(4 + seed % 3, seed + 1000);
        const auto h = hierarchy(ps);
        REQUIRE(h.ok());
        REQUIRE(h.mst_graph.subgraph_of(h.rng_graph));
        REQUIRE(h.rng_graph.subgraph_of(h.gabriel_graph));
        REQUIRE(h.gabriel_graph.subgraph_of(h.delaunay_graph));
    }

    // near-cocircular: points a hair off a common circle
    myxo::SplitMix64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Point> pts;
        const std::size_t n = 5 + trial % 2;
        for (std::size_t i = 0; i < n; ++i) {
            const double angle = 2.0 * 3.14159265358979323846 *
                                 (static_cast<double>(i) + rng.next_double() * 0.1) /
                                 static_cast<double>(n);
            const double jitter = 1.0 + (rng.next_double() - 0.5) * 1e-9;
            pts.push_back({std::cos(angle) * jitter, std::sin(angle) * jitter});
        }
        const auto h = hierarchy(PointSet(pts));
        REQUIRE(h.ok());
    }
}

TEST_CASE("similarity invariance: translate/rotate/scale keeps all edge sets") {
    const auto ps = oracle::random_points(32, 4242);
    const auto base = hierarchy(ps);

    const double angle = 0.7;
    const double c = std::cos(angle), s = std::sin(angle);
    std::vector<Point> moved(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const double x = ps[i].x * 3.0, y = ps[i].y * 3.0; // uniform scale
        moved[i] = {x * c - y * s + 17.0, x * s + y * c - 5.0};
    }
    const auto h = hierarchy(PointSet(moved));
    CHECK(edge_pairs(h.mst_graph) == edge_pairs(base.mst_graph));
    CHECK(edge_pairs(h.rng_graph) == edge_pairs(base.rng_graph));
    CHECK(edge_pairs(h.gabriel_graph) == edge_pairs(base.gabriel_graph));
    CHECK(edge_pairs(h.delaunay_graph) == edge_pairs(base.delaunay_graph));
}

TEST_CASE("graph invariants: no self loops, duplicates rejected") {
    ProximityGraph g;
    g.n = 3;
    g.edges = {{1, 0, 1.0}, {0, 1, 2.0}};
    CHECK_THROWS_AS(g.finalize(), myxo::RuntimeError);

    ProximityGraph loop;
    loop.n = 2;
    loop.edges = {{1, 1, 1.0}};
    CHECK_THROWS_AS(loop.finalize(), myxo::RuntimeError);
}
