#include <doctest.h>

#include <cmath>

#include "myxo/errors.hpp"
#include "myxo/geometry/metrics.hpp"
#include "myxo/geometry/random_graphs.hpp"

using namespace myxo::geom;

TEST_CASE("er_random: degenerate probabilities and determinism") {
    CHECK(er_random(20, 0.0, 1).edges.empty());
    CHECK(er_random(20, 1.0, 1).edges.size() == 20 * 19 / 2);

    const auto a = er_random(50, 0.3, 99);
    const auto b = er_random(50, 0.3, 99);
    CHECK(a.edges == b.edges);
    const auto c = er_random(50, 0.3, 100);
    CHECK(a.edges != c.edges);

    CHECK_THROWS_AS(er_random(0, 0.5, 1), myxo::UsageError);
    CHECK_THROWS_AS(er_random(5, 1.5, 1), myxo::UsageError);
}

TEST_CASE("er_random: mean edge count within 3 sigma of the binomial") {
    const std::uint32_t n = 200;
    const double p = 0.1;
    const double pairs = n * (n - 1) / 2.0;
    double total = 0.0;
    const int seeds = 100;
    for (int s = 0; s < seeds; ++s) {
        total += static_cast<double>(er_random(n, p, static_cast<std::uint64_t>(s)).edges.size());
    }
    const double mean = total / seeds;
    const double sigma = std::sqrt(pairs * p * (1 - p) / seeds);
    CHECK(std::abs(mean - pairs * p) < 3.0 * sigma);
}

TEST_CASE("watts_strogatz: beta=0 is the ring lattice") {
    const auto g = watts_strogatz(20, 4, 0.0, 7);
    CHECK(g.edges.size() == 20 * 4 / 2);
    const auto m = metrics(g);
    for (std::size_t d = 0; d < m.degree_histogram.size(); ++d) {
        if (d == 4) {
            CHECK(m.degree_histogram[d] == 20);
        } else {
            CHECK(m.degree_histogram[d] == 0);
        }
    }
    // ring lattice with k=4: clustering coefficient exactly 1/2
    CHECK(m.clustering_coefficient == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("watts_strogatz: rewiring keeps the graph simple and the edge count") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = watts_strogatz(60, 6, 0.3, seed);
        CHECK(g.edges.size() == 60 * 6 / 2); // rewiring moves, never deletes
        for (const auto& e : g.edges) CHECK(e.a < e.b);
        // finalize() already rejects duplicates/self-loops; reaching here is the check
        const auto again = watts_strogatz(60, 6, 0.3, seed);
        CHECK(g.edges == again.edges);
    }
    CHECK_THROWS_AS(watts_strogatz(10, 3, 0.1, 1), myxo::UsageError);
    CHECK_THROWS_AS(watts_strogatz(4, 4, 0.1, 1), myxo::UsageError);
}

TEST_CASE("watts_strogatz small-world: short paths at beta=0.05") {
    const auto ring = metrics(watts_strogatz(200, 6, 0.0, 1));
    double l_sum = 0.0;
    const int seeds = 5;
    for (int s = 0; s < seeds; ++s) {
        l_sum += metrics(watts_strogatz(200, 6, 0.05, static_cast<std::uint64_t>(s)))
                     .average_path_length;
    }
    CHECK(l_sum / seeds <= 0.5 * ring.average_path_length);
}
