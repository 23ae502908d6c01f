#include <doctest.h>

#include <algorithm>

#include "myxo/actin/automaton.hpp"
#include "myxo/errors.hpp"
#include "myxo/rng.hpp"
#include "support/oracles.hpp"

using namespace myxo::actin;

namespace {

// Shorthand for writing configurations: 'o' resting, '+' excited, '-' refractory.
std::vector<NodeState> chain(std::string_view s) {
    std::vector<NodeState> out;
    out.reserve(s.size());
    for (char c : s) {
        out.push_back(c == '+'   ? NodeState::Excited
                      : c == '-' ? NodeState::Refractory
                                 : NodeState::Resting);
    }
    return out;
}

ChainPair pair_of(std::string_view x, std::string_view y) {
    ChainPair cp;
    cp.x = chain(x);
    cp.y = chain(y);
    return cp;
}

ChainPair random_config(std::size_t n, myxo::SplitMix64& rng) {
    ChainPair cp;
    cp.x.resize(n);
    cp.y.resize(n);
    for (auto* c : {&cp.x, &cp.y}) {
        for (auto& s : *c) s = static_cast<NodeState>(rng.next_below(3));
    }
    return cp;
}

const RuleSpec kAllRules[] = {
    {Rule::C1, Boundary::Fixed},    {Rule::C2, Boundary::Fixed},
    {Rule::C3, Boundary::Fixed},    {Rule::C1, Boundary::Periodic},
    {Rule::C2, Boundary::Periodic}, {Rule::C3, Boundary::Periodic},
};

} // namespace

TEST_CASE("neighborhood tuples follow the two-chain definition") {
    // quiescent configuration
    auto cp = ChainPair::resting(5);
    auto nb = neighborhood(cp, ChainId::X, 2, Boundary::Fixed);
    CHECK(nb == Neighborhood{NodeState::Resting, NodeState::Resting, NodeState::Resting,
                             NodeState::Resting});

    // u(y_1) = (y0, y2, x1, x2) with x2 excited
    cp = pair_of("oo+oo", "ooooo");
    nb = neighborhood(cp, ChainId::Y, 1, Boundary::Fixed);
    CHECK(nb == Neighborhood{NodeState::Resting, NodeState::Resting, NodeState::Resting,
                             NodeState::Excited});

    // fixed boundary fills out-of-range with Resting: u(x_0) = (rest, x1, rest, y0)
    cp = pair_of("o+ooo", "+oooo");
    nb = neighborhood(cp, ChainId::X, 0, Boundary::Fixed);
    CHECK(nb == Neighborhood{NodeState::Resting, NodeState::Excited, NodeState::Resting,
                             NodeState::Excited});

    // periodic wraps
    nb = neighborhood(cp, ChainId::X, 0, Boundary::Periodic);
    CHECK(nb[0] == cp.x[4]);

    CHECK_THROWS_AS(neighborhood(cp, ChainId::X, 5, Boundary::Fixed), myxo::UsageError);
}

TEST_CASE("sigma counts excited entries") {
    CHECK(sigma({NodeState::Resting, NodeState::Resting, NodeState::Resting,
                 NodeState::Resting}) == 0);
    CHECK(sigma({NodeState::Excited, NodeState::Refractory, NodeState::Resting,
                 NodeState::Excited}) == 2);
    CHECK(sigma({NodeState::Excited, NodeState::Excited, NodeState::Excited,
                 NodeState::Excited}) == 4);
}

TEST_CASE("step: quiescence is a fixed point") {
    const auto cp = ChainPair::resting(5);
    for (const auto& spec : kAllRules) {
        const auto next = step(cp, spec);
        CHECK(next.x == cp.x);
        CHECK(next.y == cp.y);
        CHECK(next.t == 1);
    }
}

TEST_CASE("step: single excitation under C1, values frozen from the oracle") {
    const auto cp = pair_of("oo+oo", "ooooo");
    const auto next = step(cp, {Rule::C1, Boundary::Fixed});
    CHECK(next.x == chain("o+-+o"));
    CHECK(next.y == chain("o++oo"));

    // all neighbourhood counts are 1, so one C2 step is identical
    const auto next2 = step(cp, {Rule::C2, Boundary::Fixed});
    CHECK(next2.x == next.x);
    CHECK(next2.y == next.y);

    // and both match the brute-force oracle
    const auto ora = oracle::step(cp, {Rule::C1, Boundary::Fixed});
    CHECK(next.x == ora.x);
    CHECK(next.y == ora.y);
}

TEST_CASE("step equals the definition-literal oracle exhaustively for n <= 4") {
    for (std::size_t n : {2u, 3u, 4u}) {
        const std::size_t total = [&] {
            std::size_t t = 1;
            for (std::size_t i = 0; i < 2 * n; ++i) t *= 3;
            return t;
        }();
        for (std::size_t code = 0; code < total; ++code) {
            ChainPair cp;
            cp.x.resize(n);
            cp.y.resize(n);
            std::size_t c = code;
            for (std::size_t i = 0; i < n; ++i, c /= 3) cp.x[i] = static_cast<NodeState>(c % 3);
            for (std::size_t i = 0; i < n; ++i, c /= 3) cp.y[i] = static_cast<NodeState>(c % 3);
            for (const auto& spec : kAllRules) {
                const auto got = step(cp, spec);
                const auto want = oracle::step(cp, spec);
                REQUIRE(got.x == want.x);
                REQUIRE(got.y == want.y);
            }
        }
    }
}

TEST_CASE("step equals the oracle on random configurations at n = 64") {
    myxo::SplitMix64 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        const auto cp = random_config(64, rng);
        for (const auto& spec : kAllRules) {
            const auto got = step(cp, spec);
            const auto want = oracle::step(cp, spec);
            REQUIRE(got.x == want.x);
            REQUIRE(got.y == want.y);
        }
    }
}

TEST_CASE("one-step refractory law holds for all rules") {
    myxo::SplitMix64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto cp = random_config(32, rng);
        for (const auto& spec : kAllRules) {
            const auto next = step(cp, spec);
            for (std::size_t i = 0; i < cp.size(); ++i) {
                if (cp.x[i] == NodeState::Excited) CHECK(next.x[i] == NodeState::Refractory);
                if (cp.x[i] == NodeState::Refractory) CHECK(next.x[i] == NodeState::Resting);
                if (cp.y[i] == NodeState::Excited) CHECK(next.y[i] == NodeState::Refractory);
                if (cp.y[i] == NodeState::Refractory) CHECK(next.y[i] == NodeState::Resting);
            }
        }
    }
}

TEST_CASE("C1 and C2 agree while every sigma stays in {0,1}") {
    // sparse configurations: single excited cells far apart
    auto cp = ChainPair::resting(40);
    cp.x[5] = NodeState::Excited;
    cp.x[25] = NodeState::Excited;
    const auto a = step(cp, {Rule::C1, Boundary::Fixed});
    const auto b = step(cp, {Rule::C2, Boundary::Fixed});
    CHECK(a.x == b.x);
    CHECK(a.y == b.y);
}

TEST_CASE("locality: a flipped node cannot influence cells beyond distance k in k steps") {
    myxo::SplitMix64 rng(11);
    const std::size_t n = 64;
    for (const auto& spec : kAllRules) {
        auto base = random_config(n, rng);
        auto mutated = base;
        const std::size_t site = 32;
        mutated.x[site] = mutated.x[site] == NodeState::Resting ? NodeState::Excited
                                                                : NodeState::Resting;
        auto a = base, b = mutated;
        for (std::size_t k = 1; k <= 8; ++k) {
            a = step(a, spec);
            b = step(b, spec);
            // the coupled chains transport information at most k+1 cells in k
            // steps (the cross-chain tuple reaches one cell further)
            const std::size_t reach = k + 1;
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t d = i > site ? i - site : site - i;
                if (d > reach) {
                    REQUIRE(a.x[i] == b.x[i]);
                    REQUIRE(a.y[i] == b.y[i]);
                }
            }
        }
    }
}

TEST_CASE("periodic boundary: rotating then stepping equals stepping then rotating") {
    myxo::SplitMix64 rng(13);
    auto rotate = [](const std::vector<NodeState>& v, std::size_t k) {
        std::vector<NodeState> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[(i + k) % v.size()] = v[i];
        return out;
    };
    for (int trial = 0; trial < 20; ++trial) {
        const auto cp = random_config(48, rng);
        const std::size_t k = 1 + rng.next_below(47);
        for (Rule rule : {Rule::C1, Rule::C2, Rule::C3}) {
            const RuleSpec spec{rule, Boundary::Periodic};
            ChainPair rotated;
            rotated.x = rotate(cp.x, k);
            rotated.y = rotate(cp.y, k);
            const auto a = step(rotated, spec);
            const auto b = step(cp, spec);
            CHECK(a.x == rotate(b.x, k));
            CHECK(a.y == rotate(b.y, k));
        }
    }
}

TEST_CASE("random_init: degenerate probabilities, concentration, determinism") {
    const auto quiet = random_init(50, 0.0, 0.0, 9);
    CHECK(std::all_of(quiet.x.begin(), quiet.x.end(),
                      [](NodeState s) { return s == NodeState::Resting; }));
    CHECK(std::all_of(quiet.y.begin(), quiet.y.end(),
                      [](NodeState s) { return s == NodeState::Resting; }));

    // binomial concentration: 2n = 20000 draws at p = 0.25
    const std::size_t n = 10000;
    const auto cp = random_init(n, 0.25, 0.25, 123);
    std::size_t excited = 0;
    for (auto s : cp.x) excited += s == NodeState::Excited;
    for (auto s : cp.y) excited += s == NodeState::Excited;
    const double frac = static_cast<double>(excited) / (2.0 * static_cast<double>(n));
    CHECK(frac > 0.23);
    CHECK(frac < 0.27);

    const auto a = random_init(100, 0.25, 0.25, 42);
    const auto b = random_init(100, 0.25, 0.25, 42);
    CHECK(a == b);

    CHECK_THROWS_AS(random_init(10, 0.7, 0.7, 1), myxo::UsageError);
    CHECK_THROWS_AS(random_init(10, -0.1, 0.2, 1), myxo::UsageError);
    CHECK_THROWS_AS(random_init(1, 0.25, 0.25, 1), myxo::UsageError);
}

TEST_CASE("run: quiescent stays quiescent; rows and activity align") {
    const auto cp = ChainPair::resting(16);
    const auto res = run(cp, {Rule::C1, Boundary::Fixed}, 50);
    CHECK(res.diagram_x.rows() == 51);
    CHECK(res.diagram_y.rows() == 51);
    CHECK(res.activity_x.per_step_excited.size() == 51);
    CHECK(std::all_of(res.diagram_x.cells.begin(), res.diagram_x.cells.end(),
                      [](NodeState s) { return s == NodeState::Resting; }));
    CHECK(std::all_of(res.activity_x.per_step_excited.begin(),
                      res.activity_x.per_step_excited.end(),
                      [](std::uint32_t c) { return c == 0; }));
    CHECK_THROWS_AS(run(cp, {Rule::C1, Boundary::Fixed}, 0), myxo::UsageError);
}

TEST_CASE("run: single C1 source spreads two wavefronts that vanish at the ends") {
    const std::size_t n = 101;
    auto cp = ChainPair::resting(n);
    cp.x[n / 2] = NodeState::Excited;
    const auto res = run(cp, {Rule::C1, Boundary::Fixed}, 60);

    // rows[0] is the seed; activity then spreads symmetrically and dies
    CHECK(res.activity_x.per_step_excited[0] == 1);
    const auto& last_x = res.diagram_x;
    const auto final_row = last_x.row(last_x.rows() - 1);
    CHECK(std::all_of(final_row.begin(), final_row.end(),
                      [](NodeState s) { return s == NodeState::Resting; }));
    const auto final_y = res.diagram_y.row(res.diagram_y.rows() - 1);
    CHECK(std::all_of(final_y.begin(), final_y.end(),
                      [](NodeState s) { return s == NodeState::Resting; }));

    // two fronts: at mid-run the excited set of chain x splits into two runs
    const auto mid = res.diagram_x.row(20);
    int runs = 0;
    bool in_run = false;
    for (NodeState s : mid) {
        const bool e = s == NodeState::Excited;
        if (e && !in_run) ++runs;
        in_run = e;
    }
    CHECK(runs == 2);
}

TEST_CASE("run is deterministic: identical inputs give identical diagrams") {
    const auto cp = random_init(128, 0.25, 0.25, 77);
    const RuleSpec spec{Rule::C2, Boundary::Fixed};
    const auto a = run(cp, spec, 100);
    const auto b = run(cp, spec, 100);
    CHECK(a.diagram_x.cells == b.diagram_x.cells);
    CHECK(a.diagram_y.cells == b.diagram_y.cells);
    CHECK(a.activity_x.per_step_excited == b.activity_x.per_step_excited);
}
