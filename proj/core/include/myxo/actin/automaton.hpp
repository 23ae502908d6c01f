#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace myxo::actin {

/// State of one node (one monomer) in an excitable chain.
enum class NodeState : std::uint8_t {
    Resting = 0,
    Excited = 1,
    Refractory = 2,
};

enum class Rule : std::uint8_t { C1, C2, C3 };
enum class Boundary : std::uint8_t { Fixed, Periodic };
enum class ChainId : std::uint8_t { X, Y };

std::string_view to_string(Rule r);
std::string_view to_string(Boundary b);
std::string_view to_string(ChainId c);

/// Which excitation predicate governs each chain, plus the boundary policy.
/// C1 excites a resting node on sigma >= 1, C2 on sigma == 1; C3 applies the
/// C1 predicate to chain x and the C2 predicate to chain y.
struct RuleSpec {
    Rule rule = Rule::C1;
    Boundary boundary = Boundary::Fixed;
};

/// The two coupled chains at one time step. Both chains always have the same
/// length and advance together.
struct ChainPair {
    std::vector<NodeState> x;
    std::vector<NodeState> y;
    std::uint64_t t = 0;

    std::size_t size() const noexcept { return x.size(); }

    static ChainPair resting(std::size_t n);

    bool operator==(const ChainPair&) const = default;
};

using Neighborhood = std::array<NodeState, 4>;

/// Neighborhood tuple of node i. Chain x sees (x[i-1], x[i+1], y[i-1], y[i]);
/// chain y sees (y[i-1], y[i+1], x[i], x[i+1]). The coupling is intentionally
/// asymmetric, matching the half-monomer offset of the two helical strands.
/// Under Fixed boundaries out-of-range neighbors read Resting; under Periodic
/// indices wrap mod n. Throws UsageError when i is out of range.
Neighborhood neighborhood(const ChainPair& config, ChainId chain, std::size_t i,
                          Boundary boundary);

/// Number of Excited entries in a neighborhood tuple.
int sigma(const Neighborhood& nb) noexcept;

/// One synchronous update of all 2n nodes from the time-t snapshot:
/// Resting -> Excited iff the chain's predicate holds, Excited -> Refractory,
/// Refractory -> Resting. Increments t.
ChainPair step(const ChainPair& config, const RuleSpec& spec);

/// Independently draws every node of both chains: Excited with probability
/// p_excited, Refractory with p_refractory, Resting otherwise. Identical
/// (n, probabilities, seed) give bit-identical configurations.
/// Throws UsageError on invalid probabilities or n < 2.
ChainPair random_init(std::size_t n, double p_excited, double p_refractory,
                      std::uint64_t seed);

/// Row-per-timestep record of one chain. rows()[0] is the initial
/// configuration; row k is the configuration after k steps.
struct SpaceTimeDiagram {
    ChainId chain_id = ChainId::X;
    std::size_t n = 0;
    std::vector<NodeState> cells; // row-major, rows() x n

    std::size_t rows() const noexcept { return n == 0 ? 0 : cells.size() / n; }
    std::span<const NodeState> row(std::size_t k) const {
        return {cells.data() + k * n, n};
    }
};

/// Excited-node count per recorded row of one chain.
struct ActivitySeries {
    std::vector<std::uint32_t> per_step_excited;
};

struct RunResult {
    SpaceTimeDiagram diagram_x;
    SpaceTimeDiagram diagram_y;
    ActivitySeries activity_x;
    ActivitySeries activity_y;
};

/// Applies step() exactly `steps` times, recording every configuration
/// (steps + 1 rows including the initial one). Throws UsageError when
/// steps < 1.
RunResult run(const ChainPair& initial, const RuleSpec& spec, std::size_t steps);

} // namespace myxo::actin
