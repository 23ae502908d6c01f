#include "myxo/actin/automaton.hpp"

#include <string>

#include "myxo/errors.hpp"
#include "myxo/rng.hpp"

namespace myxo::actin {

std::string_view to_string(Rule r) {
    switch (r) {
    case Rule::C1: return "c1";
    case Rule::C2: return "c2";
    case Rule::C3: return "c3";
    }
    return "?";
}

std::string_view to_string(Boundary b) {
    return b == Boundary::Fixed ? "fixed" : "periodic";
}

std::string_view to_string(ChainId c) { return c == ChainId::X ? "x" : "y"; }

ChainPair ChainPair::resting(std::size_t n) {
    ChainPair cp;
    cp.x.assign(n, NodeState::Resting);
    cp.y.assign(n, NodeState::Resting);
    return cp;
}

namespace {

inline NodeState read(const std::vector<NodeState>& chain, std::ptrdiff_t i,
                      Boundary boundary) noexcept {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(chain.size());
    if (boundary == Boundary::Periodic) {
        i %= n;
        if (i < 0) i += n;
        return chain[static_cast<std::size_t>(i)];
    }
    if (i < 0 || i >= n) return NodeState::Resting;
    return chain[static_cast<std::size_t>(i)];
}

// Per-chain predicate: true = at-least-one, false = exactly-one.
inline bool excites(int sig, bool at_least_one) noexcept {
    return at_least_one ? sig > 0 : sig == 1;
}

inline void predicates_for(Rule rule, bool& x_at_least_one, bool& y_at_least_one) {
    switch (rule) {
    case Rule::C1: x_at_least_one = true;  y_at_least_one = true;  break;
    case Rule::C2: x_at_least_one = false; y_at_least_one = false; break;
    case Rule::C3: x_at_least_one = true;  y_at_least_one = false; break;
    }
}

} // namespace

Neighborhood neighborhood(const ChainPair& config, ChainId chain, std::size_t i,
                          Boundary boundary) {
    const std::size_t n = config.size();
    if (i >= n) {
        throw UsageError("neighborhood: node index " + std::to_string(i) +
                         " out of range for n=" + std::to_string(n));
    }
    const auto s = static_cast<std::ptrdiff_t>(i);
    if (chain == ChainId::X) {
        return {read(config.x, s - 1, boundary), read(config.x, s + 1, boundary),
                read(config.y, s - 1, boundary), read(config.y, s, boundary)};
    }
    return {read(config.y, s - 1, boundary), read(config.y, s + 1, boundary),
            read(config.x, s, boundary), read(config.x, s + 1, boundary)};
}

int sigma(const Neighborhood& nb) noexcept {
    int count = 0;
    for (NodeState s : nb) count += (s == NodeState::Excited);
    return count;
}

ChainPair step(const ChainPair& config, const RuleSpec& spec) {
    const std::size_t n = config.size();
    bool x_alo = true, y_alo = true;
    predicates_for(spec.rule, x_alo, y_alo);

    ChainPair next;
    next.x.resize(n);
    next.y.resize(n);
    next.t = config.t + 1;

    const auto& x = config.x;
    const auto& y = config.y;
    const Boundary b = spec.boundary;

    for (std::size_t i = 0; i < n; ++i) {
        const auto s = static_cast<std::ptrdiff_t>(i);
        // chain x: (x[i-1], x[i+1], y[i-1], y[i])
        switch (x[i]) {
        case NodeState::Excited: next.x[i] = NodeState::Refractory; break;
        case NodeState::Refractory: next.x[i] = NodeState::Resting; break;
        case NodeState::Resting: {
            const int sig = (read(x, s - 1, b) == NodeState::Excited) +
                            (read(x, s + 1, b) == NodeState::Excited) +
                            (read(y, s - 1, b) == NodeState::Excited) +
                            (y[i] == NodeState::Excited);
            next.x[i] = excites(sig, x_alo) ? NodeState::Excited : NodeState::Resting;
            break;
        }
        }
        // chain y: (y[i-1], y[i+1], x[i], x[i+1])
        switch (y[i]) {
        case NodeState::Excited: next.y[i] = NodeState::Refractory; break;
        case NodeState::Refractory: next.y[i] = NodeState::Resting; break;
        case NodeState::Resting: {
            const int sig = (read(y, s - 1, b) == NodeState::Excited) +
                            (read(y, s + 1, b) == NodeState::Excited) +
                            (x[i] == NodeState::Excited) +
                            (read(x, s + 1, b) == NodeState::Excited);
            next.y[i] = excites(sig, y_alo) ? NodeState::Excited : NodeState::Resting;
            break;
        }
        }
    }
    return next;
}

ChainPair random_init(std::size_t n, double p_excited, double p_refractory,
                      std::uint64_t seed) {
    if (n < 2) throw UsageError("random_init: n must be >= 2");
    if (p_excited < 0.0 || p_refractory < 0.0 || p_excited + p_refractory > 1.0) {
        throw UsageError("random_init: probabilities must be non-negative and sum to <= 1");
    }
    SplitMix64 rng(seed);
    ChainPair cp;
    cp.x.resize(n);
    cp.y.resize(n);
    // Chain x is drawn first, then chain y, one uniform per node.
    for (auto* chain : {&cp.x, &cp.y}) {
        for (std::size_t i = 0; i < n; ++i) {
            const double u = rng.next_double();
            (*chain)[i] = u < p_excited                ? NodeState::Excited
                          : u < p_excited + p_refractory ? NodeState::Refractory
                                                         : NodeState::Resting;
        }
    }
    return cp;
}

RunResult run(const ChainPair& initial, const RuleSpec& spec, std::size_t steps) {
    if (steps < 1) throw UsageError("run: steps must be >= 1");
    const std::size_t n = initial.size();

    RunResult out;
    out.diagram_x.chain_id = ChainId::X;
    out.diagram_y.chain_id = ChainId::Y;
    out.diagram_x.n = out.diagram_y.n = n;
    out.diagram_x.cells.reserve((steps + 1) * n);
    out.diagram_y.cells.reserve((steps + 1) * n);
    out.activity_x.per_step_excited.reserve(steps + 1);
    out.activity_y.per_step_excited.reserve(steps + 1);

    auto record = [&](const ChainPair& cp) {
        out.diagram_x.cells.insert(out.diagram_x.cells.end(), cp.x.begin(), cp.x.end());
        out.diagram_y.cells.insert(out.diagram_y.cells.end(), cp.y.begin(), cp.y.end());
        std::uint32_t ex = 0, ey = 0;
        for (NodeState s : cp.x) ex += (s == NodeState::Excited);
        for (NodeState s : cp.y) ey += (s == NodeState::Excited);
        out.activity_x.per_step_excited.push_back(ex);
        out.activity_y.per_step_excited.push_back(ey);
    };

    ChainPair current = initial;
    record(current);
    for (std::size_t k = 0; k < steps; ++k) {
        current = step(current, spec);
        record(current);
    }
    return out;
}

} // namespace myxo::actin
