#pragma once

#include <cstdint>

#include "myxo/geometry/proximity.hpp"

namespace myxo::geom {

/// Erdős–Rényi G(n, p): each unordered pair is an edge independently with
/// probability p. Deterministic per seed; all weights are 1.
ProximityGraph er_random(std::uint32_t n, double p, std::uint64_t seed);

/// Watts–Strogatz small world: a ring lattice where every node connects to
/// its k/2 nearest neighbours on each side, then each lattice edge (u, v) is
/// rewired to (u, random) with probability beta, avoiding self-loops and
/// duplicate edges. Requires n > k >= 2 with k even. Deterministic per seed;
/// all weights are 1.
ProximityGraph watts_strogatz(std::uint32_t n, std::uint32_t k, double beta,
                              std::uint64_t seed);

} // namespace myxo::geom
