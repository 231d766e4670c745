#pragma once

// Seeded random inputs for property checks.

#include <random>

#include "cayleynet/codes.hpp"
#include "cayleynet/graph.hpp"

namespace cayleynet {

using Rng = std::mt19937_64;

/// Random spanning tree plus each remaining pair independently with probability p.
Graph random_connected_graph(std::size_t n, double p, Rng& rng);

/// Each pair independently with probability p (may be disconnected).
Graph random_graph(std::size_t n, double p, Rng& rng);

/// Uniform r x n matrix with no zero column.
BinaryMatrix random_matrix(std::size_t r, std::size_t n, Rng& rng);

}  // namespace cayleynet
