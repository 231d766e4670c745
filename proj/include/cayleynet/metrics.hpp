#pragma once

// Distance-based measures: BFS layers, diameter, girth, degrees, Moore bound.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cayleynet/graph.hpp"

namespace cayleynet {

using BigInt = boost::multiprecision::cpp_int;

/// Non-negative reduced fraction.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t num, std::int64_t den);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

struct DistancePartition {
    Vertex source = 0;
    std::vector<std::vector<Vertex>> layers;  // layers[i] = X_i(source), each sorted
    std::vector<Vertex> unreachable;
};

/// BFS distances from v; -1 marks unreachable vertices.
std::vector<std::int32_t> bfs_distances(const Graph& g, Vertex v);
DistancePartition distance_layers(const Graph& g, Vertex v);

struct DiameterResult {
    std::size_t value = 0;
    bool exact = true;
    /// "all-pairs", "vertex-transitive" (one BFS from a Cayley graph vertex) or "sampled"
    std::string method;
};

struct DiameterOptions {
    /// Edge-visit budget for all-pairs BFS; beyond it sources are sampled.
    std::uint64_t work_budget = 20'000'000'000ULL;
    /// Cayley graphs are vertex-transitive, so one eccentricity is the diameter.
    bool use_transitivity = true;
};

/// Throws InvalidArgument on a disconnected or empty graph.
DiameterResult diameter(const Graph& g, const DiameterOptions& options = {});

/// Shortest cycle length; empty for forests.
std::optional<std::size_t> girth(const Graph& g);

struct DegreeStats {
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    bool regular = true;
};

DegreeStats degree_stats(const Graph& g);

/// 1 + Delta * sum_{i<D} (Delta-1)^i, with Delta = 1 giving 2 and D = 0 giving 1.
BigInt moore_bound(std::uint64_t max_degree, std::uint64_t diam);

struct BipartiteResult {
    bool bipartite = true;
    std::vector<std::uint8_t> coloring;  // set when bipartite
    std::vector<Vertex> odd_cycle;       // closed walk order, set when not bipartite
};

BipartiteResult is_bipartite(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace cayleynet
