#pragma once

// Transposition sets S in S_n, their transposition graphs T(S), and checks
// relating the shape of T(S) to the Cayley graph Cay(S_n, S).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cayleynet/graph.hpp"
#include "cayleynet/guards.hpp"
#include "cayleynet/metrics.hpp"

namespace cayleynet {

struct TranspositionSet {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // 1-based, i < j, sorted, distinct

    /// Normalizes pair order; rejects i == j, out-of-range symbols and repeats.
    static TranspositionSet make(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> pairs);
    /// Every pair of {1..n}.
    static TranspositionSet complete(std::size_t n);

    /// The transpositions as a generating set of S_n.
    GeneratingSet generating_set() const;
};

/// File format: first line "n", then one "i j" per line; '#' starts a comment.
TranspositionSet parse_transpositions(std::string_view text);

/// T(S): vertices 1..n (labelled "1".."n", index i-1), one edge per transposition.
Graph transposition_graph(const TranspositionSet& s);

struct TranspositionReport {
    bool generates_sn = false;  // T(S) connected
    bool minimal = false;       // T(S) is a tree
    /// complete, cycle, star, path, complete-bipartite or general (first match wins)
    std::string shape;
    std::uint64_t tgraph_aut_order = 0;
    bool predicted_edge_transitive = false;
    /// n! * |Aut(T(S))|, only when T(S) is a tree or has girth >= 5 (n >= 3)
    std::optional<BigInt> predicted_aut_order;
};

TranspositionReport classify(const TranspositionSet& s, const Guards& guards = {});

struct FourCycleCheck {
    std::size_t commuting_pairs = 0;
    std::size_t non_commuting_pairs = 0;
    /// Non-commuting pairs on some 4-cycle through e (two each, from triangles in T(S)).
    std::size_t non_commuting_on_cycles = 0;
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// In Cay(S_n, S): t != k commute iff exactly one 4-cycle passes through t, e, k.
/// Counted on the built Cayley graph.
FourCycleCheck four_cycle_check(const TranspositionSet& s, const Guards& guards = {});

}  // namespace cayleynet
