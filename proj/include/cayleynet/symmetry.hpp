#pragma once

// Automorphism groups of small graphs by individualization-refinement search,
// orbit and transitivity analysis, isomorphism testing, and the Cayley-graph
// specific checks (right regular action, regular subgroups, Aut(H,S), normality).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayleynet/graph.hpp"
#include "cayleynet/guards.hpp"
#include "cayleynet/metrics.hpp"

namespace cayleynet {

/// Image array over vertex indices.
using VertexPermutation = std::vector<Vertex>;

bool is_automorphism(const Graph& g, const VertexPermutation& p);

struct AutGroup {
    BigInt order = 1;
    /// Base points b_0, b_1, ... of the search; generators[i] fixes b_0..b_{level-1}.
    std::vector<Vertex> base;
    std::vector<VertexPermutation> generators;
    std::vector<std::size_t> generator_level;
    /// |orbit of b_i under the stabilizer of b_0..b_{i-1}|
    std::vector<std::size_t> basic_orbit_sizes;
    /// Every element, sorted lexicographically; empty when too large to store.
    std::vector<VertexPermutation> elements;
    bool elements_complete = false;

    /// Generators of the stabilizer of base[0..k-1].
    std::vector<VertexPermutation> stabilizer_generators(std::size_t k) const;
};

/// Complete automorphism group. `first_base` forces the first base point, so
/// that stabilizer_generators(1) generate its stabilizer. Refused above
/// guards.aut_vertices vertices or past guards.search_nodes search nodes.
AutGroup automorphism_group(const Graph& g, const Guards& guards = {}, std::optional<Vertex> first_base = std::nullopt);

/// Orbits of the group generated by `generators` on the vertices, each sorted,
/// listed by smallest member.
std::vector<std::vector<Vertex>> vertex_orbits(std::size_t n, const std::vector<VertexPermutation>& generators);

struct TransitivityReport {
    bool vertex_transitive = false;
    bool edge_transitive = false;
    bool arc_transitive = false;
    bool distance_transitive = false;
    /// Largest k <= cap with Aut transitive on k-arcs (0 = vertices); -1 if not vertex-transitive.
    int k_arc_transitive_max = -1;
    bool k_arc_truncated = false;  // stopped early because there were too many k-arcs
    std::size_t vertex_orbit_count = 0;
    std::size_t edge_orbit_count = 0;
    std::size_t arc_orbit_count = 0;
    BigInt aut_order = 1;
};

TransitivityReport transitivity_report(const Graph& g, int k_cap = 3, const Guards& guards = {});

/// Sizes of the orbits of the stabilizer of v, ascending.
std::vector<std::size_t> stabilizer_orbits(const Graph& g, Vertex v, const Guards& guards = {});

/// Vertex bijection x -> y preserving adjacency, or empty when none exists.
/// Throws GuardExceeded when the search budget runs out.
std::optional<VertexPermutation> graph_isomorphic(const Graph& x, const Graph& y, const Guards& guards = {});

/// The maps x -> x*h for every h, as vertex permutations (requires Cayley data).
std::vector<VertexPermutation> right_regular_action(const Graph& g);

enum class SearchVerdict : std::uint8_t { Found, None, Unknown };

struct RegularSubgroupResult {
    SearchVerdict verdict = SearchVerdict::Unknown;
    std::vector<VertexPermutation> subgroup;  // sorted, when found
    std::size_t nodes = 0;
};

/// Searches the element list of `aut` for a subgroup of order n acting
/// regularly. Exhaustive: None means no such subgroup exists; Unknown only when
/// guards.search_nodes is exhausted.
RegularSubgroupResult find_regular_subgroup(const AutGroup& aut, std::size_t n, const Guards& guards = {});

struct AutHS {
    std::uint64_t order = 0;
    std::string method;  // "transposition-graph" or "generator-images"
    /// Automorphisms as permutations of the closure indices (vertex indices of
    /// the Cayley graph); empty when too large to list.
    std::vector<VertexPermutation> elements;
    bool elements_complete = false;
};

/// Aut(H,S) = group automorphisms of H fixing S setwise. Supports transposition
/// sets generating S_n (n >= 3), binary groups, and any group of order at most
/// guards.aut_hs_group; throws Unsupported otherwise.
AutHS aut_group_fixing_S(const GeneratingSet& s, const Guards& guards = {});

struct NormalityVerdict {
    bool normal = false;
    bool grr = false;
    BigInt aut_order = 0;
    std::uint64_t group_order = 0;
    std::uint64_t aut_hs_order = 0;
    BigInt predicted_order = 0;  // |H| * |Aut(H,S)|
};

NormalityVerdict normality_verdict(const Graph& g, const Guards& guards = {});

}  // namespace cayleynet
