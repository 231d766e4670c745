#pragma once

// Vertex and edge connectivity by unit-capacity max-flow, Menger path systems,
// atomic parts and the connectivity predicates used by the property checks.

#include <cstdint>
#include <optional>
#include <vector>

#include "cayleynet/containers.hpp"
#include "cayleynet/graph.hpp"
#include "cayleynet/guards.hpp"

namespace cayleynet {

struct VertexConnectivity {
    std::size_t kappa = 0;
    /// Minimum separating set; empty when complete or disconnected.
    std::vector<Vertex> separator;
    bool complete = false;
};

struct EdgeConnectivity {
    std::size_t lambda = 0;
    std::vector<Edge> cut;          // E(side, complement of side)
    std::vector<Vertex> side;       // the S of the cut
};

/// Throws InvalidArgument for fewer than two vertices.
VertexConnectivity vertex_connectivity(const Graph& g);
EdgeConnectivity edge_connectivity(const Graph& g);

/// Maximum number of vertex-disjoint s-t paths between two non-adjacent
/// vertices (also the minimum s-t separator size). Stops early at `limit`.
std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t limit = SIZE_MAX);

/// Menger path system for s != t. Adjacent pairs use the direct edge as one path.
Container max_independent_paths(const Graph& g, Vertex s, Vertex t);

struct Atom {
    std::vector<Vertex> vertices;   // sorted
    std::vector<Vertex> separator;  // N(A), sorted
};

/// All atomic parts. Exponential; refused beyond guards.atom_vertices or
/// guards.atom_kappa, and for complete or disconnected input.
std::vector<Atom> atoms(const Graph& g, const Guards& guards = {});

struct ConnectivityReport {
    std::size_t kappa = 0;
    std::size_t lambda = 0;
    std::size_t delta = 0;
    std::optional<std::vector<Vertex>> min_vertex_separator;  // absent for complete graphs
    std::vector<Edge> min_edge_cut;
    bool optimal_fault_tolerance = false;  // kappa == delta
    long long fault_tolerance = 0;         // kappa - 1
    bool is_hypo_connected = false;        // kappa < delta
    /// kappa >= ceil(2(delta+1)/3); only evaluated for vertex-transitive input.
    std::optional<bool> watkins_lower_bound_ok;
};

/// `vertex_transitive` defaults to "is a Cayley graph".
ConnectivityReport connectivity_report(const Graph& g, std::optional<bool> vertex_transitive = std::nullopt);

bool contains_k4(const Graph& g);

struct GaoNovickResult {
    bool applicable = false;  // Cayley, hypo-connected and atoms enumerable
    std::string reason;       // why not applicable
    std::vector<Vertex> atom; // the atom containing the identity
    bool subgroup = false;
    bool generated_by_atom_generators = false;  // A = <A cap S>
    bool inside_ss = false;                     // A subset of SS

    bool holds() const noexcept { return !applicable || (subgroup && generated_by_atom_generators && inside_ss); }
};

GaoNovickResult gao_novick_check(const Graph& g, const Guards& guards = {});

}  // namespace cayleynet
