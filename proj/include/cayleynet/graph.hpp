#pragma once

// Immutable simple undirected graphs, the Cayley construction and the named
// topology families.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cayleynet/groups.hpp"

namespace cayleynet {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;  // always first < second

/// Where a graph came from: family name plus integer parameters.
struct FamilyMeta {
    std::string name;
    std::map<std::string, std::vector<long long>> params;

    friend bool operator==(const FamilyMeta&, const FamilyMeta&) = default;
};

/// Group data behind a Cayley graph. Vertex i is elements[i].
struct CayleyInfo {
    GroupSpec spec;
    std::vector<GroupElement> elements;
    std::vector<GroupElement> generators;
    /// generator index -> index of its {s, s^-1} pair
    std::vector<std::uint32_t> generator_pair;

    std::optional<Vertex> index_of(const GroupElement& g) const;
};

class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return targets_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    bool adjacent(Vertex u, Vertex v) const;

    /// All edges (u < v), sorted.
    std::vector<Edge> edges() const;

    bool has_vertex_labels() const noexcept { return !vertex_labels_.empty(); }
    const std::vector<std::string>& vertex_labels() const noexcept { return vertex_labels_; }
    /// Label text for display: the vertex label when present, else the index.
    std::string vertex_name(Vertex v) const;

    bool has_edge_labels() const noexcept { return !arc_labels_.empty(); }
    std::optional<std::uint32_t> edge_label(Vertex u, Vertex v) const;

    const std::optional<FamilyMeta>& family_meta() const noexcept { return meta_; }
    const std::shared_ptr<const CayleyInfo>& cayley() const noexcept { return cayley_; }
    bool is_cayley() const noexcept { return cayley_ != nullptr; }

    Graph with_meta(FamilyMeta meta) const;
    Graph without_cayley() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.offsets_ == b.offsets_ && a.targets_ == b.targets_ && a.vertex_labels_ == b.vertex_labels_ &&
               a.arc_labels_ == b.arc_labels_;
    }

private:
    friend class GraphBuilder;

    std::vector<std::size_t> offsets_;
    std::vector<Vertex> targets_;
    std::vector<std::uint32_t> arc_labels_;  // parallel to targets_
    std::vector<std::string> vertex_labels_;
    std::optional<FamilyMeta> meta_;
    std::shared_ptr<const CayleyInfo> cayley_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n) : n_(n) {}

    /// Duplicate edges collapse (the smallest label wins); loops throw.
    void add_edge(Vertex u, Vertex v, std::optional<std::uint32_t> label = std::nullopt);
    void set_vertex_labels(std::vector<std::string> labels);
    void set_meta(FamilyMeta meta) { meta_ = std::move(meta); }
    void set_cayley(std::shared_ptr<const CayleyInfo> info) { cayley_ = std::move(info); }

    Graph build() &&;

private:
    struct PendingEdge {
        Vertex u, v;
        std::uint32_t label;
        bool operator<(const PendingEdge& o) const { return std::tie(u, v, label) < std::tie(o.u, o.v, o.label); }
    };
    std::size_t n_;
    std::vector<PendingEdge> edges_;
    bool any_label_ = false;
    bool all_labeled_ = true;
    std::vector<std::string> labels_;
    std::optional<FamilyMeta> meta_;
    std::shared_ptr<const CayleyInfo> cayley_;
};

/// Structural problems (empty when the graph is well formed).
std::vector<std::string> validate(const Graph& g);

// ---------------------------------------------------------------- construction

/// Cay(<S>, S) with edges {h, s*h}. Requires an identity-free, symmetric S.
Graph cayley_graph(const GeneratingSet& s, const Guards& guards = {});

enum class Family : std::uint8_t {
    Hypercube,
    Folded,
    Augmented,
    Star,
    BubbleSort,
    ModifiedBubbleSort,
    CompleteTransposition,
    AlternatingGroupGraph,
    Circulant,
    Torus,
    Mesh,
    Harary,
    Petersen,
    Complete,
    CompleteBipartite,
    Cycle,
    Path,
};

struct FamilySpec {
    Family family = Family::Complete;
    std::size_t n = 0;
    std::size_t k = 0;                 // Harary degree
    std::size_t a = 0, b = 0;          // complete bipartite sides
    std::vector<std::uint32_t> list;   // circulant jumps, torus moduli or mesh dims

    static FamilySpec hypercube(std::size_t n) { return with_n(Family::Hypercube, n); }
    static FamilySpec folded(std::size_t n) { return with_n(Family::Folded, n); }
    static FamilySpec augmented(std::size_t n) { return with_n(Family::Augmented, n); }
    static FamilySpec star(std::size_t n) { return with_n(Family::Star, n); }
    static FamilySpec bubble_sort(std::size_t n) { return with_n(Family::BubbleSort, n); }
    static FamilySpec modified_bubble_sort(std::size_t n) { return with_n(Family::ModifiedBubbleSort, n); }
    static FamilySpec complete_transposition(std::size_t n) { return with_n(Family::CompleteTransposition, n); }
    static FamilySpec alternating_group_graph(std::size_t n) { return with_n(Family::AlternatingGroupGraph, n); }
    static FamilySpec circulant(std::size_t n, std::vector<std::uint32_t> jumps) {
        auto s = with_n(Family::Circulant, n);
        s.list = std::move(jumps);
        return s;
    }
    static FamilySpec torus(std::vector<std::uint32_t> moduli) {
        auto s = with_n(Family::Torus, 0);
        s.list = std::move(moduli);
        return s;
    }
    static FamilySpec mesh(std::vector<std::uint32_t> dims) {
        auto s = with_n(Family::Mesh, 0);
        s.list = std::move(dims);
        return s;
    }
    static FamilySpec harary(std::size_t k, std::size_t n) {
        auto s = with_n(Family::Harary, n);
        s.k = k;
        return s;
    }
    static FamilySpec petersen() { return with_n(Family::Petersen, 10); }
    static FamilySpec complete(std::size_t n) { return with_n(Family::Complete, n); }
    static FamilySpec complete_bipartite(std::size_t a, std::size_t b) {
        auto s = with_n(Family::CompleteBipartite, a + b);
        s.a = a;
        s.b = b;
        return s;
    }
    static FamilySpec cycle(std::size_t n) { return with_n(Family::Cycle, n); }
    static FamilySpec path(std::size_t n) { return with_n(Family::Path, n); }

private:
    static FamilySpec with_n(Family f, std::size_t n) {
        FamilySpec s;
        s.family = f;
        s.n = n;
        return s;
    }
};

std::string family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// Generating set used for a Cayley family; throws Unsupported for plain families.
GeneratingSet family_generators(const FamilySpec& spec);
Graph build_family(const FamilySpec& spec, const Guards& guards = {});

// ---------------------------------------------------------------- derivations

/// Vertex (u, u') gets index u * |V(Y)| + u'.
Graph cartesian_product(const Graph& x, const Graph& y);
/// Vertices are the edges of x in sorted order.
Graph line_graph(const Graph& x);
Graph complement(const Graph& x);
/// Cay(<S>, S) for the transpositions (i j), 1-based, i < j.
Graph from_transpositions(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                          const Guards& guards = {});
/// Graph on n vertices from an explicit edge list.
Graph from_edges(std::size_t n, const std::vector<Edge>& edges);
/// Subgraph induced on `keep` (relabelled 0..|keep|-1 in the given order).
Graph induced_subgraph(const Graph& x, std::span<const Vertex> keep);

}  // namespace cayleynet
