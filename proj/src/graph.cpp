#include "cayleynet/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "cayleynet/errors.hpp"

namespace cayleynet {

namespace {

constexpr std::uint32_t kNoLabel = 0xffffffffu;

std::vector<long long> as_params(std::span<const std::uint32_t> v) { return {v.begin(), v.end()}; }

FamilyMeta meta_of(const FamilySpec& spec) {
    FamilyMeta m;
    m.name = family_name(spec.family);
    switch (spec.family) {
    case Family::Circulant:
        m.params["n"] = {static_cast<long long>(spec.n)};
        m.params["jumps"] = as_params(spec.list);
        break;
    case Family::Torus: m.params["moduli"] = as_params(spec.list); break;
    case Family::Mesh: m.params["dims"] = as_params(spec.list); break;
    case Family::Harary:
        m.params["k"] = {static_cast<long long>(spec.k)};
        m.params["n"] = {static_cast<long long>(spec.n)};
        break;
    case Family::CompleteBipartite:
        m.params["a"] = {static_cast<long long>(spec.a)};
        m.params["b"] = {static_cast<long long>(spec.b)};
        break;
    case Family::Petersen: break;
    default: m.params["n"] = {static_cast<long long>(spec.n)}; break;
    }
    return m;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw InvalidArgument(message);
}

std::vector<GroupElement> transpositions(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<GroupElement> out;
    out.reserve(pairs.size());
    for (auto [i, j] : pairs) out.push_back(GroupElement::transposition(n, i, j));
    return out;
}

GroupElement three_cycle(std::size_t n, std::size_t a, std::size_t b, std::size_t c) {
    auto img = GroupElement::identity_permutation(n);
    std::vector<std::uint32_t> v(img.values().begin(), img.values().end());
    v[a - 1] = static_cast<std::uint32_t>(b - 1);
    v[b - 1] = static_cast<std::uint32_t>(c - 1);
    v[c - 1] = static_cast<std::uint32_t>(a - 1);
    return GroupElement::permutation(std::move(v));
}

std::vector<GroupElement> cyclic_generators(std::span<const std::uint32_t> moduli, std::size_t axis, std::uint32_t step) {
    std::vector<std::uint32_t> m(moduli.begin(), moduli.end());
    std::vector<std::uint32_t> plus(m.size(), 0), minus(m.size(), 0);
    plus[axis] = step % m[axis];
    minus[axis] = (m[axis] - step % m[axis]) % m[axis];
    std::vector<GroupElement> out{GroupElement::tuple(plus, m)};
    if (minus != plus) out.push_back(GroupElement::tuple(minus, m));
    return out;
}

Graph plain_family(const FamilySpec& spec) {
    switch (spec.family) {
    case Family::Petersen: {
        std::vector<std::pair<int, int>> pairs;
        std::vector<std::string> labels;
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j) {
                pairs.emplace_back(i, j);
                labels.push_back(std::to_string(i) + std::to_string(j));
            }
        GraphBuilder b(pairs.size());
        for (std::size_t x = 0; x < pairs.size(); ++x)
            for (std::size_t y = x + 1; y < pairs.size(); ++y) {
                auto [a1, a2] = pairs[x];
                auto [b1, b2] = pairs[y];
                if (a1 != b1 && a1 != b2 && a2 != b1 && a2 != b2) b.add_edge(static_cast<Vertex>(x), static_cast<Vertex>(y));
            }
        b.set_vertex_labels(std::move(labels));
        return std::move(b).build();
    }
    case Family::Complete: {
        require(spec.n >= 1, "complete graph needs n >= 1");
        GraphBuilder b(spec.n);
        for (Vertex u = 0; u < spec.n; ++u)
            for (Vertex v = u + 1; v < spec.n; ++v) b.add_edge(u, v);
        return std::move(b).build();
    }
    case Family::CompleteBipartite: {
        require(spec.a >= 1 && spec.b >= 1, "complete bipartite graph needs a, b >= 1");
        GraphBuilder b(spec.a + spec.b);
        for (Vertex u = 0; u < spec.a; ++u)
            for (std::size_t v = 0; v < spec.b; ++v) b.add_edge(u, static_cast<Vertex>(spec.a + v));
        return std::move(b).build();
    }
    case Family::Cycle: {
        require(spec.n >= 3, "cycle needs n >= 3");
        GraphBuilder b(spec.n);
        for (Vertex u = 0; u < spec.n; ++u) b.add_edge(u, static_cast<Vertex>((u + 1) % spec.n));
        return std::move(b).build();
    }
    case Family::Path: {
        require(spec.n >= 1, "path needs n >= 1");
        GraphBuilder b(spec.n);
        for (Vertex u = 0; u + 1 < spec.n; ++u) b.add_edge(u, u + 1);
        return std::move(b).build();
    }
    case Family::Mesh: {
        require(!spec.list.empty(), "mesh needs at least one dimension");
        std::size_t total = 1;
        for (auto d : spec.list) {
            require(d >= 1, "mesh dimensions must be >= 1");
            total *= d;
        }
        GraphBuilder b(total);
        // mixed radix, first coordinate most significant
        std::vector<std::size_t> stride(spec.list.size(), 1);
        for (std::size_t i = spec.list.size(); i-- > 1;) stride[i - 1] = stride[i] * spec.list[i];
        for (std::size_t v = 0; v < total; ++v)
            for (std::size_t i = 0; i < spec.list.size(); ++i)
                if ((v / stride[i]) % spec.list[i] + 1 < spec.list[i])
                    b.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(v + stride[i]));
        return std::move(b).build();
    }
    default: break;
    }
    throw Unsupported("family " + family_name(spec.family) + " is a Cayley family");
}

}  // namespace

// ---------------------------------------------------------------- Graph

std::optional<Vertex> CayleyInfo::index_of(const GroupElement& g) const {
    // elements are BFS ordered, not sorted; linear scan is fine for the call sites
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == g) return static_cast<Vertex>(i);
    return std::nullopt;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u >= vertex_count() || v >= vertex_count()) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (auto v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::string Graph::vertex_name(Vertex v) const {
    return has_vertex_labels() ? vertex_labels_[v] : std::to_string(v);
}

std::optional<std::uint32_t> Graph::edge_label(Vertex u, Vertex v) const {
    if (!has_edge_labels() || u >= vertex_count()) return std::nullopt;
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return std::nullopt;
    return arc_labels_[offsets_[u] + static_cast<std::size_t>(it - nb.begin())];
}

Graph Graph::with_meta(FamilyMeta meta) const {
    Graph g = *this;
    g.meta_ = std::move(meta);
    return g;
}

Graph Graph::without_cayley() const {
    Graph g = *this;
    g.cayley_.reset();
    return g;
}

void GraphBuilder::add_edge(Vertex u, Vertex v, std::optional<std::uint32_t> label) {
    if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
    if (u >= n_ || v >= n_) throw InvalidArgument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    if (label) any_label_ = true;
    else all_labeled_ = false;
    edges_.push_back({u, v, label.value_or(kNoLabel)});
}

void GraphBuilder::set_vertex_labels(std::vector<std::string> labels) {
    if (labels.size() != n_) throw InvalidArgument("vertex label count does not match vertex count");
    labels_ = std::move(labels);
}

Graph GraphBuilder::build() && {
    if (any_label_ && !all_labeled_) throw InvalidArgument("edge labels must cover every edge");
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end(), [](const auto& a, const auto& b) { return a.u == b.u && a.v == b.v; }),
                 edges_.end());

    Graph g;
    std::vector<std::size_t> deg(n_, 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    g.offsets_.assign(n_ + 1, 0);
    for (std::size_t i = 0; i < n_; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
    g.targets_.resize(g.offsets_[n_]);
    if (any_label_) g.arc_labels_.resize(g.targets_.size());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    // sorted (u, v) order fills each row with smaller neighbours first, then larger ones
    for (const auto& e : edges_) {
        g.targets_[fill[e.u]] = e.v;
        if (any_label_) g.arc_labels_[fill[e.u]] = e.label;
        ++fill[e.u];
        g.targets_[fill[e.v]] = e.u;
        if (any_label_) g.arc_labels_[fill[e.v]] = e.label;
        ++fill[e.v];
    }
    g.vertex_labels_ = std::move(labels_);
    g.meta_ = std::move(meta_);
    g.cayley_ = std::move(cayley_);
    return g;
}

std::vector<std::string> validate(const Graph& g) {
    std::vector<std::string> problems;
    const auto n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u) {
        auto nb = g.neighbors(u);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (nb[i] >= n) problems.push_back("vertex " + std::to_string(u) + " has out-of-range neighbour");
            else if (nb[i] == u) problems.push_back("loop at " + std::to_string(u));
            else if (!g.adjacent(nb[i], u)) problems.push_back("asymmetric adjacency " + std::to_string(u) + "-" + std::to_string(nb[i]));
            if (i > 0 && nb[i - 1] >= nb[i]) problems.push_back("neighbour list of " + std::to_string(u) + " not strictly sorted");
            if (g.has_edge_labels() && nb[i] < n && g.edge_label(u, nb[i]) != g.edge_label(nb[i], u))
                problems.push_back("edge label mismatch on " + std::to_string(u) + "-" + std::to_string(nb[i]));
        }
    }
    if (g.has_vertex_labels() && g.vertex_labels().size() != n) problems.push_back("vertex labels do not cover every vertex");
    if (g.is_cayley() && g.cayley()->elements.size() != n) problems.push_back("group elements do not cover every vertex");
    return problems;
}

// ---------------------------------------------------------------- construction

Graph cayley_graph(const GeneratingSet& s, const Guards& guards) {
    if (s.size() == 0) throw InvalidArgument("empty generating set");
    auto report = validate_generating_set(s, Guards{.closure = 0});
    if (!report.identity_free) throw InvalidArgument("generating set contains the identity");
    if (!report.symmetric) throw InvalidArgument("generating set is not closed under inverses");

    auto info = std::make_shared<CayleyInfo>();
    info->spec = s.spec();
    info->generators.assign(s.elements().begin(), s.elements().end());
    info->elements = closure(s, guards.closure);

    std::uint32_t next_pair = 0;
    info->generator_pair.assign(s.size(), kNoLabel);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (info->generator_pair[i] != kNoLabel) continue;
        info->generator_pair[i] = next_pair;
        auto inv = inverse(s[i]);
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[j] == inv) info->generator_pair[j] = next_pair;
        ++next_pair;
    }

    std::unordered_map<GroupElement, Vertex, GroupElementHash> index;
    index.reserve(info->elements.size());
    std::vector<std::string> labels;
    labels.reserve(info->elements.size());
    for (std::size_t i = 0; i < info->elements.size(); ++i) {
        index.emplace(info->elements[i], static_cast<Vertex>(i));
        labels.push_back(info->elements[i].to_string());
    }

    GraphBuilder b(info->elements.size());
    for (std::size_t h = 0; h < info->elements.size(); ++h)
        for (std::size_t i = 0; i < s.size(); ++i) {
            Vertex t = index.at(compose(s[i], info->elements[h]));
            if (t > h) b.add_edge(static_cast<Vertex>(h), t, info->generator_pair[i]);
        }
    b.set_vertex_labels(std::move(labels));
    FamilyMeta meta{"cayley", {}};
    b.set_meta(meta);
    b.set_cayley(std::move(info));
    return std::move(b).build();
}

std::string family_name(Family f) {
    switch (f) {
    case Family::Hypercube: return "hypercube";
    case Family::Folded: return "folded";
    case Family::Augmented: return "augmented";
    case Family::Star: return "star";
    case Family::BubbleSort: return "bubble-sort";
    case Family::ModifiedBubbleSort: return "modified-bubble-sort";
    case Family::CompleteTransposition: return "complete-transposition";
    case Family::AlternatingGroupGraph: return "alternating-group";
    case Family::Circulant: return "circulant";
    case Family::Torus: return "torus";
    case Family::Mesh: return "mesh";
    case Family::Harary: return "harary";
    case Family::Petersen: return "petersen";
    case Family::Complete: return "complete";
    case Family::CompleteBipartite: return "complete-bipartite";
    case Family::Cycle: return "cycle";
    case Family::Path: return "path";
    }
    return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (int i = 0; i <= static_cast<int>(Family::Path); ++i) {
        auto f = static_cast<Family>(i);
        if (family_name(f) == name) return f;
    }
    return std::nullopt;
}

GeneratingSet family_generators(const FamilySpec& spec) {
    const auto n = spec.n;
    switch (spec.family) {
    case Family::Hypercube:
    case Family::Folded:
    case Family::Augmented: {
        require(n >= 1, "binary families need n >= 1");
        if (spec.family == Family::Folded) require(n >= 2, "folded hypercube needs n >= 2");
        if (spec.family == Family::Augmented) require(n >= 4, "augmented cube needs n >= 4");
        std::vector<GroupElement> gens;
        for (std::size_t i = 1; i <= n; ++i) gens.push_back(GroupElement::unit_word(n, i));
        if (spec.family == Family::Folded) gens.push_back(GroupElement::word(std::vector<std::uint32_t>(n, 1)));
        if (spec.family == Family::Augmented)
            for (std::size_t i = 1; i < n; ++i) {
                std::vector<std::uint32_t> bits(n, 0);
                std::fill(bits.end() - static_cast<std::ptrdiff_t>(i + 1), bits.end(), 1u);
                gens.push_back(GroupElement::word(std::move(bits)));
            }
        return GeneratingSet(GroupSpec::binary(n), std::move(gens));
    }
    case Family::Star:
    case Family::BubbleSort:
    case Family::ModifiedBubbleSort:
    case Family::CompleteTransposition: {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        if (spec.family == Family::Star) {
            require(n >= 2, "star graph needs n >= 2");
            for (std::size_t i = 2; i <= n; ++i) pairs.emplace_back(1, i);
        } else if (spec.family == Family::BubbleSort) {
            require(n >= 2, "bubble-sort graph needs n >= 2");
            for (std::size_t i = 1; i < n; ++i) pairs.emplace_back(i, i + 1);
        } else if (spec.family == Family::ModifiedBubbleSort) {
            require(n >= 3, "modified bubble-sort graph needs n >= 3");
            for (std::size_t i = 1; i < n; ++i) pairs.emplace_back(i, i + 1);
            pairs.emplace_back(1, n);
        } else {
            require(n >= 2, "complete transposition graph needs n >= 2");
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
        }
        return GeneratingSet(GroupSpec::symmetric(n), transpositions(n, pairs));
    }
    case Family::AlternatingGroupGraph: {
        require(n >= 3, "alternating group graph needs n >= 3");
        std::vector<GroupElement> gens;
        for (std::size_t i = 3; i <= n; ++i) {
            auto s = three_cycle(n, 1, 2, i);
            gens.push_back(s);
            gens.push_back(inverse(s));
        }
        return GeneratingSet(GroupSpec::perm_subgroup(gens), gens);
    }
    case Family::Circulant:
    case Family::Harary: {
        std::vector<std::uint32_t> jumps = spec.list;
        if (spec.family == Family::Harary) {
            require(spec.k > 1 && spec.k < n, "Harary graph needs 1 < k < n");
            require(spec.k % 2 == 0, "Harary graph is only implemented for even k");
            jumps.clear();
            for (std::uint32_t a = 1; a <= spec.k / 2; ++a) jumps.push_back(a);
        }
        require(n >= 2, "circulant needs n >= 2");
        require(!jumps.empty(), "circulant needs at least one jump");
        std::vector<std::uint32_t> seen;
        std::vector<GroupElement> gens;
        std::vector<std::uint32_t> mod{static_cast<std::uint32_t>(n)};
        for (auto a : jumps) {
            require(a >= 1 && a <= n / 2, "circulant jumps must lie in 1..n/2");
            require(std::find(seen.begin(), seen.end(), a) == seen.end(), "duplicate circulant jump");
            seen.push_back(a);
            for (auto& g : cyclic_generators(mod, 0, a)) gens.push_back(std::move(g));
        }
        return GeneratingSet(GroupSpec::cyclic_product(mod), std::move(gens));
    }
    case Family::Torus: {
        require(!spec.list.empty(), "torus needs at least one modulus");
        std::vector<GroupElement> gens;
        for (std::size_t i = 0; i < spec.list.size(); ++i)
            for (auto& g : cyclic_generators(spec.list, i, 1)) gens.push_back(std::move(g));
        return GeneratingSet(GroupSpec::cyclic_product(spec.list), std::move(gens));
    }
    default: break;
    }
    throw Unsupported("family " + family_name(spec.family) + " is not a Cayley family");
}

Graph build_family(const FamilySpec& spec, const Guards& guards) {
    switch (spec.family) {
    case Family::Petersen:
    case Family::Complete:
    case Family::CompleteBipartite:
    case Family::Cycle:
    case Family::Path:
    case Family::Mesh: return plain_family(spec).with_meta(meta_of(spec));
    default: break;
    }
    auto s = family_generators(spec);
    return cayley_graph(s, guards).with_meta(meta_of(spec));
}

// ---------------------------------------------------------------- derivations

Graph cartesian_product(const Graph& x, const Graph& y) {
    if (x.vertex_count() == 0 || y.vertex_count() == 0) throw InvalidArgument("cartesian product of an empty graph");
    const auto ny = y.vertex_count();
    GraphBuilder b(x.vertex_count() * ny);
    for (Vertex u = 0; u < x.vertex_count(); ++u)
        for (Vertex w = 0; w < ny; ++w) {
            auto self = static_cast<Vertex>(u * ny + w);
            for (auto w2 : y.neighbors(w))
                if (w < w2) b.add_edge(self, static_cast<Vertex>(u * ny + w2));
            for (auto u2 : x.neighbors(u))
                if (u < u2) b.add_edge(self, static_cast<Vertex>(u2 * ny + w));
        }
    if (x.has_vertex_labels() || y.has_vertex_labels()) {
        std::vector<std::string> labels;
        for (Vertex u = 0; u < x.vertex_count(); ++u)
            for (Vertex w = 0; w < ny; ++w) labels.push_back("(" + x.vertex_name(u) + "|" + y.vertex_name(w) + ")");
        b.set_vertex_labels(std::move(labels));
    }
    b.set_meta({"product", {}});
    return std::move(b).build();
}

Graph line_graph(const Graph& x) {
    auto es = x.edges();
    if (es.empty()) throw InvalidArgument("line graph of an edgeless graph");
    std::vector<std::vector<Vertex>> incident(x.vertex_count());
    for (std::size_t i = 0; i < es.size(); ++i) {
        incident[es[i].first].push_back(static_cast<Vertex>(i));
        incident[es[i].second].push_back(static_cast<Vertex>(i));
    }
    GraphBuilder b(es.size());
    for (const auto& list : incident)
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j) b.add_edge(list[i], list[j]);
    std::vector<std::string> labels;
    for (auto [u, v] : es) labels.push_back(x.vertex_name(u) + "-" + x.vertex_name(v));
    b.set_vertex_labels(std::move(labels));
    b.set_meta({"line", {}});
    return std::move(b).build();
}

Graph complement(const Graph& x) {
    const auto n = x.vertex_count();
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!x.adjacent(u, v)) b.add_edge(u, v);
    if (x.has_vertex_labels()) b.set_vertex_labels(x.vertex_labels());
    b.set_meta({"complement", {}});
    return std::move(b).build();
}

Graph from_transpositions(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs, const Guards& guards) {
    if (pairs.empty()) throw InvalidArgument("empty transposition list");
    for (auto [i, j] : pairs) require(i >= 1 && i < j && j <= n, "transposition pairs need 1 <= i < j <= n");
    auto gens = transpositions(n, pairs);
    GeneratingSet s(GroupSpec::perm_subgroup(gens), gens);
    FamilyMeta meta{"transpositions", {}};
    meta.params["n"] = {static_cast<long long>(n)};
    for (auto [i, j] : pairs) {
        meta.params["pairs"].push_back(static_cast<long long>(i));
        meta.params["pairs"].push_back(static_cast<long long>(j));
    }
    return cayley_graph(s, guards).with_meta(std::move(meta));
}

Graph from_edges(std::size_t n, const std::vector<Edge>& edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
}

Graph induced_subgraph(const Graph& x, std::span<const Vertex> keep) {
    std::vector<std::int64_t> pos(x.vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<std::int64_t>(i);
    GraphBuilder b(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (auto w : x.neighbors(keep[i]))
            if (pos[w] > static_cast<std::int64_t>(i)) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(pos[w]));
    return std::move(b).build();
}

}  // namespace cayleynet
