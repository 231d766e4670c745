#include "cayleynet/connectivity.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "cayleynet/errors.hpp"
#include "cayleynet/metrics.hpp"

namespace cayleynet {

namespace {

// Residual network with paired arcs (arc a and a ^ 1 are mutual reverses).
class FlowNet {
public:
    explicit FlowNet(std::size_t nodes) : out_(nodes) {}

    void add_arc(std::size_t u, std::size_t v, int cap, int reverse_cap = 0) {
        out_[u].push_back(arcs_.size());
        arcs_.push_back({static_cast<std::uint32_t>(v), cap});
        out_[v].push_back(arcs_.size());
        arcs_.push_back({static_cast<std::uint32_t>(u), reverse_cap});
        base_.push_back(cap);
        base_.push_back(reverse_cap);
    }

    void reset() {
        for (std::size_t a = 0; a < arcs_.size(); ++a) arcs_[a].cap = base_[a];
    }

    /// Augments along shortest paths until `limit` units or no path remains.
    std::size_t max_flow(std::size_t s, std::size_t t, std::size_t limit) {
        std::size_t flow = 0;
        std::vector<std::int64_t> pred(out_.size());
        std::vector<std::size_t> queue;
        while (flow < limit) {
            std::fill(pred.begin(), pred.end(), -1);
            pred[s] = -2;
            queue.assign(1, s);
            for (std::size_t head = 0; head < queue.size() && pred[t] == -1; ++head) {
                auto u = queue[head];
                for (auto a : out_[u]) {
                    auto v = arcs_[a].to;
                    if (arcs_[a].cap > 0 && pred[v] == -1) {
                        pred[v] = static_cast<std::int64_t>(a);
                        queue.push_back(v);
                    }
                }
            }
            if (pred[t] == -1) break;
            for (auto v = t; v != s;) {
                auto a = static_cast<std::size_t>(pred[v]);
                arcs_[a].cap -= 1;
                arcs_[a ^ 1].cap += 1;
                v = arcs_[a ^ 1].to;
            }
            ++flow;
        }
        return flow;
    }

    std::vector<bool> residual_reach(std::size_t s) const {
        std::vector<bool> seen(out_.size(), false);
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (auto a : out_[u])
                if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = true;
                    stack.push_back(arcs_[a].to);
                }
        }
        return seen;
    }

    int flow_on(std::size_t a) const { return base_[a] - arcs_[a].cap; }
    const std::vector<std::size_t>& out(std::size_t u) const { return out_[u]; }
    std::uint32_t head(std::size_t a) const { return arcs_[a].to; }

private:
    struct Arc {
        std::uint32_t to;
        int cap;
    };
    std::vector<Arc> arcs_;
    std::vector<int> base_;
    std::vector<std::vector<std::size_t>> out_;
};

std::size_t in_node(Vertex v) { return 2 * static_cast<std::size_t>(v); }
std::size_t out_node(Vertex v) { return 2 * static_cast<std::size_t>(v) + 1; }

// Each vertex becomes in -> out with capacity 1; edges become uncapacitated
// arcs out(u) -> in(w), so every finite cut is a vertex cut.
FlowNet split_network(const Graph& g, std::optional<Edge> skip = std::nullopt) {
    const auto n = g.vertex_count();
    const int inf = static_cast<int>(n) + 1;
    FlowNet net(2 * n);
    for (Vertex v = 0; v < n; ++v) net.add_arc(in_node(v), out_node(v), 1);
    for (Vertex u = 0; u < n; ++u)
        for (auto w : g.neighbors(u)) {
            if (skip && ((u == skip->first && w == skip->second) || (u == skip->second && w == skip->first))) continue;
            net.add_arc(out_node(u), in_node(w), inf);
        }
    return net;
}

std::vector<Vertex> separator_from(const FlowNet& net, std::size_t n, Vertex s) {
    auto reach = net.residual_reach(out_node(s));
    std::vector<Vertex> sep;
    for (Vertex v = 0; v < n; ++v)
        if (reach[in_node(v)] && !reach[out_node(v)]) sep.push_back(v);
    return sep;
}

std::size_t min_degree_vertex(const Graph& g) {
    Vertex best = 0;
    for (Vertex v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) < g.degree(best)) best = v;
    return best;
}

bool is_complete(const Graph& g) {
    const auto n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

std::vector<std::vector<Vertex>> components_without(const Graph& g, const std::vector<bool>& removed) {
    const auto n = g.vertex_count();
    std::vector<std::int64_t> comp(n, -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (removed[s] || comp[s] >= 0) continue;
        std::vector<Vertex> members{s};
        comp[s] = static_cast<std::int64_t>(out.size());
        for (std::size_t head = 0; head < members.size(); ++head)
            for (auto w : g.neighbors(members[head]))
                if (!removed[w] && comp[w] < 0) {
                    comp[w] = comp[s];
                    members.push_back(w);
                }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::vector<Vertex> neighbourhood_of(const Graph& g, const std::vector<Vertex>& part) {
    std::set<Vertex> inside(part.begin(), part.end()), nb;
    for (auto v : part)
        for (auto w : g.neighbors(v))
            if (!inside.count(w)) nb.insert(w);
    return {nb.begin(), nb.end()};
}

}  // namespace

std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t limit) {
    if (s == t || g.adjacent(s, t)) throw InvalidArgument("local vertex connectivity needs distinct non-adjacent vertices");
    auto net = split_network(g);
    return net.max_flow(out_node(s), in_node(t), limit);
}

VertexConnectivity vertex_connectivity(const Graph& g) {
    const auto n = g.vertex_count();
    if (n < 2) throw InvalidArgument("vertex connectivity needs at least two vertices");
    VertexConnectivity r;
    if (!is_connected(g)) return r;
    if (is_complete(g)) {
        r.kappa = n - 1;
        r.complete = true;
        return r;
    }
    // Reduction: flows from a min-degree vertex v to its non-neighbours, and
    // between non-adjacent pairs of neighbours of v.
    const Vertex v = static_cast<Vertex>(min_degree_vertex(g));
    r.kappa = g.degree(v);
    r.separator.assign(g.neighbors(v).begin(), g.neighbors(v).end());
    auto net = split_network(g);
    auto try_pair = [&](Vertex a, Vertex b) {
        if (r.kappa == 0) return;
        net.reset();
        auto f = net.max_flow(out_node(a), in_node(b), r.kappa);
        if (f < r.kappa) {
            r.kappa = f;
            r.separator = separator_from(net, n, a);
        }
    };
    for (Vertex t = 0; t < n; ++t)
        if (t != v && !g.adjacent(v, t)) try_pair(v, t);
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.adjacent(nb[i], nb[j])) try_pair(nb[i], nb[j]);
    return r;
}

EdgeConnectivity edge_connectivity(const Graph& g) {
    const auto n = g.vertex_count();
    if (n < 2) throw InvalidArgument("edge connectivity needs at least two vertices");
    EdgeConnectivity r;
    auto side_cut = [&](std::vector<Vertex> side) {
        std::vector<bool> in(n, false);
        for (auto v : side) in[v] = true;
        r.cut.clear();
        for (auto [a, b] : g.edges())
            if (in[a] != in[b]) r.cut.emplace_back(a, b);
        r.side = std::move(side);
    };
    if (!is_connected(g)) {
        auto comps = components_without(g, std::vector<bool>(n, false));
        side_cut(comps.front());
        r.lambda = 0;
        return r;
    }
    const Vertex v = static_cast<Vertex>(min_degree_vertex(g));
    r.lambda = g.degree(v);
    side_cut({v});
    FlowNet net(n);
    for (auto [a, b] : g.edges()) net.add_arc(a, b, 1, 1);
    for (Vertex t = 1; t < n && r.lambda > 0; ++t) {
        net.reset();
        auto f = net.max_flow(0, t, r.lambda);
        if (f < r.lambda) {
            r.lambda = f;
            auto reach = net.residual_reach(0);
            std::vector<Vertex> side;
            for (Vertex u = 0; u < n; ++u)
                if (reach[u]) side.push_back(u);
            side_cut(std::move(side));
        }
    }
    return r;
}

Container max_independent_paths(const Graph& g, Vertex s, Vertex t) {
    const auto n = g.vertex_count();
    if (s == t) throw InvalidArgument("independent paths need s != t");
    if (s >= n || t >= n) throw InvalidArgument("vertex out of range");
    std::vector<std::vector<Vertex>> paths;
    std::optional<Edge> skip;
    if (g.adjacent(s, t)) {
        paths.push_back({s, t});
        skip = Edge{std::min(s, t), std::max(s, t)};
    }
    auto net = split_network(g, skip);
    auto flow = net.max_flow(out_node(s), in_node(t), SIZE_MAX);

    // decompose the integral flow, always taking the lowest-index arc with flow left
    std::vector<int> remaining;
    for (std::size_t u = 0; u < 2 * n; ++u)
        for (auto a : net.out(u))
            if ((a & 1) == 0) {
                if (remaining.size() <= a) remaining.resize(a + 1, 0);
                remaining[a] = net.flow_on(a);
            }
    for (std::size_t k = 0; k < flow; ++k) {
        std::vector<Vertex> path{s};
        std::size_t cur = out_node(s);
        while (cur != in_node(t)) {
            std::size_t next_arc = SIZE_MAX;
            for (auto a : net.out(cur))
                if ((a & 1) == 0 && remaining[a] > 0) {
                    next_arc = a;
                    break;
                }
            if (next_arc == SIZE_MAX) throw std::logic_error("flow decomposition lost conservation");
            --remaining[next_arc];
            cur = net.head(next_arc);
            if (cur % 2 == 0) {
                auto v = static_cast<Vertex>(cur / 2);
                auto seen = std::find(path.begin(), path.end(), v);
                if (seen != path.end()) {
                    path.erase(seen + 1, path.end());  // strip the cycle
                } else {
                    path.push_back(v);
                }
            }
        }
        paths.push_back(std::move(path));
    }
    return make_container(s, t, std::move(paths));
}

std::vector<Atom> atoms(const Graph& g, const Guards& guards) {
    const auto n = g.vertex_count();
    if (n > guards.atom_vertices)
        throw GuardExceeded("atom enumeration limited to " + std::to_string(guards.atom_vertices) + " vertices");
    if (n < 2 || !is_connected(g)) throw InvalidArgument("atoms need a connected graph");
    if (is_complete(g)) throw InvalidArgument("complete graphs have no separating sets");
    auto kc = vertex_connectivity(g);
    if (kc.kappa > guards.atom_kappa)
        throw GuardExceeded("atom enumeration limited to connectivity " + std::to_string(guards.atom_kappa));

    std::set<std::vector<Vertex>> parts;
    std::vector<bool> removed(n, false);
    // lexicographic enumeration of kappa-subsets
    std::vector<std::size_t> idx(kc.kappa);
    for (std::size_t i = 0; i < kc.kappa; ++i) idx[i] = i;
    while (true) {
        for (auto i : idx) removed[i] = true;
        auto comps = components_without(g, removed);
        if (comps.size() >= 2)
            for (auto& c : comps) parts.insert(std::move(c));
        for (auto i : idx) removed[i] = false;
        std::size_t i = kc.kappa;
        while (i > 0 && idx[i - 1] == n - kc.kappa + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < kc.kappa; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::size_t p = SIZE_MAX;
    for (const auto& part : parts) p = std::min(p, part.size());
    std::vector<Atom> out;
    for (const auto& part : parts)
        if (part.size() == p) out.push_back({part, neighbourhood_of(g, part)});
    return out;
}

ConnectivityReport connectivity_report(const Graph& g, std::optional<bool> vertex_transitive) {
    ConnectivityReport r;
    auto vc = vertex_connectivity(g);
    auto ec = edge_connectivity(g);
    r.kappa = vc.kappa;
    r.lambda = ec.lambda;
    r.delta = degree_stats(g).min_degree;
    if (!vc.complete) r.min_vertex_separator = vc.separator;
    r.min_edge_cut = ec.cut;
    r.optimal_fault_tolerance = r.kappa == r.delta;
    r.fault_tolerance = static_cast<long long>(r.kappa) - 1;
    r.is_hypo_connected = r.kappa < r.delta;
    if (vertex_transitive.value_or(g.is_cayley())) r.watkins_lower_bound_ok = 3 * r.kappa >= 2 * (r.delta + 1);
    return r;
}

bool contains_k4(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        std::vector<Vertex> common;
        std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(), g.neighbors(v).begin(), g.neighbors(v).end(),
                              std::back_inserter(common));
        for (std::size_t i = 0; i < common.size(); ++i)
            for (std::size_t j = i + 1; j < common.size(); ++j)
                if (g.adjacent(common[i], common[j])) return true;
    }
    return false;
}

GaoNovickResult gao_novick_check(const Graph& g, const Guards& guards) {
    GaoNovickResult r;
    if (!g.is_cayley()) {
        r.reason = "not a Cayley graph";
        return r;
    }
    if (g.vertex_count() > guards.atom_vertices) {
        r.reason = "too many vertices for atom enumeration";
        return r;
    }
    auto vc = vertex_connectivity(g);
    if (vc.complete || vc.kappa == 0 || vc.kappa >= degree_stats(g).min_degree) {
        r.reason = "not hypo-connected";
        return r;
    }
    if (vc.kappa > guards.atom_kappa) {
        r.reason = "connectivity above the atom guard";
        return r;
    }
    const auto& info = *g.cayley();
    for (const auto& a : atoms(g, guards))
        if (std::binary_search(a.vertices.begin(), a.vertices.end(), Vertex{0})) r.atom = a.vertices;
    if (r.atom.empty()) {
        r.reason = "identity lies in no atom";
        return r;
    }
    r.applicable = true;

    std::unordered_set<GroupElement, GroupElementHash> a_set, s_set(info.generators.begin(), info.generators.end());
    for (auto v : r.atom) a_set.insert(info.elements[v]);

    r.subgroup = true;
    for (const auto& x : a_set)
        for (const auto& y : a_set)
            if (!a_set.count(compose(x, y))) r.subgroup = false;

    std::vector<GroupElement> a_cap_s;
    for (const auto& s : info.generators)
        if (a_set.count(s)) a_cap_s.push_back(s);
    if (!a_cap_s.empty()) {
        auto gen = closure(a_cap_s);
        std::unordered_set<GroupElement, GroupElementHash> gen_set(gen.begin(), gen.end());
        r.generated_by_atom_generators = gen_set == a_set;
    }

    std::unordered_set<GroupElement, GroupElementHash> ss;
    for (const auto& s : info.generators)
        for (const auto& t : info.generators) ss.insert(compose(s, t));
    r.inside_ss = std::all_of(a_set.begin(), a_set.end(), [&](const auto& x) { return ss.count(x) > 0; });
    return r;
}

}  // namespace cayleynet
