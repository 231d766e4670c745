#include "cayleynet/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "cayleynet/errors.hpp"

namespace cayleynet {

Rational Rational::make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InvalidArgument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    auto g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    return {num / g, den / g};
}

std::vector<std::int32_t> bfs_distances(const Graph& g, Vertex v) {
    std::vector<std::int32_t> dist(g.vertex_count(), -1);
    std::vector<Vertex> queue{v};
    queue.reserve(g.vertex_count());
    dist[v] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto u = queue[head];
        for (auto w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

DistancePartition distance_layers(const Graph& g, Vertex v) {
    if (v >= g.vertex_count()) throw InvalidArgument("vertex out of range");
    auto dist = bfs_distances(g, v);
    DistancePartition p;
    p.source = v;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (dist[u] < 0) {
            p.unreachable.push_back(u);
            continue;
        }
        if (static_cast<std::size_t>(dist[u]) >= p.layers.size()) p.layers.resize(dist[u] + 1);
        p.layers[dist[u]].push_back(u);
    }
    return p;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](auto d) { return d < 0; });
}

namespace {

std::size_t eccentricity(const Graph& g, Vertex v) {
    auto dist = bfs_distances(g, v);
    std::int32_t best = 0;
    for (auto d : dist) {
        if (d < 0) throw InvalidArgument("diameter of a disconnected graph");
        best = std::max(best, d);
    }
    return static_cast<std::size_t>(best);
}

}  // namespace

DiameterResult diameter(const Graph& g, const DiameterOptions& options) {
    const auto n = g.vertex_count();
    if (n == 0) throw InvalidArgument("diameter of an empty graph");
    DiameterResult r;
    if (options.use_transitivity && g.is_cayley()) {
        r.value = eccentricity(g, 0);
        r.method = "vertex-transitive";
        return r;
    }
    const std::uint64_t per_source = 2 * static_cast<std::uint64_t>(g.edge_count()) + n;
    const std::uint64_t sources = std::max<std::uint64_t>(1, options.work_budget / std::max<std::uint64_t>(per_source, 1));
    if (sources >= n) {
        for (Vertex v = 0; v < n; ++v) r.value = std::max(r.value, eccentricity(g, v));
        r.method = "all-pairs";
        return r;
    }
    // evenly spaced sources give a lower bound
    for (std::uint64_t i = 0; i < sources; ++i) r.value = std::max(r.value, eccentricity(g, static_cast<Vertex>(i * n / sources)));
    r.exact = false;
    r.method = "sampled";
    return r;
}

std::optional<std::size_t> girth(const Graph& g) {
    const auto n = g.vertex_count();
    std::optional<std::size_t> best;
    std::vector<std::int32_t> dist(n, -1);
    std::vector<Vertex> parent(n, 0);
    std::vector<Vertex> queue;
    // one root is enough for vertex-transitive input
    const Vertex roots = g.is_cayley() && n > 0 ? 1 : static_cast<Vertex>(n);
    for (Vertex r = 0; r < roots; ++r) {
        queue.assign(1, r);
        dist[r] = 0;
        parent[r] = r;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto u = queue[head];
            if (best && static_cast<std::size_t>(2 * dist[u] + 1) >= *best) break;
            for (auto w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    auto len = static_cast<std::size_t>(dist[u] + dist[w] + 1);
                    if (!best || len < *best) best = len;
                }
            }
        }
        for (auto v : queue) dist[v] = -1;
        if (best && *best == 3) break;
    }
    return best;
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    if (g.vertex_count() == 0) return s;
    s.min_degree = s.max_degree = g.degree(0);
    for (Vertex v = 1; v < g.vertex_count(); ++v) {
        s.min_degree = std::min(s.min_degree, g.degree(v));
        s.max_degree = std::max(s.max_degree, g.degree(v));
    }
    s.regular = s.min_degree == s.max_degree;
    return s;
}

BigInt moore_bound(std::uint64_t max_degree, std::uint64_t diam) {
    if (diam == 0) return 1;
    if (max_degree == 0) return 1;
    if (max_degree == 1) return 2;
    BigInt sum = 0, power = 1;
    for (std::uint64_t i = 0; i < diam; ++i) {
        sum += power;
        power *= (max_degree - 1);
    }
    return 1 + BigInt(max_degree) * sum;
}

BipartiteResult is_bipartite(const Graph& g) {
    const auto n = g.vertex_count();
    BipartiteResult r;
    std::vector<std::int8_t> colour(n, -1);
    std::vector<Vertex> parent(n, 0);
    std::vector<std::int32_t> depth(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        parent[s] = s;
        std::vector<Vertex> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto u = queue[head];
            for (auto w : g.neighbors(u)) {
                if (colour[w] < 0) {
                    colour[w] = static_cast<std::int8_t>(1 - colour[u]);
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if (colour[w] == colour[u]) {
                    // climb both tree paths to their meeting point
                    std::vector<Vertex> left{u}, right{w};
                    Vertex a = u, b = w;
                    while (depth[a] > depth[b]) left.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) right.push_back(b = parent[b]);
                    while (a != b) {
                        left.push_back(a = parent[a]);
                        right.push_back(b = parent[b]);
                    }
                    right.pop_back();
                    r.bipartite = false;
                    r.odd_cycle = std::move(left);
                    r.odd_cycle.insert(r.odd_cycle.end(), right.rbegin(), right.rend());
                    return r;
                }
            }
        }
    }
    r.coloring.assign(colour.begin(), colour.end());
    return r;
}

}  // namespace cayleynet
