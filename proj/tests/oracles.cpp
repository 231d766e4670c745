#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace oracle {

Matrix adjacency(const Graph& g) {
    const auto n = g.vertex_count();
    Matrix a(n, std::vector<bool>(n, false));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
    return a;
}

std::uint64_t count_automorphisms(const Graph& g) {
    const auto n = g.vertex_count();
    auto a = adjacency(g);
    // BFS order from each component root so most new vertices have a placed neighbour
    std::vector<Vertex> order;
    std::vector<bool> seen(n, false);
    for (Vertex r = 0; r < n; ++r) {
        if (seen[r]) continue;
        std::queue<Vertex> q;
        q.push(r);
        seen[r] = true;
        while (!q.empty()) {
            auto v = q.front();
            q.pop();
            order.push_back(v);
            for (Vertex w = 0; w < n; ++w)
                if (a[v][w] && !seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
        }
    }
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == n) {
            ++count;
            return;
        }
        auto v = order[k];
        for (Vertex c = 0; c < n; ++c) {
            if (used[c] || g.degree(c) != g.degree(v)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                auto u = order[j];
                ok = a[v][u] == a[c][static_cast<Vertex>(image[u])];
            }
            if (!ok) continue;
            used[c] = true;
            image[v] = static_cast<int>(c);
            self(self, k + 1);
            used[c] = false;
            image[v] = -1;
        }
    };
    rec(rec, 0);
    return count;
}

bool isomorphic_by_permutations(const Graph& x, const Graph& y) {
    const auto n = x.vertex_count();
    if (n != y.vertex_count() || x.edge_count() != y.edge_count()) return false;
    auto ax = adjacency(x);
    auto ay = adjacency(y);
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), Vertex{0});
    do {
        bool ok = true;
        for (Vertex u = 0; u < n && ok; ++u)
            for (Vertex v = u + 1; v < n && ok; ++v) ok = ax[u][v] == ay[p[u]][p[v]];
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

namespace {

bool connected_without(const Matrix& a, const std::vector<bool>& removed, Vertex s, Vertex t) {
    const auto n = a.size();
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        if (v == t) return true;
        for (Vertex w = 0; w < n; ++w)
            if (a[v][w] && !seen[w] && !removed[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return false;
}

}  // namespace

std::size_t min_separator(const Graph& g, Vertex s, Vertex t) {
    const auto n = g.vertex_count();
    auto a = adjacency(g);
    std::size_t best = n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (mask >> s & 1u || mask >> t & 1u) continue;
        auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (size >= best) continue;
        std::vector<bool> removed(n);
        for (Vertex v = 0; v < n; ++v) removed[v] = mask >> v & 1u;
        if (!connected_without(a, removed, s, t)) best = size;
    }
    return best;
}

std::size_t vertex_connectivity(const Graph& g) {
    const auto n = g.vertex_count();
    if (g.edge_count() == n * (n - 1) / 2) return n - 1;
    auto a = adjacency(g);
    std::size_t best = n - 1;
    for (Vertex s = 0; s < n; ++s)
        for (Vertex t = s + 1; t < n; ++t)
            if (!a[s][t]) best = std::min(best, min_separator(g, s, t));
    return best;
}

std::size_t edge_connectivity(const Graph& g) {
    const auto n = g.vertex_count();
    auto edges = g.edges();
    std::size_t best = SIZE_MAX;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        std::size_t cut = 0;
        for (auto [u, v] : edges)
            if ((mask >> u & 1u) != (mask >> v & 1u)) ++cut;
        best = std::min(best, cut);
    }
    return best;
}

std::vector<std::vector<int>> floyd(const Graph& g) {
    const auto n = g.vertex_count();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (Vertex v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (auto& row : d)
        for (auto& x : row)
            if (x >= inf) x = -1;
    return d;
}

std::optional<std::size_t> diameter(const Graph& g) {
    int best = 0;
    for (const auto& row : floyd(g))
        for (auto x : row) {
            if (x < 0) return std::nullopt;
            best = std::max(best, x);
        }
    return static_cast<std::size_t>(best);
}

std::optional<std::size_t> girth(const Graph& g) {
    const auto n = g.vertex_count();
    auto a = adjacency(g);
    std::optional<std::size_t> best;
    for (auto [u, v] : g.edges()) {
        std::vector<int> dist(n, -1);
        std::queue<Vertex> q;
        dist[u] = 0;
        q.push(u);
        while (!q.empty()) {
            auto x = q.front();
            q.pop();
            for (Vertex y = 0; y < n; ++y) {
                if (!a[x][y] || dist[y] >= 0) continue;
                if ((x == u && y == v) || (x == v && y == u)) continue;
                dist[y] = dist[x] + 1;
                q.push(y);
            }
        }
        if (dist[v] > 0) {
            auto len = static_cast<std::size_t>(dist[v]) + 1;
            if (!best || len < *best) best = len;
        }
    }
    return best;
}

std::uint64_t span_size(const std::vector<std::vector<int>>& rows) {
    const auto r = rows.size();
    const auto n = rows.front().size();
    std::set<std::vector<int>> span;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> v(r, 0);
        for (std::size_t j = 0; j < n; ++j)
            if (mask >> j & 1u)
                for (std::size_t i = 0; i < r; ++i) v[i] ^= rows[i][j];
        span.insert(v);
    }
    return span.size();
}

std::vector<int> then(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<std::size_t>(a[i]) - 1];
    return out;
}

}  // namespace oracle
