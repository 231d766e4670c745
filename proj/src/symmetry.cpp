#include "cayleynet/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "cayleynet/errors.hpp"

namespace cayleynet {

namespace {

using Colours = std::vector<std::uint32_t>;

struct VectorHash {
    std::size_t operator()(const std::vector<Vertex>& v) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto x : v) h = (h ^ x) * 0x100000001b3ULL;
        return h;
    }
};

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::size_t distinct_count(const Colours& c) {
    Colours tmp = c;
    std::sort(tmp.begin(), tmp.end());
    return static_cast<std::size_t>(std::unique(tmp.begin(), tmp.end()) - tmp.begin());
}

// Colour refinement: a vertex's new colour is the rank of (colour, sorted
// neighbour colours). Ranks depend only on the coloured graph's isomorphism
// type, so refinement commutes with isomorphisms. Returns a trace hash.
class Refiner {
public:
    Refiner(const Graph& g, std::size_t& counter, std::size_t budget) : g_(g), counter_(counter), budget_(budget), sig_(g.vertex_count()) {}

    std::uint64_t refine(Colours& c) {
        if (++counter_ > budget_) throw GuardExceeded("symmetry search exceeded " + std::to_string(budget_) + " nodes");
        const auto n = g_.vertex_count();
        std::uint64_t hash = 0x51ed270b27ULL;
        std::size_t k = distinct_count(c);
        std::vector<Vertex> order(n);
        while (true) {
            for (Vertex v = 0; v < n; ++v) {
                auto& s = sig_[v];
                s.clear();
                s.push_back(c[v]);
                for (auto w : g_.neighbors(v)) s.push_back(c[w]);
                std::sort(s.begin() + 1, s.end());
            }
            std::iota(order.begin(), order.end(), Vertex{0});
            std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return sig_[a] < sig_[b]; });
            std::uint32_t rank = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (i > 0 && sig_[order[i]] != sig_[order[i - 1]]) {
                    ++rank;
                    for (auto x : sig_[order[i - 1]]) hash = mix(hash, x);
                    hash = mix(hash, 0xfeedULL);
                }
                c[order[i]] = rank;
            }
            if (n > 0)
                for (auto x : sig_[order[n - 1]]) hash = mix(hash, x);
            const std::size_t next = n == 0 ? 0 : rank + 1;
            hash = mix(hash, next);
            if (next == k) break;
            k = next;
        }
        return hash;
    }

    static Colours individualize(const Colours& c, Vertex v) {
        Colours out(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) out[i] = 2 * c[i];
        out[v] += 1;
        return out;
    }

private:
    const Graph& g_;
    std::size_t& counter_;
    std::size_t budget_;
    std::vector<std::vector<std::uint32_t>> sig_;
};

bool discrete(const Colours& c) { return distinct_count(c) == c.size(); }

/// Lowest colour class with more than one vertex; members ascending.
std::optional<std::pair<std::uint32_t, std::vector<Vertex>>> target_cell(const Colours& c) {
    std::vector<std::size_t> size(c.size() + 1, 0);
    for (auto x : c) ++size[x];
    for (std::uint32_t col = 0; col < size.size(); ++col)
        if (size[col] > 1) {
            std::vector<Vertex> members;
            for (Vertex v = 0; v < c.size(); ++v)
                if (c[v] == col) members.push_back(v);
            return std::make_pair(col, std::move(members));
        }
    return std::nullopt;
}

struct PathLevel {
    Colours part;  // equitable partition at this level
    std::uint32_t cell = 0;
    std::vector<Vertex> members;
    Vertex chosen = 0;
    std::uint64_t hash_after = 0;
};

struct FirstPath {
    std::uint64_t root_hash = 0;
    std::vector<PathLevel> levels;
    Colours leaf;
};

FirstPath first_path(Refiner& r, std::size_t n, std::optional<Vertex> first_base) {
    FirstPath fp;
    Colours c(n, 0);
    fp.root_hash = r.refine(c);
    bool forced = first_base.has_value();
    while (true) {
        PathLevel lvl;
        if (forced) {
            lvl.cell = c[*first_base];
            for (Vertex v = 0; v < n; ++v)
                if (c[v] == lvl.cell) lvl.members.push_back(v);
            lvl.chosen = *first_base;
            forced = false;
        } else {
            auto cell = target_cell(c);
            if (!cell) break;
            lvl.cell = cell->first;
            lvl.members = std::move(cell->second);
            lvl.chosen = lvl.members.front();
        }
        lvl.part = c;
        c = Refiner::individualize(c, lvl.chosen);
        lvl.hash_after = r.refine(c);
        fp.levels.push_back(std::move(lvl));
    }
    fp.leaf = std::move(c);
    return fp;
}

using Accept = std::function<bool(const VertexPermutation&)>;

// Depth-first search below a node whose partition `c` matches the reference
// path at `level`; returns the first leaf map accepted by `accept`.
std::optional<VertexPermutation> explore(Refiner& r, const FirstPath& ref, const Colours& c, std::size_t level, const Accept& accept) {
    if (level == ref.levels.size()) {
        if (!discrete(c)) return std::nullopt;
        std::vector<Vertex> by_colour(c.size());
        for (Vertex w = 0; w < c.size(); ++w) by_colour[c[w]] = w;
        VertexPermutation map(c.size());
        for (Vertex v = 0; v < c.size(); ++v) map[v] = by_colour[ref.leaf[v]];
        if (accept(map)) return map;
        return std::nullopt;
    }
    auto cell = target_cell(c);
    if (!cell || cell->first != ref.levels[level].cell || cell->second.size() != ref.levels[level].members.size()) return std::nullopt;
    for (auto w : cell->second) {
        auto next = Refiner::individualize(c, w);
        if (r.refine(next) != ref.levels[level].hash_after) continue;
        if (auto found = explore(r, ref, next, level + 1, accept)) return found;
    }
    return std::nullopt;
}

bool maps_edges(const Graph& x, const Graph& y, const VertexPermutation& p) {
    if (x.edge_count() != y.edge_count()) return false;
    for (Vertex u = 0; u < x.vertex_count(); ++u)
        for (auto v : x.neighbors(u))
            if (u < v && !y.adjacent(p[u], p[v])) return false;
    return true;
}

std::vector<VertexPermutation> group_closure(std::size_t n, const std::vector<VertexPermutation>& gens, std::size_t limit) {
    VertexPermutation id(n);
    std::iota(id.begin(), id.end(), Vertex{0});
    std::vector<VertexPermutation> out{id};
    std::unordered_set<VertexPermutation, VectorHash> seen{id};
    for (std::size_t head = 0; head < out.size(); ++head)
        for (const auto& g : gens) {
            VertexPermutation q(n);
            for (std::size_t v = 0; v < n; ++v) q[v] = g[out[head][v]];
            if (seen.insert(q).second) {
                if (out.size() >= limit) return {};
                out.push_back(std::move(q));
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t orbit_count_by(std::size_t size, const std::vector<VertexPermutation>& gens,
                           const std::function<std::size_t(const VertexPermutation&, std::size_t)>& act) {
    UnionFind uf(size);
    for (const auto& g : gens)
        for (std::size_t i = 0; i < size; ++i) uf.unite(i, act(g, i));
    std::size_t count = 0;
    for (std::size_t i = 0; i < size; ++i)
        if (uf.find(i) == i) ++count;
    return count;
}

constexpr std::size_t kElementStorageCap = 40'000'000;  // order * n entries

}  // namespace

bool is_automorphism(const Graph& g, const VertexPermutation& p) {
    const auto n = g.vertex_count();
    if (p.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (auto v : p) {
        if (v >= n || hit[v]) return false;
        hit[v] = true;
    }
    return maps_edges(g, g, p);
}

std::vector<VertexPermutation> AutGroup::stabilizer_generators(std::size_t k) const {
    std::vector<VertexPermutation> out;
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generator_level[i] >= k) out.push_back(generators[i]);
    return out;
}

AutGroup automorphism_group(const Graph& g, const Guards& guards, std::optional<Vertex> first_base) {
    const auto n = g.vertex_count();
    if (n > guards.aut_vertices)
        throw GuardExceeded("automorphism search limited to " + std::to_string(guards.aut_vertices) + " vertices");
    if (first_base && *first_base >= n) throw InvalidArgument("base vertex out of range");
    AutGroup out;
    if (n == 0) {
        out.elements_complete = true;
        out.elements.push_back({});
        return out;
    }
    std::size_t counter = 0;
    Refiner r(g, counter, guards.search_nodes);
    auto fp = first_path(r, n, first_base);
    const auto depth = fp.levels.size();
    for (const auto& lvl : fp.levels) out.base.push_back(lvl.chosen);
    out.basic_orbit_sizes.assign(depth, 1);

    for (std::size_t i = depth; i-- > 0;) {
        const auto& lvl = fp.levels[i];
        UnionFind orbit(n);
        auto absorb = [&](const VertexPermutation& p) {
            for (Vertex v = 0; v < n; ++v) orbit.unite(v, p[v]);
        };
        for (std::size_t j = 0; j < out.generators.size(); ++j)
            if (out.generator_level[j] >= i) absorb(out.generators[j]);
        for (auto w : lvl.members) {
            if (w == lvl.chosen || orbit.find(w) == orbit.find(lvl.chosen)) continue;
            auto c = Refiner::individualize(lvl.part, w);
            if (r.refine(c) != lvl.hash_after) continue;
            Accept accept = [&](const VertexPermutation& p) {
                for (std::size_t j = 0; j < i; ++j)
                    if (p[out.base[j]] != out.base[j]) return false;
                return p[lvl.chosen] == w && is_automorphism(g, p);
            };
            if (auto gamma = explore(r, fp, c, i + 1, accept)) {
                absorb(*gamma);
                out.generators.push_back(std::move(*gamma));
                out.generator_level.push_back(i);
            }
        }
        std::size_t size = 0;
        for (auto w : lvl.members)
            if (orbit.find(w) == orbit.find(lvl.chosen)) ++size;
        out.basic_orbit_sizes[i] = size;
    }
    out.order = 1;
    for (auto s : out.basic_orbit_sizes) out.order *= s;

    if (out.order <= guards.aut_order && out.order * n <= kElementStorageCap) {
        out.elements = group_closure(n, out.generators, static_cast<std::size_t>(out.order));
        out.elements_complete = out.elements.size() == out.order;
        if (!out.elements_complete) throw std::logic_error("automorphism closure disagrees with the orbit product");
    }
    return out;
}

std::vector<std::vector<Vertex>> vertex_orbits(std::size_t n, const std::vector<VertexPermutation>& generators) {
    UnionFind uf(n);
    for (const auto& g : generators)
        for (Vertex v = 0; v < n; ++v) uf.unite(v, g[v]);
    std::map<std::size_t, std::vector<Vertex>> groups;
    for (Vertex v = 0; v < n; ++v) groups[uf.find(v)].push_back(v);
    std::vector<std::vector<Vertex>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

TransitivityReport transitivity_report(const Graph& g, int k_cap, const Guards& guards) {
    TransitivityReport rep;
    const auto n = g.vertex_count();
    if (n == 0) return rep;
    auto aut = automorphism_group(g, guards, Vertex{0});
    rep.aut_order = aut.order;
    const auto& gens = aut.generators;

    rep.vertex_orbit_count = vertex_orbits(n, gens).size();
    rep.vertex_transitive = rep.vertex_orbit_count == 1;

    auto edges = g.edges();
    auto edge_index = [&](Vertex a, Vertex b) {
        Edge e{std::min(a, b), std::max(a, b)};
        return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
    };
    rep.edge_orbit_count = orbit_count_by(edges.size(), gens, [&](const VertexPermutation& p, std::size_t i) {
        return edge_index(p[edges[i].first], p[edges[i].second]);
    });
    rep.edge_transitive = rep.edge_orbit_count <= 1;

    std::vector<std::size_t> offset(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) offset[v + 1] = offset[v] + g.degree(v);
    std::vector<Edge> arcs;
    for (Vertex u = 0; u < n; ++u)
        for (auto v : g.neighbors(u)) arcs.emplace_back(u, v);
    auto arc_index = [&](Vertex a, Vertex b) {
        auto nb = g.neighbors(a);
        return offset[a] + static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), b) - nb.begin());
    };
    rep.arc_orbit_count = orbit_count_by(arcs.size(), gens, [&](const VertexPermutation& p, std::size_t i) {
        return arc_index(p[arcs[i].first], p[arcs[i].second]);
    });
    rep.arc_transitive = rep.arc_orbit_count <= 1;

    if (rep.vertex_transitive) {
        rep.k_arc_transitive_max = 0;
        if (k_cap >= 1 && !arcs.empty() && rep.arc_orbit_count == 1) {
            rep.k_arc_transitive_max = 1;
            constexpr std::size_t limit = 2'000'000;
            std::vector<std::vector<Vertex>> level;
            for (auto [a, b] : arcs) level.push_back({a, b});
            for (int k = 2; k <= k_cap; ++k) {
                std::vector<std::vector<Vertex>> next;
                for (const auto& s : level) {
                    for (auto w : g.neighbors(s.back())) {
                        if (w == s[s.size() - 2]) continue;
                        auto t = s;
                        t.push_back(w);
                        next.push_back(std::move(t));
                    }
                    if (next.size() > limit) break;
                }
                if (next.size() > limit) {
                    rep.k_arc_truncated = true;
                    break;
                }
                if (next.empty()) break;
                std::sort(next.begin(), next.end());
                auto count = orbit_count_by(next.size(), gens, [&](const VertexPermutation& p, std::size_t i) {
                    std::vector<Vertex> img(next[i].size());
                    for (std::size_t j = 0; j < img.size(); ++j) img[j] = p[next[i][j]];
                    return static_cast<std::size_t>(std::lower_bound(next.begin(), next.end(), img) - next.begin());
                });
                if (count != 1) break;
                rep.k_arc_transitive_max = k;
                level = std::move(next);
            }
        }
        if (is_connected(g)) {
            auto stab = vertex_orbits(n, aut.stabilizer_generators(1));
            std::vector<std::size_t> orbit_of(n);
            for (std::size_t i = 0; i < stab.size(); ++i)
                for (auto v : stab[i]) orbit_of[v] = i;
            rep.distance_transitive = true;
            for (const auto& layer : distance_layers(g, 0).layers)
                for (auto v : layer)
                    if (orbit_of[v] != orbit_of[layer.front()]) rep.distance_transitive = false;
        }
    }
    return rep;
}

std::vector<std::size_t> stabilizer_orbits(const Graph& g, Vertex v, const Guards& guards) {
    auto aut = automorphism_group(g, guards, v);
    std::vector<std::size_t> sizes;
    for (const auto& o : vertex_orbits(g.vertex_count(), aut.stabilizer_generators(1))) sizes.push_back(o.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::optional<VertexPermutation> graph_isomorphic(const Graph& x, const Graph& y, const Guards& guards) {
    const auto n = x.vertex_count();
    if (n != y.vertex_count() || x.edge_count() != y.edge_count()) return std::nullopt;
    if (n > guards.aut_vertices || y.vertex_count() > guards.aut_vertices)
        throw GuardExceeded("isomorphism search limited to " + std::to_string(guards.aut_vertices) + " vertices");
    std::vector<std::size_t> dx, dy;
    for (Vertex v = 0; v < n; ++v) {
        dx.push_back(x.degree(v));
        dy.push_back(y.degree(v));
    }
    std::sort(dx.begin(), dx.end());
    std::sort(dy.begin(), dy.end());
    if (dx != dy) return std::nullopt;
    if (n == 0) return VertexPermutation{};

    std::size_t counter = 0;
    Refiner rx(x, counter, guards.search_nodes);
    Refiner ry(y, counter, guards.search_nodes);
    auto fp = first_path(rx, n, std::nullopt);
    Colours c(n, 0);
    if (ry.refine(c) != fp.root_hash) return std::nullopt;
    Accept accept = [&](const VertexPermutation& p) { return maps_edges(x, y, p); };
    return explore(ry, fp, c, 0, accept);
}

std::vector<VertexPermutation> right_regular_action(const Graph& g) {
    if (!g.is_cayley()) throw InvalidArgument("right regular action needs a Cayley graph with group labels");
    const auto& info = *g.cayley();
    std::unordered_map<GroupElement, Vertex, GroupElementHash> index;
    for (std::size_t i = 0; i < info.elements.size(); ++i) index.emplace(info.elements[i], static_cast<Vertex>(i));
    std::vector<VertexPermutation> out;
    for (const auto& h : info.elements) {
        VertexPermutation p(info.elements.size());
        for (std::size_t x = 0; x < info.elements.size(); ++x) p[x] = index.at(compose(info.elements[x], h));
        if (!is_automorphism(g, p)) throw std::logic_error("right translation by " + h.to_string() + " is not an automorphism");
        out.push_back(std::move(p));
    }
    return out;
}

RegularSubgroupResult find_regular_subgroup(const AutGroup& aut, std::size_t n, const Guards& guards) {
    if (!aut.elements_complete) throw GuardExceeded("automorphism group too large to list its elements");
    RegularSubgroupResult res;
    const auto& el = aut.elements;
    if (n == 0 || el.empty() || el.front().size() != n) throw InvalidArgument("element degree does not match n");
    if (el.size() % n != 0) {
        res.verdict = SearchVerdict::None;
        return res;
    }
    if (n == 1) {
        res.verdict = SearchVerdict::Found;
        res.subgroup = {el.front()};
        return res;
    }
    std::unordered_map<VertexPermutation, std::uint32_t, VectorHash> index;
    for (std::size_t i = 0; i < el.size(); ++i) index.emplace(el[i], static_cast<std::uint32_t>(i));
    std::vector<bool> fpf(el.size(), false);
    std::vector<std::uint32_t> candidates;
    for (std::size_t i = 1; i < el.size(); ++i) {
        bool free = true;
        for (Vertex v = 0; v < n && free; ++v) free = el[i][v] != v;
        fpf[i] = free;
        if (free) candidates.push_back(static_cast<std::uint32_t>(i));
    }
    auto product = [&](std::uint32_t a, std::uint32_t b) {
        VertexPermutation q(n);
        for (Vertex v = 0; v < n; ++v) q[v] = el[b][el[a][v]];
        return index.at(q);
    };
    bool exhausted = false;

    // Subgroups are built along canonical generator sequences: each new
    // generator is the smallest element outside the current subgroup, so every
    // semiregular subgroup is visited exactly once.
    std::function<bool(const std::vector<std::uint32_t>&, const std::vector<std::uint32_t>&, std::size_t)> dfs =
        [&](const std::vector<std::uint32_t>& members, const std::vector<std::uint32_t>& gens, std::size_t from) -> bool {
        std::vector<bool> in(el.size(), false);
        for (auto m : members) in[m] = true;
        for (std::size_t ci = from; ci < candidates.size(); ++ci) {
            auto g = candidates[ci];
            if (in[g]) continue;
            if (++res.nodes > guards.search_nodes) {
                exhausted = true;
                return false;
            }
            auto next_gens = gens;
            next_gens.push_back(g);
            std::vector<bool> seen(el.size(), false);
            std::vector<std::uint32_t> group{0};
            seen[0] = true;
            bool ok = true;
            for (std::size_t head = 0; head < group.size() && ok; ++head)
                for (auto s : next_gens) {
                    auto y = product(group[head], s);
                    if (seen[y]) continue;
                    if (!fpf[y] || (!in[y] && y < g) || group.size() + 1 > n) {
                        ok = false;
                        break;
                    }
                    seen[y] = true;
                    group.push_back(y);
                }
            if (!ok || n % group.size() != 0) continue;
            std::sort(group.begin(), group.end());
            if (group.size() == n) {
                for (auto i : group) res.subgroup.push_back(el[i]);
                return true;
            }
            if (dfs(group, next_gens, ci + 1)) return true;
            if (exhausted) return false;
        }
        return false;
    };
    bool found = dfs({0}, {}, 0);
    res.verdict = found ? SearchVerdict::Found : (exhausted ? SearchVerdict::Unknown : SearchVerdict::None);
    return res;
}

AutHS aut_group_fixing_S(const GeneratingSet& s, const Guards& guards) {
    const auto& spec = s.spec();
    AutHS out;
    constexpr std::size_t listing_cap = 20'000'000;

    auto is_transposition = [](const GroupElement& g) {
        if (g.kind() != ElementKind::Perm) return false;
        std::size_t moved = 0;
        for (std::size_t i = 0; i < g.degree(); ++i)
            if (g[i] != i) ++moved;
        return moved == 2;
    };
    const bool perm_spec = spec.kind() == GroupSpec::Kind::Symmetric || spec.kind() == GroupSpec::Kind::PermSubgroup;
    if (perm_spec && spec.degree() >= 3 && s.size() > 0 &&
        std::all_of(s.elements().begin(), s.elements().end(), is_transposition)) {
        const auto n = spec.degree();
        GraphBuilder tb(n);
        for (const auto& t : s.elements()) {
            std::vector<Vertex> moved;
            for (Vertex i = 0; i < n; ++i)
                if (t[i] != i) moved.push_back(i);
            tb.add_edge(moved[0], moved[1]);
        }
        auto tgraph = std::move(tb).build();
        if (is_connected(tgraph)) {
            auto aut = automorphism_group(tgraph, guards);
            out.order = static_cast<std::uint64_t>(aut.order);
            out.method = "transposition-graph";
            auto group_order = spec.order();
            if (aut.elements_complete && group_order && *group_order * out.order <= listing_cap) {
                auto elements = closure(s, guards.closure);
                std::unordered_map<GroupElement, Vertex, GroupElementHash> index;
                for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<Vertex>(i));
                for (const auto& sigma_img : aut.elements) {
                    auto sigma = GroupElement::permutation({sigma_img.begin(), sigma_img.end()});
                    auto sigma_inv = inverse(sigma);
                    VertexPermutation p(elements.size());
                    for (std::size_t i = 0; i < elements.size(); ++i)
                        p[i] = index.at(compose(compose(sigma_inv, elements[i]), sigma));
                    out.elements.push_back(std::move(p));
                }
                std::sort(out.elements.begin(), out.elements.end());
                out.elements_complete = true;
            }
            return out;
        }
    }

    if (spec.kind() != GroupSpec::Kind::Binary) {
        std::uint64_t order = SIZE_MAX;
        if (spec.kind() == GroupSpec::Kind::PermSubgroup) {
            try {
                order = closure(s, guards.aut_hs_group).size();
            } catch (const GuardExceeded&) {
            }
        } else {
            order = spec.order().value_or(SIZE_MAX);
        }
        if (order > guards.aut_hs_group)
            throw Unsupported("Aut(H,S) is only computed for transposition sets, binary groups or |H| <= " +
                              std::to_string(guards.aut_hs_group));
    }

    auto elements = closure(s, guards.closure);
    const auto h = elements.size();
    std::unordered_map<GroupElement, std::uint32_t, GroupElementHash> index;
    for (std::size_t i = 0; i < h; ++i) index.emplace(elements[i], static_cast<std::uint32_t>(i));
    const auto m = s.size();
    std::vector<std::uint32_t> s_idx(m);
    std::vector<bool> in_s(h, false);
    std::vector<std::vector<std::uint32_t>> left(m, std::vector<std::uint32_t>(h));
    for (std::size_t j = 0; j < m; ++j) {
        s_idx[j] = index.at(s[j]);
        in_s[s_idx[j]] = true;
        for (std::size_t x = 0; x < h; ++x) left[j][x] = index.at(compose(s[j], elements[x]));
    }

    // greedy generating prefix B of S
    std::vector<std::size_t> basis;
    std::vector<bool> span(h, false);
    span[0] = true;
    std::size_t span_size = 1;
    for (std::size_t j = 0; j < m && span_size < h; ++j) {
        if (span[s_idx[j]]) continue;
        basis.push_back(j);
        std::vector<std::uint32_t> queue;
        for (std::uint32_t x = 0; x < h; ++x)
            if (span[x]) queue.push_back(x);
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (auto b : basis) {
                auto y = left[b][queue[head]];
                if (!span[y]) {
                    span[y] = true;
                    queue.push_back(y);
                }
            }
        span_size = queue.size();
    }
    // BFS over B: every element is b * parent
    std::vector<std::uint32_t> bfs{0};
    std::vector<std::pair<std::size_t, std::uint32_t>> parent(h, {0, 0});
    std::vector<bool> reached(h, false);
    reached[0] = true;
    for (std::size_t head = 0; head < bfs.size(); ++head)
        for (std::size_t bi = 0; bi < basis.size(); ++bi) {
            auto y = left[basis[bi]][bfs[head]];
            if (!reached[y]) {
                reached[y] = true;
                parent[y] = {bi, bfs[head]};
                bfs.push_back(y);
            }
        }

    double candidates = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) candidates *= static_cast<double>(m - i);
    if (candidates > 5e7) throw GuardExceeded("too many generator images to try for Aut(H,S)");

    out.method = "generator-images";
    std::vector<std::size_t> image(basis.size());  // index into S
    std::vector<bool> used(m, false);
    std::vector<std::uint32_t> phi(h);
    std::vector<bool> hit(h);
    std::vector<VertexPermutation> found;
    std::uint64_t count = 0;
    std::function<void(std::size_t)> assign = [&](std::size_t depth) {
        if (depth < basis.size()) {
            for (std::size_t j = 0; j < m; ++j) {
                if (used[j]) continue;
                used[j] = true;
                image[depth] = j;
                assign(depth + 1);
                used[j] = false;
            }
            return;
        }
        phi[0] = 0;
        for (std::size_t k = 1; k < bfs.size(); ++k) {
            auto [bi, par] = parent[bfs[k]];
            phi[bfs[k]] = left[image[bi]][phi[par]];
        }
        for (std::size_t bi = 0; bi < basis.size(); ++bi)
            for (std::uint32_t x = 0; x < h; ++x)
                if (phi[left[basis[bi]][x]] != left[image[bi]][phi[x]]) return;
        std::fill(hit.begin(), hit.end(), false);
        for (auto v : phi) {
            if (hit[v]) return;
            hit[v] = true;
        }
        for (auto si : s_idx)
            if (!in_s[phi[si]]) return;
        ++count;
        if (h * count <= listing_cap) found.emplace_back(phi.begin(), phi.end());
    };
    assign(0);
    out.order = count;
    if (h * count <= listing_cap) {
        std::sort(found.begin(), found.end());
        out.elements = std::move(found);
        out.elements_complete = true;
    }
    return out;
}

NormalityVerdict normality_verdict(const Graph& g, const Guards& guards) {
    if (!g.is_cayley()) throw InvalidArgument("normality needs a Cayley graph");
    const auto& info = *g.cayley();
    NormalityVerdict v;
    v.aut_order = automorphism_group(g, guards).order;
    v.group_order = info.elements.size();
    v.aut_hs_order = aut_group_fixing_S(GeneratingSet(info.spec, info.generators), guards).order;
    v.predicted_order = BigInt(v.group_order) * v.aut_hs_order;
    v.normal = v.aut_order == v.predicted_order;
    v.grr = v.aut_order == v.group_order;
    return v;
}

}  // namespace cayleynet
