#include "cayleynet/transpositions.hpp"

#include <algorithm>
#include <sstream>

#include "cayleynet/errors.hpp"
#include "cayleynet/symmetry.hpp"

namespace cayleynet {

TranspositionSet TranspositionSet::make(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> pairs) {
    if (n < 2) throw InvalidArgument("transposition sets need n >= 2");
    for (auto& [i, j] : pairs) {
        if (i > j) std::swap(i, j);
        if (i < 1 || j > n || i == j)
            throw InvalidArgument("bad transposition (" + std::to_string(i) + "," + std::to_string(j) + ") for n = " + std::to_string(n));
    }
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) throw InvalidArgument("repeated transposition");
    return TranspositionSet{n, std::move(pairs)};
}

TranspositionSet TranspositionSet::complete(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    return make(n, std::move(pairs));
}

GeneratingSet TranspositionSet::generating_set() const {
    std::vector<GroupElement> gens;
    for (auto [i, j] : pairs) gens.push_back(GroupElement::transposition(n, i, j));
    return GeneratingSet(GroupSpec::symmetric(n), std::move(gens));
}

TranspositionSet parse_transpositions(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<std::size_t> n;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<long long> nums;
        long long x = 0;
        while (fields >> x) nums.push_back(x);
        if (!fields.eof()) throw InvalidArgument("line " + std::to_string(lineno) + ": expected integers");
        if (nums.empty()) continue;
        if (std::any_of(nums.begin(), nums.end(), [](long long v) { return v < 1; }))
            throw InvalidArgument("line " + std::to_string(lineno) + ": values must be positive");
        if (!n) {
            if (nums.size() != 1) throw InvalidArgument("line " + std::to_string(lineno) + ": first line must hold n alone");
            n = static_cast<std::size_t>(nums[0]);
        } else {
            if (nums.size() != 2) throw InvalidArgument("line " + std::to_string(lineno) + ": expected 'i j'");
            pairs.emplace_back(static_cast<std::size_t>(nums[0]), static_cast<std::size_t>(nums[1]));
        }
    }
    if (!n) throw InvalidArgument("transposition file has no n");
    return TranspositionSet::make(*n, std::move(pairs));
}

Graph transposition_graph(const TranspositionSet& s) {
    GraphBuilder b(s.n);
    for (auto [i, j] : s.pairs) b.add_edge(static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1));
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= s.n; ++i) labels.push_back(std::to_string(i));
    b.set_vertex_labels(std::move(labels));
    FamilyMeta meta{"transposition-graph", {}};
    meta.params["n"] = {static_cast<long long>(s.n)};
    b.set_meta(std::move(meta));
    return std::move(b).build();
}

namespace {

bool matches(const Graph& t, const Graph& model, const Guards& guards) {
    return t.vertex_count() == model.vertex_count() && t.edge_count() == model.edge_count() &&
           graph_isomorphic(t, model, guards).has_value();
}

std::string shape_of(const Graph& t, bool connected, const Guards& guards) {
    const auto n = t.vertex_count();
    const auto m = t.edge_count();
    if (m == n * (n - 1) / 2) return "complete";
    if (!connected) return "general";
    if (n >= 3 && m == n && matches(t, build_family(FamilySpec::cycle(n)), guards)) return "cycle";
    if (m == n - 1) {
        if (n >= 3 && matches(t, build_family(FamilySpec::complete_bipartite(1, n - 1)), guards)) return "star";
        if (matches(t, build_family(FamilySpec::path(n)), guards)) return "path";
    }
    auto bip = is_bipartite(t);
    if (bip.bipartite) {
        auto a = static_cast<std::size_t>(std::count(bip.coloring.begin(), bip.coloring.end(), 0));
        if (a > 0 && a < n && m == a * (n - a)) return "complete-bipartite";
    }
    return "general";
}

BigInt factorial(std::size_t n) {
    BigInt f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

TranspositionReport classify(const TranspositionSet& s, const Guards& guards) {
    TranspositionReport rep;
    auto t = transposition_graph(s);
    const bool connected = is_connected(t);
    rep.generates_sn = connected;
    rep.minimal = connected && t.edge_count() == s.n - 1;
    rep.shape = shape_of(t, connected, guards);
    auto tr = transitivity_report(t, 1, guards);
    rep.tgraph_aut_order = static_cast<std::uint64_t>(tr.aut_order);
    rep.predicted_edge_transitive = tr.edge_transitive;
    if (connected && s.n >= 3) {
        auto gi = girth(t);
        if (rep.minimal || (gi && *gi >= 5)) rep.predicted_aut_order = factorial(s.n) * tr.aut_order;
    }
    return rep;
}

FourCycleCheck four_cycle_check(const TranspositionSet& s, const Guards& guards) {
    auto gs = s.generating_set();
    auto g = cayley_graph(gs, guards);
    const auto& info = *g.cayley();
    FourCycleCheck out;
    for (std::size_t a = 0; a < gs.size(); ++a)
        for (std::size_t b = a + 1; b < gs.size(); ++b) {
            const auto& t = gs[a];
            const auto& k = gs[b];
            const bool commute = compose(t, k) == compose(k, t);
            auto vt = *info.index_of(t);
            auto vk = *info.index_of(k);
            // 4-cycles e - t - x - k - e correspond to common neighbours x != e
            std::size_t cycles = 0;
            for (auto x : g.neighbors(vt))
                if (x != 0 && g.adjacent(x, vk)) ++cycles;
            (commute ? out.commuting_pairs : out.non_commuting_pairs) += 1;
            if (!commute && cycles > 0) ++out.non_commuting_on_cycles;
            if ((cycles == 1) != commute)
                out.violations.push_back(t.to_string() + " and " + k.to_string() + (commute ? " commute" : " do not commute") +
                                         " but lie on " + std::to_string(cycles) + " four-cycles through e");
        }
    return out;
}

}  // namespace cayleynet
