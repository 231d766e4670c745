#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "cayleynet/errors.hpp"
#include "cayleynet/random.hpp"
#include "cayleynet/symmetry.hpp"
#include "oracles.hpp"

using namespace cayleynet;

namespace {

Graph prism5() { return cartesian_product(build_family(FamilySpec::cycle(5)), build_family(FamilySpec::path(2))); }

Graph relabel(const Graph& g, const std::vector<Vertex>& p) {
    GraphBuilder b(g.vertex_count());
    for (auto [u, v] : g.edges()) b.add_edge(p[u], p[v]);
    return std::move(b).build();
}

VertexPermutation product(const VertexPermutation& a, const VertexPermutation& b) {
    VertexPermutation out(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) out[v] = b[a[v]];
    return out;
}

}  // namespace

TEST_SUITE("symmetry") {

TEST_CASE("automorphism group orders") {
    auto order = [](const Graph& g) { return static_cast<std::uint64_t>(automorphism_group(g).order); };
    CHECK(order(build_family(FamilySpec::petersen())) == 120);
    CHECK(order(build_family(FamilySpec::hypercube(2))) == 8);
    CHECK(order(build_family(FamilySpec::hypercube(3))) == 48);
    CHECK(order(build_family(FamilySpec::hypercube(4))) == 384);
    CHECK(order(prism5()) == 20);
    CHECK(order(build_family(FamilySpec::complete_bipartite(3, 3))) == 72);
    CHECK(order(build_family(FamilySpec::folded(4))) == 1920);
    CHECK(order(build_family(FamilySpec::complete_transposition(4))) == 1152);
}

TEST_CASE("orders agree with the backtracking oracle") {
    std::vector<Graph> zoo = {build_family(FamilySpec::petersen()), prism5(), build_family(FamilySpec::folded(4)),
                              build_family(FamilySpec::complete_transposition(4)),
                              from_transpositions(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}),
                              build_family(FamilySpec::alternating_group_graph(4)), build_family(FamilySpec::star(4)),
                              build_family(FamilySpec::augmented(4)), build_family(FamilySpec::mesh({3, 4}))};
    for (const auto& g : zoo) CHECK(automorphism_group(g).order == oracle::count_automorphisms(g));
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        auto g = i % 2 ? random_connected_graph(3 + i % 9, 0.3, rng) : random_graph(2 + i % 10, 0.4, rng);
        CHECK(automorphism_group(g).order == oracle::count_automorphisms(g));
    }
}

TEST_CASE("element lists are closed groups of verified automorphisms") {
    for (const auto& g : {build_family(FamilySpec::petersen()), prism5(), build_family(FamilySpec::hypercube(3))}) {
        auto a = automorphism_group(g);
        REQUIRE(a.elements_complete);
        CHECK(a.elements.size() == a.order);
        std::set<VertexPermutation> all(a.elements.begin(), a.elements.end());
        CHECK(all.size() == a.elements.size());
        VertexPermutation id(g.vertex_count());
        std::iota(id.begin(), id.end(), Vertex{0});
        CHECK(all.count(id) == 1);
        for (const auto& x : a.elements) {
            CHECK(is_automorphism(g, x));
            for (const auto& y : a.generators) CHECK(all.count(product(x, y)) == 1);
        }
        CHECK(std::is_sorted(a.elements.begin(), a.elements.end()));
    }
}

TEST_CASE("orbit-stabilizer") {
    Rng rng(4);
    for (int i = 0; i < 40; ++i) {
        auto g = random_graph(4 + i % 7, 0.45, rng);
        auto a = automorphism_group(g);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            std::size_t stab = 0;
            std::set<Vertex> orbit;
            for (const auto& x : a.elements) {
                orbit.insert(x[v]);
                stab += x[v] == v;
            }
            CHECK(stab * orbit.size() == a.order);
        }
    }
}

TEST_CASE("complements and line graphs keep the group order") {
    Rng rng(31);
    std::size_t line_cases = 0;
    for (int i = 0; i < 60; ++i) {
        auto g = random_connected_graph(5 + i % 5, 0.35, rng);
        auto order = automorphism_group(g).order;
        CHECK(automorphism_group(complement(g)).order == order);
        CHECK(automorphism_group(line_graph(g)).order == order);
        ++line_cases;
    }
    CHECK(line_cases == 60);
}

TEST_CASE("transitivity examples") {
    auto prism = transitivity_report(prism5());
    CHECK(prism.vertex_transitive);
    CHECK_FALSE(prism.edge_transitive);
    CHECK(prism.edge_orbit_count == 2);
    auto k34 = transitivity_report(build_family(FamilySpec::complete_bipartite(3, 4)));
    CHECK(k34.edge_transitive);
    CHECK_FALSE(k34.vertex_transitive);
    CHECK(k34.k_arc_transitive_max == -1);
    auto q3 = transitivity_report(build_family(FamilySpec::hypercube(3)));
    CHECK(q3.k_arc_transitive_max == 2);
    CHECK(q3.distance_transitive);
    auto pet = transitivity_report(build_family(FamilySpec::petersen()));
    CHECK(pet.k_arc_transitive_max == 3);
    CHECK(pet.distance_transitive);
    auto mb = transitivity_report(build_family(FamilySpec::modified_bubble_sort(4)));
    CHECK(mb.vertex_transitive);
}

TEST_CASE("report invariants hold on random graphs") {
    Rng rng(17);
    for (int i = 0; i < 80; ++i) {
        auto g = random_graph(3 + i % 8, 0.5, rng);
        auto t = transitivity_report(g, 2);
        if (t.arc_transitive) CHECK(t.edge_transitive);
        if (t.distance_transitive) CHECK(t.vertex_transitive);
        // distance-transitive iff vertex-transitive with each stabilizer layer an orbit, from the element list
        if (t.vertex_transitive && is_connected(g)) {
            auto a = automorphism_group(g);
            auto d = bfs_distances(g, 0);
            bool layers_are_orbits = true;
            for (Vertex u = 0; u < g.vertex_count(); ++u) {
                std::set<Vertex> orbit;
                for (const auto& x : a.elements)
                    if (x[0] == 0) orbit.insert(x[u]);
                std::size_t layer = 0;
                for (Vertex w = 0; w < g.vertex_count(); ++w) layer += d[w] == d[u];
                layers_are_orbits = layers_are_orbits && orbit.size() == layer;
            }
            CHECK(t.distance_transitive == layers_are_orbits);
        }
    }
}

TEST_CASE("stabilizer orbits") {
    CHECK(stabilizer_orbits(build_family(FamilySpec::petersen()), 0) == std::vector<std::size_t>{1, 3, 6});
    CHECK(stabilizer_orbits(build_family(FamilySpec::complete(6)), 2) == std::vector<std::size_t>{1, 5});
    CHECK(stabilizer_orbits(build_family(FamilySpec::hypercube(3)), 0) == std::vector<std::size_t>{1, 1, 3, 3});
}

TEST_CASE("isomorphism search") {
    auto pet = build_family(FamilySpec::petersen());
    auto m = graph_isomorphic(complement(line_graph(build_family(FamilySpec::complete(5)))), pet);
    REQUIRE(m.has_value());
    auto torus = cartesian_product(build_family(FamilySpec::cycle(4)), build_family(FamilySpec::cycle(5)));
    auto spec = GroupSpec::cyclic_product({4, 5});
    auto cay = cayley_graph(GeneratingSet(spec, {GroupElement::tuple({1, 0}, {4, 5}), GroupElement::tuple({3, 0}, {4, 5}),
                                                 GroupElement::tuple({0, 1}, {4, 5}), GroupElement::tuple({0, 4}, {4, 5})}));
    CHECK(graph_isomorphic(torus, cay).has_value());
    CHECK_FALSE(graph_isomorphic(build_family(FamilySpec::complete_bipartite(1, 3)), build_family(FamilySpec::complete(3))));
    CHECK_THROWS_AS(graph_isomorphic(pet, pet, Guards{.aut_vertices = 5}), GuardExceeded);
}

TEST_CASE("isomorphism agrees with the permutation oracle") {
    Rng rng(23);
    for (int i = 0; i < 150; ++i) {
        const std::size_t n = 3 + i % 5;
        auto a = random_graph(n, 0.5, rng);
        std::vector<Vertex> p(n);
        std::iota(p.begin(), p.end(), Vertex{0});
        std::shuffle(p.begin(), p.end(), rng);
        auto b = relabel(a, p);
        auto m = graph_isomorphic(a, b);
        REQUIRE(m.has_value());
        for (auto [u, v] : a.edges()) CHECK(b.adjacent((*m)[u], (*m)[v]));
        auto c = random_graph(n, 0.5, rng);
        CHECK(graph_isomorphic(a, c).has_value() == oracle::isomorphic_by_permutations(a, c));
    }
}

TEST_CASE("right translations are automorphisms") {
    auto q3 = build_family(FamilySpec::hypercube(3));
    auto r = right_regular_action(q3);
    CHECK(r.size() == 8);
    for (std::size_t h = 0; h < r.size(); ++h) {
        std::size_t fixed = 0;
        for (Vertex v = 0; v < 8; ++v) fixed += r[h][v] == v;
        CHECK(fixed == (h == 0 ? 8 : 0));
    }
    auto s3 = from_transpositions(3, {{1, 2}, {2, 3}});
    auto rs = right_regular_action(s3);
    CHECK(rs.size() == 6);
    auto a = automorphism_group(s3);
    std::set<VertexPermutation> all(a.elements.begin(), a.elements.end());
    for (const auto& x : rs) CHECK(all.count(x) == 1);
    CHECK_THROWS_AS(right_regular_action(build_family(FamilySpec::petersen())), InvalidArgument);
}

TEST_CASE("Cayley graphs: translations lie in Aut and |H| divides |Aut|") {
    for (const auto& g : {build_family(FamilySpec::star(4)), build_family(FamilySpec::folded(4)),
                          build_family(FamilySpec::alternating_group_graph(4)), build_family(FamilySpec::circulant(12, {1, 5})),
                          build_family(FamilySpec::torus({3, 4}))}) {
        auto a = automorphism_group(g);
        std::set<VertexPermutation> all(a.elements.begin(), a.elements.end());
        for (const auto& x : right_regular_action(g)) CHECK(all.count(x) == 1);
        CHECK(a.order % g.vertex_count() == 0);
    }
}

TEST_CASE("regular subgroups") {
    auto pet = build_family(FamilySpec::petersen());
    auto none = find_regular_subgroup(automorphism_group(pet), 10);
    CHECK(none.verdict == SearchVerdict::None);
    auto q3 = build_family(FamilySpec::hypercube(3));
    auto found = find_regular_subgroup(automorphism_group(q3), 8);
    REQUIRE(found.verdict == SearchVerdict::Found);
    CHECK(found.subgroup.size() == 8);
    auto c6 = build_family(FamilySpec::cycle(6));
    auto rot = find_regular_subgroup(automorphism_group(c6), 6);
    REQUIRE(rot.verdict == SearchVerdict::Found);
    for (Vertex v = 0; v < 6; ++v) {
        std::set<Vertex> images;
        for (const auto& x : rot.subgroup) images.insert(x[v]);
        CHECK(images.size() == 6);
    }
    auto budget = find_regular_subgroup(automorphism_group(pet), 10, Guards{.search_nodes = 3});
    CHECK(budget.verdict == SearchVerdict::Unknown);
}

TEST_CASE("Aut(H,S)") {
    for (std::size_t n = 2; n <= 5; ++n) {
        auto q = family_generators(FamilySpec::hypercube(n));
        std::uint64_t fact = 1;
        for (std::size_t i = 2; i <= n; ++i) fact *= i;
        CHECK(aut_group_fixing_S(q).order == fact);
        auto f = family_generators(FamilySpec::folded(n));
        CHECK(aut_group_fixing_S(f).order == fact * (n + 1));
    }
    for (std::size_t n = 3; n <= 6; ++n) {
        auto star = aut_group_fixing_S(family_generators(FamilySpec::star(n)));
        std::uint64_t fact = 1;
        for (std::size_t i = 2; i < n; ++i) fact *= i;
        CHECK(star.order == fact);
        CHECK(star.method == "transposition-graph");
    }
}

TEST_CASE("Aut(H,S) elements are automorphisms fixing the identity") {
    for (const auto& spec : {FamilySpec::folded(3), FamilySpec::star(4), FamilySpec::complete_transposition(4)}) {
        auto g = build_family(spec);
        auto s = family_generators(spec);
        auto hs = aut_group_fixing_S(s);
        REQUIRE(hs.elements_complete);
        CHECK(hs.elements.size() == hs.order);
        for (const auto& x : hs.elements) {
            CHECK(x[0] == 0);
            CHECK(is_automorphism(g, x));
        }
    }
}

TEST_CASE("generator-image route matches the transposition route") {
    auto s = family_generators(FamilySpec::bubble_sort(4));
    auto fast = aut_group_fixing_S(s);
    auto brute = aut_group_fixing_S(GeneratingSet(GroupSpec::perm_subgroup({}, 4),
                                                  std::vector<GroupElement>(s.elements().begin(), s.elements().end())),
                                    Guards{});
    CHECK(fast.order == 2);
    CHECK(fast.method == "transposition-graph");
    CHECK(brute.order == fast.order);
    auto cyc = family_generators(FamilySpec::circulant(8, {1, 3}));
    auto hs = aut_group_fixing_S(cyc);
    CHECK(hs.method == "generator-images");
    CHECK(hs.order == 4);  // units of Z_8 permute {1,3,5,7}
    CHECK_THROWS_AS(aut_group_fixing_S(family_generators(FamilySpec::alternating_group_graph(5)), Guards{.aut_hs_group = 32}),
                    Unsupported);
}

TEST_CASE("normality verdicts") {
    for (std::size_t n = 2; n <= 4; ++n) CHECK(normality_verdict(build_family(FamilySpec::hypercube(n))).normal);
    auto f4 = normality_verdict(build_family(FamilySpec::folded(4)));
    CHECK(f4.normal);
    CHECK(f4.aut_order == 1920);
    auto ct = normality_verdict(build_family(FamilySpec::complete_transposition(4)));
    CHECK_FALSE(ct.normal);
    CHECK(ct.aut_order == 1152);
    auto c4 = normality_verdict(from_transpositions(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
    CHECK_FALSE(c4.normal);
    CHECK(c4.aut_order > 192);
    CHECK(c4.aut_order == 768);
    CHECK_FALSE(normality_verdict(build_family(FamilySpec::hypercube(3))).grr);
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(automorphism_group(build_family(FamilySpec::hypercube(8))), GuardExceeded);
    CHECK_THROWS_AS(automorphism_group(build_family(FamilySpec::hypercube(6)), Guards{.search_nodes = 5}), GuardExceeded);
}

}  // TEST_SUITE
