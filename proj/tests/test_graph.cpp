#include <doctest.h>

#include <set>

#include "cayleynet/errors.hpp"
#include "cayleynet/graph.hpp"
#include "cayleynet/metrics.hpp"
#include "cayleynet/symmetry.hpp"
#include "oracles.hpp"

using namespace cayleynet;

namespace {

GroupElement perm(const std::string& text, std::size_t n) { return parse_element(text, GroupSpec::symmetric(n)); }

bool regular_of(const Graph& g, std::size_t d) {
    auto s = degree_stats(g);
    return s.regular && s.min_degree == d;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("builder collapses duplicates and rejects loops") {
    GraphBuilder b(4);
    b.add_edge(0, 1, 3);
    b.add_edge(1, 0, 1);
    b.add_edge(2, 3, 0);
    CHECK_THROWS_AS(b.add_edge(2, 2), InvalidArgument);
    CHECK_THROWS_AS(b.add_edge(0, 4), InvalidArgument);
    auto g = std::move(b).build();
    CHECK(g.edge_count() == 2);
    CHECK(g.edge_label(0, 1) == 1u);

    GraphBuilder partial(3);
    partial.add_edge(0, 1, 0);
    partial.add_edge(1, 2);
    CHECK_THROWS_AS(std::move(partial).build(), InvalidArgument);
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(validate(g).empty());
}

TEST_CASE("small Cayley graphs") {
    auto s3 = GroupSpec::symmetric(3);
    auto c6 = cayley_graph(GeneratingSet(s3, {perm("(1,2)", 3), perm("(2,3)", 3)}));
    CHECK(oracle::isomorphic_by_permutations(c6, build_family(FamilySpec::cycle(6))));
    auto k33 = cayley_graph(GeneratingSet(s3, {perm("(1,2)", 3), perm("(2,3)", 3), perm("(1,3)", 3)}));
    CHECK(oracle::isomorphic_by_permutations(k33, build_family(FamilySpec::complete_bipartite(3, 3))));
    auto k2 = cayley_graph(GeneratingSet(GroupSpec::binary(1), {GroupElement::unit_word(1, 1)}));
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK_THROWS_AS(cayley_graph(GeneratingSet(s3, {perm("(1,2,3)", 3)})), InvalidArgument);
    CHECK_THROWS_AS(cayley_graph(GeneratingSet(s3, {perm("e", 3), perm("(1,2)", 3)})), InvalidArgument);
}

TEST_CASE("Cayley vertices follow closure order and edges carry generator pairs") {
    auto s = GeneratingSet(GroupSpec::symmetric(4), {perm("(1,2,3,4)", 4), perm("(1,4,3,2)", 4), perm("(1,2)", 4)});
    auto g = cayley_graph(s);
    auto c = closure(s);
    REQUIRE(g.is_cayley());
    CHECK(g.cayley()->elements == c);
    CHECK(g.cayley()->generator_pair == std::vector<std::uint32_t>{0, 0, 1});
    for (Vertex h = 0; h < g.vertex_count(); ++h)
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto t = *g.cayley()->index_of(compose(s[i], c[h]));
            CHECK(g.adjacent(h, t));
            CHECK(g.edge_label(h, t) == g.cayley()->generator_pair[i]);
        }
    CHECK(regular_of(g, 3));
}

TEST_CASE("family sizes and degrees") {
    for (std::size_t n = 1; n <= 6; ++n) {
        auto q = build_family(FamilySpec::hypercube(n));
        CHECK(q.vertex_count() == (1u << n));
        CHECK(regular_of(q, n));
    }
    for (std::size_t n = 2; n <= 6; ++n) CHECK(regular_of(build_family(FamilySpec::folded(n)), n + 1));
    for (std::size_t n = 4; n <= 6; ++n) CHECK(regular_of(build_family(FamilySpec::augmented(n)), 2 * n - 1));
    for (std::size_t n = 3; n <= 6; ++n) {
        auto st = build_family(FamilySpec::star(n));
        std::size_t fact = 1;
        for (std::size_t i = 2; i <= n; ++i) fact *= i;
        CHECK(st.vertex_count() == fact);
        CHECK(regular_of(st, n - 1));
        auto ag = build_family(FamilySpec::alternating_group_graph(n));
        CHECK(ag.vertex_count() == fact / 2);
        CHECK(regular_of(ag, 2 * (n - 2)));
        CHECK(regular_of(build_family(FamilySpec::bubble_sort(n)), n - 1));
        CHECK(regular_of(build_family(FamilySpec::complete_transposition(n)), n * (n - 1) / 2));
    }
    CHECK(regular_of(build_family(FamilySpec::modified_bubble_sort(4)), 4));
    auto ag4 = build_family(FamilySpec::alternating_group_graph(4));
    CHECK(ag4.vertex_count() == 12);
    CHECK(regular_of(ag4, 4));
    auto p = build_family(FamilySpec::petersen());
    CHECK(p.vertex_count() == 10);
    CHECK(regular_of(p, 3));
    CHECK(girth(p) == 5);
}

TEST_CASE("circulants, tori, meshes and Harary graphs") {
    auto c8 = build_family(FamilySpec::circulant(8, {1, 4}));
    CHECK(regular_of(c8, 3));  // the diametral jump contributes one edge per vertex
    CHECK(regular_of(build_family(FamilySpec::circulant(10, {1, 2})), 4));
    CHECK_THROWS_AS(build_family(FamilySpec::circulant(8, {5})), InvalidArgument);
    auto t = build_family(FamilySpec::torus({4, 5}));
    CHECK(t.vertex_count() == 20);
    CHECK(regular_of(t, 4));
    auto mesh = build_family(FamilySpec::mesh({3, 4}));
    CHECK(mesh.vertex_count() == 12);
    CHECK(mesh.edge_count() == 3 * 3 + 2 * 4);
    auto h = build_family(FamilySpec::harary(4, 9));
    CHECK(regular_of(h, 4));
    CHECK_THROWS_AS(build_family(FamilySpec::harary(3, 9)), InvalidArgument);
    CHECK_THROWS_AS(build_family(FamilySpec::harary(10, 9)), InvalidArgument);
}

TEST_CASE("parameter ranges") {
    CHECK_THROWS_AS(build_family(FamilySpec::folded(1)), InvalidArgument);
    CHECK_THROWS_AS(build_family(FamilySpec::alternating_group_graph(2)), InvalidArgument);
    CHECK_THROWS_AS(build_family(FamilySpec::augmented(3)), InvalidArgument);
    CHECK_THROWS_AS(build_family(FamilySpec::cycle(2)), InvalidArgument);
}

TEST_CASE("augmented cube generators") {
    auto s = family_generators(FamilySpec::augmented(5));
    std::set<std::string> text;
    for (auto& g : s.elements()) text.insert(g.to_string());
    CHECK(text == std::set<std::string>{"10000", "01000", "00100", "00010", "00001", "00011", "00111", "01111", "11111"});
}

TEST_CASE("cartesian products") {
    auto c4 = build_family(FamilySpec::cycle(4));
    auto c5 = build_family(FamilySpec::cycle(5));
    auto t = cartesian_product(c4, c5);
    CHECK(t.vertex_count() == 20);
    CHECK(regular_of(t, 4));
    CHECK(t.adjacent(0 * 5 + 0, 0 * 5 + 1));
    CHECK(t.adjacent(0 * 5 + 0, 1 * 5 + 0));
    auto k1 = build_family(FamilySpec::complete(1));
    CHECK(oracle::isomorphic_by_permutations(cartesian_product(c5, k1), c5));
    auto k2 = build_family(FamilySpec::complete(2));
    auto cube = cartesian_product(cartesian_product(k2, k2), k2);
    CHECK(oracle::isomorphic_by_permutations(cube, build_family(FamilySpec::hypercube(3))));
}

TEST_CASE("line graphs and complements") {
    auto k3 = build_family(FamilySpec::complete(3));
    auto claw = build_family(FamilySpec::complete_bipartite(1, 3));
    CHECK(oracle::isomorphic_by_permutations(line_graph(claw), k3));
    CHECK(oracle::isomorphic_by_permutations(line_graph(k3), k3));
    for (std::size_t n = 3; n <= 7; ++n) {
        auto c = build_family(FamilySpec::cycle(n));
        CHECK(oracle::isomorphic_by_permutations(line_graph(c), c));
    }
    auto k5 = build_family(FamilySpec::complete(5));
    CHECK(complement(k5).edge_count() == 0);
    auto p = complement(line_graph(k5));
    CHECK(p.vertex_count() == 10);
    CHECK(regular_of(p, 3));
    CHECK(oracle::isomorphic_by_permutations(p, build_family(FamilySpec::petersen())));
    auto q3 = build_family(FamilySpec::hypercube(3));
    CHECK(complement(complement(q3)).edges() == q3.edges());
}

TEST_CASE("transposition Cayley graphs") {
    auto cube = from_transpositions(6, {{1, 2}, {3, 4}, {5, 6}});
    CHECK(oracle::isomorphic_by_permutations(cube, build_family(FamilySpec::hypercube(3))));
    auto ct = from_transpositions(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(ct.vertex_count() == 24);
    CHECK(regular_of(ct, 6));
    auto mb = from_transpositions(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK(mb.edges() == build_family(FamilySpec::modified_bubble_sort(4)).edges());
    for (auto& g : {cube, ct, mb, build_family(FamilySpec::star(5))}) CHECK(is_bipartite(g).bipartite);
}

TEST_CASE("every constructed graph validates and Cayley graphs are vertex-transitive") {
    std::vector<Graph> zoo = {build_family(FamilySpec::hypercube(4)),    build_family(FamilySpec::folded(4)),
                              build_family(FamilySpec::augmented(4)),    build_family(FamilySpec::star(4)),
                              build_family(FamilySpec::bubble_sort(4)),  build_family(FamilySpec::alternating_group_graph(4)),
                              build_family(FamilySpec::circulant(9, {1, 3})), build_family(FamilySpec::torus({3, 4})),
                              build_family(FamilySpec::harary(4, 8)),    build_family(FamilySpec::petersen()),
                              build_family(FamilySpec::mesh({2, 3})),    build_family(FamilySpec::complete_bipartite(2, 3))};
    for (const auto& g : zoo) {
        CHECK(validate(g).empty());
        if (g.is_cayley()) CHECK(transitivity_report(g, 1).vertex_transitive);
    }
}

TEST_CASE("tori are Cayley graphs on cyclic products") {
    for (auto dims : std::vector<std::vector<std::uint32_t>>{{3, 3}, {4, 5}, {3, 4, 5}, {6, 6}}) {
        auto t = build_family(FamilySpec::torus(dims));
        auto prod = build_family(FamilySpec::cycle(dims[0]));
        for (std::size_t i = 1; i < dims.size(); ++i) prod = cartesian_product(prod, build_family(FamilySpec::cycle(dims[i])));
        CHECK(graph_isomorphic(t, prod).has_value());
    }
}

TEST_CASE("family names round-trip") {
    for (auto f : {Family::Hypercube, Family::Folded, Family::Star, Family::Petersen, Family::CompleteBipartite, Family::Mesh})
        CHECK(family_from_name(family_name(f)) == f);
    CHECK_FALSE(family_from_name("dragonfly").has_value());
}

}  // TEST_SUITE
