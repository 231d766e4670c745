#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cayleynet/cli.hpp"
#include "cayleynet/codes.hpp"
#include "cayleynet/errors.hpp"
#include "cayleynet/io.hpp"
#include "cayleynet/symmetry.hpp"

using namespace cayleynet;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json cli_json(std::vector<std::string> args) {
    auto r = cli(std::move(args));
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out);
}

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / "cayleynet_tests";
    fs::create_directories(dir);
    return dir / name;
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("graph JSON round trip") {
    for (const auto& g : {build_family(FamilySpec::star(4)), build_family(FamilySpec::folded(4)),
                          build_family(FamilySpec::petersen()), build_family(FamilySpec::torus({3, 4})),
                          build_family(FamilySpec::mesh({2, 3})), from_transpositions(4, {{1, 2}, {3, 4}}),
                          cayley_from_matrix(repetition_check_matrix(5)).graph}) {
        auto text = export_graph_json(g);
        auto back = import_graph_json(text);
        CHECK(back.edges() == g.edges());
        CHECK(back.vertex_labels() == g.vertex_labels());
        CHECK(back.is_cayley() == g.is_cayley());
        CHECK(export_graph_json(back) == text);
    }
}

TEST_CASE("graph JSON schema") {
    auto j = graph_to_json(build_family(FamilySpec::hypercube(2)));
    CHECK(j["format"] == std::string(kGraphFormat));
    CHECK(j["n"] == 4);
    CHECK(j["edges"].size() == 4);
    CHECK(std::is_sorted(j["edges"].begin(), j["edges"].end()));
    CHECK(j["vertex_labels"][0] == "00");
    CHECK(j["edge_labels"].size() == 4);
    CHECK(j["family_meta"]["name"] == "hypercube");
}

TEST_CASE("malformed JSON is rejected") {
    CHECK_THROWS_AS(import_graph_json("{"), InvalidArgument);
    CHECK_THROWS_AS(import_graph_json(R"({"format":"other","n":2,"edges":[[0,1]]})"), InvalidArgument);
    CHECK_THROWS_AS(import_graph_json(R"({"format":"cayley-net/1","n":2,"edges":[[0,2]]})"), InvalidArgument);
    CHECK_THROWS_AS(import_graph_json(R"({"format":"cayley-net/1","n":2,"edges":[[1,1]]})"), InvalidArgument);
    auto j = graph_to_json(build_family(FamilySpec::hypercube(2)));
    j["edges"][0] = nlohmann::json::array({0, 3});
    CHECK_THROWS_AS(graph_from_json(j), InvalidArgument);
    auto plain = import_graph_json(R"({"format":"cayley-net/1","n":3,"edges":[[1,2],[0,1]]})");
    CHECK(plain.edge_count() == 2);
    CHECK_FALSE(plain.is_cayley());
}

TEST_CASE("DOT output") {
    auto dot = export_dot(build_family(FamilySpec::hypercube(2)));
    CHECK(dot.rfind("graph", 0) == 0);
    CHECK(dot.find("\"00\" -- \"01\"") != std::string::npos);
    CHECK(dot.find("\"00\" -- \"01\"") < dot.find("\"01\" -- \"11\""));
    auto plain = export_dot(from_edges(3, {{2, 1}, {0, 2}}));
    CHECK(plain.find("\"0\" -- \"2\"") < plain.find("\"1\" -- \"2\""));
    auto di = export_cayley_digraph_dot(from_transpositions(3, {{1, 2}, {2, 3}}));
    CHECK(di.rfind("digraph", 0) == 0);
    std::size_t arcs = 0;
    for (std::size_t p = di.find("->"); p != std::string::npos; p = di.find("->", p + 2)) ++arcs;
    CHECK(arcs == 12);
    CHECK(export_dot(build_family(FamilySpec::petersen())) == export_dot(build_family(FamilySpec::petersen())));
}

}  // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("build command") {
    auto out = scratch("q6.json");
    auto r = cli({"build", "--family", "hypercube", "--n", "6", "-o", out.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "vertices 64\nedges 192\n");
    CHECK(import_graph_json(read_file(out)).edge_count() == 192);

    auto rep5 = scratch("rep5.txt");
    write_file(rep5, "10001\n01001\n00101\n00011\n");
    r = cli({"build", "--from-matrix", rep5.string(), "-o", scratch("fq4.json").string()});
    CHECK(r.out == "vertices 16\nedges 40\n");

    r = cli({"build", "--family", "star", "--n", "5", "-o", scratch("st5.json").string()});
    CHECK(r.out == "vertices 120\nedges 240\n");

    auto tr = scratch("c4.txt");
    write_file(tr, "4\n1 2\n2 3\n3 4\n1 4\n");
    r = cli({"build", "--from-transpositions", tr.string(), "-o", scratch("c4.json").string()});
    CHECK(r.out == "vertices 24\nedges 48\n");

    r = cli({"build", "--cayley", "S3", "--gens", "(1,2);(2,3)", "--format", "dot"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("graph", 0) == 0);
}

TEST_CASE("build usage errors") {
    CHECK(cli({"build"}).code == kExitUsage);
    CHECK(cli({"build", "--family", "hypercube"}).code == kExitUsage);
    CHECK(cli({"build", "--family", "nonsense", "--n", "3"}).code == kExitUsage);
    CHECK(cli({"build", "--family", "hypercube", "--n", "3", "--cayley", "S3"}).code == kExitUsage);
    CHECK(cli({"frobnicate"}).code == kExitUsage);
    CHECK(cli({"build", "--family", "star", "--n", "9", "--guard", "closure=1000"}).code == kExitGuard);
}

TEST_CASE("analyze command") {
    auto pet = cli_json({"analyze", "petersen", "--metrics", "aut", "--no-timing"});
    CHECK(pet["symmetry"]["aut"]["order"] == 120);
    auto fq = cli_json({"analyze", scratch("fq4.json").string(), "--metrics", "kappa", "--no-timing"});
    CHECK(fq["connectivity"]["kappa"]["kappa"] == 5);
    auto st = cli_json({"analyze", "star:6", "--metrics", "diameter,girth,bipartite", "--no-timing"});
    CHECK(st["metrics"]["diameter"]["value"] == 7);
    CHECK(st["metrics"]["girth"] == 6);
    CHECK(st["metrics"]["bipartite"]["bipartite"] == true);
    auto skip = cli_json({"analyze", "hypercube:4", "--metrics", "aut", "--guard", "aut=5", "--no-timing"});
    CHECK(skip["skipped"].contains("aut"));
    CHECK_FALSE(skip["symmetry"].contains("aut"));
    auto timed = cli_json({"analyze", "cycle:5", "--metrics", "girth"});
    CHECK(timed.contains("timing"));
    CHECK(cli({"analyze", scratch("missing.json").string()}).code == kExitUsage);
    CHECK(cli({"analyze", "petersen", "--metrics", "bogus"}).code == kExitUsage);
}

TEST_CASE("reports are byte-identical without timing") {
    std::vector<std::string> args{"analyze", "folded:4", "--metrics",
                                  "degree,kappa,lambda,diameter,girth,bipartite,aut,transitivity,normality,moore-gap",
                                  "--no-timing"};
    auto a = cli(args), b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("timing") == std::string::npos);
}

TEST_CASE("container command") {
    auto fq = cli_json({"container", "--family", "folded", "--n", "6", "--src", "000000", "--dst", "011111", "--format", "json"});
    CHECK(fq["width"] == 7);
    CHECK(fq["verification"]["ok"] == true);
    auto q = cli_json({"container", "--family", "hypercube", "--n", "6", "--src", "000000", "--dst", "011111", "--format", "json"});
    CHECK(q["width"] == 6);
    auto q3 = cli_json({"container", "--family", "hypercube", "--n", "3", "--src", "000", "--dst", "001", "--format", "json"});
    CHECK(q3["width"] == 3);
    CHECK(q3["paths"][0].size() == 2);
    auto dot = cli({"container", "--family", "hypercube", "--n", "3", "--src", "000", "--dst", "111", "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.find("graph") != std::string::npos);
    CHECK(cli({"container", "--family", "hypercube", "--n", "3", "--src", "000", "--dst", "000"}).code == kExitUsage);
    CHECK(cli({"container", "--family", "hypercube", "--n", "3", "--src", "00", "--dst", "011"}).code == kExitUsage);
}

TEST_CASE("compare command") {
    auto torus = cli_json({"compare", "torus:4x5", "cayley:Z4xZ5:(1,0);(3,0);(0,1);(0,4)"});
    CHECK(torus["verdict"] == "isomorphic");
    auto q3 = cli_json({"compare", "hypercube:3", "complete-bipartite:3x3"});
    CHECK(q3["verdict"] == "not_isomorphic");
    auto map = scratch("map.json");
    auto pet = cli_json({"compare", "complement(line(complete:5))", "petersen", "--mapping", map.string()});
    CHECK(pet["verdict"] == "isomorphic");
    auto m = nlohmann::json::parse(read_file(map));
    CHECK(m["mapping"].size() == 10);
    auto unknown = cli({"compare", "hypercube:4", "hypercube:4", "--guard", "aut=5"});
    CHECK(unknown.code == kExitUnknown);
    CHECK(nlohmann::json::parse(unknown.out)["verdict"] == "unknown");
}

TEST_CASE("moore command") {
    auto row = cli_json({"moore", "--delta", "7", "--diameter", "10"});
    CHECK(row["moore_bound"] == 84652646);
    auto fill = cli_json({"moore", "--graph", "petersen"});
    CHECK(fill["fill_ratio"] == 1.0);
    auto q10 = cli_json({"moore", "--graph", "hypercube:10"});
    CHECK(q10["fill_ratio"].get<double>() < 1e-6);
}

TEST_CASE("check command") {
    auto r = cli({"check", "--seed", "7", "--count", "30", "--max-n", "8"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["violations"].empty());
    auto again = cli({"check", "--seed", "7", "--count", "30", "--max-n", "8"});
    CHECK(again.out == r.out);
}

TEST_CASE("guard from the environment") {
    ::setenv("CAYLEYNET_GUARD", "aut=5", 1);
    auto r = cli({"compare", "hypercube:4", "hypercube:4"});
    ::unsetenv("CAYLEYNET_GUARD");
    CHECK(r.code == kExitUnknown);
}

}  // TEST_SUITE
