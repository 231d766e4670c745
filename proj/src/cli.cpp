#include "cayleynet/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cayleynet/codes.hpp"
#include "cayleynet/connectivity.hpp"
#include "cayleynet/containers.hpp"
#include "cayleynet/errors.hpp"
#include "cayleynet/io.hpp"
#include "cayleynet/metrics.hpp"
#include "cayleynet/random.hpp"
#include "cayleynet/symmetry.hpp"
#include "cayleynet/transpositions.hpp"

namespace cayleynet {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write '" + path + "'");
    out << text;
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::size_t to_size(const std::string& s) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        throw InvalidArgument("expected a non-negative integer, got '" + s + "'");
    }
    if (pos != s.size() || s.front() == '-') throw InvalidArgument("expected a non-negative integer, got '" + s + "'");
    return static_cast<std::size_t>(v);
}

std::vector<std::uint32_t> to_list(std::string_view s, char sep) {
    std::vector<std::uint32_t> out;
    for (const auto& part : split(s, sep)) out.push_back(static_cast<std::uint32_t>(to_size(part)));
    return out;
}

FamilySpec family_spec(std::string_view name, std::string_view args) {
    auto fam = family_from_name(name);
    if (!fam) throw InvalidArgument("unknown family '" + std::string(name) + "'");
    auto parts = args.empty() ? std::vector<std::string>{} : split(args, ':');
    auto need = [&](std::size_t k) {
        if (parts.size() != k)
            throw InvalidArgument("family '" + std::string(name) + "' takes " + std::to_string(k) + " argument(s)");
    };
    switch (*fam) {
    case Family::Petersen: need(0); return FamilySpec::petersen();
    case Family::Circulant: need(2); return FamilySpec::circulant(to_size(parts[0]), to_list(parts[1], ','));
    case Family::Torus: need(1); return FamilySpec::torus(to_list(parts[0], 'x'));
    case Family::Mesh: need(1); return FamilySpec::mesh(to_list(parts[0], 'x'));
    case Family::Harary: need(2); return FamilySpec::harary(to_size(parts[0]), to_size(parts[1]));
    case Family::CompleteBipartite: {
        need(1);
        auto ab = to_list(parts[0], 'x');
        if (ab.size() != 2) throw InvalidArgument("complete-bipartite takes AxB");
        return FamilySpec::complete_bipartite(ab[0], ab[1]);
    }
    default: break;
    }
    need(1);
    FamilySpec s = FamilySpec::complete(0);
    s.family = *fam;
    s.n = to_size(parts[0]);
    return s;
}

Graph cayley_from_text(std::string_view group, std::string_view gens_text, const Guards& guards) {
    auto spec = GroupSpec::parse(trim(group));
    std::vector<GroupElement> gens;
    for (const auto& g : split(gens_text, ';'))
        if (!g.empty()) gens.push_back(parse_element(g, spec));
    return cayley_graph(GeneratingSet(spec, std::move(gens)), guards);
}

Graph transpositions_graph(const std::string& path, const Guards& guards) {
    auto ts = parse_transpositions(read_file(path));
    return from_transpositions(ts.n, ts.pairs, guards);
}

// Splits "a,b" at the comma outside any parentheses.
std::pair<std::string, std::string> split_top(std::string_view s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == ',' && depth == 0) return {trim(s.substr(0, i)), trim(s.substr(i + 1))};
    }
    throw InvalidArgument("product(...) needs two comma-separated graphs");
}

json big_json(const BigInt& v) {
    if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
    return v.str();
}

json names(const Graph& g, const std::vector<Vertex>& vs) {
    json out = json::array();
    for (auto v : vs) out.push_back(g.vertex_name(v));
    return out;
}

json edge_names(const Graph& g, const std::vector<Edge>& es) {
    json out = json::array();
    for (auto [u, v] : es) out.push_back({g.vertex_name(u), g.vertex_name(v)});
    return out;
}

std::string graph_hash(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) h = (h ^ ((x >> (8 * i)) & 0xff)) * 0x100000001b3ULL;
    };
    feed(g.vertex_count());
    for (auto [u, v] : g.edges()) {
        feed(u);
        feed(v);
    }
    std::ostringstream s;
    s << std::hex << std::setw(16) << std::setfill('0') << h;
    return s.str();
}

json graph_identity(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["hash"] = graph_hash(g);
    if (const auto& m = g.family_meta()) {
        j["family"] = m->name;
        if (!m->params.empty()) j["params"] = m->params;
    }
    if (g.is_cayley()) j["group"] = g.cayley()->spec.to_string();
    return j;
}

json aut_json(const AutGroup& a) {
    json j;
    j["order"] = big_json(a.order);
    j["generators"] = a.generators;
    j["base"] = a.base;
    j["basic_orbit_sizes"] = a.basic_orbit_sizes;
    return j;
}

const std::vector<std::string> kMetrics = {"degree", "kappa", "lambda", "diameter", "girth", "bipartite",
                                           "aut", "transitivity", "normality", "atoms", "moore-gap"};

int cmd_analyze(const std::string& input, const std::string& metrics_text, int k_cap, bool no_timing,
                const std::string& output, const Guards& guards, std::ostream& out) {
    auto g = resolve_graph(input, guards);
    std::vector<std::string> metrics;
    for (const auto& m : split(metrics_text, ','))
        if (!m.empty()) {
            if (std::find(kMetrics.begin(), kMetrics.end(), m) == kMetrics.end())
                throw InvalidArgument("unknown metric '" + m + "'");
            if (std::find(metrics.begin(), metrics.end(), m) == metrics.end()) metrics.push_back(m);
        }

    json report;
    report["graph"] = graph_identity(g);
    report["warnings"] = json::array();
    json skipped = json::object();
    json timing = json::object();
    for (const auto& v : validate(g)) report["warnings"].push_back(v);

    const std::map<std::string, std::string> block_of = {
        {"degree", "metrics"},       {"diameter", "metrics"},  {"girth", "metrics"},  {"bipartite", "metrics"},
        {"moore-gap", "metrics"},    {"kappa", "connectivity"}, {"lambda", "connectivity"},
        {"atoms", "connectivity"},   {"aut", "symmetry"},      {"transitivity", "symmetry"},
        {"normality", "symmetry"}};

    for (const auto& m : metrics) {
        auto start = std::chrono::steady_clock::now();
        json value;
        try {
            if (m == "degree") {
                auto d = degree_stats(g);
                value = {{"min", d.min_degree}, {"max", d.max_degree}, {"regular", d.regular}};
            } else if (m == "kappa") {
                auto c = connectivity_report(g);
                value = {{"kappa", c.kappa},
                         {"delta", c.delta},
                         {"fault_tolerance", c.fault_tolerance},
                         {"optimal_fault_tolerance", c.optimal_fault_tolerance},
                         {"hypo_connected", c.is_hypo_connected}};
                if (c.min_vertex_separator) value["separator"] = names(g, *c.min_vertex_separator);
                if (c.watkins_lower_bound_ok) value["vertex_transitive_bound_ok"] = *c.watkins_lower_bound_ok;
            } else if (m == "lambda") {
                auto e = edge_connectivity(g);
                value = {{"lambda", e.lambda}, {"cut", edge_names(g, e.cut)}};
            } else if (m == "diameter") {
                auto d = diameter(g);
                value = {{"value", d.value}, {"exact", d.exact}, {"method", d.method}};
            } else if (m == "girth") {
                auto gi = girth(g);
                value = gi ? json(*gi) : json(nullptr);
            } else if (m == "bipartite") {
                auto b = is_bipartite(g);
                value = {{"bipartite", b.bipartite}};
                if (!b.bipartite) value["odd_cycle"] = names(g, b.odd_cycle);
            } else if (m == "moore-gap") {
                auto d = diameter(g);
                auto bound = moore_bound(degree_stats(g).max_degree, d.value);
                value = {{"moore_bound", big_json(bound)},
                         {"vertices", g.vertex_count()},
                         {"gap", big_json(bound - g.vertex_count())},
                         {"fill_ratio", static_cast<double>(g.vertex_count()) / bound.convert_to<double>()}};
            } else if (m == "aut") {
                value = aut_json(automorphism_group(g, guards));
            } else if (m == "transitivity") {
                auto t = transitivity_report(g, k_cap, guards);
                value = {{"vertex_transitive", t.vertex_transitive}, {"edge_transitive", t.edge_transitive},
                         {"arc_transitive", t.arc_transitive},       {"distance_transitive", t.distance_transitive},
                         {"k_arc_transitive_max", t.k_arc_transitive_max}, {"k_arc_truncated", t.k_arc_truncated},
                         {"k_cap", k_cap},
                         {"vertex_orbits", t.vertex_orbit_count},    {"edge_orbits", t.edge_orbit_count},
                         {"arc_orbits", t.arc_orbit_count},          {"aut_order", big_json(t.aut_order)}};
            } else if (m == "normality") {
                auto v = normality_verdict(g, guards);
                value = {{"verdict", v.normal ? "normal" : "non_normal"},
                         {"grr", v.grr},
                         {"aut_order", big_json(v.aut_order)},
                         {"group_order", v.group_order},
                         {"aut_hs_order", v.aut_hs_order},
                         {"predicted_order", big_json(v.predicted_order)}};
            } else if (m == "atoms") {
                value = json::array();
                for (const auto& a : atoms(g, guards))
                    value.push_back({{"vertices", names(g, a.vertices)}, {"separator", names(g, a.separator)}});
            }
            report[block_of.at(m)][m] = std::move(value);
        } catch (const GuardExceeded& e) {
            skipped[m] = std::string("guard: ") + e.what();
        } catch (const Unsupported& e) {
            skipped[m] = std::string("unsupported: ") + e.what();
        } catch (const InvalidArgument& e) {
            skipped[m] = std::string("not applicable: ") + e.what();
        }
        timing[m] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    report["skipped"] = std::move(skipped);
    if (!no_timing) report["timing"] = std::move(timing);
    auto text = report.dump(2) + "\n";
    if (output.empty()) out << text;
    else write_file(output, text);
    return kExitOk;
}

// Smallest vertex set separating s from t, by increasing-size enumeration.
std::size_t brute_min_separator(const Graph& g, Vertex s, Vertex t) {
    const auto n = g.vertex_count();
    std::vector<Vertex> others;
    for (Vertex v = 0; v < n; ++v)
        if (v != s && v != t) others.push_back(v);
    std::size_t best = others.size();
    for (std::uint32_t mask = 0; mask < (1u << others.size()); ++mask) {
        auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size >= best) continue;
        std::vector<bool> removed(n, false);
        for (std::size_t i = 0; i < others.size(); ++i)
            if (mask >> i & 1u) removed[others[i]] = true;
        std::vector<Vertex> stack{s};
        std::vector<bool> seen(n, false);
        seen[s] = true;
        bool reached = false;
        while (!stack.empty() && !reached) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : g.neighbors(v))
                if (!seen[w] && !removed[w]) {
                    seen[w] = true;
                    reached = reached || w == t;
                    stack.push_back(w);
                }
        }
        if (!reached) best = size;
    }
    return best;
}

int cmd_check(std::uint64_t seed, std::size_t count, std::size_t max_n, const Guards& guards, std::ostream& out) {
    if (max_n < 2 || max_n > 16) throw InvalidArgument("--max-n must be in 2..16");
    Rng rng(seed);
    std::uniform_int_distribution<std::size_t> size_dist(2, max_n);
    std::uniform_real_distribution<double> p_dist(0.1, 0.7);
    struct Tally {
        std::size_t cases = 0, violations = 0;
    };
    std::map<std::string, Tally> tally;
    json examples = json::array();
    auto record = [&](const std::string& name, bool ok, const Graph& g) {
        auto& t = tally[name];
        ++t.cases;
        if (!ok) {
            ++t.violations;
            if (examples.size() < 5) examples.push_back({{"check", name}, {"edges", g.edges()}, {"n", g.vertex_count()}});
        }
    };
    for (std::size_t i = 0; i < count; ++i) {
        auto g = random_connected_graph(size_dist(rng), p_dist(rng), rng);
        auto kappa = vertex_connectivity(g).kappa;
        auto lambda = edge_connectivity(g).lambda;
        record("whitney", kappa <= lambda && lambda <= degree_stats(g).min_degree, g);
        bool menger = true;
        for (Vertex s = 0; s < g.vertex_count(); ++s)
            for (Vertex t = s + 1; t < g.vertex_count(); ++t) {
                if (g.adjacent(s, t)) continue;
                auto flow = local_vertex_connectivity(g, s, t);
                auto paths = max_independent_paths(g, s, t);
                menger = menger && flow == brute_min_separator(g, s, t) && paths.width == flow &&
                         verify_container(g, paths).ok;
            }
        record("menger", menger, g);
        record("complement-aut", automorphism_group(g, guards).order == automorphism_group(complement(g), guards).order, g);
    }
    json report;
    report["seed"] = seed;
    report["count"] = count;
    bool ok = true;
    for (const auto& [name, t] : tally) {
        report["checks"][name] = {{"cases", t.cases}, {"violations", t.violations}};
        ok = ok && t.violations == 0;
    }
    report["counterexamples"] = std::move(examples);
    out << report.dump(2) << "\n";
    return ok ? kExitOk : kExitVerification;
}

}  // namespace

Graph resolve_graph(std::string_view expr_view, const Guards& guards) {
    auto expr = trim(expr_view);
    if (expr.empty()) throw InvalidArgument("empty graph expression");
    auto wrapped = [&](std::string_view op) {
        return expr.size() > op.size() + 1 && expr.compare(0, op.size(), op) == 0 && expr[op.size()] == '(' &&
               expr.back() == ')';
    };
    auto inner = [&](std::string_view op) { return expr.substr(op.size() + 1, expr.size() - op.size() - 2); };
    if (wrapped("complement")) return complement(resolve_graph(inner("complement"), guards));
    if (wrapped("line")) return line_graph(resolve_graph(inner("line"), guards));
    if (wrapped("product")) {
        auto [a, b] = split_top(inner("product"));
        return cartesian_product(resolve_graph(a, guards), resolve_graph(b, guards));
    }
    if (std::filesystem::is_regular_file(expr)) return import_graph_json(read_file(expr), guards);

    auto colon = expr.find(':');
    auto head = expr.substr(0, colon);
    auto rest = colon == std::string::npos ? std::string() : expr.substr(colon + 1);
    if (head == "cayley") {
        auto c = rest.find(':');
        if (c == std::string::npos) throw InvalidArgument("cayley:GROUP:g1;g2;... expected");
        return cayley_from_text(rest.substr(0, c), rest.substr(c + 1), guards);
    }
    if (head == "matrix") return cayley_from_matrix(parse_matrix(read_file(rest)), guards).graph;
    if (head == "transpositions") return transpositions_graph(rest, guards);
    if (!family_from_name(head)) throw InvalidArgument("'" + expr + "' is neither a graph file nor a graph expression");
    return build_family(family_spec(head, rest), guards);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cayley-graph interconnection network toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_all_flag("--help-all");
    std::string guard_text;
    app.add_option("--guard", guard_text, "guard overrides key=value,... (also CAYLEYNET_GUARD)");

    // build
    auto* build = app.add_subcommand("build", "construct a graph and write it as JSON");
    std::string family, from_matrix, from_trans, cayley_group, gens, build_out, build_format = "json";
    std::size_t fam_n = 0, fam_k = 0, fam_a = 0, fam_b = 0;
    std::string jumps, dims;
    auto* o_family = build->add_option("--family", family, "named family");
    auto* o_matrix = build->add_option("--from-matrix", from_matrix, "binary matrix file");
    auto* o_trans = build->add_option("--from-transpositions", from_trans, "transposition file");
    auto* o_cayley = build->add_option("--cayley", cayley_group, "group: S4, Z2^4, Z4xZ5, perm:6");
    build->add_option("--gens", gens, "generators separated by ';'");
    build->add_option("--n", fam_n, "family size parameter");
    build->add_option("--k", fam_k, "Harary degree");
    build->add_option("--a", fam_a, "complete bipartite side");
    build->add_option("--b", fam_b, "complete bipartite side");
    build->add_option("--jumps", jumps, "circulant jumps, comma separated");
    build->add_option("--dims", dims, "torus/mesh dimensions, e.g. 4x5");
    build->add_option("-o,--output", build_out, "output file (stdout when absent)");
    build->add_option("--format", build_format, "json, dot or digraph")->check(CLI::IsMember({"json", "dot", "digraph"}));

    // analyze
    auto* analyze = app.add_subcommand("analyze", "report metrics of a graph");
    std::string an_input, an_metrics = "degree,kappa,lambda,diameter,girth,bipartite", an_out;
    int k_cap = 3;
    bool no_timing = false;
    analyze->add_option("graph", an_input, "graph file or expression")->required();
    analyze->add_option("--metrics", an_metrics, "comma list of: degree,kappa,lambda,diameter,girth,bipartite,aut,"
                                                 "transitivity,normality,atoms,moore-gap");
    analyze->add_option("--k-cap", k_cap, "largest k for k-arc transitivity")->check(CLI::Range(1, 8));
    analyze->add_flag("--no-timing", no_timing, "omit the timing block");
    analyze->add_option("-o,--output", an_out, "output file");

    // container
    auto* container = app.add_subcommand("container", "parallel-path container in Q_n or FQ_n");
    std::string c_family, c_src, c_dst, c_format = "json";
    std::size_t c_n = 0;
    container->add_option("--family", c_family, "hypercube or folded")->required()->check(CLI::IsMember({"hypercube", "folded"}));
    container->add_option("--n", c_n, "dimension")->required();
    container->add_option("--src", c_src, "source word")->required();
    container->add_option("--dst", c_dst, "target word")->required();
    container->add_option("--format", c_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    // compare
    auto* compare = app.add_subcommand("compare", "isomorphism test");
    std::string cmp_a, cmp_b, cmp_mapping;
    bool cmp_iso = true;
    compare->add_option("a", cmp_a, "first graph")->required();
    compare->add_option("b", cmp_b, "second graph")->required();
    compare->add_flag("--isomorphism,!--no-isomorphism", cmp_iso, "run the isomorphism search");
    compare->add_option("--mapping", cmp_mapping, "write the mapping here when isomorphic");

    // moore
    auto* moore = app.add_subcommand("moore", "Moore bound and fill ratio");
    std::optional<std::uint64_t> m_delta, m_diam, m_vertices;
    std::string m_graph;
    moore->add_option("--delta", m_delta, "maximum degree");
    moore->add_option("--diameter", m_diam, "diameter");
    moore->add_option("--graph", m_graph, "graph whose fill ratio to report");
    moore->add_option("--vertices", m_vertices, "vertex count whose fill ratio to report");

    // check
    auto* check = app.add_subcommand("check", "seeded property checks on random graphs");
    std::uint64_t seed = 1;
    std::size_t count = 50, max_n = 10;
    check->add_option("--seed", seed, "random seed");
    check->add_option("--count", count, "number of random graphs");
    check->add_option("--max-n", max_n, "largest vertex count");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Guards guards = Guards::from_env();
        if (!guard_text.empty()) guards = Guards::parse(guard_text);

        if (*build) {
            int sources = static_cast<int>(o_family->count() > 0) + static_cast<int>(o_matrix->count() > 0) +
                          static_cast<int>(o_trans->count() > 0) + static_cast<int>(o_cayley->count() > 0);
            if (sources != 1) {
                err << "build: give exactly one of --family, --from-matrix, --from-transpositions, --cayley\n";
                return kExitUsage;
            }
            Graph g;
            if (!family.empty()) {
                auto fam = family_from_name(family);
                if (!fam) throw InvalidArgument("unknown family '" + family + "'");
                FamilySpec spec = FamilySpec::complete(fam_n);
                spec.family = *fam;
                switch (*fam) {
                case Family::Petersen: spec = FamilySpec::petersen(); break;
                case Family::Circulant: spec.list = to_list(jumps, ','); break;
                case Family::Torus:
                case Family::Mesh: spec.list = to_list(dims, 'x'); break;
                case Family::Harary: spec.k = fam_k; break;
                case Family::CompleteBipartite: spec = FamilySpec::complete_bipartite(fam_a, fam_b); break;
                default: break;
                }
                g = build_family(spec, guards);
            } else if (!from_matrix.empty()) {
                auto mg = cayley_from_matrix(parse_matrix(read_file(from_matrix)), guards);
                for (const auto& w : mg.warnings) err << "warning: " << w << "\n";
                g = std::move(mg.graph);
            } else if (!from_trans.empty()) {
                g = transpositions_graph(from_trans, guards);
            } else {
                g = cayley_from_text(cayley_group, gens, guards);
            }
            std::string text = build_format == "json" ? export_graph_json(g)
                               : build_format == "dot" ? export_dot(g)
                                                       : export_cayley_digraph_dot(g);
            if (build_out.empty()) {
                out << text;
            } else {
                write_file(build_out, text);
                out << "vertices " << g.vertex_count() << "\nedges " << g.edge_count() << "\n";
            }
            return kExitOk;
        }
        if (*analyze) return cmd_analyze(an_input, an_metrics, k_cap, no_timing, an_out, guards, out);
        if (*container) {
            auto x = parse_word(c_src, c_n);
            auto y = parse_word(c_dst, c_n);
            auto c = c_family == "hypercube" ? hypercube_container(c_n, x, y) : folded_container(c_n, x, y);
            auto g = build_family(c_family == "hypercube" ? FamilySpec::hypercube(c_n) : FamilySpec::folded(c_n), guards);
            auto gc = to_graph_vertices(c, word_vertex_map(g, c_n));
            auto check_result = verify_container(g, gc);
            if (c_format == "dot") {
                out << export_container_dot(g, gc);
            } else {
                json j = container_to_json(g, gc);
                j["verification"] = {{"ok", check_result.ok}, {"problems", check_result.problems}};
                out << j.dump(2) << "\n";
            }
            if (!check_result.ok) {
                for (const auto& p : check_result.problems) err << "verification: " << p << "\n";
                return kExitVerification;
            }
            return kExitOk;
        }
        if (*compare) {
            auto a = resolve_graph(cmp_a, guards);
            auto b = resolve_graph(cmp_b, guards);
            json j;
            j["a"] = graph_identity(a);
            j["b"] = graph_identity(b);
            if (!cmp_iso) {
                j["verdict"] = a == b ? "identical" : "different";
                out << j.dump(2) << "\n";
                return kExitOk;
            }
            std::optional<VertexPermutation> map;
            try {
                map = graph_isomorphic(a, b, guards);
            } catch (const GuardExceeded& e) {
                j["verdict"] = "unknown";
                j["reason"] = e.what();
                out << j.dump(2) << "\n";
                return kExitUnknown;
            }
            j["verdict"] = map ? "isomorphic" : "not_isomorphic";
            if (map && !cmp_mapping.empty()) {
                json pairs = json::array();
                for (Vertex v = 0; v < a.vertex_count(); ++v) pairs.push_back({a.vertex_name(v), b.vertex_name((*map)[v])});
                write_file(cmp_mapping, json{{"mapping", pairs}}.dump(2) + "\n");
            }
            out << j.dump(2) << "\n";
            return kExitOk;
        }
        if (*moore) {
            std::optional<Graph> g;
            if (!m_graph.empty()) g = resolve_graph(m_graph, guards);
            std::uint64_t delta = 0, diam = 0;
            if (m_delta) delta = *m_delta;
            else if (g) delta = degree_stats(*g).max_degree;
            else throw InvalidArgument("moore needs --delta or --graph");
            if (m_diam) diam = *m_diam;
            else if (g) diam = diameter(*g).value;
            else throw InvalidArgument("moore needs --diameter or --graph");
            auto bound = moore_bound(delta, diam);
            json j;
            j["delta"] = delta;
            j["diameter"] = diam;
            j["moore_bound"] = big_json(bound);
            std::optional<std::uint64_t> vertices = m_vertices;
            if (g) vertices = g->vertex_count();
            if (vertices) {
                j["vertices"] = *vertices;
                j["fill_ratio"] = static_cast<double>(*vertices) / bound.convert_to<double>();
            }
            out << j.dump(2) << "\n";
            return kExitOk;
        }
        if (*check) return cmd_check(seed, count, max_n, guards, out);
    } catch (const GuardExceeded& e) {
        err << "guard exceeded: " << e.what() << "\n";
        return kExitGuard;
    } catch (const Unsupported& e) {
        err << "unsupported: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace cayleynet
