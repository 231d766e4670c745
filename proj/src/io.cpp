#include "cayleynet/io.hpp"

#include <sstream>

#include "cayleynet/errors.hpp"

namespace cayleynet {

using nlohmann::json;

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

json graph_to_json(const Graph& g) {
    json j;
    j["format"] = kGraphFormat;
    j["n"] = g.vertex_count();
    json edges = json::array();
    json labels = json::object();
    for (auto [u, v] : g.edges()) {
        edges.push_back({u, v});
        if (auto l = g.edge_label(u, v)) labels[std::to_string(u) + "-" + std::to_string(v)] = *l;
    }
    j["edges"] = std::move(edges);
    if (g.has_vertex_labels()) j["vertex_labels"] = g.vertex_labels();
    if (g.has_edge_labels()) j["edge_labels"] = std::move(labels);
    if (g.family_meta() || g.is_cayley()) {
        json meta = json::object();
        if (const auto& m = g.family_meta()) {
            meta["name"] = m->name;
            meta["params"] = m->params;
        }
        if (g.is_cayley()) {
            meta["group"] = g.cayley()->spec.to_string();
            json gens = json::array();
            for (const auto& s : g.cayley()->generators) gens.push_back(s.to_string());
            meta["generators"] = std::move(gens);
        }
        j["family_meta"] = std::move(meta);
    }
    return j;
}

Graph graph_from_json(const json& j, const Guards& guards) {
    try {
        if (j.at("format").get<std::string>() != kGraphFormat) throw InvalidArgument("unknown graph format");
        const auto n = j.at("n").get<std::size_t>();
        GraphBuilder b(n);
        std::map<std::string, std::uint32_t> edge_labels;
        if (j.contains("edge_labels")) edge_labels = j["edge_labels"].get<std::map<std::string, std::uint32_t>>();
        for (const auto& e : j.at("edges")) {
            auto u = e.at(0).get<Vertex>();
            auto v = e.at(1).get<Vertex>();
            std::optional<std::uint32_t> label;
            auto key = std::to_string(std::min(u, v)) + "-" + std::to_string(std::max(u, v));
            if (auto it = edge_labels.find(key); it != edge_labels.end()) label = it->second;
            b.add_edge(u, v, label);
        }
        if (j.contains("vertex_labels")) b.set_vertex_labels(j["vertex_labels"].get<std::vector<std::string>>());
        std::optional<FamilyMeta> meta;
        if (j.contains("family_meta")) {
            const auto& m = j["family_meta"];
            if (m.contains("name")) {
                meta = FamilyMeta{m["name"].get<std::string>(), {}};
                if (m.contains("params")) meta->params = m["params"].get<std::map<std::string, std::vector<long long>>>();
                b.set_meta(*meta);
            }
        }
        auto g = std::move(b).build();
        if (j.contains("family_meta") && j["family_meta"].contains("group")) {
            const auto& m = j["family_meta"];
            auto spec = GroupSpec::parse(m["group"].get<std::string>());
            std::vector<GroupElement> gens;
            for (const auto& s : m.at("generators")) gens.push_back(parse_element(s.get<std::string>(), spec));
            auto rebuilt = cayley_graph(GeneratingSet(spec, std::move(gens)), guards);
            if (!(rebuilt == g)) throw InvalidArgument("stored edges do not match the stored Cayley data");
            if (meta) rebuilt = rebuilt.with_meta(*meta);
            return rebuilt;
        }
        return g;
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed graph JSON: ") + e.what());
    }
}

std::string export_graph_json(const Graph& g) { return graph_to_json(g).dump() + "\n"; }

Graph import_graph_json(std::string_view text, const Guards& guards) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed graph JSON: ") + e.what());
    }
    return graph_from_json(j, guards);
}

std::string export_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << quoted(g.vertex_name(v)) << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << quoted(g.vertex_name(u)) << " -- " << quoted(g.vertex_name(v)) << ";\n";
    out << "}\n";
    return out.str();
}

std::string export_cayley_digraph_dot(const Graph& g) {
    if (!g.is_cayley()) throw InvalidArgument("digraph export needs a Cayley graph");
    const auto& info = *g.cayley();
    std::ostringstream out;
    out << "digraph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << quoted(g.vertex_name(v)) << ";\n";
    for (std::size_t h = 0; h < info.elements.size(); ++h)
        for (const auto& s : info.generators) {
            auto t = *info.index_of(compose(s, info.elements[h]));
            out << "  " << quoted(g.vertex_name(static_cast<Vertex>(h))) << " -> " << quoted(g.vertex_name(t))
                << " [label=" << quoted(s.to_string()) << "];\n";
        }
    out << "}\n";
    return out.str();
}

std::string export_container_dot(const Graph& g, const Container& c) {
    std::ostringstream out;
    out << "graph container {\n";
    out << "  " << quoted(g.vertex_name(c.source)) << " [shape=box];\n";
    out << "  " << quoted(g.vertex_name(c.target)) << " [shape=box];\n";
    for (std::size_t i = 0; i < c.paths.size(); ++i) {
        const auto& p = c.paths[i];
        for (std::size_t k = 1; k < p.size(); ++k)
            out << "  " << quoted(g.vertex_name(p[k - 1])) << " -- " << quoted(g.vertex_name(p[k])) << " [label=\"" << i
                << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

json container_to_json(const Graph& g, const Container& c) {
    json j;
    j["source"] = g.vertex_name(c.source);
    j["target"] = g.vertex_name(c.target);
    json paths = json::array();
    for (const auto& p : c.paths) {
        json names = json::array();
        for (auto v : p) names.push_back(g.vertex_name(v));
        paths.push_back(std::move(names));
    }
    j["paths"] = std::move(paths);
    j["width"] = c.width;
    j["length"] = c.length;
    j["avg_length"] = c.avg_length.to_string();
    j["quality"] = c.quality.to_string();
    return j;
}

}  // namespace cayleynet
