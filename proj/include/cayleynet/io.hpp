#pragma once

// Graph JSON ("cayley-net/1") and Graphviz DOT export.

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cayleynet/containers.hpp"
#include "cayleynet/graph.hpp"
#include "cayleynet/guards.hpp"

namespace cayleynet {

inline constexpr std::string_view kGraphFormat = "cayley-net/1";

nlohmann::json graph_to_json(const Graph& g);
/// Inverse of graph_to_json. Cayley data is rebuilt from the group and
/// generators stored in family_meta and must reproduce the stored edges.
Graph graph_from_json(const nlohmann::json& j, const Guards& guards = {});

std::string export_graph_json(const Graph& g);
Graph import_graph_json(std::string_view text, const Guards& guards = {});

/// Undirected DOT, vertices named by label when present, edges sorted.
std::string export_dot(const Graph& g);
/// Cayley digraph: one arc h -> s*h per generator s, labelled by s.
std::string export_cayley_digraph_dot(const Graph& g);
/// The container paths drawn as a subgraph; vertex names come from `g`.
std::string export_container_dot(const Graph& g, const Container& c);

nlohmann::json container_to_json(const Graph& g, const Container& c);

}  // namespace cayleynet
