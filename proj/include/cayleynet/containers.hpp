#pragma once

// Containers: families of internally disjoint s-t paths, plus the explicit
// hypercube and folded hypercube constructions.
//
// Words are handled as integers whose bit (n - i) is coordinate e_i, so
// "0110" is 6 and e_1 is the most significant bit. Family graphs index
// vertices in closure order; use word_vertex_map() to translate.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayleynet/graph.hpp"
#include "cayleynet/metrics.hpp"

namespace cayleynet {

struct Container {
    Vertex source = 0;
    Vertex target = 0;
    std::vector<std::vector<Vertex>> paths;
    std::size_t width = 0;
    std::size_t length = 0;  // longest path, in edges
    Rational avg_length;
    Rational quality;        // width / avg_length
};

/// Fills width, length, avg_length and quality from the paths.
Container make_container(Vertex source, Vertex target, std::vector<std::vector<Vertex>> paths);

struct ContainerCheck {
    bool ok = true;
    std::vector<std::string> problems;
    /// Paths sharing an internal vertex, as index pairs.
    std::vector<std::pair<std::size_t, std::size_t>> conflicting_pairs;
    /// Paths that are not walks in the graph or miss an endpoint.
    std::vector<std::size_t> invalid_paths;
    std::size_t width = 0;
    std::size_t length = 0;
    Rational avg_length;
    Rational quality;
};

ContainerCheck verify_container(const Graph& g, const Container& c);

using Word = std::uint64_t;

/// Parses a 0/1 string of length n into a word.
Word parse_word(std::string_view text, std::size_t n);
std::string format_word(Word w, std::size_t n);

/// Container of width n between x and y in Q_n; vertices are words.
Container hypercube_container(std::size_t n, Word x, Word y);
/// Container of width n + 1 between x and y in FQ_n (n >= 4); vertices are words.
Container folded_container(std::size_t n, Word x, Word y);

/// word value -> vertex index for a hypercube-family graph built by build_family.
std::vector<Vertex> word_vertex_map(const Graph& g, std::size_t n);
/// Rewrites a word-valued container into vertex indices of g.
Container to_graph_vertices(const Container& c, const std::vector<Vertex>& word_to_vertex);

}  // namespace cayleynet
