#pragma once

// Binary matrices over F_2 as generator sources: the Cayley graph on Z_2^r
// whose generators are the matrix columns.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cayleynet/graph.hpp"
#include "cayleynet/guards.hpp"

namespace cayleynet {

struct BinaryMatrix {
    std::size_t r = 0;
    std::size_t n = 0;
    std::vector<std::uint8_t> bits;  // row-major

    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols) : r(rows), n(cols), bits(rows * cols, 0) {}

    static BinaryMatrix identity(std::size_t r);
    /// Rows of '0'/'1' characters, all the same length.
    static BinaryMatrix from_rows(const std::vector<std::string>& rows);

    std::uint8_t at(std::size_t i, std::size_t j) const { return bits[i * n + j]; }
    void set(std::size_t i, std::size_t j, bool v) { bits[i * n + j] = v ? 1 : 0; }

    /// Column j as a word of length r (top row first).
    GroupElement column(std::size_t j) const;
    std::vector<std::string> rows() const;

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;
};

/// Matrix file: one row of '0'/'1' per line; '#' starts a comment.
BinaryMatrix parse_matrix(std::string_view text);

std::size_t rank_f2(const BinaryMatrix& m);

struct MatrixGraph {
    Graph graph;
    std::vector<std::string> warnings;
    bool subgroup_graph = false;     // rank < r: vertices are the column span only
    bool duplicate_columns = false;  // repeated columns collapsed to one generator
};

/// Cay(Z_2^r, columns). Zero columns and r > n are rejected.
MatrixGraph cayley_from_matrix(const BinaryMatrix& m, const Guards& guards = {});

struct ColumnSumResult {
    bool holds = true;
    std::optional<std::array<std::size_t, 3>> witness;  // columns i < j with c_i + c_j = c_k
};

/// True when no column is the sum of two distinct columns.
ColumnSumResult column_sum_condition(const BinaryMatrix& m);

/// (n-1) x n matrix [I | 1].
BinaryMatrix repetition_check_matrix(std::size_t n);

}  // namespace cayleynet
