#include "cayleynet/codes.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "cayleynet/errors.hpp"

namespace cayleynet {

BinaryMatrix BinaryMatrix::identity(std::size_t r) {
    BinaryMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i) m.set(i, i, true);
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) throw InvalidArgument("matrix has no rows");
    BinaryMatrix m(rows.size(), rows.front().size());
    if (m.n == 0) throw InvalidArgument("matrix has no columns");
    for (std::size_t i = 0; i < m.r; ++i) {
        if (rows[i].size() != m.n) throw InvalidArgument("matrix rows have unequal lengths");
        for (std::size_t j = 0; j < m.n; ++j) {
            char ch = rows[i][j];
            if (ch != '0' && ch != '1') throw InvalidArgument("matrix entries must be 0 or 1");
            m.set(i, j, ch == '1');
        }
    }
    return m;
}

GroupElement BinaryMatrix::column(std::size_t j) const {
    std::vector<std::uint32_t> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = at(i, j);
    return GroupElement::word(std::move(col));
}

std::vector<std::string> BinaryMatrix::rows() const {
    std::vector<std::string> out(r, std::string(n, '0'));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (at(i, j)) out[i][j] = '1';
    return out;
}

BinaryMatrix parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }), line.end());
        if (!line.empty()) rows.push_back(line);
    }
    return BinaryMatrix::from_rows(rows);
}

std::size_t rank_f2(const BinaryMatrix& m) {
    auto a = m.bits;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.n && rank < m.r; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.r && !a[pivot * m.n + col]) ++pivot;
        if (pivot == m.r) continue;
        for (std::size_t j = 0; j < m.n; ++j) std::swap(a[pivot * m.n + j], a[rank * m.n + j]);
        for (std::size_t i = 0; i < m.r; ++i)
            if (i != rank && a[i * m.n + col])
                for (std::size_t j = 0; j < m.n; ++j) a[i * m.n + j] ^= a[rank * m.n + j];
        ++rank;
    }
    return rank;
}

MatrixGraph cayley_from_matrix(const BinaryMatrix& m, const Guards& guards) {
    if (m.r == 0 || m.n == 0) throw InvalidArgument("empty matrix");
    if (m.r > m.n) throw InvalidArgument("matrix has more rows than columns");
    MatrixGraph out;
    std::vector<GroupElement> gens;
    std::set<GroupElement> seen;
    for (std::size_t j = 0; j < m.n; ++j) {
        auto c = m.column(j);
        if (c.is_identity()) throw InvalidArgument("column " + std::to_string(j + 1) + " is zero");
        if (!seen.insert(c).second) {
            out.duplicate_columns = true;
            out.warnings.push_back("column " + std::to_string(j + 1) + " repeats an earlier column and was dropped");
            continue;
        }
        gens.push_back(std::move(c));
    }
    const auto rank = rank_f2(m);
    if (rank < m.r) {
        out.subgroup_graph = true;
        out.warnings.push_back("rank " + std::to_string(rank) + " < " + std::to_string(m.r) +
                               ": graph is built on the column span (subgroup graph)");
    }
    out.graph = cayley_graph(GeneratingSet(GroupSpec::binary(m.r), std::move(gens)), guards);
    FamilyMeta meta{"matrix", {}};
    meta.params["r"] = {static_cast<long long>(m.r)};
    meta.params["n"] = {static_cast<long long>(m.n)};
    for (auto b : m.bits) meta.params["bits"].push_back(b);
    out.graph = out.graph.with_meta(std::move(meta));
    return out;
}

ColumnSumResult column_sum_condition(const BinaryMatrix& m) {
    std::vector<std::vector<std::uint8_t>> cols(m.n, std::vector<std::uint8_t>(m.r));
    for (std::size_t j = 0; j < m.n; ++j)
        for (std::size_t i = 0; i < m.r; ++i) cols[j][i] = m.at(i, j);
    ColumnSumResult res;
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = i + 1; j < m.n; ++j) {
            std::vector<std::uint8_t> sum(m.r);
            for (std::size_t k = 0; k < m.r; ++k) sum[k] = cols[i][k] ^ cols[j][k];
            for (std::size_t k = 0; k < m.n; ++k)
                if (cols[k] == sum) {
                    res.holds = false;
                    res.witness = std::array<std::size_t, 3>{i, j, k};
                    return res;
                }
        }
    return res;
}

BinaryMatrix repetition_check_matrix(std::size_t n) {
    if (n < 2) throw InvalidArgument("repetition code needs n >= 2");
    BinaryMatrix m(n - 1, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        m.set(i, i, true);
        m.set(i, n - 1, true);
    }
    return m;
}

}  // namespace cayleynet
