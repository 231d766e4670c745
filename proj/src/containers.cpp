#include "cayleynet/containers.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "cayleynet/errors.hpp"

namespace cayleynet {

namespace {

Word unit(std::size_t n, std::size_t i) { return Word{1} << (n - i); }  // e_i, 1-based

Word ones(std::size_t n) { return n >= 64 ? ~Word{0} : (Word{1} << n) - 1; }

void check_words(std::size_t n, Word x, Word y) {
    if (n < 1 || n > 31) throw InvalidArgument("word length must be in 1..31");
    if (x > ones(n) || y > ones(n)) throw InvalidArgument("word does not fit in n bits");
    if (x == y) throw InvalidArgument("container endpoints must differ");
}

// Normal form: translate x to 0 and permute coordinates so that the 1-bits of
// x ^ y come first (stable in both blocks). order[j] is the original
// coordinate sitting at normalized position j (both 1-based).
struct Reduction {
    std::size_t n;
    Word x;
    std::vector<std::size_t> order;

    Reduction(std::size_t n_, Word x_, Word y) : n(n_), x(x_), order(n_ + 1, 0) {
        std::size_t pos = 1;
        Word z = x_ ^ y;
        for (std::size_t i = 1; i <= n; ++i)
            if (z & unit(n, i)) order[pos++] = i;
        for (std::size_t i = 1; i <= n; ++i)
            if (!(z & unit(n, i))) order[pos++] = i;
    }

    Word map_back(Word w) const {
        Word out = 0;
        for (std::size_t j = 1; j <= n; ++j)
            if (w & unit(n, j)) out |= unit(n, order[j]);
        return out ^ x;
    }

    std::vector<Vertex> walk(const std::vector<Word>& steps) const {
        std::vector<Vertex> path{static_cast<Vertex>(map_back(0))};
        Word cur = 0;
        for (auto s : steps) {
            cur ^= s;
            path.push_back(static_cast<Vertex>(map_back(cur)));
        }
        return path;
    }
};

std::vector<std::vector<Word>> cyclic_shifts(const std::vector<Word>& seq) {
    std::vector<std::vector<Word>> out;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        std::vector<Word> s(seq.begin() + static_cast<std::ptrdiff_t>(k), seq.end());
        s.insert(s.end(), seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(k));
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Word> detour(Word around, const std::vector<Word>& core) {
    std::vector<Word> s{around};
    s.insert(s.end(), core.begin(), core.end());
    s.push_back(around);
    return s;
}

}  // namespace

Container make_container(Vertex source, Vertex target, std::vector<std::vector<Vertex>> paths) {
    Container c;
    c.source = source;
    c.target = target;
    c.width = paths.size();
    std::int64_t total = 0;
    for (const auto& p : paths) {
        auto len = p.empty() ? 0 : p.size() - 1;
        c.length = std::max(c.length, len);
        total += static_cast<std::int64_t>(len);
    }
    c.paths = std::move(paths);
    if (c.width > 0 && total > 0) {
        auto w = static_cast<std::int64_t>(c.width);
        c.avg_length = Rational::make(total, w);
        c.quality = Rational::make(w * w, total);
    }
    return c;
}

ContainerCheck verify_container(const Graph& g, const Container& c) {
    ContainerCheck r;
    const auto n = g.vertex_count();
    std::map<Vertex, std::size_t> owner;
    std::size_t direct = 0;
    for (std::size_t i = 0; i < c.paths.size(); ++i) {
        const auto& p = c.paths[i];
        bool valid = p.size() >= 2 && p.front() == c.source && p.back() == c.target;
        for (std::size_t k = 0; valid && k < p.size(); ++k) {
            if (p[k] >= n) valid = false;
            else if (k > 0 && !g.adjacent(p[k - 1], p[k])) valid = false;
        }
        if (valid) {
            auto sorted = p;
            std::sort(sorted.begin(), sorted.end());
            valid = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        }
        if (!valid) {
            r.invalid_paths.push_back(i);
            r.problems.push_back("path " + std::to_string(i) + " is not a simple source-target path in the graph");
        }
        if (p.size() == 2 && ++direct > 1) {
            r.invalid_paths.push_back(i);
            r.problems.push_back("path " + std::to_string(i) + " repeats the direct edge");
        }
        for (std::size_t k = 1; k + 1 < p.size(); ++k) {
            auto [it, fresh] = owner.emplace(p[k], i);
            if (!fresh && it->second != i) {
                r.conflicting_pairs.emplace_back(it->second, i);
                r.problems.push_back("paths " + std::to_string(it->second) + " and " + std::to_string(i) +
                                     " share internal vertex " + std::to_string(p[k]));
            }
        }
    }
    std::sort(r.conflicting_pairs.begin(), r.conflicting_pairs.end());
    r.conflicting_pairs.erase(std::unique(r.conflicting_pairs.begin(), r.conflicting_pairs.end()), r.conflicting_pairs.end());
    auto recomputed = make_container(c.source, c.target, c.paths);
    r.width = recomputed.width;
    r.length = recomputed.length;
    r.avg_length = recomputed.avg_length;
    r.quality = recomputed.quality;
    if (c.width != r.width || c.length != r.length || !(c.avg_length == r.avg_length) || !(c.quality == r.quality))
        r.problems.push_back("stored metadata disagrees with the paths");
    r.ok = r.problems.empty();
    return r;
}

Word parse_word(std::string_view text, std::size_t n) {
    if (text.size() != n) throw InvalidArgument("word '" + std::string(text) + "' does not have length " + std::to_string(n));
    Word w = 0;
    for (char ch : text) {
        if (ch != '0' && ch != '1') throw InvalidArgument("word '" + std::string(text) + "' is not binary");
        w = (w << 1) | static_cast<Word>(ch - '0');
    }
    return w;
}

std::string format_word(Word w, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t i = 1; i <= n; ++i)
        if (w & unit(n, i)) s[i - 1] = '1';
    return s;
}

Container hypercube_container(std::size_t n, Word x, Word y) {
    check_words(n, x, y);
    const auto r = static_cast<std::size_t>(std::popcount(x ^ y));
    Reduction red(n, x, y);
    std::vector<Word> core;
    for (std::size_t i = 1; i <= r; ++i) core.push_back(unit(n, i));
    std::vector<std::vector<Vertex>> paths;
    for (const auto& s : cyclic_shifts(core)) paths.push_back(red.walk(s));
    for (std::size_t i = r + 1; i <= n; ++i) paths.push_back(red.walk(detour(unit(n, i), core)));
    return make_container(static_cast<Vertex>(x), static_cast<Vertex>(y), std::move(paths));
}

Container folded_container(std::size_t n, Word x, Word y) {
    if (n < 4) throw InvalidArgument("folded container needs n >= 4");
    check_words(n, x, y);
    const auto r = static_cast<std::size_t>(std::popcount(x ^ y));
    const Word u = ones(n);
    Reduction red(n, x, y);
    std::vector<std::vector<Vertex>> paths;
    if (r <= (n + 1) / 2) {
        std::vector<Word> core;
        for (std::size_t i = 1; i <= r; ++i) core.push_back(unit(n, i));
        for (const auto& s : cyclic_shifts(core)) paths.push_back(red.walk(s));
        for (std::size_t i = r + 1; i <= n; ++i) paths.push_back(red.walk(detour(unit(n, i), core)));
        paths.push_back(red.walk(detour(u, core)));
    } else {
        // y = u + e_{r+1} + ... + e_n in the normal form
        std::vector<Word> core{u};
        for (std::size_t i = r + 1; i <= n; ++i) core.push_back(unit(n, i));
        for (const auto& s : cyclic_shifts(core)) paths.push_back(red.walk(s));
        for (std::size_t i = 1; i <= r; ++i) paths.push_back(red.walk(detour(unit(n, i), core)));
    }
    return make_container(static_cast<Vertex>(x), static_cast<Vertex>(y), std::move(paths));
}

std::vector<Vertex> word_vertex_map(const Graph& g, std::size_t n) {
    if (!g.has_vertex_labels() || g.vertex_count() != (std::size_t{1} << n))
        throw InvalidArgument("graph is not a labelled binary Cayley graph on n-bit words");
    std::vector<Vertex> map(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) map[parse_word(g.vertex_labels()[v], n)] = v;
    return map;
}

Container to_graph_vertices(const Container& c, const std::vector<Vertex>& word_to_vertex) {
    auto paths = c.paths;
    for (auto& p : paths)
        for (auto& v : p) v = word_to_vertex.at(v);
    return make_container(word_to_vertex.at(c.source), word_to_vertex.at(c.target), std::move(paths));
}

}  // namespace cayleynet
