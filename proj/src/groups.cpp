#include "cayleynet/groups.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "cayleynet/errors.hpp"

namespace cayleynet {

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::uint32_t parse_uint(std::string_view s, std::string_view context) {
    auto t = trim(s);
    std::uint32_t v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || p != t.data() + t.size())
        throw InvalidArgument("malformed number '" + t + "' in " + std::string(context));
    return v;
}

void require_compatible(const GroupElement& a, const GroupElement& b) {
    if (!a.compatible(b)) throw InvalidArgument("group elements of different groups: " + a.to_string() + " vs " + b.to_string());
}

GroupElement parse_permutation(std::string_view text, std::size_t n) {
    std::vector<std::uint32_t> img(n);
    std::iota(img.begin(), img.end(), 0u);
    auto result = GroupElement::permutation(img);
    std::string t = trim(text);
    if (t == "e" || t == "()" || t.empty()) {
        if (t.empty()) throw InvalidArgument("empty permutation text");
        return result;
    }
    std::size_t pos = 0;
    while (pos < t.size()) {
        if (std::isspace(static_cast<unsigned char>(t[pos]))) { ++pos; continue; }
        if (t[pos] != '(') throw InvalidArgument("expected '(' in permutation '" + t + "'");
        auto close = t.find(')', pos);
        if (close == std::string::npos) throw InvalidArgument("unbalanced parenthesis in '" + t + "'");
        std::string body = trim(std::string_view(t).substr(pos + 1, close - pos - 1));
        std::vector<std::uint32_t> cycle;
        if (body.find(',') != std::string::npos) {
            std::size_t start = 0;
            while (true) {
                auto comma = body.find(',', start);
                cycle.push_back(parse_uint(std::string_view(body).substr(start, comma - start), t));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        } else if (!body.empty()) {
            // compact form "(123)" is only unambiguous for single-digit symbols
            if (n > 9 && body.size() > 1) throw InvalidArgument("compact cycle '" + body + "' needs commas for n > 9");
            for (char c : body) {
                if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidArgument("bad symbol in cycle '" + body + "'");
                cycle.push_back(static_cast<std::uint32_t>(c - '0'));
            }
        }
        std::vector<bool> seen(n + 1, false);
        for (auto x : cycle) {
            if (x < 1 || x > n) throw InvalidArgument("symbol " + std::to_string(x) + " out of range 1.." + std::to_string(n));
            if (seen[x]) throw InvalidArgument("repeated symbol in cycle '" + body + "'");
            seen[x] = true;
        }
        std::vector<std::uint32_t> c(n);
        std::iota(c.begin(), c.end(), 0u);
        for (std::size_t i = 0; i < cycle.size(); ++i) c[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
        result = compose(result, GroupElement::permutation(std::move(c)));
        pos = close + 1;
    }
    return result;
}

}  // namespace

// ---------------------------------------------------------------- GroupElement

GroupElement GroupElement::permutation(std::vector<std::uint32_t> images) {
    std::vector<bool> hit(images.size(), false);
    for (auto v : images) {
        if (v >= images.size() || hit[v]) throw InvalidArgument("image array is not a bijection");
        hit[v] = true;
    }
    return GroupElement(ElementKind::Perm, std::move(images), {});
}

GroupElement GroupElement::identity_permutation(std::size_t n) {
    std::vector<std::uint32_t> img(n);
    std::iota(img.begin(), img.end(), 0u);
    return GroupElement(ElementKind::Perm, std::move(img), {});
}

GroupElement GroupElement::transposition(std::size_t n, std::size_t i, std::size_t j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw InvalidArgument("invalid transposition");
    auto img = identity_permutation(n).values_;
    std::swap(img[i - 1], img[j - 1]);
    return GroupElement(ElementKind::Perm, std::move(img), {});
}

GroupElement GroupElement::word(std::vector<std::uint32_t> bits) {
    for (auto b : bits)
        if (b > 1) throw InvalidArgument("word bits must be 0 or 1");
    return GroupElement(ElementKind::Word, std::move(bits), {});
}

GroupElement GroupElement::zero_word(std::size_t r) {
    return GroupElement(ElementKind::Word, std::vector<std::uint32_t>(r, 0), {});
}

GroupElement GroupElement::unit_word(std::size_t r, std::size_t i) {
    if (i < 1 || i > r) throw InvalidArgument("unit vector index out of range");
    std::vector<std::uint32_t> bits(r, 0);
    bits[i - 1] = 1;
    return GroupElement(ElementKind::Word, std::move(bits), {});
}

GroupElement GroupElement::tuple(std::vector<std::uint32_t> residues, std::vector<std::uint32_t> moduli) {
    if (residues.size() != moduli.size()) throw InvalidArgument("tuple arity does not match moduli");
    for (std::size_t i = 0; i < residues.size(); ++i) {
        if (moduli[i] < 2) throw InvalidArgument("moduli must be >= 2");
        if (residues[i] >= moduli[i]) throw InvalidArgument("tuple residue out of range");
    }
    return GroupElement(ElementKind::Tuple, std::move(residues), std::move(moduli));
}

bool GroupElement::is_identity() const noexcept {
    if (kind_ == ElementKind::Perm) {
        for (std::size_t i = 0; i < values_.size(); ++i)
            if (values_[i] != i) return false;
        return true;
    }
    return std::all_of(values_.begin(), values_.end(), [](auto v) { return v == 0; });
}

bool GroupElement::compatible(const GroupElement& other) const noexcept {
    return kind_ == other.kind_ && values_.size() == other.values_.size() && moduli_ == other.moduli_;
}

std::string GroupElement::to_string() const {
    std::string out;
    switch (kind_) {
    case ElementKind::Perm: {
        std::vector<bool> seen(values_.size(), false);
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (seen[i] || values_[i] == i) continue;
            out += '(';
            std::size_t j = i;
            bool first = true;
            while (!seen[j]) {
                seen[j] = true;
                if (!first) out += ',';
                out += std::to_string(j + 1);
                first = false;
                j = values_[j];
            }
            out += ')';
        }
        if (out.empty()) out = "()";
        break;
    }
    case ElementKind::Word:
        for (auto b : values_) out += b ? '1' : '0';
        break;
    case ElementKind::Tuple:
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(values_[i]);
        }
        break;
    }
    return out;
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
    std::size_t h = static_cast<std::size_t>(g.kind()) * 0x9e3779b97f4a7c15ULL;
    for (auto v : g.values()) h = (h ^ v) * 0x100000001b3ULL + (h >> 29);
    return h;
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
    require_compatible(a, b);
    auto av = a.values();
    auto bv = b.values();
    std::vector<std::uint32_t> out(av.size());
    switch (a.kind()) {
    case ElementKind::Perm:
        for (std::size_t i = 0; i < av.size(); ++i) out[i] = bv[av[i]];
        return GroupElement::permutation(std::move(out));
    case ElementKind::Word:
        for (std::size_t i = 0; i < av.size(); ++i) out[i] = av[i] ^ bv[i];
        return GroupElement::word(std::move(out));
    case ElementKind::Tuple: {
        auto m = a.moduli();
        for (std::size_t i = 0; i < av.size(); ++i) out[i] = (av[i] + bv[i]) % m[i];
        return GroupElement::tuple(std::move(out), std::vector<std::uint32_t>(m.begin(), m.end()));
    }
    }
    return a;
}

GroupElement inverse(const GroupElement& a) {
    auto av = a.values();
    std::vector<std::uint32_t> out(av.size());
    switch (a.kind()) {
    case ElementKind::Perm:
        for (std::size_t i = 0; i < av.size(); ++i) out[av[i]] = static_cast<std::uint32_t>(i);
        return GroupElement::permutation(std::move(out));
    case ElementKind::Word:
        return a;
    case ElementKind::Tuple: {
        auto m = a.moduli();
        for (std::size_t i = 0; i < av.size(); ++i) out[i] = (m[i] - av[i]) % m[i];
        return GroupElement::tuple(std::move(out), std::vector<std::uint32_t>(m.begin(), m.end()));
    }
    }
    return a;
}

GroupElement identity_like(const GroupElement& a) {
    switch (a.kind()) {
    case ElementKind::Perm: return GroupElement::identity_permutation(a.degree());
    case ElementKind::Word: return GroupElement::zero_word(a.degree());
    case ElementKind::Tuple: {
        auto m = a.moduli();
        return GroupElement::tuple(std::vector<std::uint32_t>(a.degree(), 0), std::vector<std::uint32_t>(m.begin(), m.end()));
    }
    }
    return a;
}

std::uint64_t element_order(const GroupElement& a) {
    std::uint64_t k = 1;
    auto p = a;
    while (!p.is_identity()) {
        p = compose(p, a);
        ++k;
    }
    return k;
}

// ---------------------------------------------------------------- GroupSpec

GroupSpec GroupSpec::symmetric(std::size_t n) {
    if (n < 1) throw InvalidArgument("symmetric group needs n >= 1");
    GroupSpec s;
    s.kind_ = Kind::Symmetric;
    s.degree_ = n;
    return s;
}

GroupSpec GroupSpec::binary(std::size_t r) {
    if (r < 1) throw InvalidArgument("binary group needs r >= 1");
    GroupSpec s;
    s.kind_ = Kind::Binary;
    s.degree_ = r;
    return s;
}

GroupSpec GroupSpec::cyclic_product(std::vector<std::uint32_t> moduli) {
    if (moduli.empty()) throw InvalidArgument("cyclic product needs at least one factor");
    for (auto m : moduli)
        if (m < 2) throw InvalidArgument("cyclic product moduli must be >= 2");
    GroupSpec s;
    s.kind_ = Kind::CyclicProduct;
    s.degree_ = moduli.size();
    s.moduli_ = std::move(moduli);
    return s;
}

GroupSpec GroupSpec::perm_subgroup(std::vector<GroupElement> generators, std::size_t degree) {
    GroupSpec s;
    s.kind_ = Kind::PermSubgroup;
    if (!generators.empty()) degree = generators.front().degree();
    if (degree < 1) throw InvalidArgument("permutation subgroup needs a degree");
    for (const auto& g : generators)
        if (g.kind() != ElementKind::Perm || g.degree() != degree)
            throw InvalidArgument("permutation subgroup generators must share one degree");
    s.degree_ = degree;
    s.generators_ = std::move(generators);
    return s;
}

GroupSpec GroupSpec::parse(std::string_view text) {
    std::string t = trim(text);
    if (t.size() >= 2 && t[0] == 'S' && std::isdigit(static_cast<unsigned char>(t[1])))
        return symmetric(parse_uint(std::string_view(t).substr(1), t));
    if (t.rfind("Z2^", 0) == 0) return binary(parse_uint(std::string_view(t).substr(3), t));
    if (t.rfind("perm:", 0) == 0) return perm_subgroup({}, parse_uint(std::string_view(t).substr(5), t));
    if (!t.empty() && t[0] == 'Z') {
        std::vector<std::uint32_t> moduli;
        std::size_t pos = 0;
        while (pos < t.size()) {
            if (t[pos] != 'Z') throw InvalidArgument("malformed group spec '" + t + "'");
            auto x = t.find('x', pos);
            moduli.push_back(parse_uint(std::string_view(t).substr(pos + 1, x == std::string::npos ? std::string::npos : x - pos - 1), t));
            if (x == std::string::npos) break;
            pos = x + 1;
        }
        return cyclic_product(std::move(moduli));
    }
    throw InvalidArgument("unknown group spec '" + t + "'");
}

GroupElement GroupSpec::identity() const {
    switch (kind_) {
    case Kind::Symmetric:
    case Kind::PermSubgroup: return GroupElement::identity_permutation(degree_);
    case Kind::Binary: return GroupElement::zero_word(degree_);
    case Kind::CyclicProduct: return GroupElement::tuple(std::vector<std::uint32_t>(moduli_.size(), 0), moduli_);
    }
    return GroupElement::identity_permutation(degree_);
}

bool GroupSpec::admits(const GroupElement& g) const noexcept {
    switch (kind_) {
    case Kind::Symmetric:
    case Kind::PermSubgroup: return g.kind() == ElementKind::Perm && g.degree() == degree_;
    case Kind::Binary: return g.kind() == ElementKind::Word && g.degree() == degree_;
    case Kind::CyclicProduct:
        return g.kind() == ElementKind::Tuple && std::equal(g.moduli().begin(), g.moduli().end(), moduli_.begin(), moduli_.end());
    }
    return false;
}

std::optional<std::uint64_t> GroupSpec::order() const {
    constexpr std::uint64_t limit = std::uint64_t{1} << 62;
    std::uint64_t v = 1;
    switch (kind_) {
    case Kind::Symmetric:
        for (std::size_t i = 2; i <= degree_; ++i) {
            if (v > limit / i) return std::nullopt;
            v *= i;
        }
        return v;
    case Kind::Binary:
        if (degree_ >= 62) return std::nullopt;
        return std::uint64_t{1} << degree_;
    case Kind::CyclicProduct:
        for (auto m : moduli_) {
            if (v > limit / m) return std::nullopt;
            v *= m;
        }
        return v;
    case Kind::PermSubgroup: return std::nullopt;
    }
    return std::nullopt;
}

std::string GroupSpec::to_string() const {
    switch (kind_) {
    case Kind::Symmetric: return "S" + std::to_string(degree_);
    case Kind::Binary: return "Z2^" + std::to_string(degree_);
    case Kind::PermSubgroup: return "perm:" + std::to_string(degree_);
    case Kind::CyclicProduct: {
        std::string out;
        for (std::size_t i = 0; i < moduli_.size(); ++i) {
            if (i) out += 'x';
            out += 'Z' + std::to_string(moduli_[i]);
        }
        return out;
    }
    }
    return {};
}

// ---------------------------------------------------------------- GeneratingSet

GeneratingSet::GeneratingSet(GroupSpec spec, std::vector<GroupElement> elements)
    : spec_(std::move(spec)), elements_(std::move(elements)) {
    std::unordered_set<GroupElement, GroupElementHash> seen;
    for (const auto& g : elements_) {
        if (!spec_.admits(g)) throw InvalidArgument("element " + g.to_string() + " is not in " + spec_.to_string());
        if (!seen.insert(g).second) throw InvalidArgument("duplicate generator " + g.to_string());
    }
    if (spec_.kind() == GroupSpec::Kind::PermSubgroup && spec_.generators().empty() && !elements_.empty())
        spec_ = GroupSpec::perm_subgroup(elements_);
}

ValidityReport validate_generating_set(const GeneratingSet& s, const Guards& guards) {
    ValidityReport report;
    std::unordered_set<GroupElement, GroupElementHash> members(s.elements().begin(), s.elements().end());
    report.identity_free = std::none_of(s.elements().begin(), s.elements().end(), [](const auto& g) { return g.is_identity(); });
    report.symmetric = std::all_of(s.elements().begin(), s.elements().end(), [&](const auto& g) { return members.count(inverse(g)) > 0; });
    if (s.spec().kind() == GroupSpec::Kind::PermSubgroup) {
        report.generates = true;
        return report;
    }
    auto order = s.spec().order();
    if (!order || *order > guards.closure || s.size() == 0) {
        if (s.size() == 0) report.generates = (order && *order == 1);
        return report;
    }
    try {
        report.closure_size = closure(s, guards.closure).size();
        report.generates = report.closure_size == *order;
    } catch (const GuardExceeded&) {
    }
    return report;
}

std::vector<GroupElement> closure(std::span<const GroupElement> generators, std::size_t guard) {
    if (generators.empty()) throw InvalidArgument("closure of an empty generating set");
    if (std::all_of(generators.begin(), generators.end(), [](const auto& g) { return g.is_identity(); }))
        throw InvalidArgument("closure of identity-only generating set");
    for (const auto& g : generators) require_compatible(generators.front(), g);

    std::vector<GroupElement> out{identity_like(generators.front())};
    std::unordered_set<GroupElement, GroupElementHash> seen{out.front()};
    std::size_t layer_begin = 0;
    while (layer_begin < out.size()) {
        std::size_t layer_end = out.size();
        std::vector<GroupElement> next;
        for (std::size_t i = layer_begin; i < layer_end; ++i) {
            for (const auto& s : generators) {
                auto g = compose(s, out[i]);
                if (seen.insert(g).second) {
                    if (seen.size() > guard)
                        throw GuardExceeded("closure exceeds guard of " + std::to_string(guard) + " elements");
                    next.push_back(std::move(g));
                }
            }
        }
        std::sort(next.begin(), next.end());
        layer_begin = layer_end;
        for (auto& g : next) out.push_back(std::move(g));
    }
    return out;
}

std::vector<GroupElement> closure(const GeneratingSet& s, std::size_t guard) {
    return closure(s.elements(), guard);
}

GroupElement parse_element(std::string_view text, const GroupSpec& spec) {
    std::string t = trim(text);
    switch (spec.kind()) {
    case GroupSpec::Kind::Symmetric:
    case GroupSpec::Kind::PermSubgroup: return parse_permutation(t, spec.degree());
    case GroupSpec::Kind::Binary: {
        if (t.size() != spec.degree()) throw InvalidArgument("word '" + t + "' does not have length " + std::to_string(spec.degree()));
        std::vector<std::uint32_t> bits;
        for (char c : t) {
            if (c != '0' && c != '1') throw InvalidArgument("word '" + t + "' has a non-binary symbol");
            bits.push_back(static_cast<std::uint32_t>(c - '0'));
        }
        return GroupElement::word(std::move(bits));
    }
    case GroupSpec::Kind::CyclicProduct: {
        if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
        std::vector<std::uint32_t> residues;
        std::size_t start = 0;
        while (true) {
            auto comma = t.find(',', start);
            residues.push_back(parse_uint(std::string_view(t).substr(start, comma - start), t));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (residues.size() != spec.degree()) throw InvalidArgument("tuple '" + t + "' has wrong arity");
        auto m = spec.moduli();
        for (std::size_t i = 0; i < residues.size(); ++i)
            if (residues[i] >= m[i]) throw InvalidArgument("tuple residue out of range in '" + t + "'");
        return GroupElement::tuple(std::move(residues), std::vector<std::uint32_t>(m.begin(), m.end()));
    }
    }
    throw InvalidArgument("unsupported group spec");
}

}  // namespace cayleynet
