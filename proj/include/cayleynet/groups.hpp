#pragma once

// Finite group elements and generating sets.
//
// Three concrete element shapes are supported: permutations of {1..n}, binary
// words of length r (the group Z_2^r under XOR) and residue tuples in
// Z_{r_1} x ... x Z_{r_k}.
//
// Multiplication convention. Permutations act on the right, as in
// permutation-group texts: the product a*b applies a first and then b, so
// (1,2,3)*(1,2) = (2,3). Cayley graph edges are {h, s*h} (left multiplication
// by a generator) and the right regular action is x -> x*h. Both conventions
// are used consistently across the library.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cayleynet/guards.hpp"

namespace cayleynet {

enum class ElementKind : std::uint8_t { Perm, Word, Tuple };

class GroupElement {
public:
    /// Permutation from a 0-based image array; throws unless it is a bijection.
    static GroupElement permutation(std::vector<std::uint32_t> images);
    static GroupElement identity_permutation(std::size_t n);
    /// Transposition (i j) in S_n, 1-based symbols.
    static GroupElement transposition(std::size_t n, std::size_t i, std::size_t j);
    /// Binary word; bits[0] is the first (leftmost) coordinate.
    static GroupElement word(std::vector<std::uint32_t> bits);
    static GroupElement zero_word(std::size_t r);
    static GroupElement unit_word(std::size_t r, std::size_t i);  ///< e_i, 1-based
    static GroupElement tuple(std::vector<std::uint32_t> residues, std::vector<std::uint32_t> moduli);

    ElementKind kind() const noexcept { return kind_; }
    /// n for permutations, r for words, k for tuples.
    std::size_t degree() const noexcept { return values_.size(); }
    std::span<const std::uint32_t> values() const noexcept { return values_; }
    std::span<const std::uint32_t> moduli() const noexcept { return moduli_; }
    std::uint32_t operator[](std::size_t i) const { return values_[i]; }

    bool is_identity() const noexcept;
    /// Same kind, same degree and (for tuples) same moduli.
    bool compatible(const GroupElement& other) const noexcept;

    /// Canonical text: "(1,2)(3,4)" / "0110" / "2,3".
    std::string to_string() const;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    /// Orders by canonical encoding (image array / bit string / residue list).
    friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
        if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
        if (auto c = a.values_ <=> b.values_; c != 0) return c;
        return a.moduli_ <=> b.moduli_;
    }

private:
    GroupElement(ElementKind kind, std::vector<std::uint32_t> values, std::vector<std::uint32_t> moduli)
        : kind_(kind), values_(std::move(values)), moduli_(std::move(moduli)) {}

    ElementKind kind_ = ElementKind::Perm;
    std::vector<std::uint32_t> values_;
    std::vector<std::uint32_t> moduli_;  // Tuple only
};

struct GroupElementHash {
    std::size_t operator()(const GroupElement& g) const noexcept;
};

/// Group product a*b (a applied first for permutations). Throws on mismatch.
GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
GroupElement identity_like(const GroupElement& a);
/// Smallest k >= 1 with a^k = e.
std::uint64_t element_order(const GroupElement& a);

class GroupSpec {
public:
    enum class Kind : std::uint8_t { Symmetric, Binary, CyclicProduct, PermSubgroup };

    static GroupSpec symmetric(std::size_t n);
    static GroupSpec binary(std::size_t r);
    static GroupSpec cyclic_product(std::vector<std::uint32_t> moduli);
    /// Subgroup of S_n generated by the given permutations. An empty generator
    /// list with an explicit degree is a placeholder used while parsing.
    static GroupSpec perm_subgroup(std::vector<GroupElement> generators, std::size_t degree = 0);

    /// "S4", "Z2^4", "Z4xZ5", "perm:6".
    static GroupSpec parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    std::size_t degree() const noexcept { return degree_; }
    std::span<const std::uint32_t> moduli() const noexcept { return moduli_; }
    std::span<const GroupElement> generators() const noexcept { return generators_; }

    GroupElement identity() const;
    bool admits(const GroupElement& g) const noexcept;
    /// |H| when known without enumeration and representable; empty for PermSubgroup.
    std::optional<std::uint64_t> order() const;
    std::string to_string() const;

private:
    Kind kind_ = Kind::Symmetric;
    std::size_t degree_ = 0;
    std::vector<std::uint32_t> moduli_;
    std::vector<GroupElement> generators_;
};

/// An ordered, duplicate-free list of elements of one group.
class GeneratingSet {
public:
    GeneratingSet(GroupSpec spec, std::vector<GroupElement> elements);

    const GroupSpec& spec() const noexcept { return spec_; }
    std::span<const GroupElement> elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const GroupElement& operator[](std::size_t i) const { return elements_[i]; }

private:
    GroupSpec spec_;
    std::vector<GroupElement> elements_;
};

struct ValidityReport {
    bool identity_free = false;
    bool symmetric = false;
    /// Empty when |H| could not be enumerated within the closure guard.
    std::optional<bool> generates;
    std::size_t closure_size = 0;

    bool cayley_ready() const noexcept { return identity_free && symmetric; }
};

ValidityReport validate_generating_set(const GeneratingSet& s, const Guards& guards = {});

/// Breadth-first closure <S> from the identity, expanding h -> s*h. Layers are
/// sorted by canonical encoding, so the output order is deterministic.
/// Throws GuardExceeded past `guard` elements.
std::vector<GroupElement> closure(const GeneratingSet& s, std::size_t guard = Guards{}.closure);
std::vector<GroupElement> closure(std::span<const GroupElement> generators, std::size_t guard = Guards{}.closure);

GroupElement parse_element(std::string_view text, const GroupSpec& spec);

}  // namespace cayleynet
