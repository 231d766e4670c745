#pragma once

#include <cstddef>
#include <string_view>

namespace cayleynet {

/// Size limits for the exponential or enumerative parts of the library.
struct Guards {
    std::size_t closure = 10'000'000;        ///< max elements in a group closure
    std::size_t aut_vertices = 200;          ///< max vertices for automorphism / isomorphism search
    std::size_t aut_order = 2'000'000;       ///< max automorphism group order kept as an element list
    std::size_t atom_vertices = 24;          ///< max vertices for atom enumeration
    std::size_t atom_kappa = 5;              ///< max connectivity for atom enumeration
    std::size_t search_nodes = 5'000'000;    ///< node budget for regular-subgroup search
    std::size_t aut_hs_group = 64;           ///< max |H| for brute-force Aut(H,S)

    /// Parses "key=value,key=value" (keys: closure, aut, aut-order, atoms, atom-kappa,
    /// search, auths). A bare integer sets the closure guard.
    static Guards parse(std::string_view text);

    /// Reads CAYLEYNET_GUARD; returns defaults when unset.
    static Guards from_env();
};

}  // namespace cayleynet
