#include "cayleynet/guards.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "cayleynet/errors.hpp"

namespace cayleynet {

namespace {

std::size_t to_size(std::string_view v, std::string_view key) {
    std::size_t out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc{} || p != v.data() + v.size())
        throw InvalidArgument("bad guard value '" + std::string(v) + "' for " + std::string(key));
    return out;
}

}  // namespace

Guards Guards::parse(std::string_view text) {
    Guards g;
    if (text.empty()) return g;
    if (text.find('=') == std::string_view::npos) {
        g.closure = to_size(text, "closure");
        return g;
    }
    while (!text.empty()) {
        auto comma = text.find(',');
        auto item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string_view::npos) throw InvalidArgument("guard item '" + std::string(item) + "' lacks '='");
        auto key = item.substr(0, eq);
        auto value = to_size(item.substr(eq + 1), key);
        if (key == "closure") g.closure = value;
        else if (key == "aut") g.aut_vertices = value;
        else if (key == "aut-order") g.aut_order = value;
        else if (key == "atoms") g.atom_vertices = value;
        else if (key == "atom-kappa") g.atom_kappa = value;
        else if (key == "search") g.search_nodes = value;
        else if (key == "auths") g.aut_hs_group = value;
        else throw InvalidArgument("unknown guard key '" + std::string(key) + "'");
    }
    return g;
}

Guards Guards::from_env() {
    const char* v = std::getenv("CAYLEYNET_GUARD");
    return v ? parse(v) : Guards{};
}

}  // namespace cayleynet
