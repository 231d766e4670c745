#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cayleynet/graph.hpp"
#include "cayleynet/guards.hpp"

namespace cayleynet {

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitGuard = 3, kExitUnknown = 4, kExitVerification = 5 };

/// Resolves a graph argument: a JSON file written by `build`, or an inline
/// expression such as "hypercube:4", "torus:4x5", "cayley:S3:(1,2);(2,3)",
/// "matrix:FILE", "transpositions:FILE", "complement(line(complete:5))" or
/// "product(cycle:5,path:2)".
Graph resolve_graph(std::string_view expr, const Guards& guards = {});

/// Runs one command line (args exclude the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cayleynet
