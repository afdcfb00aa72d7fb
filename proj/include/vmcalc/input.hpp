#pragma once

#include <string>

#include "vmcalc/graph.hpp"

namespace vmcalc {

// Accepts the CLI graph grammar: "theta:a,b,c", "cycle:k", "g6:<string>",
// "edges:<n>;<u-v,...>", or a path to a file holding an edge list or a
// graph6 line. Throws std::invalid_argument on malformed input.
Graph parseGraphInput(const std::string& input);

}  // namespace vmcalc
