#pragma once

#include <string>
#include <string_view>

#include "kappa3/graph.hpp"

namespace kappa3 {

// graph6 line for g (no header, no newline). Upper-triangle bits in column
// order x(0,1), x(0,2), x(1,2), x(0,3), ..., zero-padded to a multiple of 6.
std::string graph6_encode(const Graph& g);

// Accepts and strips an optional ">>graph6<<" header and trailing whitespace.
// Throws std::invalid_argument on malformed input or n > 32.
Graph graph6_decode(std::string_view line);

}  // namespace kappa3
