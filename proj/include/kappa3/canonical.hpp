#pragma once

#include <string>

#include "kappa3/graph.hpp"

namespace kappa3 {

// Canonical graph6 encoding of the canonically relabeled graph.
// Equal keys <=> isomorphic graphs (same order).
using CanonicalKey = std::string;

CanonicalKey canonical_form(const Graph& g);

// The relabeling realizing canonical_form: position i takes old vertex perm[i].
std::vector<int> canonical_permutation(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace kappa3
