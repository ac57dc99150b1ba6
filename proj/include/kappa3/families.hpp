#pragma once

#include <string>
#include <vector>

#include "kappa3/enumerate.hpp"
#include "kappa3/graph.hpp"

namespace kappa3 {

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle(int n);
Graph path(int n);
Graph wheel(int n);  // hub 0 joined to cycle on 1..n-1

// Vertex order of the result: g's vertices first, then h's.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph k_copies(const Graph& g, int k);

// Glue a fresh K4 onto g by identifying one of its vertices with u.
// Rejects u that already carries an attached K4.
Graph attach_k4(const Graph& g, int u);

// d-regular circulant on m vertices: offsets 1..d/2, plus m/2 when d is odd.
Graph regular_graph(int m, int d);

// Adds a maximum matching of the complement of g.
Graph add_maximum_matching(const Graph& g);

// Minimum-degree-ell construction: join of K2 with a near-regular graph on
// n-2 vertices; both n and ell odd uses an (ell-3)-regular base plus a
// maximum matching, otherwise an (ell-2)-regular base.
Graph remark_construction(int n, int ell);

// All isomorphism classes attaining the maximum edge count among connected
// order-n graphs with kappa_bar_3 <= 2, found by exhaustive scan.
struct ExtremalCatalog {
    int n = 0;
    int f_value = 0;
    std::vector<CanonicalKey> members;  // canonical graph6, sorted
};

ExtremalCatalog extremal_catalog(Enumerator& en, int n, int threads = 0);

}  // namespace kappa3
