#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kappa3/graph.hpp"

namespace kappa3 {

// Minimal S-tree: every leaf is a terminal. For |S| = 2 these are the simple
// x-y paths; for |S| = 3 the "tripods" (center with disjoint paths to the
// terminals, the center possibly a terminal).
struct SteinerTree {
    std::vector<std::pair<int, int>> edges;  // sorted (u < v, lexicographic)
    VertexSet vertices = 0;
};

struct TreePacking {
    VertexSet terminals = 0;
    std::vector<SteinerTree> trees;
};

// Upper bounds on kappa(S); each field individually dominates the packing size.
struct Bounds {
    int degree_bound;  // min degree over S
    int edge_bound;    // for |S|=3: largest t with 3t-1 <= e(G); |S|=2 analog
    int clique_bound;  // n - k + floor(k/2)
    int min() const;
};

struct PackingResult {
    int count = 0;
    TreePacking cert;
};

// All minimal S-trees of g, normalized and deduplicated, in deterministic
// order (edge count, then lexicographic edge list). |S| must be 2 or 3.
std::vector<SteinerTree> enumerate_minimal_trees(const Graph& g, VertexSet s);

// kappa_G(S) with a certificate. With `target`, stops as soon as `target`
// pairwise internally disjoint trees are found (certificate holds exactly
// `target` trees); the returned count is then a lower bound >= target.
PackingResult max_packing(const Graph& g, VertexSet s, std::optional<int> target = std::nullopt);

int kappa_set(const Graph& g, VertexSet s);

// min / max of kappa_set over all k-subsets; k in {2, 3}.
int kappa_k(const Graph& g, int k);
int kappa_bar_k(const Graph& g, int k);

// Early-exit threshold query: is some k-set S with kappa(S) >= threshold?
bool kappa_bar_at_least(const Graph& g, int k, int threshold);

// kappa_G(x,y) by vertex-capacity max-flow (vertex splitting).
int menger_local_connectivity(const Graph& g, int x, int y);

Bounds bounds(const Graph& g, VertexSet s);

// Independent validator; shares no code with the solver path.
bool verify_packing(const Graph& g, const TreePacking& cert);

// Brute-force reference: minimal S-trees by filtering all connected edge
// subsets of size <= n-1, then exhaustive recursion. Guarded to n <= 7.
int kappa_set_oracle(const Graph& g, VertexSet s);

}  // namespace kappa3
