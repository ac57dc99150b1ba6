#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kappa3 {

constexpr int kMaxVertices = 32;

// Subset of vertices, bit v set iff vertex v is in the set.
using VertexSet = std::uint32_t;

inline constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }
inline int popcount(VertexSet s) { return __builtin_popcount(s); }
inline int lowest_vertex(VertexSet s) { return __builtin_ctz(s); }

// Simple undirected graph on at most 32 vertices, one bit row per vertex.
// Immutable value type: every edit returns a new graph.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int degree(int v) const;
    int edge_count() const;
    bool has_edge(int u, int v) const;
    VertexSet neighbors(int v) const;
    VertexSet vertex_mask() const { return n_ == 32 ? ~VertexSet{0} : (vbit(n_) - 1); }
    std::vector<std::pair<int, int>> edges() const;
    int min_degree() const;
    int max_degree() const;

    bool is_connected() const;
    std::vector<VertexSet> components() const;
    VertexSet component_of(int v) const;

    Graph add_edge(int u, int v) const;
    Graph delete_edge(int u, int v) const;
    Graph add_vertex_with_neighbors(VertexSet nbrs) const;
    Graph delete_vertex(int v) const;

    // Labeled (vertex-identical) equality, not isomorphism.
    bool operator==(const Graph& o) const;

    // Relabel: position i of the result takes the old vertex perm[i].
    Graph permuted(const std::vector<int>& perm) const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

}  // namespace kappa3
