#include "kappa3/graph.hpp"

#include <stdexcept>

namespace kappa3 {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order out of range [0,32]: " + std::to_string(n));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex index " + std::to_string(v) + " out of range for order " +
                                std::to_string(n_));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
        g.adj_[u] |= vbit(v);
        g.adj_[v] |= vbit(u);
    }
    return g;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return popcount(adj_[v]);
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += popcount(adj_[v]);
    return total / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] & vbit(v)) != 0;
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adj_[u] & vbit(v)) out.emplace_back(u, v);
    return out;
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : kMaxVertices + 1;
    for (int v = 0; v < n_; ++v) d = std::min(d, popcount(adj_[v]));
    return n_ == 0 ? 0 : d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, popcount(adj_[v]));
    return d;
}

VertexSet Graph::component_of(int v) const {
    check_vertex(v);
    VertexSet seen = vbit(v);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        VertexSet f = frontier;
        while (f) {
            int u = lowest_vertex(f);
            f &= f - 1;
            next |= adj_[u];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    return component_of(0) == vertex_mask();
}

std::vector<VertexSet> Graph::components() const {
    std::vector<VertexSet> out;
    VertexSet remaining = vertex_mask();
    while (remaining) {
        VertexSet c = component_of(lowest_vertex(remaining));
        out.push_back(c);
        remaining &= ~c;
    }
    return out;
}

Graph Graph::add_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    if (adj_[u] & vbit(v)) throw std::invalid_argument("edge already present");
    Graph g = *this;
    g.adj_[u] |= vbit(v);
    g.adj_[v] |= vbit(u);
    return g;
}

Graph Graph::delete_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (!(adj_[u] & vbit(v))) throw std::invalid_argument("edge absent");
    Graph g = *this;
    g.adj_[u] &= ~vbit(v);
    g.adj_[v] &= ~vbit(u);
    return g;
}

Graph Graph::add_vertex_with_neighbors(VertexSet nbrs) const {
    if (n_ + 1 > kMaxVertices) throw std::invalid_argument("graph capacity exceeded");
    if (nbrs & ~vertex_mask()) throw std::out_of_range("neighbor outside existing vertices");
    Graph g = *this;
    int x = g.n_++;
    g.adj_[x] = nbrs;
    VertexSet s = nbrs;
    while (s) {
        int u = lowest_vertex(s);
        s &= s - 1;
        g.adj_[u] |= vbit(x);
    }
    return g;
}

Graph Graph::delete_vertex(int v) const {
    check_vertex(v);
    Graph g(n_ - 1);
    for (int u = 0; u < n_; ++u) {
        if (u == v) continue;
        int u2 = u < v ? u : u - 1;
        VertexSet row = adj_[u];
        // drop bit v and shift higher bits down
        VertexSet low = row & (vbit(v) - 1);
        VertexSet high = (v == 31) ? 0 : ((row >> (v + 1)) << v);
        g.adj_[u2] = low | high;
    }
    return g;
}

bool Graph::operator==(const Graph& o) const {
    if (n_ != o.n_) return false;
    for (int v = 0; v < n_; ++v)
        if (adj_[v] != o.adj_[v]) return false;
    return true;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> pos(n_, -1);  // pos[old] = new
    for (int i = 0; i < n_; ++i) {
        check_vertex(perm[i]);
        if (pos[perm[i]] != -1) throw std::invalid_argument("not a permutation");
        pos[perm[i]] = i;
    }
    Graph g(n_);
    for (int i = 0; i < n_; ++i) {
        VertexSet row = adj_[perm[i]];
        VertexSet out = 0;
        while (row) {
            int u = lowest_vertex(row);
            row &= row - 1;
            out |= vbit(pos[u]);
        }
        g.adj_[i] = out;
    }
    return g;
}

}  // namespace kappa3
