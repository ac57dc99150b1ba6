#include "kappa3/canonical.hpp"

#include <algorithm>
#include <map>

#include "kappa3/graph6.hpp"

namespace kappa3 {

namespace {

// Iterated degree refinement. Color values are derived from sorted
// signatures, so they are invariant under relabeling; smaller color first
// is therefore a canonical class order.
std::vector<int> refine_colors(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, 0);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    {
        // normalize initial colors to 0..k-1 preserving order
        std::vector<int> sorted = color;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            color[v] = int(std::lower_bound(sorted.begin(), sorted.end(), color[v]) - sorted.begin());
    }
    int classes = n == 0 ? 0 : 1 + *std::max_element(color.begin(), color.end());
    while (true) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            VertexSet nb = g.neighbors(v);
            std::vector<int> ncol;
            while (nb) {
                int u = lowest_vertex(nb);
                nb &= nb - 1;
                ncol.push_back(color[u]);
            }
            std::sort(ncol.begin(), ncol.end());
            sig[v].insert(sig[v].end(), ncol.begin(), ncol.end());
        }
        std::map<std::vector<int>, int> order;
        for (int v = 0; v < n; ++v) order.emplace(sig[v], 0);
        int next = 0;
        for (auto& [s, idx] : order) idx = next++;
        for (int v = 0; v < n; ++v) color[v] = order[sig[v]];
        if (next == classes) break;
        classes = next;
    }
    return color;
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> block_color;       // color required at each position
    std::vector<std::uint32_t> best;    // best column values, ~0u = unset
    std::vector<int> best_perm;
    std::vector<int> perm;
    VertexSet placed = 0;
    std::vector<int> color;

    explicit CanonSearch(const Graph& graph, std::vector<int> col)
        : g(graph), n(graph.order()), best(n, ~0u), best_perm(n), perm(n), color(std::move(col)) {
        std::vector<int> by_color(color);
        std::sort(by_color.begin(), by_color.end());
        block_color = by_color;
    }

    bool twins(int u, int w) const {
        return (g.neighbors(u) & ~vbit(w)) == (g.neighbors(w) & ~vbit(u));
    }

    void dfs(int pos) {
        if (pos == n) {
            best_perm = perm;
            return;
        }
        VertexSet tried = 0;
        for (int v = 0; v < n; ++v) {
            if ((placed & vbit(v)) || color[v] != block_color[pos]) continue;
            // interchangeable twins: one representative per choice point
            bool skip = false;
            VertexSet t = tried;
            while (t) {
                int u = lowest_vertex(t);
                t &= t - 1;
                if (twins(u, v)) { skip = true; break; }
            }
            if (skip) continue;
            tried |= vbit(v);

            std::uint32_t col = 0;
            VertexSet nb = g.neighbors(v);
            for (int i = 0; i < pos; ++i) col = (col << 1) | ((nb >> perm[i]) & 1u);
            if (col > best[pos]) continue;
            if (col < best[pos]) {
                best[pos] = col;
                for (int i = pos + 1; i < n; ++i) best[i] = ~0u;
            }
            perm[pos] = v;
            placed |= vbit(v);
            dfs(pos + 1);
            placed &= ~vbit(v);
        }
    }
};

}  // namespace

std::vector<int> canonical_permutation(const Graph& g) {
    CanonSearch s(g, refine_colors(g));
    s.dfs(0);
    return s.best_perm;
}

CanonicalKey canonical_form(const Graph& g) {
    return graph6_encode(g.permuted(canonical_permutation(g)));
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    return canonical_form(g) == canonical_form(h);
}

}  // namespace kappa3
