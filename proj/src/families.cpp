#include "kappa3/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "kappa3/graph6.hpp"
#include "kappa3/parallel.hpp"
#include "kappa3/steiner.hpp"

namespace kappa3 {

Graph empty_graph(int n) {
    if (n < 0) throw std::invalid_argument("order must be nonnegative");
    return Graph(n);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, e);
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph::from_edges(n, e);
}

Graph wheel(int n) {
    if (n < 4) throw std::invalid_argument("wheel needs n >= 4");
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) {
        e.emplace_back(0, v);
        e.emplace_back(v, v == n - 1 ? 1 : v + 1);
    }
    return Graph::from_edges(n, e);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int ng = g.order(), nh = h.order();
    if (ng + nh > kMaxVertices) throw std::invalid_argument("graph capacity exceeded");
    std::vector<std::pair<int, int>> e = g.edges();
    for (auto [u, v] : h.edges()) e.emplace_back(u + ng, v + ng);
    return Graph::from_edges(ng + nh, e);
}

Graph join(const Graph& g, const Graph& h) {
    Graph u = disjoint_union(g, h);
    std::vector<std::pair<int, int>> e = u.edges();
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < h.order(); ++b) e.emplace_back(a, g.order() + b);
    return Graph::from_edges(u.order(), e);
}

Graph k_copies(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("copy count must be nonnegative");
    Graph out(0);
    for (int i = 0; i < k; ++i) out = disjoint_union(out, g);
    return out;
}

namespace {

// u already carries an attached K4 iff u lies in a K4 whose other three
// vertices all have degree exactly 3.
bool is_attaching_vertex(const Graph& g, int u) {
    VertexSet nb = g.neighbors(u);
    for (int a = 0; a < g.order(); ++a) {
        if (!(nb & vbit(a)) || g.degree(a) != 3) continue;
        for (int b = a + 1; b < g.order(); ++b) {
            if (!(nb & vbit(b)) || g.degree(b) != 3 || !g.has_edge(a, b)) continue;
            for (int c = b + 1; c < g.order(); ++c) {
                if (!(nb & vbit(c)) || g.degree(c) != 3) continue;
                if (g.has_edge(a, c) && g.has_edge(b, c)) return true;
            }
        }
    }
    return false;
}

}  // namespace

Graph attach_k4(const Graph& g, int u) {
    if (u < 0 || u >= g.order()) throw std::out_of_range("attach vertex out of range");
    if (g.order() + 3 > kMaxVertices) throw std::invalid_argument("graph capacity exceeded");
    if (is_attaching_vertex(g, u))
        throw std::invalid_argument("vertex " + std::to_string(u) + " already carries a K4");
    Graph out = g;
    int a = g.order();
    out = out.add_vertex_with_neighbors(vbit(u));
    out = out.add_vertex_with_neighbors(vbit(u) | vbit(a));
    out = out.add_vertex_with_neighbors(vbit(u) | vbit(a) | vbit(a + 1));
    return out;
}

Graph regular_graph(int m, int d) {
    if (m < 1 || d < 0 || d >= m) throw std::invalid_argument("need 0 <= d < m");
    if ((m * d) % 2 != 0) throw std::invalid_argument("d*m must be even");
    std::vector<std::pair<int, int>> e;
    for (int off = 1; off <= d / 2; ++off)
        for (int v = 0; v < m; ++v) e.emplace_back(v, (v + off) % m);
    if (d % 2 == 1)
        for (int v = 0; v < m / 2; ++v) e.emplace_back(v, v + m / 2);
    return Graph::from_edges(m, e);
}

namespace {

// Exhaustive maximum matching on tiny graphs.
int max_matching(const std::vector<std::pair<int, int>>& pairs, std::size_t from, VertexSet used,
                 std::vector<std::pair<int, int>>* pick) {
    int best = 0;
    std::vector<std::pair<int, int>> best_pick;
    for (std::size_t i = from; i < pairs.size(); ++i) {
        auto [u, v] = pairs[i];
        if (used & (vbit(u) | vbit(v))) continue;
        std::vector<std::pair<int, int>> sub;
        int got = 1 + max_matching(pairs, i + 1, used | vbit(u) | vbit(v), pick ? &sub : nullptr);
        if (got > best) {
            best = got;
            if (pick) {
                best_pick = std::move(sub);
                best_pick.insert(best_pick.begin(), pairs[i]);
            }
        }
    }
    if (pick) *pick = std::move(best_pick);
    return best;
}

}  // namespace

Graph add_maximum_matching(const Graph& g) {
    std::vector<std::pair<int, int>> avail;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) avail.emplace_back(u, v);
    std::vector<std::pair<int, int>> pick;
    max_matching(avail, 0, 0, &pick);
    Graph out = g;
    for (auto [u, v] : pick) out = out.add_edge(u, v);
    return out;
}

Graph remark_construction(int n, int ell) {
    if (n < 5 || ell < 2 || ell > n - 2)
        throw std::invalid_argument("need n >= 5 and 2 <= ell <= n-2");
    Graph base(0);
    if (n % 2 == 1 && ell % 2 == 1) {
        // (ell-3)(n-2) even: n-2 odd forces ell-3 even here
        base = add_maximum_matching(regular_graph(n - 2, ell - 3));
    } else {
        if (((ell - 2) * (n - 2)) % 2 != 0)
            throw std::invalid_argument("infeasible parity for (n, ell)");
        base = regular_graph(n - 2, ell - 2);
    }
    return join(base, complete_graph(2));
}

ExtremalCatalog extremal_catalog(Enumerator& en, int n, int threads) {
    if (n < 3 || n > Enumerator::kMaxOrder)
        throw std::invalid_argument("catalog supports 3 <= n <= 9");
    ExtremalCatalog cat;
    cat.n = n;
    const std::vector<Graph>& classes = en.all(n);

    // scan edge counts from the top; the first level with a kappa_bar_3 <= 2
    // class is f
    std::vector<std::vector<const Graph*>> by_m(n * (n - 1) / 2 + 1);
    for (const Graph& g : classes)
        if (g.is_connected()) by_m[g.edge_count()].push_back(&g);

    for (int m = static_cast<int>(by_m.size()) - 1; m >= 0; --m) {
        const auto& bucket = by_m[m];
        std::vector<char> low(bucket.size(), 0);
        parallel_for(bucket.size(), threads,
                     [&](std::size_t i) { low[i] = !kappa_bar_at_least(*bucket[i], 3, 3); });
        std::vector<CanonicalKey> keys;
        for (std::size_t i = 0; i < bucket.size(); ++i)
            if (low[i]) keys.push_back(canonical_form(*bucket[i]));
        if (!keys.empty()) {
            std::sort(keys.begin(), keys.end());
            cat.f_value = m;
            cat.members = std::move(keys);
            return cat;
        }
    }
    throw std::runtime_error("no connected class with kappa_bar_3 <= 2 found");
}

}  // namespace kappa3
