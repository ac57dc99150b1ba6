#include "kappa3/steiner.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace kappa3 {

namespace {

std::vector<int> terminal_list(const Graph& g, VertexSet s) {
    if (s & ~g.vertex_mask()) throw std::out_of_range("terminal outside graph");
    std::vector<int> t;
    VertexSet m = s;
    while (m) {
        t.push_back(lowest_vertex(m));
        m &= m - 1;
    }
    if (t.size() < 2) throw std::invalid_argument("terminal set needs at least 2 vertices");
    if (t.size() > 3) throw std::invalid_argument("terminal sets of size > 3 are not supported");
    return t;
}

// All simple paths cur -> goal of at most `max_edges` edges whose internal
// vertices avoid `forbidden`. Paths are emitted as vertex sequences
// including both endpoints.
void paths_dfs(const Graph& g, int cur, int goal, VertexSet forbidden, VertexSet onpath,
               int max_edges, std::vector<int>& stack, std::vector<std::vector<int>>& out) {
    if (max_edges <= 0) return;
    VertexSet nb = g.neighbors(cur);
    if (nb & vbit(goal)) {
        stack.push_back(goal);
        out.push_back(stack);
        stack.pop_back();
    }
    if (max_edges == 1) return;
    nb &= ~(forbidden | onpath | vbit(goal));
    while (nb) {
        int v = lowest_vertex(nb);
        nb &= nb - 1;
        stack.push_back(v);
        paths_dfs(g, v, goal, forbidden, onpath | vbit(v), max_edges - 1, stack, out);
        stack.pop_back();
    }
}

std::vector<std::vector<int>> simple_paths(const Graph& g, int from, int to, VertexSet forbidden,
                                           int max_edges) {
    std::vector<std::vector<int>> out;
    std::vector<int> stack{from};
    paths_dfs(g, from, to, forbidden, vbit(from), max_edges, stack, out);
    return out;
}

int path_edges(const std::vector<int>& p) { return static_cast<int>(p.size()) - 1; }

VertexSet path_internal(const std::vector<int>& p) {
    VertexSet m = 0;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) m |= vbit(p[i]);
    return m;
}

SteinerTree tree_from_paths(std::initializer_list<const std::vector<int>*> paths) {
    SteinerTree t;
    for (const auto* p : paths) {
        for (std::size_t i = 0; i + 1 < p->size(); ++i) {
            int u = (*p)[i], v = (*p)[i + 1];
            t.edges.emplace_back(std::min(u, v), std::max(u, v));
            t.vertices |= vbit(u) | vbit(v);
        }
    }
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

bool tree_order(const SteinerTree& a, const SteinerTree& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
}

// ---- edge-set bitmask over the host graph's edge list ----

constexpr int kEdgeWords = 8;  // C(32,2) = 496 <= 512 bits
using EdgeMask = std::array<std::uint64_t, kEdgeWords>;

struct EdgeIndex {
    std::array<std::array<int, kMaxVertices>, kMaxVertices> idx;
    int m = 0;
    explicit EdgeIndex(const Graph& g) {
        for (auto& row : idx) row.fill(-1);
        for (auto [u, v] : g.edges()) {
            idx[u][v] = idx[v][u] = m;
            ++m;
        }
    }
};

EdgeMask edge_mask_of(const SteinerTree& t, const EdgeIndex& ei) {
    EdgeMask m{};
    for (auto [u, v] : t.edges) {
        int i = ei.idx[u][v];
        m[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    return m;
}

bool disjoint(const EdgeMask& a, const EdgeMask& b) {
    for (int i = 0; i < kEdgeWords; ++i)
        if (a[i] & b[i]) return false;
    return true;
}

void mask_or(EdgeMask& a, const EdgeMask& b) {
    for (int i = 0; i < kEdgeWords; ++i) a[i] |= b[i];
}

void mask_andnot(EdgeMask& a, const EdgeMask& b) {
    for (int i = 0; i < kEdgeWords; ++i) a[i] &= ~b[i];
}

struct PackingSearch {
    const std::vector<SteinerTree>& trees;
    std::vector<VertexSet> internals;
    std::vector<EdgeMask> emasks;
    int k;          // |S|
    int total_edges;
    int stop_at;    // abort as soon as this many trees are packed
    int best = 0;
    std::vector<int> best_pick;
    std::vector<int> pick;
    bool done = false;

    PackingSearch(const Graph& g, VertexSet s, const std::vector<SteinerTree>& ts, int stop)
        : trees(ts), k(popcount(s)), total_edges(g.edge_count()), stop_at(stop) {
        EdgeIndex ei(g);
        internals.reserve(ts.size());
        emasks.reserve(ts.size());
        for (const auto& t : ts) {
            internals.push_back(t.vertices & ~s);
            emasks.push_back(edge_mask_of(t, ei));
        }
    }

    // Upper bound on how many more trees can fit into `edges_left` edges.
    // For k=3 at most one 2-edge tree exists in any packing, the rest need
    // 3 edges; for k=2 at most one 1-edge tree, the rest need 2.
    int fit_bound(int edges_left, bool short_tree_used) const {
        int base = k == 3 ? 3 : 2;
        int bonus = short_tree_used ? 0 : 1;
        return (edges_left + bonus) / base;
    }

    void dfs(int start, VertexSet used_internal, const EdgeMask& used_edges, int edges_used,
             bool short_used) {
        if (static_cast<int>(pick.size()) > best) {
            best = static_cast<int>(pick.size());
            best_pick = pick;
            if (best >= stop_at) {
                done = true;
                return;
            }
        }
        int n_trees = static_cast<int>(trees.size());
        for (int i = start; i < n_trees && !done; ++i) {
            int have = static_cast<int>(pick.size());
            if (have + (n_trees - i) <= best) return;
            if (have + fit_bound(total_edges - edges_used, short_used) <= best) return;
            if (internals[i] & used_internal) continue;
            if (!disjoint(emasks[i], used_edges)) continue;
            EdgeMask ue = used_edges;
            mask_or(ue, emasks[i]);
            int sz = static_cast<int>(trees[i].edges.size());
            pick.push_back(i);
            dfs(i + 1, used_internal | internals[i], ue, edges_used + sz,
                short_used || sz == k - 1);
            pick.pop_back();
        }
    }
};

}  // namespace

namespace {

// Minimal S-trees with at most `budget` edges. With budget >= n-1 this is
// the complete set; smaller budgets are used for the cheap first passes of
// the packing search, where a few short trees usually settle the answer.
std::vector<SteinerTree> enumerate_trees_bounded(const Graph& g, VertexSet s, int budget) {
    auto terms = terminal_list(g, s);
    std::vector<SteinerTree> out;

    if (terms.size() == 2) {
        for (const auto& p : simple_paths(g, terms[0], terms[1], s, budget))
            out.push_back(tree_from_paths({&p}));
        std::sort(out.begin(), out.end(), tree_order);
        return out;
    }

    // center = one of the terminals (tree is a path through it)
    for (int ci = 0; ci < 3; ++ci) {
        int c = terms[ci];
        int a = terms[(ci + 1) % 3], b = terms[(ci + 2) % 3];
        if (a > b) std::swap(a, b);
        for (const auto& p1 : simple_paths(g, c, a, s, budget - 1)) {
            VertexSet used = path_internal(p1);
            for (const auto& p2 : simple_paths(g, c, b, s | used, budget - path_edges(p1)))
                out.push_back(tree_from_paths({&p1, &p2}));
        }
    }
    // center outside S (degree-3 branch vertex)
    VertexSet centers = g.vertex_mask() & ~s;
    while (centers) {
        int c = lowest_vertex(centers);
        centers &= centers - 1;
        for (const auto& p0 : simple_paths(g, c, terms[0], s | vbit(c), budget - 2)) {
            VertexSet u0 = path_internal(p0);
            int left0 = budget - path_edges(p0);
            for (const auto& p1 : simple_paths(g, c, terms[1], s | vbit(c) | u0, left0 - 1)) {
                VertexSet u1 = u0 | path_internal(p1);
                int left1 = left0 - path_edges(p1);
                for (const auto& p2 : simple_paths(g, c, terms[2], s | vbit(c) | u1, left1))
                    out.push_back(tree_from_paths({&p0, &p1, &p2}));
            }
        }
    }
    std::sort(out.begin(), out.end(), tree_order);
    return out;
}

}  // namespace

int Bounds::min() const { return std::min({degree_bound, edge_bound, clique_bound}); }

std::vector<SteinerTree> enumerate_minimal_trees(const Graph& g, VertexSet s) {
    return enumerate_trees_bounded(g, s, g.order() - 1);
}

Bounds bounds(const Graph& g, VertexSet s) {
    auto terms = terminal_list(g, s);
    int k = static_cast<int>(terms.size());
    int m = g.edge_count();
    Bounds b{};
    b.degree_bound = kMaxVertices;
    for (int t : terms) b.degree_bound = std::min(b.degree_bound, g.degree(t));
    if (k == 3) {
        b.edge_bound = (m + 1) / 3;
    } else {
        bool adj = g.has_edge(terms[0], terms[1]);
        b.edge_bound = adj ? (m + 1) / 2 : m / 2;
    }
    b.clique_bound = g.order() - k + k / 2;
    return b;
}

PackingResult max_packing(const Graph& g, VertexSet s, std::optional<int> target) {
    PackingResult r;
    r.cert.terminals = s;

    int full_budget = g.order() - 1;
    // Cheap passes over short trees first: in dense graphs the target (or the
    // bound) is usually reached without enumerating the full tree set, which
    // grows violently with density. Only the final, complete pass can prove a
    // packing maximum.
    for (int budget : {3, 4, full_budget}) {
        if (budget > full_budget) budget = full_budget;
        auto trees = enumerate_trees_bounded(g, s, budget);
        if (trees.empty()) {
            if (budget == full_budget) return r;
            continue;
        }

        int ub = bounds(g, s).min();
        int stop = target ? std::min(*target, ub) : ub;
        if (stop <= 0) stop = ub;  // nonsensical targets fall back to a full search

        PackingSearch search(g, s, trees, stop);
        search.dfs(0, 0, EdgeMask{}, 0, false);

        if (search.best >= stop || budget == full_budget) {
            r.count = search.best;
            int keep = target ? std::min(search.best, *target) : search.best;
            for (int i = 0; i < keep; ++i) r.cert.trees.push_back(trees[search.best_pick[i]]);
            return r;
        }
    }
    return r;  // unreachable
}

int kappa_set(const Graph& g, VertexSet s) { return max_packing(g, s).count; }

namespace {

template <typename Fn>
void for_each_subset(int n, int k, Fn fn) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        VertexSet s = 0;
        for (int v : idx) s |= vbit(v);
        if (!fn(s)) return;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void check_k(const Graph& g, int k) {
    if (k != 2 && k != 3) throw std::invalid_argument("only k in {2,3} is supported");
    if (k > g.order()) throw std::invalid_argument("k exceeds graph order");
}

}  // namespace

int kappa_k(const Graph& g, int k) {
    check_k(g, k);
    int lo = kMaxVertices + 1;
    for_each_subset(g.order(), k, [&](VertexSet s) {
        lo = std::min(lo, kappa_set(g, s));
        return lo > 0;
    });
    return lo;
}

int kappa_bar_k(const Graph& g, int k) {
    check_k(g, k);
    int hi = 0;
    for_each_subset(g.order(), k, [&](VertexSet s) {
        if (bounds(g, s).min() > hi) hi = std::max(hi, kappa_set(g, s));
        return true;
    });
    return hi;
}

bool kappa_bar_at_least(const Graph& g, int k, int threshold) {
    check_k(g, k);
    if (threshold <= 0) return true;
    bool found = false;
    for_each_subset(g.order(), k, [&](VertexSet s) {
        if (bounds(g, s).min() >= threshold &&
            max_packing(g, s, threshold).count >= threshold)
            found = true;
        return !found;
    });
    return found;
}

int menger_local_connectivity(const Graph& g, int x, int y) {
    if (x == y) throw std::invalid_argument("menger endpoints must differ");
    int n = g.order();
    if (x < 0 || x >= n || y < 0 || y >= n) throw std::out_of_range("vertex out of range");

    // split graph: node v -> in=v, out=v+n; unit capacities throughout
    int nn = 2 * n;
    std::vector<std::vector<int>> cap(nn, std::vector<int>(nn, 0));
    for (int v = 0; v < n; ++v) cap[v][v + n] = 1;
    for (auto [u, v] : g.edges()) {
        cap[u + n][v] = 1;
        cap[v + n][u] = 1;
    }
    int source = x + n, sink = y;
    int flow = 0;
    while (true) {
        std::vector<int> prev(nn, -1);
        prev[source] = source;
        std::vector<int> queue{source};
        for (std::size_t qi = 0; qi < queue.size() && prev[sink] == -1; ++qi) {
            int u = queue[qi];
            for (int v = 0; v < nn; ++v)
                if (cap[u][v] > 0 && prev[v] == -1) {
                    prev[v] = u;
                    queue.push_back(v);
                }
        }
        if (prev[sink] == -1) break;
        for (int v = sink; v != source; v = prev[v]) {
            cap[prev[v]][v] -= 1;
            cap[v][prev[v]] += 1;
        }
        ++flow;
    }
    return flow;
}

bool verify_packing(const Graph& g, const TreePacking& cert) {
    VertexSet s = cert.terminals;
    if (s & ~g.vertex_mask()) return false;
    for (const auto& t : cert.trees) {
        if ((s & t.vertices) != s) return false;
        if (t.edges.empty()) return false;
        VertexSet touched = 0;
        std::vector<std::pair<int, int>> es = t.edges;
        std::sort(es.begin(), es.end());
        if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
        // union-find over tree vertices
        std::array<int, kMaxVertices> parent;
        for (int i = 0; i < kMaxVertices; ++i) parent[i] = i;
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (auto [u, v] : es) {
            if (u < 0 || v <= u || v >= g.order()) return false;
            if (!g.has_edge(u, v)) return false;
            touched |= vbit(u) | vbit(v);
            int ru = find(u), rv = find(v);
            if (ru == rv) return false;  // cycle
            parent[ru] = rv;
        }
        if (touched != t.vertices) return false;
        if (static_cast<std::size_t>(popcount(t.vertices)) != es.size() + 1) return false;
    }
    for (std::size_t i = 0; i < cert.trees.size(); ++i)
        for (std::size_t j = i + 1; j < cert.trees.size(); ++j) {
            const auto& a = cert.trees[i];
            const auto& b = cert.trees[j];
            if ((a.vertices & b.vertices) != s) return false;
            for (auto e : a.edges)
                if (std::find(b.edges.begin(), b.edges.end(), e) != b.edges.end()) return false;
        }
    return true;
}

int kappa_set_oracle(const Graph& g, VertexSet s) {
    if (g.order() > 7) throw std::invalid_argument("oracle limited to n <= 7");
    auto terms = terminal_list(g, s);
    auto all_edges = g.edges();
    int m = static_cast<int>(all_edges.size());
    int max_sz = g.order() - 1;

    // every minimal S-tree, found by filtering edge subsets
    std::vector<std::pair<std::uint32_t, VertexSet>> trees;  // (edge subset mask, vertices)
    std::vector<int> chosen;
    auto consider = [&]() {
        VertexSet verts = 0;
        std::array<int, kMaxVertices> deg{};
        std::uint32_t emask = 0;
        for (int i : chosen) {
            auto [u, v] = all_edges[i];
            verts |= vbit(u) | vbit(v);
            ++deg[u];
            ++deg[v];
            emask |= 1u << i;
        }
        if ((verts & s) != s) return;
        if (popcount(verts) != static_cast<int>(chosen.size()) + 1) return;
        // connectivity of the subset
        VertexSet seen = vbit(lowest_vertex(verts));
        bool grew = true;
        while (grew) {
            grew = false;
            for (int i : chosen) {
                auto [u, v] = all_edges[i];
                if ((seen & vbit(u)) && !(seen & vbit(v))) { seen |= vbit(v); grew = true; }
                if ((seen & vbit(v)) && !(seen & vbit(u))) { seen |= vbit(u); grew = true; }
            }
        }
        if (seen != verts) return;
        // minimality: every leaf a terminal
        VertexSet vs = verts;
        while (vs) {
            int v = lowest_vertex(vs);
            vs &= vs - 1;
            if (deg[v] == 1 && !(s & vbit(v))) return;
        }
        trees.emplace_back(emask, verts);
    };
    std::function<void(int)> gen = [&](int from) {
        if (!chosen.empty()) consider();
        if (static_cast<int>(chosen.size()) == max_sz) return;
        for (int i = from; i < m; ++i) {
            chosen.push_back(i);
            gen(i + 1);
            chosen.pop_back();
        }
    };
    gen(0);

    std::function<int(std::size_t, std::uint32_t, VertexSet)> pack =
        [&](std::size_t from, std::uint32_t used_e, VertexSet used_i) {
            int best = 0;
            for (std::size_t i = from; i < trees.size(); ++i) {
                auto [em, verts] = trees[i];
                if (em & used_e) continue;
                if ((verts & ~s) & used_i) continue;
                best = std::max(best, 1 + pack(i + 1, used_e | em, used_i | (verts & ~s)));
            }
            return best;
        };
    return pack(0, 0, 0);
}

}  // namespace kappa3
