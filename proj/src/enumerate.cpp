#include "kappa3/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "kappa3/graph6.hpp"

namespace kappa3 {

const std::vector<Graph>& Enumerator::all(int n) {
    if (n < 0 || n > kMaxOrder)
        throw std::invalid_argument("enumeration supports 0 <= n <= 9");
    if (levels_.empty()) {
        levels_.push_back({Graph(0)});
    }
    while (static_cast<int>(levels_.size()) <= n) {
        int level = static_cast<int>(levels_.size());
        std::unordered_set<CanonicalKey> seen;
        std::vector<std::pair<CanonicalKey, Graph>> next;
        VertexSet subsets = vbit(level - 1);  // subsets of [level-1]
        for (const Graph& parent : levels_[level - 1]) {
            for (VertexSet nbrs = 0; nbrs < subsets; ++nbrs) {
                Graph child = parent.add_vertex_with_neighbors(nbrs);
                CanonicalKey key = canonical_form(child);
                if (seen.insert(key).second) next.emplace_back(std::move(key), std::move(child));
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Graph> graphs;
        graphs.reserve(next.size());
        for (auto& [key, g] : next) graphs.push_back(std::move(g));
        levels_.push_back(std::move(graphs));
    }
    return levels_[n];
}

std::vector<Graph> Enumerator::matching(const GraphClassQuery& q) {
    int max_m = q.n * (q.n - 1) / 2;
    int m_max = q.m_max < 0 ? max_m : q.m_max;
    if (q.m_min < 0 || q.m_min > m_max || m_max > max_m)
        throw std::invalid_argument("invalid size range");
    std::vector<Graph> out;
    for (const Graph& g : all(q.n)) {
        int m = g.edge_count();
        if (m < q.m_min || m > m_max) continue;
        if (q.connected_only && !g.is_connected()) continue;
        out.push_back(g);
    }
    return out;
}

Graph6Ingest ingest_graph6(std::istream& in, bool dedup) {
    Graph6Ingest result;
    std::unordered_set<CanonicalKey> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            Graph g = graph6_decode(line);
            if (dedup && !seen.insert(canonical_form(g)).second) continue;
            result.graphs.push_back(std::move(g));
        } catch (const std::exception& e) {
            result.errors.emplace_back(lineno, e.what());
        }
    }
    return result;
}

}  // namespace kappa3
