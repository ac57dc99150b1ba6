#pragma once

#include <istream>
#include <string>
#include <vector>

#include "kappa3/canonical.hpp"
#include "kappa3/graph.hpp"

namespace kappa3 {

struct GraphClassQuery {
    int n = 0;
    int m_min = 0;
    int m_max = -1;  // -1 = C(n,2)
    bool connected_only = false;
};

// Isomorphism-free generation of all graphs on n <= 9 vertices by vertex
// augmentation with canonical-key dedup. Levels are memoized, so one
// Enumerator can back many queries.
class Enumerator {
public:
    // One representative per isomorphism class, sorted by canonical key.
    const std::vector<Graph>& all(int n);
    std::vector<Graph> matching(const GraphClassQuery& q);

    static constexpr int kMaxOrder = 9;

private:
    std::vector<std::vector<Graph>> levels_;
};

struct Graph6Ingest {
    std::vector<Graph> graphs;
    std::vector<std::pair<int, std::string>> errors;  // (1-based line, message)
};

// Decode a graph6 line stream. Per-line failures are collected, not fatal.
// With dedup, isomorphic repeats are dropped (first occurrence kept).
Graph6Ingest ingest_graph6(std::istream& in, bool dedup);

}  // namespace kappa3
