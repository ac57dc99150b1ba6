#include "kappa3/graph6.hpp"

#include <stdexcept>

namespace kappa3 {

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, bits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

Graph graph6_decode(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
        line.remove_suffix(1);
    if (line.empty()) throw std::invalid_argument("graph6: empty line");
    for (char c : line)
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: character out of range 63..126");
    int n = line[0] - 63;
    if (n == 63) throw std::invalid_argument("graph6: multi-byte order exceeds capacity 32");
    if (n > kMaxVertices) throw std::invalid_argument("graph6: order exceeds capacity 32");
    std::size_t body = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (line.size() - 1 < body) throw std::invalid_argument("graph6: truncated bit body");
    if (line.size() - 1 > body) throw std::invalid_argument("graph6: trailing characters");

    std::vector<std::pair<int, int>> edges;
    std::size_t byte = 1;
    int acc = 0, bits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bits == 0) {
                acc = line[byte++] - 63;
                bits = 6;
            }
            if (acc & (1 << (bits - 1))) edges.emplace_back(u, v);
            --bits;
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace kappa3
