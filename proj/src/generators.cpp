#include "disub/generators.hpp"

#include <stdexcept>

namespace disub {

Digraph bidirect(const UndirectedGraph &g) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(2 * g.edges.size());
    for (auto [u, v] : g.edges) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return Digraph(g.n, arcs);
}

Digraph complete_bidirected(int n) {
    if (n < 1)
        throw std::invalid_argument("complete_bidirected: n must be >= 1");
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * (n - 1));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v)
                arcs.emplace_back(u, v);
    return Digraph(n, arcs);
}

Digraph random_tournament(int n, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("random_tournament: n must be >= 1");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (rng.next() & 1)
                arcs.emplace_back(v, u);
            else
                arcs.emplace_back(u, v);
        }
    return Digraph(n, arcs);
}

Digraph random_digraph(int n, double p, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("random_digraph: n must be >= 1");
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("random_digraph: p must be in [0, 1]");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v)
                continue;
            if (rng.next_unit() < p)
                arcs.emplace_back(u, v);
        }
    return Digraph(n, arcs);
}

UndirectedPipelineResult undirected_subdivision_pipeline(const UndirectedGraph &g,
                                                         const UndirectedGraph &f_un,
                                                         const ConstraintMap &c, FinderMode mode,
                                                         const ChiOracleConfig &cfg) {
    // Edges are stored with u < v, so orienting small -> large keeps the
    // constraint indexing identical between F and its orientation.
    std::vector<std::pair<int, int>> arcs(f_un.edges.begin(), f_un.edges.end());
    UndirectedPipelineResult result;
    result.oriented_pattern = PatternDigraph{Digraph(f_un.n, arcs)};
    result.host = bidirect(g);
    result.cert = find_subdivision(result.host, result.oriented_pattern, c, mode, cfg);
    return result;
}

} // namespace disub
