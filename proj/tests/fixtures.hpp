#ifndef COREKIT_TESTS_FIXTURES_HPP
#define COREKIT_TESTS_FIXTURES_HPP

#include <random>
#include <vector>

#include "corekit/graph.hpp"
#include "corekit/seqcore.hpp"

namespace corekit::testutil {

// Eight-vertex test graph: a 4-clique {A,B,E,F}, a 2-core fringe G-H hanging
// off B and F, and pendants C (on B) and D (on F). Cores: A,B,E,F -> 3,
// G,H -> 2, C,D -> 1. A's neighbors are exactly B, E, F (degree 3).
inline Graph figure1() {
    std::vector<RawEdge> edges = {
        {"A", "B"}, {"A", "E"}, {"A", "F"}, {"B", "E"}, {"B", "F"},
        {"E", "F"}, {"B", "G"}, {"G", "H"}, {"H", "F"}, {"B", "C"},
        {"F", "D"},
    };
    return data_cleanse(edges);
}

inline std::uint32_t figure1_core(const Graph& g, const CoreMap& cores, char v) {
    for (VertexId u = 0; u < g.n(); ++u)
        if (g.label(u) == std::string(1, v)) return cores[u];
    throw std::logic_error("vertex not found");
}

// Erdos-Renyi-style random graph, seeded; isolated vertices allowed.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return data_cleanse_ids(edges, n);
}

// Brute-force oracle for the locality reduction: largest k <= current with
// at least k stored values >= k.
inline std::uint32_t brute_force_update_core(const std::vector<std::uint32_t>& values,
                                             std::uint32_t current) {
    for (std::uint32_t k = current;; --k) {
        std::uint32_t ge = 0;
        for (auto v : values)
            if (v >= k) ++ge;
        if (ge >= k) return k;
        if (k == 0) return 0;
    }
}

// Brute-force core numbers by repeated peeling (small graphs only).
inline CoreMap brute_force_cores(const Graph& g) {
    const std::size_t n = g.n();
    CoreMap cores;
    cores.core.assign(n, 0);
    std::vector<bool> removed(n, false);
    std::vector<std::size_t> deg(n);
    for (VertexId u = 0; u < n; ++u) deg[u] = g.degree(u);
    std::uint32_t level = 0;
    for (std::size_t round = 0; round < n; ++round) {
        // peel the minimum-degree remaining vertex
        VertexId best = 0;
        bool found = false;
        for (VertexId u = 0; u < n; ++u) {
            if (removed[u]) continue;
            if (!found || deg[u] < deg[best]) {
                best = u;
                found = true;
            }
        }
        if (!found) break;
        level = std::max<std::uint32_t>(level, static_cast<std::uint32_t>(deg[best]));
        cores.core[best] = level;
        removed[best] = true;
        for (VertexId v : g.neighbors(best))
            if (!removed[v]) --deg[v];
    }
    return cores;
}

} // namespace corekit::testutil

#endif
