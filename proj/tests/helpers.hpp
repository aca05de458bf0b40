// Shared helpers for the test suite: compact graph builders and seeded
// random-graph generators. Everything deterministic given the caller's RNG.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "sgt/signed_graph.hpp"

namespace testutil {

inline sgt::SignedGraph make(int n,
                             const std::vector<std::array<int, 3>>& triples) {
    std::vector<sgt::SignedEdge> edges;
    edges.reserve(triples.size());
    for (const auto& t : triples) edges.push_back({t[0], t[1], t[2]});
    return sgt::SignedGraph(n, std::move(edges));
}

// Path 0-1-...-(n-1), all edges with the given sign.
inline sgt::SignedGraph path_graph(int n, int sign = +1) {
    std::vector<sgt::SignedEdge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, sign});
    return sgt::SignedGraph(n, std::move(edges));
}

// Cycle on n vertices, all edges with the given sign.
inline sgt::SignedGraph cycle_graph(int n, int sign = +1) {
    std::vector<sgt::SignedEdge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, sign});
    edges.push_back({0, n - 1, sign});
    return sgt::SignedGraph(n, std::move(edges));
}

// Complete multipartite graph with the given part sizes, every edge carrying
// the same sign.
inline sgt::SignedGraph complete_multipartite(const std::vector<int>& parts,
                                              int sign) {
    int n = 0;
    std::vector<int> part_of;
    for (size_t p = 0; p < parts.size(); ++p)
        for (int i = 0; i < parts[p]; ++i) {
            part_of.push_back(static_cast<int>(p));
            ++n;
        }
    std::vector<sgt::SignedEdge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) edges.push_back({u, v, sign});
    return sgt::SignedGraph(n, std::move(edges));
}

// Every pair independently an edge with probability p; signs uniform.
inline sgt::SignedGraph random_graph(std::mt19937_64& rng, int n,
                                     double p = 0.5) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<sgt::SignedEdge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p)
                edges.push_back({u, v, coin(rng) < 0.5 ? +1 : -1});
    return sgt::SignedGraph(n, std::move(edges));
}

inline std::vector<int> random_subset(std::mt19937_64& rng, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (rng() & 1) out.push_back(v);
    return out;
}

inline double max_abs_diff(const std::vector<double>& a,
                           const std::vector<double>& b) {
    if (a.size() != b.size()) return 1e300;
    double worst = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

inline bool near(double a, double b, double tol = 1e-9) {
    return std::abs(a - b) <= tol;
}

}  // namespace testutil
