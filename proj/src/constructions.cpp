#include "sgt/constructions.hpp"

#include <algorithm>

namespace sgt {

namespace {

std::vector<int> range_block(int lo, int hi) {  // [lo, hi)
    std::vector<int> out;
    for (int v = lo; v < hi; ++v) out.push_back(v);
    return out;
}

SignedGraph complete_with_missing(int n, std::vector<std::pair<int, int>> skip,
                                  std::pair<int, int> negative) {
    std::sort(skip.begin(), skip.end());
    std::vector<SignedEdge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (std::binary_search(skip.begin(), skip.end(), std::pair(u, v)))
                continue;
            int s = (std::pair(u, v) == negative) ? -1 : +1;
            edges.push_back({u, v, s});
        }
    return SignedGraph(n, std::move(edges));
}

}  // namespace

SignedGraph gamma1(int n) {
    if (n < 7) throw std::invalid_argument("gamma1 requires n >= 7");
    // Missing: the pair {3,4} and all pairs {1, w} for w in the clique block.
    std::vector<std::pair<int, int>> skip = {{3, 4}};
    for (int w = 5; w < n; ++w) skip.emplace_back(1, w);
    return complete_with_missing(n, std::move(skip), {0, 1});
}

SignedGraph gamma2(int n) {
    if (n < 7) throw std::invalid_argument("gamma2 requires n >= 7");
    std::vector<std::pair<int, int>> skip = {{3, 4}, {3, 5}, {4, 5}};
    for (int w = 6; w < n; ++w) skip.emplace_back(1, w);
    return complete_with_missing(n, std::move(skip), {0, 1});
}

SignedGraph gamma3(int n) {
    if (n < 5) throw std::invalid_argument("gamma3 requires n >= 5");
    // Vertex 0 outside, joined to 1 (negative), 2, 3; K_{n-1} on 1..n-1.
    std::vector<std::pair<int, int>> skip;
    for (int w = 4; w < n; ++w) skip.emplace_back(0, w);
    return complete_with_missing(n, std::move(skip), {0, 1});
}

SignedGraph gamma5() { return unbalanced_complete(4); }

SignedGraph complete_balanced(int n) {
    if (n < 0) throw std::invalid_argument("order must be >= 0");
    return complete_with_missing(n, {}, {-1, -1});
}

SignedGraph unbalanced_complete(int n) {
    if (n < 3)
        throw std::invalid_argument("unbalanced_complete requires n >= 3");
    return complete_with_missing(n, {}, {0, 1});
}

VertexPartition gamma1_partition(int n) {
    if (n < 7) throw std::invalid_argument("gamma1 requires n >= 7");
    return {{0}, {1}, {2}, {3, 4}, range_block(5, n)};
}

VertexPartition gamma2_partition(int n) {
    if (n < 7) throw std::invalid_argument("gamma2 requires n >= 7");
    return {{0}, {1}, {2}, {3, 4, 5}, range_block(6, n)};
}

VertexPartition gamma3_partition(int n) {
    if (n < 5) throw std::invalid_argument("gamma3 requires n >= 5");
    return {{0}, {1}, {2, 3}, range_block(4, n)};
}

std::vector<std::vector<double>> gamma1_block_pattern() {
    // Block-constant values of A(gamma1): scalar blocks keep their value,
    // all-ones blocks give 1, zero blocks 0, and the J-I clique block 1
    // (so subtracting leaves -I there).
    return {{0, -1, 1, 1, 1},
            {-1, 0, 1, 1, 0},
            {1, 1, 0, 1, 1},
            {1, 1, 1, 0, 1},
            {1, 0, 1, 1, 1}};
}

std::vector<std::vector<double>> gamma2_block_pattern() {
    return {{0, -1, 1, 1, 1},
            {-1, 0, 1, 1, 0},
            {1, 1, 0, 1, 1},
            {1, 1, 1, 0, 1},
            {1, 0, 1, 1, 1}};
}

SignedGraph build_family(const std::string& family, int n) {
    if (family == "gamma1") return gamma1(n);
    if (family == "gamma2") return gamma2(n);
    if (family == "gamma3") return gamma3(n);
    if (family == "gamma5") return gamma5();
    if (family == "complete-balanced") return complete_balanced(n);
    if (family == "unbalanced-complete") return unbalanced_complete(n);
    throw std::invalid_argument(
        "unknown family '" + family +
        "' (expected gamma1, gamma2, gamma3, gamma5, complete-balanced, "
        "unbalanced-complete)");
}

}  // namespace sgt
