#pragma once

#include <string>

#include "sgt/signed_graph.hpp"
#include "sgt/spectral.hpp"

namespace sgt {

// Named signed-graph families. All "gamma" builders produce graphs with
// exactly one negative edge ({0,1}) and are unbalanced.
//
// gamma1(n), n >= 7: vertices 0,1,2 distinguished; {3,4} a non-adjacent pair;
//   {5..n-1} an all-positive clique; everything else joined positively,
//   except vertex 1 is not joined to {5..n-1}; edge {0,1} negative.
// gamma2(n), n >= 7: same layout with the non-adjacent block {3,4,5} and the
//   clique {6..n-1}.
// gamma3(n), n >= 5: all-positive complete graph on {1..n-1} plus vertex 0
//   joined to 1, 2, 3 only; edge {0,1} negative.
// gamma5(): the unbalanced K4 (= unbalanced_complete(4)).
SignedGraph gamma1(int n);
SignedGraph gamma2(int n);
SignedGraph gamma3(int n);
SignedGraph gamma5();

// All-positive K_n (n >= 0).
SignedGraph complete_balanced(int n);

// K_n with exactly one negative edge {0,1}; unbalanced for n >= 3 (required).
SignedGraph unbalanced_complete(int n);

// The defining equitable partitions matching the builders above.
VertexPartition gamma1_partition(int n);  // sizes (1,1,1,2,n-5)
VertexPartition gamma2_partition(int n);  // sizes (1,1,1,3,n-6)
VertexPartition gamma3_partition(int n);  // sizes (1,1,2,n-4)

// Per-block constant patterns c for the block-shift residual check: with
// these, A - sum c_ij J_ij is diagonal-block {0, -I}, so its eigenvalues all
// lie in {-1, 0}.
std::vector<std::vector<double>> gamma1_block_pattern();
std::vector<std::vector<double>> gamma2_block_pattern();

// CLI-facing family dispatch. Known names: gamma1, gamma2, gamma3, gamma5,
// complete-balanced, unbalanced-complete. gamma5 ignores n (fixed order 4).
SignedGraph build_family(const std::string& family, int n);

}  // namespace sgt
