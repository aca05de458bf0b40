#pragma once

#include <optional>
#include <vector>

#include "sgt/signed_graph.hpp"

namespace sgt {

// A size-k clique of the underlying graph together with the balance of the
// signed complete subgraph it induces.
struct CliqueWitness {
    std::vector<int> vertices;  // ascending
    bool balanced = false;
};

// Lexicographically least unbalanced K_k (by sorted vertex list), if any.
// k >= 3 required (smaller complete graphs are always balanced);
// k > n returns nullopt. Requires n <= 64.
std::optional<CliqueWitness> contains_unbalanced_clique(const SignedGraph& g,
                                                        int k);

// Clique number of the underlying graph. Requires n <= 64.
int clique_number(const SignedGraph& g);

// Largest k admitting a balanced complete signed subgraph on k vertices.
// 0 for the empty graph, else >= 1. Requires n <= 64.
int balanced_clique_number(const SignedGraph& g);

// True iff the complete signed graph induced on `verts` (which must be a
// clique of g) is balanced.
bool clique_is_balanced(const SignedGraph& g, const std::vector<int>& verts);

}  // namespace sgt
