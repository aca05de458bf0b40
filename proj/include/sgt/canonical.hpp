#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sgt/signed_graph.hpp"

namespace sgt {

// Pair-to-bit indexing for graphs on n <= 11 vertices (C(11,2) = 55 bits):
// bit index of {u, v}, u < v, in lexicographic pair order.
int pair_bit(int n, int u, int v);

// The underlying edge set of g as a bitmask in pair_bit order.
uint64_t underlying_mask(const SignedGraph& g);

// Canonical form of a signed graph under relabeling + switching:
//   mask = minimum underlying bitmask over all vertex permutations,
//   sig  = least signature bitmask (bit i set iff cotree edge i closes a
//          negative cycle) over the permutations attaining that minimum mask.
// Two signed graphs have equal canonical forms iff one can be turned into
// the other by relabeling plus switching. Exhaustive over n! permutations;
// n <= 9 (SizeLimit).
struct CanonicalForm {
    int n = 0;
    uint64_t mask = 0;
    uint32_t sig = 0;
    int cotree_size = 0;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) =
        default;
};

CanonicalForm canonical_form(const SignedGraph& g);

// A concrete representative graph rebuilt from a canonical form: underlying
// graph from the mask, spanning-forest edges positive, cotree edge i negative
// iff sig bit i is set.
SignedGraph canonical_representative(const CanonicalForm& f);

// Compact printable encoding, e.g. "n=7 mask=0x1fffff sig=0x3/15".
std::string to_string(const CanonicalForm& f);

// True iff some relabeling of a is switching-equivalent to b.
bool same_class_up_to_relabeling(const SignedGraph& a, const SignedGraph& b);

// Canonical (minimum) underlying bitmask over all permutations; n <= 9.
uint64_t canonical_underlying_mask(int n, uint64_t mask);

// All n! permutations of 0..n-1 in lexicographic order (cached); n <= 9.
const std::vector<std::vector<int>>& all_permutations(int n);

// Image of an edge bitmask under a vertex permutation.
uint64_t permute_mask(int n, uint64_t mask, const std::vector<int>& perm);

}  // namespace sgt
