#pragma once

// Switching-class enumeration.
//
// Public entry point: enumerate_switching_classes, which streams exactly one
// representative per switching class of a given underlying graph (forest
// edges forced positive, every sign pattern on the remaining edges).
//
// The rest of this header is the bitmask machinery the verification engine
// runs on: underlying graphs as edge bitmasks (bit layout from pair_bit),
// sign assignments as bitmasks over the same layout, a parity-based detector
// for unbalanced complete five-vertex subgraphs, and isomorphism-class
// deduplication of complement masks for the near-complete search space.

#include <cstdint>
#include <functional>
#include <vector>

#include "sgt/signed_graph.hpp"
#include "sgt/spectral.hpp"

namespace sgt {

// Streams one representative per switching class of the underlying graph of
// `g` (input signs are ignored): a deterministic BFS spanning forest is fixed,
// forest edges are positive, and the remaining edges range over all sign
// patterns, in ascending bitmask order. Returns the number streamed, which is
// always 2^(m - n + c). Throws SizeLimit when that count would not fit.
std::uint64_t enumerate_switching_classes(
    int n, const SignedGraph& g,
    const std::function<void(const SignedGraph&)>& sink);

// ---- bitmask machinery -----------------------------------------------------

// An underlying graph decoded from an edge bitmask: edge list in ascending
// (u, v) order, a deterministic BFS spanning forest, and the non-forest edges
// whose sign bits parameterize the switching classes.
struct UnderlyingContext {
    int n = 0;
    std::uint64_t mask = 0;
    int m = 0;
    int components = 0;
    std::vector<std::pair<int, int>> edges;  // ascending, = set bits of mask
    std::vector<int> edge_bits;              // pair_bit of each edge
    std::vector<char> in_forest;             // aligned with edges
    std::vector<int> cotree_bits;            // pair_bit of non-forest edges
    int cotree_size() const { return static_cast<int>(cotree_bits.size()); }
};

UnderlyingContext build_underlying_context(int n, std::uint64_t mask);

// Sign bitmask (bit pair_bit(u,v) set == edge {u,v} negative) of the class
// representative selected by `cotree_mask` bits over ctx.cotree_bits.
std::uint64_t class_sign_mask(const UnderlyingContext& ctx,
                              std::uint64_t cotree_mask);

// Materializes the representative graph for an (underlying, sign) mask pair.
SignedGraph graph_from_masks(int n, std::uint64_t underlying,
                             std::uint64_t sign_mask);

// Full spectrum of the signed graph given by mask pair (dense Jacobi).
Spectrum mask_spectrum(int n, std::uint64_t underlying,
                       std::uint64_t sign_mask);

// Parity tables for detecting unbalanced complete five-vertex subgraphs
// directly on mask pairs. One entry per 5-subset of vertices; a signed K5 is
// balanced iff all six anchored triangle parities are even.
struct FiveCliqueEntry {
    std::uint64_t pairs = 0;                   // the 10 pair bits of the K5
    std::uint8_t triple[6][3] = {};            // anchored triangle bit indices
};
const std::vector<FiveCliqueEntry>& five_clique_table(int n);

// True iff some complete five-vertex subgraph of `underlying` carries an
// unbalanced sign pattern. `cliques` must be five_clique_table(n) or a
// pre-filtered subset of it.
bool has_unbalanced_k5(std::uint64_t underlying, std::uint64_t sign_mask,
                       const std::vector<FiveCliqueEntry>& cliques);

// ---- isomorphism-class deduplication ----------------------------------------

// One representative per isomorphism class of complement edge sets with at
// most max_missing edges, over the complete graph on n vertices. Deterministic
// order: ascending by edge count, then by first-seen bitmask. orbit_size is
// the number of labeled complement masks in the class.
struct ComplementOrbit {
    std::uint64_t complement = 0;
    std::uint64_t orbit_size = 0;
};
std::vector<ComplementOrbit> complement_orbit_reps(int n, int max_missing);

// Bitmask of the complete graph's edge set on n vertices.
std::uint64_t complete_mask(int n);

}  // namespace sgt
