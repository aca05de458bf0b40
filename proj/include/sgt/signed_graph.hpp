#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sgt {

// An undirected signed edge, stored with u < v and sign in {+1, -1}.
struct SignedEdge {
    int u = 0;
    int v = 0;
    int sign = +1;

    friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

// Thrown when two graphs that must share an underlying graph do not.
struct UnderlyingMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when an exact method is asked to operate beyond its size range.
struct SizeLimit : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Immutable signed graph on vertices 0..n-1. Edges are kept normalized
// (u < v), deduplicated and sorted; signs are +1/-1. The signed adjacency
// matrix is implied: A[u][v] = sign of {u,v}, 0 when non-adjacent.
class SignedGraph {
public:
    SignedGraph() = default;
    explicit SignedGraph(int n) : n_(check_order(n)), adj_(n_) {}
    SignedGraph(int n, std::vector<SignedEdge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<SignedEdge>& edges() const { return edges_; }

    // +1 / -1 for an edge, 0 for a non-adjacent in-range pair.
    int sign(int u, int v) const;
    bool adjacent(int u, int v) const { return sign(u, v) != 0; }

    // Neighbor lists, ascending, as (neighbor, sign) pairs.
    const std::vector<std::vector<std::pair<int, int>>>& neighbors() const {
        return adj_;
    }

    std::vector<int> degrees() const;
    int negative_edge_count() const;

    friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    static int check_order(int n);
    int n_ = 0;
    std::vector<SignedEdge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

// A deterministic certificate for the set of positive cycles: the signs of
// the fundamental cycles closed by each non-forest edge, over a fixed BFS
// spanning forest (roots at the lowest-index vertex of each component,
// neighbors explored in ascending order). Two signed graphs on the same
// underlying graph are switching equivalent iff their signatures are equal.
struct CycleSignSignature {
    std::vector<std::pair<int, int>> forest_edges;  // lex-sorted
    std::vector<std::pair<int, int>> cotree_edges;  // lex-sorted
    std::vector<int> signs;  // aligned with cotree_edges, values in {+1,-1}

    friend bool operator==(const CycleSignSignature& a,
                           const CycleSignSignature& b) {
        return a.cotree_edges == b.cotree_edges && a.signs == b.signs;
    }
};

// Switching: flip the sign of every edge with exactly one endpoint in u.
// Involution; preserves the spectrum and every cycle sign.
SignedGraph switched(const SignedGraph& g, const std::vector<int>& u);

// Flip every edge sign. Spectrum negates and reverses.
SignedGraph negated(const SignedGraph& g);

// Same edges, all signs +1.
SignedGraph underlying(const SignedGraph& g);

bool is_connected(const SignedGraph& g);
int component_count(const SignedGraph& g);

// Component labels in 0..c-1, assigned in order of least vertex.
std::vector<int> component_labels(const SignedGraph& g);

// True iff every cycle is positive; equivalently some switching makes all
// edges positive. Decided by BFS sign propagation per component.
bool is_balanced(const SignedGraph& g);

CycleSignSignature cycle_sign_signature(const SignedGraph& g);

// Requires identical underlying graphs (throws UnderlyingMismatch).
bool switching_equivalent(const SignedGraph& a, const SignedGraph& b);

// Frustration index: minimum negative-edge count over all switchings
// (equivalently, fewest edge deletions to reach balance). Balanced graphs
// return 0 at any order; otherwise exact by Gray-code enumeration of
// switchings per component, which requires n <= 30 (SizeLimit).
int frustration_index(const SignedGraph& g);

// Frustration index together with a minimizing switching set and the
// switched graph itself (which attains `eps` negative edges).
struct FrustrationCertificate {
    int eps = 0;
    std::vector<int> switch_set;
    SignedGraph minimized;
};
FrustrationCertificate frustration_certificate(const SignedGraph& g);

// Induced signed subgraph on the given vertices, relabeled 0..k-1 in
// ascending original order.
SignedGraph induced(const SignedGraph& g, const std::vector<int>& verts);

}  // namespace sgt
