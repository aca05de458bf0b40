#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgt/signed_graph.hpp"

namespace sgt {

// Dense real symmetric matrix, row-major full storage.
struct SymMatrix {
    int n = 0;
    std::vector<double> a;

    SymMatrix() = default;
    explicit SymMatrix(int n_) : n(n_), a(size_t(n_) * n_, 0.0) {}
    double& at(int i, int j) { return a[size_t(i) * n + j]; }
    double at(int i, int j) const { return a[size_t(i) * n + j]; }
};

SymMatrix adjacency_matrix(const SignedGraph& g);

// All eigenvalues, sorted descending. Cyclic Jacobi rotations, iterated until
// the off-diagonal Frobenius norm falls below 1e-12 times the matrix
// Frobenius norm.
std::vector<double> jacobi_eigenvalues(SymMatrix m);

// Eigenvalues (descending) with matching orthonormal eigenvectors:
// vectors[k] belongs to values[k].
struct EigenSystem {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};
EigenSystem jacobi_eigensystem(SymMatrix m);

// Eigenvalues of a signed graph with the derived spectral quantities.
struct Spectrum {
    std::vector<double> values;  // descending
    double index() const { return values.empty() ? 0.0 : values.front(); }
    double min() const { return values.empty() ? 0.0 : values.back(); }
    double radius() const {
        return values.empty() ? 0.0
                              : std::max(index(), -min());
    }
};
Spectrum eigenvalues(const SignedGraph& g);
double lambda1(const SignedGraph& g);
double spectral_radius(const SignedGraph& g);

// Ordered partition of 0..n-1 into disjoint non-empty cells.
using VertexPartition = std::vector<std::vector<int>>;

// Thrown when a partition is not equitable for a graph: two vertices of
// cell `cell_from` have different signed neighbor sums into cell `cell_to`.
struct NotEquitable : std::runtime_error {
    NotEquitable(int from, int to, int va, int vb, long long sa, long long sb);
    int cell_from, cell_to;
    int vertex_a, vertex_b;
    long long sum_a, sum_b;
};

// Integer quotient matrix of an equitable partition: entry (i, j) is the
// common signed row sum from a cell-i vertex into cell j.
struct QuotientMatrix {
    std::vector<std::vector<long long>> b;
    std::vector<int> cell_sizes;
    int dim() const { return static_cast<int>(b.size()); }
};

// Validates the partition, checks equitability, and returns Q.
QuotientMatrix equitable_quotient(const SignedGraph& g,
                                  const VertexPartition& p);

// Eigenvalues of Q, computed on the symmetrized similar matrix
// D^{1/2} Q D^{-1/2} with D = diag(cell sizes). Descending.
std::vector<double> quotient_eigenvalues(const QuotientMatrix& q);

// Greedy nearest matching of every quotient eigenvalue into the graph
// spectrum; contained == all matched within tol.
struct ContainmentReport {
    bool contained = false;
    double max_gap = 0.0;
    double tolerance = 0.0;
    // (quotient eigenvalue, matched graph eigenvalue, |gap|) triples.
    std::vector<std::array<double, 3>> matches;
};
ContainmentReport quotient_containment(const SignedGraph& g,
                                       const QuotientMatrix& q,
                                       double tol = 1e-8);
bool quotient_containment_check(const SignedGraph& g, const QuotientMatrix& q,
                                double tol = 1e-8);

// A - sum of per-block constant*J lifts, for a k x k block-constant pattern
// aligned with the partition. Used to check that the non-quotient eigenvalues
// sit where the block-shift argument puts them.
SymMatrix block_shift_residual(const SignedGraph& g, const VertexPartition& p,
                               const std::vector<std::vector<double>>& c);

// Thrown by nonneg_eigenvector_form when the switched eigenvector fails
// post-verification (degenerate top eigenspace).
struct DegenerateEigenvector : std::runtime_error {
    explicit DegenerateEigenvector(double residual);
    double residual;
};

// Switching-equivalent form of g whose top eigenvector is entrywise
// nonnegative: switch on the negative support of a computed top eigenvector.
struct NonnegForm {
    SignedGraph graph;
    std::vector<int> switch_set;
    std::vector<double> eigenvector;  // unit, entries >= 0
    double lambda1 = 0.0;
};
NonnegForm nonneg_eigenvector_form(const SignedGraph& g);

}  // namespace sgt
