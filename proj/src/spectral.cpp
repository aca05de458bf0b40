#include "sgt/spectral.hpp"

#include <cmath>
#include <numeric>

namespace sgt {

SymMatrix adjacency_matrix(const SignedGraph& g) {
    SymMatrix m(g.order());
    for (const auto& e : g.edges()) {
        m.at(e.u, e.v) = e.sign;
        m.at(e.v, e.u) = e.sign;
    }
    return m;
}

namespace {

double off_diagonal_frobenius(const SymMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j) s += m.at(i, j) * m.at(i, j);
    return std::sqrt(2.0 * s);
}

double frobenius(const SymMatrix& m) {
    double s = 0.0;
    for (double x : m.a) s += x * x;
    return std::sqrt(s);
}

// One full cyclic sweep of Jacobi rotations; updates V's columns when given.
void jacobi_sweep(SymMatrix& m, std::vector<double>* V) {
    const int n = m.n;
    for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
            double apq = m.at(p, q);
            if (apq == 0.0) continue;
            double theta = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
            double t = (theta >= 0.0 ? 1.0 : -1.0) /
                       (std::abs(theta) + std::sqrt(theta * theta + 1.0));
            double c = 1.0 / std::sqrt(t * t + 1.0);
            double s = t * c;
            double tau = s / (1.0 + c);
            double app = m.at(p, p), aqq = m.at(q, q);
            m.at(p, p) = app - t * apq;
            m.at(q, q) = aqq + t * apq;
            m.at(p, q) = m.at(q, p) = 0.0;
            for (int k = 0; k < n; ++k) {
                if (k == p || k == q) continue;
                double akp = m.at(k, p), akq = m.at(k, q);
                m.at(k, p) = m.at(p, k) = akp - s * (akq + tau * akp);
                m.at(k, q) = m.at(q, k) = akq + s * (akp - tau * akq);
            }
            if (V) {
                for (int k = 0; k < n; ++k) {
                    double vkp = (*V)[size_t(k) * n + p];
                    double vkq = (*V)[size_t(k) * n + q];
                    (*V)[size_t(k) * n + p] = vkp - s * (vkq + tau * vkp);
                    (*V)[size_t(k) * n + q] = vkq + s * (vkp - tau * vkq);
                }
            }
        }
    }
}

void jacobi_diagonalize(SymMatrix& m, std::vector<double>* V) {
    const double target = 1e-12 * frobenius(m);
    for (int sweep = 0; sweep < 64; ++sweep) {
        if (off_diagonal_frobenius(m) <= target) break;
        jacobi_sweep(m, V);
    }
}

std::vector<int> descending_order(const std::vector<double>& vals) {
    std::vector<int> idx(vals.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return vals[a] > vals[b]; });
    return idx;
}

}  // namespace

std::vector<double> jacobi_eigenvalues(SymMatrix m) {
    jacobi_diagonalize(m, nullptr);
    std::vector<double> vals(m.n);
    for (int i = 0; i < m.n; ++i) vals[i] = m.at(i, i);
    std::sort(vals.begin(), vals.end(), std::greater<>());
    return vals;
}

EigenSystem jacobi_eigensystem(SymMatrix m) {
    const int n = m.n;
    std::vector<double> V(size_t(n) * n, 0.0);
    for (int i = 0; i < n; ++i) V[size_t(i) * n + i] = 1.0;
    jacobi_diagonalize(m, &V);
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = m.at(i, i);
    auto order = descending_order(vals);
    EigenSystem es;
    es.values.resize(n);
    es.vectors.assign(n, std::vector<double>(n));
    for (int k = 0; k < n; ++k) {
        es.values[k] = vals[order[k]];
        for (int i = 0; i < n; ++i)
            es.vectors[k][i] = V[size_t(i) * n + order[k]];
    }
    return es;
}

Spectrum eigenvalues(const SignedGraph& g) {
    Spectrum s;
    s.values = jacobi_eigenvalues(adjacency_matrix(g));
    return s;
}

double lambda1(const SignedGraph& g) { return eigenvalues(g).index(); }

double spectral_radius(const SignedGraph& g) { return eigenvalues(g).radius(); }

NotEquitable::NotEquitable(int from, int to, int va, int vb, long long sa,
                           long long sb)
    : std::runtime_error(
          "partition not equitable: vertices " + std::to_string(va) + " and " +
          std::to_string(vb) + " of cell " + std::to_string(from) +
          " have signed sums " + std::to_string(sa) + " vs " +
          std::to_string(sb) + " into cell " + std::to_string(to)),
      cell_from(from),
      cell_to(to),
      vertex_a(va),
      vertex_b(vb),
      sum_a(sa),
      sum_b(sb) {}

namespace {

void validate_partition(int n, const VertexPartition& p) {
    std::vector<char> seen(n, 0);
    int covered = 0;
    for (const auto& cell : p) {
        if (cell.empty())
            throw std::invalid_argument("partition cell must be non-empty");
        for (int v : cell) {
            if (v < 0 || v >= n)
                throw std::out_of_range("partition vertex out of range");
            if (seen[v])
                throw std::invalid_argument("partition cells must be disjoint");
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != n)
        throw std::invalid_argument("partition must cover all vertices");
}

}  // namespace

QuotientMatrix equitable_quotient(const SignedGraph& g,
                                  const VertexPartition& p) {
    validate_partition(g.order(), p);
    const int k = static_cast<int>(p.size());
    std::vector<int> cell_of(g.order(), -1);
    for (int i = 0; i < k; ++i)
        for (int v : p[i]) cell_of[v] = i;

    QuotientMatrix q;
    q.b.assign(k, std::vector<long long>(k, 0));
    q.cell_sizes.resize(k);
    for (int i = 0; i < k; ++i) q.cell_sizes[i] = static_cast<int>(p[i].size());

    for (int i = 0; i < k; ++i) {
        // Signed row sums of the first cell-i vertex into every cell.
        std::vector<long long> ref(k, 0), row(k, 0);
        for (size_t vi = 0; vi < p[i].size(); ++vi) {
            int v = p[i][vi];
            std::fill(row.begin(), row.end(), 0);
            for (auto [w, s] : g.neighbors()[v]) row[cell_of[w]] += s;
            if (vi == 0) {
                ref = row;
            } else {
                for (int j = 0; j < k; ++j)
                    if (row[j] != ref[j])
                        throw NotEquitable(i, j, p[i][0], v, ref[j], row[j]);
            }
        }
        q.b[i] = ref;
    }
    return q;
}

std::vector<double> quotient_eigenvalues(const QuotientMatrix& q) {
    const int k = q.dim();
    SymMatrix b(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            // D^{1/2} Q D^{-1/2} is symmetric because n_i q_ij = n_j q_ji.
            double scaled = double(q.b[i][j]) *
                            std::sqrt(double(q.cell_sizes[i]) /
                                      double(q.cell_sizes[j]));
            if (j > i) {
                b.at(i, j) = scaled;
            } else if (j == i) {
                b.at(i, i) = scaled;
            } else {
                // Use the average against the mirrored entry to kill the
                // last-bit asymmetry of floating sqrt.
                b.at(i, j) = b.at(j, i) =
                    0.5 * (scaled + b.at(j, i));
            }
        }
    return jacobi_eigenvalues(b);
}

ContainmentReport quotient_containment(const SignedGraph& g,
                                       const QuotientMatrix& q, double tol) {
    ContainmentReport rep;
    rep.tolerance = tol;
    auto gvals = eigenvalues(g).values;
    auto qvals = quotient_eigenvalues(q);
    std::vector<char> used(gvals.size(), 0);
    rep.contained = true;
    for (double qv : qvals) {
        int best = -1;
        double best_gap = 0.0;
        for (size_t i = 0; i < gvals.size(); ++i) {
            if (used[i]) continue;
            double gap = std::abs(gvals[i] - qv);
            if (best < 0 || gap < best_gap) {
                best = static_cast<int>(i);
                best_gap = gap;
            }
        }
        if (best < 0) {
            rep.contained = false;
            break;
        }
        used[best] = 1;
        rep.matches.push_back({qv, gvals[best], best_gap});
        rep.max_gap = std::max(rep.max_gap, best_gap);
        if (best_gap > tol) rep.contained = false;
    }
    return rep;
}

bool quotient_containment_check(const SignedGraph& g, const QuotientMatrix& q,
                                double tol) {
    return quotient_containment(g, q, tol).contained;
}

SymMatrix block_shift_residual(const SignedGraph& g, const VertexPartition& p,
                               const std::vector<std::vector<double>>& c) {
    validate_partition(g.order(), p);
    if (c.size() != p.size())
        throw std::invalid_argument("block pattern size mismatch");
    for (const auto& row : c)
        if (row.size() != p.size())
            throw std::invalid_argument("block pattern must be square");
    std::vector<int> cell_of(g.order(), -1);
    for (size_t i = 0; i < p.size(); ++i)
        for (int v : p[i]) cell_of[v] = static_cast<int>(i);
    SymMatrix r = adjacency_matrix(g);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            r.at(u, v) -= c[cell_of[u]][cell_of[v]];
    return r;
}

DegenerateEigenvector::DegenerateEigenvector(double res)
    : std::runtime_error(
          "switched top eigenvector failed verification, residual " +
          std::to_string(res)),
      residual(res) {}

NonnegForm nonneg_eigenvector_form(const SignedGraph& g) {
    NonnegForm out;
    const int n = g.order();
    if (n == 0) {
        out.graph = g;
        return out;
    }
    auto es = jacobi_eigensystem(adjacency_matrix(g));
    out.lambda1 = es.values[0];
    std::vector<double> x = es.vectors[0];
    for (int i = 0; i < n; ++i)
        if (x[i] < 0.0) out.switch_set.push_back(i);
    out.graph = switched(g, out.switch_set);
    out.eigenvector.resize(n);
    for (int i = 0; i < n; ++i) out.eigenvector[i] = std::abs(x[i]);
    // D A D (D x) = lambda1 (D x) exactly; verify numerically anyway.
    auto a = adjacency_matrix(out.graph);
    double residual = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = -out.lambda1 * out.eigenvector[i];
        for (int j = 0; j < n; ++j) r += a.at(i, j) * out.eigenvector[j];
        residual = std::max(residual, std::abs(r));
    }
    if (residual > 1e-8 * std::max(1.0, std::abs(out.lambda1)))
        throw DegenerateEigenvector(residual);
    return out;
}

}  // namespace sgt
