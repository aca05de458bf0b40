#include "sgt/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "sgt/spectral.hpp"
#include "sgt/subgraphs.hpp"

namespace sgt {

double bound_k3_free(int n) {
    if (n < 3) throw std::invalid_argument("bound_k3_free: n must be >= 3");
    double nn = static_cast<double>(n);
    return (std::sqrt(nn * nn - 8.0) + nn - 4.0) / 2.0;
}

double bound_k4_free(int n) {
    if (n < 4) throw std::invalid_argument("bound_k4_free: n must be >= 4");
    return static_cast<double>(n) - 2.0;
}

double bound_frustration(int n, int m, int eps) {
    if (n < 1) throw std::invalid_argument("bound_frustration: n must be >= 1");
    if (m < 0) throw std::invalid_argument("bound_frustration: m must be >= 0");
    if (eps < 0 || eps > m)
        throw std::invalid_argument("bound_frustration: eps must lie in [0, m]");
    double radicand = 2.0 * (m - eps) - n + 1.0;
    if (radicand < 0.0) return 0.0;
    return std::sqrt(radicand);
}

double bound_wilf(int n, int omega) {
    if (n < 1) throw std::invalid_argument("bound_wilf: n must be >= 1");
    if (omega < 1 || omega > n)
        throw std::invalid_argument("bound_wilf: omega must lie in [1, n]");
    return n * (1.0 - 1.0 / static_cast<double>(omega));
}

double bound_balanced_clique(int n, int omega_b) {
    if (n < 1) throw std::invalid_argument("bound_balanced_clique: n must be >= 1");
    if (omega_b < 1 || omega_b > n)
        throw std::invalid_argument("bound_balanced_clique: omega_b must lie in [1, n]");
    return n * (1.0 - 1.0 / static_cast<double>(omega_b));
}

namespace {

constexpr double kTol = 1e-9;

BoundResult make_result(std::string name, bool applicable, std::string reason,
                        double bound, double actual) {
    BoundResult r;
    r.name = std::move(name);
    r.applicable = applicable;
    r.reason = std::move(reason);
    if (applicable) {
        r.bound = bound;
        r.actual = actual;
        r.satisfied = actual <= bound + kTol;
        r.slack = bound - actual;
    }
    return r;
}

BoundResult not_applicable(std::string name, std::string reason) {
    return make_result(std::move(name), false, std::move(reason), 0.0, 0.0);
}

}  // namespace

std::vector<BoundResult> audit(const SignedGraph& g) {
    const int n = g.order();
    std::vector<BoundResult> out;
    out.reserve(5);

    Spectrum spec = eigenvalues(g);
    const double rho = spec.radius();
    const double l1 = spec.index();

    const bool connected = is_connected(g);
    const bool balanced = is_balanced(g);

    // k3-free: connected unbalanced graphs with no unbalanced triangle.
    {
        if (!connected) {
            out.push_back(not_applicable("k3-free", "graph is disconnected"));
        } else if (balanced) {
            out.push_back(not_applicable("k3-free", "graph is balanced"));
        } else if (n < 3) {
            out.push_back(not_applicable("k3-free", "needs n >= 3"));
        } else if (contains_unbalanced_clique(g, 3)) {
            out.push_back(
                not_applicable("k3-free", "contains an unbalanced triangle"));
        } else {
            out.push_back(make_result("k3-free", true,
                                      "connected, unbalanced, no unbalanced triangle",
                                      bound_k3_free(n), rho));
        }
    }

    // k4-free: unbalanced graphs with no unbalanced K4, from n = 6 on.
    // Small unbalanced graphs genuinely exceed n - 2 (already at n = 4 and 5),
    // so the bound is only claimed for n >= 6.
    {
        if (balanced) {
            out.push_back(not_applicable("k4-free", "graph is balanced"));
        } else if (n < 6) {
            out.push_back(not_applicable("k4-free", "needs n >= 6"));
        } else if (contains_unbalanced_clique(g, 4)) {
            out.push_back(
                not_applicable("k4-free", "contains an unbalanced four-clique"));
        } else {
            out.push_back(make_result("k4-free", true,
                                      "unbalanced, no unbalanced four-clique, n >= 6",
                                      bound_k4_free(n), rho));
        }
    }

    // frustration: connected graphs only; a disconnected graph can beat it.
    {
        if (!connected) {
            out.push_back(not_applicable("frustration", "graph is disconnected"));
        } else {
            int eps = frustration_index(g);
            out.push_back(make_result(
                "frustration", true, "connected",
                bound_frustration(n, g.size(), eps), l1));
        }
    }

    // wilf: always applies (omega >= 1 since n >= 1).
    {
        if (n < 1) {
            out.push_back(not_applicable("wilf", "empty graph"));
        } else {
            int omega = clique_number(g);
            out.push_back(make_result("wilf", true, "always applies",
                                      bound_wilf(n, omega), l1));
        }
    }

    // balanced-clique: always applies (a single vertex is a balanced clique).
    {
        if (n < 1) {
            out.push_back(not_applicable("balanced-clique", "empty graph"));
        } else {
            int omega_b = balanced_clique_number(g);
            out.push_back(make_result("balanced-clique", true, "always applies",
                                      bound_balanced_clique(n, omega_b), l1));
        }
    }

    return out;
}

}  // namespace sgt
