#pragma once

// Closed-form eigenvalue bounds for signed graphs, plus an auditor that
// evaluates every bound against a concrete graph and reports which ones
// apply, what they promise, and how much slack is left.

#include <string>
#include <vector>

#include "sgt/signed_graph.hpp"

namespace sgt {

// Largest spectral radius a connected unbalanced signed graph with no
// unbalanced triangle can have: (sqrt(n^2 - 8) + n - 4) / 2.
// Requires n >= 3.
double bound_k3_free(int n);

// Largest spectral radius an unbalanced signed graph on n >= 6 vertices with
// no unbalanced four-clique can have: n - 2.  The closed form is defined for
// any n >= 4, but the inequality itself fails on small graphs (see audit),
// so the auditor only applies it from n = 6 on.
double bound_k4_free(int n);

// Frustration bound on the index of a connected signed graph:
// lambda_1 <= sqrt(2(m - eps) - n + 1).  When the radicand is negative the
// bound is vacuous and 0 is returned (no connected graph has a positive
// index in that regime).  Requires n >= 1, m >= 0, 0 <= eps <= m.
double bound_frustration(int n, int m, int eps);

// Wilf-style bound via the clique number of the underlying graph:
// lambda_1 <= n (1 - 1/omega).  Requires n >= 1 and 1 <= omega <= n.
double bound_wilf(int n, int omega);

// Same shape with the balanced clique number:
// lambda_1 <= n (1 - 1/omega_b).  Requires n >= 1 and 1 <= omega_b <= n.
double bound_balanced_clique(int n, int omega_b);

// One audited bound: whether it applies to the graph at hand, the value it
// promises, the measured quantity it constrains, and the slack between them.
struct BoundResult {
    std::string name;      // stable identifier, e.g. "k3-free"
    bool applicable = false;
    std::string reason;    // why it does or does not apply
    double bound = 0.0;    // promised upper bound (0 when not applicable)
    double actual = 0.0;   // measured quantity (rho or lambda_1)
    bool satisfied = true; // actual <= bound + tolerance; true when vacuous
    double slack = 0.0;    // bound - actual (0 when not applicable)
};

// Evaluates every bound against g.  Applicability rules:
//   k3-free         connected, unbalanced, no unbalanced triangle  (rho)
//   k4-free         unbalanced, no unbalanced K4, n >= 6           (rho)
//   frustration     connected                                      (lambda_1)
//   wilf            always                                         (lambda_1)
//   balanced-clique always                                         (lambda_1)
// Results come back in that order.
std::vector<BoundResult> audit(const SignedGraph& g);

}  // namespace sgt
