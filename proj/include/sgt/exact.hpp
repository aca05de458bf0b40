#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sgt/signed_graph.hpp"

namespace sgt {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Integer-coefficient polynomial, coefficients in ascending degree order.
// Normalized: no trailing zero coefficient except for the zero polynomial,
// which is represented by an empty coefficient vector.
struct IntPolynomial {
    std::vector<BigInt> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void normalize();

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) =
        default;
};

IntPolynomial make_poly(std::vector<long long> ascending);
std::string poly_to_string(const IntPolynomial& p,
                           const std::string& var = "x");

// Exact characteristic polynomial det(xI - M) of an integer square matrix
// via the Faddeev-LeVerrier recurrence in arbitrary-precision integers.
// Monic; dimension <= 64 (SizeLimit).
IntPolynomial char_poly(const std::vector<std::vector<long long>>& m);

// Characteristic polynomial of the signed adjacency matrix.
IntPolynomial char_poly(const SignedGraph& g);

IntPolynomial char_poly_of_bigint(const std::vector<std::vector<BigInt>>& m);

// Polynomial product (exact convolution).
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

// Exact evaluation (Horner).
BigRat evaluate(const IntPolynomial& p, const BigRat& x);
BigInt evaluate_int(const IntPolynomial& p, const BigInt& x);

// Sign of p at a rational point: -1, 0, +1.
int sign_at(const IntPolynomial& p, const BigRat& x);

// One real root of p: a double approximation (isolating-interval midpoint,
// interval width <= 1e-13), its multiplicity, and the exact bracket.
struct RealRoot {
    double value = 0.0;
    int multiplicity = 1;
    BigRat lo, hi;
};

// All real roots of a nonzero polynomial, ascending, with multiplicities
// (squarefree decomposition by Yun's algorithm + Sturm-sequence isolation +
// rational bisection).
std::vector<RealRoot> real_roots(const IntPolynomial& p);

// Largest real root; throws std::invalid_argument if p has none.
RealRoot largest_real_root(const IntPolynomial& p);

}  // namespace sgt
