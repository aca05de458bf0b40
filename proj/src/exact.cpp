#include "sgt/exact.hpp"

#include <algorithm>
#include <sstream>

namespace sgt {

void IntPolynomial::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPolynomial make_poly(std::vector<long long> ascending) {
    IntPolynomial p;
    p.c.assign(ascending.begin(), ascending.end());
    p.normalize();
    return p;
}

std::string poly_to_string(const IntPolynomial& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = p.degree(); d >= 0; --d) {
        const BigInt& c = p.c[d];
        if (c == 0) continue;
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (d == 0 || a != 1) out << a.str();
        if (d > 0) {
            out << var;
            if (d > 1) out << "^" << d;
        }
    }
    return out.str();
}

IntPolynomial char_poly_of_bigint(const std::vector<std::vector<BigInt>>& m) {
    const int n = static_cast<int>(m.size());
    if (n > 64) throw SizeLimit("char_poly supports dimension <= 64");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("char_poly needs a square matrix");
    IntPolynomial p;
    p.c.assign(n + 1, BigInt(0));
    p.c[n] = 1;
    if (n == 0) {
        p.normalize();
        return p;
    }
    // Faddeev-LeVerrier: B <- A(B + c_{n-k+1} I), c_{n-k} = -tr(B)/k.
    std::vector<std::vector<BigInt>> b(n, std::vector<BigInt>(n, BigInt(0)));
    for (int i = 0; i < n; ++i) b[i][i] = 1;  // B0 = I
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<BigInt>> ab(n,
                                            std::vector<BigInt>(n, BigInt(0)));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (m[i][l] == 0) continue;
                for (int j = 0; j < n; ++j) ab[i][j] += m[i][l] * b[l][j];
            }
        BigInt tr = 0;
        for (int i = 0; i < n; ++i) tr += ab[i][i];
        BigInt ck = -tr / k;  // exact by the recurrence
        p.c[n - k] = ck;
        b = std::move(ab);
        for (int i = 0; i < n; ++i) b[i][i] += ck;
    }
    return p;
}

IntPolynomial char_poly(const std::vector<std::vector<long long>>& m) {
    std::vector<std::vector<BigInt>> big(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        big[i].assign(m[i].begin(), m[i].end());
    return char_poly_of_bigint(big);
}

IntPolynomial char_poly(const SignedGraph& g) {
    const int n = g.order();
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
    for (const auto& e : g.edges()) {
        a[e.u][e.v] = e.sign;
        a[e.v][e.u] = e.sign;
    }
    return char_poly(a);
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial{};
    IntPolynomial r;
    r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.normalize();
    return r;
}

BigRat evaluate(const IntPolynomial& p, const BigRat& x) {
    BigRat acc = 0;
    for (int d = p.degree(); d >= 0; --d) acc = acc * x + BigRat(p.c[d]);
    return acc;
}

BigInt evaluate_int(const IntPolynomial& p, const BigInt& x) {
    BigInt acc = 0;
    for (int d = p.degree(); d >= 0; --d) acc = acc * x + p.c[d];
    return acc;
}

int sign_at(const IntPolynomial& p, const BigRat& x) {
    BigRat v = evaluate(p, x);
    return v == 0 ? 0 : (v < 0 ? -1 : +1);
}

namespace {

// Dense rational polynomial, ascending coefficients, used internally for
// squarefree decomposition and Sturm sequences.
struct RatPoly {
    std::vector<BigRat> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

RatPoly from_int(const IntPolynomial& p) {
    RatPoly r;
    r.c.assign(p.c.begin(), p.c.end());
    return r;
}

RatPoly derivative(const RatPoly& p) {
    RatPoly d;
    for (int i = 1; i <= p.degree(); ++i) d.c.push_back(p.c[i] * i);
    d.normalize();
    return d;
}

BigRat eval(const RatPoly& p, const BigRat& x) {
    BigRat acc = 0;
    for (int d = p.degree(); d >= 0; --d) acc = acc * x + p.c[d];
    return acc;
}

// Remainder of a by b (b nonzero); also computes the quotient.
RatPoly divmod(RatPoly a, const RatPoly& b, RatPoly* quot = nullptr) {
    RatPoly q;
    q.c.assign(std::max(0, a.degree() - b.degree() + 1), BigRat(0));
    const BigRat lead = b.c.back();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        BigRat f = a.c.back() / lead;
        int shift = a.degree() - b.degree();
        q.c[shift] = f;
        for (int i = 0; i <= b.degree(); ++i) a.c[shift + i] -= f * b.c[i];
        a.normalize();
    }
    if (quot) {
        q.normalize();
        *quot = std::move(q);
    }
    return a;
}

RatPoly divide_exact(const RatPoly& a, const RatPoly& b) {
    RatPoly q;
    RatPoly r = divmod(a, b, &q);
    if (!r.is_zero())
        throw std::logic_error("polynomial division expected to be exact");
    return q;
}

void make_monic(RatPoly& p) {
    if (p.is_zero()) return;
    BigRat lead = p.c.back();
    for (auto& x : p.c) x /= lead;
}

RatPoly gcd(RatPoly a, RatPoly b) {
    a.normalize();
    b.normalize();
    while (!b.is_zero()) {
        RatPoly r = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        make_monic(b);
    }
    make_monic(a);
    return a;
}

RatPoly subtract(const RatPoly& a, const RatPoly& b) {
    RatPoly r = a;
    if (static_cast<int>(r.c.size()) < static_cast<int>(b.c.size()))
        r.c.resize(b.c.size(), BigRat(0));
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.normalize();
    return r;
}

// Yun's squarefree decomposition: returns (factor, multiplicity) pairs with
// pairwise-coprime squarefree factors of degree >= 1.
std::vector<std::pair<RatPoly, int>> squarefree_decompose(RatPoly p) {
    make_monic(p);
    std::vector<std::pair<RatPoly, int>> out;
    if (p.degree() < 1) return out;
    RatPoly dp = derivative(p);
    RatPoly g = gcd(p, dp);
    if (g.degree() == 0) {
        out.emplace_back(p, 1);
        return out;
    }
    RatPoly w = divide_exact(p, g);
    RatPoly y = divide_exact(dp, g);
    RatPoly z = subtract(y, derivative(w));
    int i = 1;
    while (w.degree() > 0) {
        RatPoly f = gcd(w, z);
        if (f.degree() > 0) out.emplace_back(f, i);
        w = divide_exact(w, f);
        y = divide_exact(z, f);
        z = subtract(y, derivative(w));
        ++i;
    }
    return out;
}

// Sturm chain of a squarefree polynomial.
std::vector<RatPoly> sturm_chain(const RatPoly& q) {
    std::vector<RatPoly> chain;
    chain.push_back(q);
    RatPoly d = derivative(q);
    if (!d.is_zero()) chain.push_back(d);
    while (chain.back().degree() > 0) {
        RatPoly r = divmod(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;  // cannot happen for squarefree input
        for (auto& x : r.c) x = -x;
        // Scale by a positive constant to keep the numbers modest.
        BigRat lead = r.c.back();
        if (lead < 0) lead = -lead;
        for (auto& x : r.c) x /= lead;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const BigRat& x) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        BigRat v = eval(p, x);
        int s = v == 0 ? 0 : (v < 0 ? -1 : +1);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Number of roots of the (squarefree) chain's polynomial in (lo, hi].
int roots_in(const std::vector<RatPoly>& chain, const BigRat& lo,
             const BigRat& hi) {
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

BigRat cauchy_bound(const RatPoly& p) {
    BigRat lead = p.c.back();
    if (lead < 0) lead = -lead;
    BigRat maxc = 0;
    for (int i = 0; i < p.degree(); ++i) {
        BigRat a = p.c[i] < 0 ? BigRat(-p.c[i]) : p.c[i];
        if (a > maxc) maxc = a;
    }
    return BigRat(1) + maxc / lead;
}

void isolate_roots(const RatPoly& q, int multiplicity,
                   std::vector<RealRoot>& out) {
    if (q.degree() < 1) return;
    auto chain = sturm_chain(q);
    BigRat bound = cauchy_bound(q);
    const BigRat width = BigRat(1, BigInt("10000000000000"));  // 1e-13
    struct Span {
        BigRat lo, hi;
        int count;
    };
    std::vector<Span> stack;
    int total = roots_in(chain, -bound, bound);
    if (total > 0) stack.push_back({-bound, bound, total});
    while (!stack.empty()) {
        Span s = stack.back();
        stack.pop_back();
        if (s.count == 1) {
            BigRat lo = s.lo, hi = s.hi;
            while (hi - lo > width) {
                BigRat mid = (lo + hi) / 2;
                if (roots_in(chain, lo, mid) == 1)
                    hi = mid;
                else
                    lo = mid;
            }
            RealRoot r;
            r.lo = lo;
            r.hi = hi;
            r.multiplicity = multiplicity;
            r.value = static_cast<double>((lo + hi) / 2);
            out.push_back(std::move(r));
        } else {
            BigRat mid = (s.lo + s.hi) / 2;
            int left = roots_in(chain, s.lo, mid);
            int right = s.count - left;
            if (left > 0) stack.push_back({s.lo, mid, left});
            if (right > 0) stack.push_back({mid, s.hi, right});
        }
    }
}

}  // namespace

std::vector<RealRoot> real_roots(const IntPolynomial& p) {
    if (p.is_zero())
        throw std::invalid_argument("the zero polynomial has no root set");
    std::vector<RealRoot> out;
    if (p.degree() < 1) return out;
    for (auto& [factor, mult] : squarefree_decompose(from_int(p)))
        isolate_roots(factor, mult, out);
    std::sort(out.begin(), out.end(),
              [](const RealRoot& a, const RealRoot& b) {
                  return a.lo < b.lo;
              });
    return out;
}

RealRoot largest_real_root(const IntPolynomial& p) {
    auto roots = real_roots(p);
    if (roots.empty())
        throw std::invalid_argument("polynomial has no real root");
    return roots.back();
}

}  // namespace sgt
