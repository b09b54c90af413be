#pragma once

#include <numeric>
#include <optional>
#include <string>

#include "cspec/poly.hpp"

namespace cspec {

/// x^k - x^m - 1, for k > m > 0.
inline IntPolynomial trinomial(int k, int m) {
    if (!(k > m && m > 0)) throw input_error("trinomial: need k > m > 0");
    IntPolynomial p = IntPolynomial::monomial(1, k);
    p -= IntPolynomial::monomial(1, m);
    p -= IntPolynomial::constant(1);
    return p;
}

/// x^2 - x + 1, the cyclotomic factor that can split x^k - x^m - 1.
inline IntPolynomial sixth_cyclotomic() { return IntPolynomial{1, -1, 1}; }

/// Factorization outcome for x^k - x^m - 1. The trinomial is irreducible
/// except when k1 + m1 = 0 (mod 3) and m1 = 0 (mod 2) after dividing out
/// d = gcd(k, m); in the reducible case it splits as h(x^d) * cofactor with
/// the cofactor irreducible.
struct TrinomialFactorization {
    int k = 0;
    int m = 0;
    int d = 1;
    int k1 = 0;
    int m1 = 0;
    bool reducible = false;
    std::optional<IntPolynomial> cofactor; // present iff reducible
};

inline TrinomialFactorization factor_trinomial(int k, int m) {
    if (!(k > m && m > 0)) throw input_error("factor_trinomial: need k > m > 0");
    TrinomialFactorization out;
    out.k = k;
    out.m = m;
    out.d = std::gcd(k, m);
    out.k1 = k / out.d;
    out.m1 = m / out.d;
    out.reducible = ((out.k1 + out.m1) % 3 == 0) && (out.m1 % 2 == 0);
    if (out.reducible) {
        IntPolynomial cof = exact_divide(trinomial(k, m), sixth_cyclotomic().compose_power(out.d));
        // low-order shape check: cofactor = -x^d - 1 (mod x^(2d))
        for (int i = 0; i < 2 * out.d; ++i) {
            BigInt expect = (i == 0 || i == out.d) ? BigInt(-1) : BigInt(0);
            if (cof.coeff(i) != expect)
                throw algebra_error("factor_trinomial: cofactor shape violated for k=" + std::to_string(k) + " m=" + std::to_string(m));
        }
        out.cofactor = std::move(cof);
    }
    return out;
}

/// Monic irreducible polynomial (over Q) of the unique positive real root of
/// x^n - x^b - x^a, for n > b >= a >= 0. Cases: a == b gives x^(n-a) - 2;
/// otherwise the trinomial x^(n-a) - x^(b-a) - 1 or, when that is reducible,
/// its cofactor.
inline IntPolynomial min_poly_perron(int n, int a, int b) {
    if (!(n > b && b >= a && a >= 0)) throw input_error("min_poly_perron: need n > b >= a >= 0");
    IntPolynomial result;
    if (a == b) {
        result = IntPolynomial::monomial(1, n - a) - IntPolynomial::constant(2);
    } else {
        TrinomialFactorization f = factor_trinomial(n - a, b - a);
        result = f.reducible ? *f.cofactor : trinomial(n - a, b - a);
    }
    // The root is certified without a Sturm pass: the full polynomial
    // x^n - x^b - x^a has one coefficient sign change, hence at most one
    // positive root, and its value at 1 is negative, so exactly one real
    // root above 1 exists; the reducible case removes only the real-root-free
    // factor h(x^d) > 0.
    IntPolynomial full = IntPolynomial::monomial(1, n) - IntPolynomial::monomial(1, b) - IntPolynomial::monomial(1, a);
    IntPolynomial quotient = exact_divide(full, result); // throws if the divisibility postcondition fails
    (void)quotient;
    if (result.sign_at(BigRat(1)) >= 0) throw algebra_error("min_poly_perron: sign certificate failed");
    return result;
}

/// Exact equality test for the unique real roots > 1 of p and q.
/// Precondition (checked): each polynomial has exactly one real root in
/// (1, cauchy_bound]; violations raise contract_error naming the offender.
inline bool perron_roots_equal(const IntPolynomial& p, const IntPolynomial& q) {
    auto check_unique = [](const IntPolynomial& f, const char* name) -> BigRat {
        BigRat bound = cauchy_bound(f);
        if (sturm_count(f, RationalInterval(BigRat(1), bound)) != 1)
            throw contract_error(std::string("perron_roots_equal: ") + name + " = " + f.to_string() + " lacks a unique real root above 1");
        return bound;
    };
    BigRat bp = check_unique(p, "first polynomial");
    BigRat bq = check_unique(q, "second polynomial");
    IntPolynomial g = primitive_gcd(p, q);
    if (g.degree() < 1) return false;
    return sturm_count(g, RationalInterval(BigRat(1), std::max(bp, bq))) >= 1;
}

} // namespace cspec
