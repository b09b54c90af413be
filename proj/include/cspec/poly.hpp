#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cspec/errors.hpp"
#include "cspec/numeric.hpp"

namespace cspec {

/// Exact rational interval, lo <= hi. A point interval (lo == hi) is treated
/// as the closed singleton; a proper interval follows the half-open (lo, hi]
/// convention used by the root counters below.
struct RationalInterval {
    BigRat lo;
    BigRat hi;

    RationalInterval() = default;
    RationalInterval(BigRat l, BigRat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw input_error("RationalInterval: lo > hi");
    }

    BigRat width() const { return hi - lo; }
    BigRat midpoint() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }

    bool operator==(const RationalInterval& o) const { return lo == o.lo && hi == o.hi; }
};

/// Dense univariate polynomial over arbitrary-precision integers,
/// coefficients stored lowest degree first. The zero polynomial has an
/// empty coefficient vector and degree() == -1.
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    IntPolynomial(std::initializer_list<int> coeffs) {
        c_.reserve(coeffs.size());
        for (int v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPolynomial zero() { return IntPolynomial(); }

    static IntPolynomial constant(BigInt v) {
        IntPolynomial p;
        if (v != 0) p.c_.push_back(std::move(v));
        return p;
    }

    /// c * x^k
    static IntPolynomial monomial(BigInt c, int k) {
        IntPolynomial p;
        if (c != 0) {
            p.c_.assign(static_cast<size_t>(k) + 1, BigInt(0));
            p.c_.back() = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const BigInt& leading() const {
        if (is_zero()) throw algebra_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    /// Coefficient of x^i (zero beyond the stored range).
    const BigInt& coeff(int i) const {
        static const BigInt kZero = 0;
        if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
        return c_[static_cast<size_t>(i)];
    }

    const std::vector<BigInt>& coeffs() const { return c_; }

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }
    bool operator<(const IntPolynomial& o) const { return c_ < o.c_; }

    IntPolynomial operator-() const {
        IntPolynomial r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] != 0) r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return IntPolynomial(std::move(r));
    }

    friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) {
        if (s == 0) return {};
        for (auto& v : a.c_) v *= s;
        return a;
    }

    /// Substitute x -> x^d.
    IntPolynomial compose_power(int d) const {
        if (d <= 0) throw input_error("compose_power: d must be positive");
        if (is_zero()) return {};
        std::vector<BigInt> r(static_cast<size_t>(degree()) * d + 1, BigInt(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i * static_cast<size_t>(d)] = c_[i];
        return IntPolynomial(std::move(r));
    }

    IntPolynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<BigInt> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
        return IntPolynomial(std::move(r));
    }

    /// Exact value p(x) as a rational.
    BigRat evaluate(const BigRat& x) const {
        BigRat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRat(*it);
        return acc;
    }

    /// Sign of p(num/den), den > 0, using integer-only Horner:
    /// sign(sum c_i num^i den^(deg-i)).
    int sign_at(const BigRat& x) const {
        if (is_zero()) return 0;
        const BigInt& num = numerator(x);
        const BigInt& den = denominator(x);
        BigInt acc = c_.back();
        BigInt den_pow = 1;
        for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) {
            den_pow *= den;
            acc = acc * num + *it * den_pow;
        }
        return acc.sign();
    }

    /// gcd of all coefficients (0 for the zero polynomial), always >= 0.
    BigInt content() const {
        BigInt g = 0;
        for (const auto& v : c_) {
            g = gcd(g, v);
            if (g == 1) break;
        }
        return g;
    }

    /// p / content(p), sign-normalized so the leading coefficient is positive.
    IntPolynomial primitive_part() const {
        if (is_zero()) return {};
        BigInt g = content();
        if (c_.back() < 0) g = -g;
        IntPolynomial r = *this;
        for (auto& v : r.c_) v /= g;
        return r;
    }

    /// p / content(p) with the sign of p preserved.
    IntPolynomial content_normalized() const {
        if (is_zero()) return {};
        BigInt g = content();
        IntPolynomial r = *this;
        for (auto& v : r.c_) v /= g;
        return r;
    }

    /// Human form, highest degree first: "x^5 - x^4 - 1".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const BigInt& ci = coeff(i);
            if (ci == 0) continue;
            BigInt a = abs(ci);
            if (out.empty()) {
                if (ci < 0) out += "-";
            } else {
                out += ci < 0 ? " - " : " + ";
            }
            if (a != 1 || i == 0) out += a.str();
            if (i > 0) {
                out += "x";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

/// Quotient of an exact division; throws algebra_error if b does not divide a
/// over the integers.
inline IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw input_error("exact_divide: division by zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw algebra_error("exact_divide: nonzero remainder (degree)");
    std::vector<BigInt> rem(a.coeffs());
    std::vector<BigInt> q(static_cast<size_t>(a.degree() - b.degree()) + 1, BigInt(0));
    const BigInt& lead = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        BigInt& top = rem[static_cast<size_t>(k + b.degree())];
        if (top % lead != 0) throw algebra_error("exact_divide: nonzero remainder (leading)");
        BigInt f = top / lead;
        if (f != 0) {
            for (int i = 0; i <= b.degree(); ++i) rem[static_cast<size_t>(k + i)] -= f * b.coeff(i);
        }
        q[static_cast<size_t>(k)] = std::move(f);
    }
    for (const auto& v : rem) {
        if (v != 0) throw algebra_error("exact_divide: nonzero remainder");
    }
    return IntPolynomial(std::move(q));
}

/// Pseudo-remainder: remainder of lc(b)^(deg a - deg b + 1) * a divided by b.
/// multiplier_sign (optional out) reports the sign of that scale factor.
inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b, int* multiplier_sign = nullptr) {
    if (b.is_zero()) throw input_error("pseudo_remainder: zero divisor");
    int delta = a.degree() - b.degree();
    if (delta < 0) {
        if (multiplier_sign) *multiplier_sign = 1;
        return a;
    }
    const BigInt& lead = b.leading();
    if (multiplier_sign) *multiplier_sign = (lead < 0 && (delta + 1) % 2 == 1) ? -1 : 1;
    std::vector<BigInt> rem(a.coeffs());
    int m = b.degree();
    for (int k = delta; k >= 0; --k) {
        BigInt top = rem[static_cast<size_t>(k + m)];
        for (auto& v : rem) v *= lead;
        for (int i = 0; i <= m; ++i) rem[static_cast<size_t>(k + i)] -= top * b.coeff(i);
    }
    rem.resize(static_cast<size_t>(m));
    return IntPolynomial(std::move(rem));
}

/// Primitive gcd via the subresultant pseudo-remainder sequence: primitive,
/// positive leading coefficient, divides both inputs, and every common
/// divisor divides it.
inline IntPolynomial primitive_gcd(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() && q.is_zero()) throw input_error("primitive_gcd: both inputs zero");
    if (p.is_zero()) return q.primitive_part();
    if (q.is_zero()) return p.primitive_part();
    IntPolynomial a = p.primitive_part();
    IntPolynomial b = q.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    BigInt g = 1;
    BigInt h = 1;
    while (true) {
        int delta = a.degree() - b.degree();
        IntPolynomial r = pseudo_remainder(a, b);
        if (r.is_zero()) return b.primitive_part();
        if (r.degree() == 0) return IntPolynomial::constant(1);
        // subresultant divisor g * h^delta keeps coefficient growth polynomial
        BigInt div = g * int_pow(h, static_cast<unsigned long>(delta));
        a = std::move(b);
        std::vector<BigInt> rc(r.coeffs());
        for (auto& v : rc) v /= div;
        b = IntPolynomial(std::move(rc));
        g = a.leading();
        if (delta >= 1) h = int_pow(g, static_cast<unsigned long>(delta)) / int_pow(h, static_cast<unsigned long>(delta - 1));
    }
}

/// p with repeated roots removed: primitive part of p / gcd(p, p').
inline IntPolynomial square_free_part(const IntPolynomial& p) {
    if (p.is_zero()) throw input_error("square_free_part: zero polynomial");
    if (p.degree() == 0) return IntPolynomial::constant(1);
    IntPolynomial g = primitive_gcd(p, p.derivative());
    if (g.degree() == 0) return p.primitive_part();
    return exact_divide(p.primitive_part(), g).primitive_part();
}

/// Number of sign changes in the nonzero coefficient sequence. Bounds the
/// number of positive roots (counted with multiplicity), matching its parity.
inline int descartes_sign_changes(const IntPolynomial& p) {
    if (p.is_zero()) throw input_error("descartes_sign_changes: zero polynomial");
    int changes = 0;
    int prev = 0;
    for (const auto& c : p.coeffs()) {
        int s = c.sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

/// Cauchy root bound 1 + max|c_i| / |c_deg| as an exact rational; every real
/// root of p lies in [-bound, bound].
inline BigRat cauchy_bound(const IntPolynomial& p) {
    if (p.is_zero()) throw input_error("cauchy_bound: zero polynomial");
    BigInt mx = 0;
    for (int i = 0; i < p.degree(); ++i) {
        BigInt a = abs(p.coeff(i));
        if (a > mx) mx = a;
    }
    return BigRat(1) + BigRat(mx, BigInt(abs(p.leading())));
}

/// Sturm chain of the square-free part of p. Pseudo-remainders are
/// sign-corrected so the chain is a positive rational multiple of the
/// classical one.
class SturmChain {
public:
    explicit SturmChain(const IntPolynomial& p) {
        IntPolynomial s0 = square_free_part(p);
        chain_.push_back(s0);
        if (s0.degree() >= 1) {
            chain_.push_back(s0.derivative().primitive_part());
            while (chain_.back().degree() >= 1) {
                const IntPolynomial& a = chain_[chain_.size() - 2];
                const IntPolynomial& b = chain_.back();
                int mult_sign = 1;
                IntPolynomial r = pseudo_remainder(a, b, &mult_sign);
                if (r.is_zero()) break; // cannot happen for square-free input
                if (mult_sign < 0) r = -r;
                chain_.push_back((-r).content_normalized());
            }
        }
    }

    /// Sign variations of the chain at x (zeros skipped).
    int variations_at(const BigRat& x) const {
        int count = 0;
        int prev = 0;
        for (const auto& s : chain_) {
            int sg = s.sign_at(x);
            if (sg == 0) continue;
            if (prev != 0 && sg != prev) ++count;
            prev = sg;
        }
        return count;
    }

    /// Distinct real roots of the underlying polynomial in (lo, hi];
    /// a point interval counts its single value when it is a root.
    int count_roots(const RationalInterval& I) const {
        if (I.is_point()) return chain_.front().sign_at(I.lo) == 0 ? 1 : 0;
        return variations_at(I.lo) - variations_at(I.hi);
    }

    const IntPolynomial& square_free() const { return chain_.front(); }

private:
    std::vector<IntPolynomial> chain_;
};

/// Exact number of distinct real roots of p in (lo, hi].
inline int sturm_count(const IntPolynomial& p, const RationalInterval& I) {
    if (p.is_zero()) throw input_error("sturm_count: zero polynomial");
    return SturmChain(p).count_roots(I);
}

} // namespace cspec
