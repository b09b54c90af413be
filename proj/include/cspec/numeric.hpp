#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cspec {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline int sign_of(const BigInt& x) { return x.sign(); }
inline int sign_of(const BigRat& x) { return x.sign(); }

inline BigInt int_pow(BigInt base, unsigned long exp) {
    BigInt result = 1;
    while (exp) {
        if (exp & 1) result *= base;
        exp >>= 1;
        if (exp) base *= base;
    }
    return result;
}

/// "num/den" with the denominator always spelled out, e.g. "3/2", "1/1".
inline std::string rational_to_string(const BigRat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Decimal expansion of r with `digits` places after the point (truncated toward zero).
inline std::string rational_to_decimal(const BigRat& r, unsigned digits = 15) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    std::string sign;
    if (num < 0) {
        sign = "-";
        num = -num;
    }
    BigInt whole = num / den;
    BigInt rem = num % den;
    std::string frac;
    for (unsigned i = 0; i < digits && rem != 0; ++i) {
        rem *= 10;
        frac += static_cast<char>('0' + static_cast<int>(rem / den));
        rem %= den;
    }
    if (frac.empty()) return sign + whole.str();
    return sign + whole.str() + "." + frac;
}

inline double rational_to_double(const BigRat& r) { return static_cast<double>(r); }

} // namespace cspec
