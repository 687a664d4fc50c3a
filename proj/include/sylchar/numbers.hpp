#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "sylchar/errors.hpp"

namespace sylchar {

// All arithmetic in this library is exact. BigInt is an arbitrary-precision
// integer; Rational keeps a canonical sign and is always gcd-reduced.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow_int(const BigInt& base, std::uint64_t exp) {
    BigInt r = 1, b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

/// p^e for possibly negative e (rational result).
inline Rational pow_rational(std::int64_t base, std::int64_t exp) {
    if (exp >= 0) return Rational(pow_int(base, static_cast<std::uint64_t>(exp)));
    return Rational(1, pow_int(base, static_cast<std::uint64_t>(-exp)));
}

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

/// p(p-1)...(p-m+1), the number of injections [m] -> [p].
inline BigInt falling_factorial(unsigned p, unsigned m) {
    BigInt r = 1;
    for (unsigned i = 0; i < m; ++i) r *= BigInt(p) - i;
    return r;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void require_prime(std::int64_t p) {
    if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
}

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Requires an exact integer; the argument being non-integral indicates a
/// broken identity upstream.
inline BigInt as_integer(const Rational& r, const char* context) {
    if (denominator(r) != 1)
        throw InternalError(std::string(context) + ": expected an integer, got " +
                            numerator(r).str() + "/" + denominator(r).str());
    return numerator(r);
}

}  // namespace sylchar
