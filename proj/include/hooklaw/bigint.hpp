#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

namespace hooklaw {

using BigInt = mpz_class;
using Rational = mpq_class;

// Natural log of a positive big integer without overflowing a double.
inline double log_of(const BigInt& x) {
    long exponent = 0;
    double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

inline double log_of(const Rational& q) {
    return log_of(BigInt(q.get_num())) - log_of(BigInt(q.get_den()));
}

inline std::string decimal(const BigInt& x) { return x.get_str(10); }

// "17/3", or "3" when the denominator is one.
inline std::string decimal(const Rational& q) { return q.get_str(10); }

} // namespace hooklaw
