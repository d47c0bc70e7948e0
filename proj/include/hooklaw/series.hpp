#pragma once

#include "hooklaw/bigint.hpp"

#include <vector>

namespace hooklaw {

// Power series a_0 + a_1 x + ... + a_N x^N with exact integer coefficients,
// understood modulo x^{N+1}.
class TruncatedSeries {
public:
    // The zero series of degree N.
    explicit TruncatedSeries(int degree);
    explicit TruncatedSeries(std::vector<BigInt> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    // Coefficient of x^n; throws DomainError if n > degree().
    const BigInt& operator[](int n) const;

    // Results are truncated to the smaller of the two degrees.
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<BigInt> coeffs_;
};

// Coefficient n of a * b without forming the full product.
BigInt product_coefficient(const TruncatedSeries& a, const TruncatedSeries& b, int n);

// g(x) = prod_j (1 - x^j)^{-1} mod x^{N+1}; coefficients are p(0..N).
TruncatedSeries euler_series(int degree);

// F_m(x) = sum_j j^m x^j / (1 - x^j) mod x^{N+1}; coefficient n is the
// divisor power sum sigma_m(n). Requires m >= 1.
TruncatedSeries f_m_series(int m, int degree);

// [x^n] g(x) F_m(x) = p(n) * E(Y_{m,n}).
BigInt moment_coefficient(int m, int n, int degree);

// Holds g and F_m to a fixed degree for repeated coefficient queries.
class MomentSeries {
public:
    MomentSeries(int m, int degree);

    int m() const { return m_; }
    int degree() const { return euler_.degree(); }
    const TruncatedSeries& euler() const { return euler_; }
    const TruncatedSeries& lambert() const { return lambert_; }

    BigInt coefficient(int n) const;
    // p(n) * E(Y_{m,n}) / p(n), reduced.
    Rational expectation(int n) const;

private:
    int m_;
    TruncatedSeries euler_;
    TruncatedSeries lambert_;
};

} // namespace hooklaw
