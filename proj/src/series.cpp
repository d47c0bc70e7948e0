#include "hooklaw/series.hpp"

#include "hooklaw/errors.hpp"

#include <algorithm>

namespace hooklaw {

TruncatedSeries::TruncatedSeries(int degree) {
    if (degree < 0) throw DomainError("series degree must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(degree) + 1, 0);
}

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("series needs at least one coefficient");
}

const BigInt& TruncatedSeries::operator[](int n) const {
    if (n < 0 || n > degree())
        throw DomainError("coefficient " + std::to_string(n) + " beyond series degree " +
                          std::to_string(degree()));
    return coeffs_[static_cast<std::size_t>(n)];
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.degree(), b.degree()));
    for (int i = 0; i <= out.degree(); ++i)
        out.coeffs_[static_cast<std::size_t>(i)] = a.coeffs_[static_cast<std::size_t>(i)] +
                                                   b.coeffs_[static_cast<std::size_t>(i)];
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.degree(), b.degree()));
    for (int n = 0; n <= out.degree(); ++n)
        out.coeffs_[static_cast<std::size_t>(n)] = product_coefficient(a, b, n);
    return out;
}

BigInt product_coefficient(const TruncatedSeries& a, const TruncatedSeries& b, int n) {
    if (n > a.degree() || n > b.degree())
        throw DomainError("product coefficient " + std::to_string(n) + " beyond operand degree");
    BigInt sum = 0;
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    for (int k = 0; k <= n; ++k)
        mpz_addmul(sum.get_mpz_t(), ac[static_cast<std::size_t>(k)].get_mpz_t(),
                   bc[static_cast<std::size_t>(n - k)].get_mpz_t());
    return sum;
}

TruncatedSeries euler_series(int degree) {
    if (degree < 0) throw DomainError("euler_series: degree must be nonnegative");
    std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1, 0);
    c[0] = 1;
    // Multiply by 1/(1 - x^j) = 1 + x^j + x^{2j} + ... in place.
    for (int j = 1; j <= degree; ++j)
        for (int i = j; i <= degree; ++i)
            c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - j)];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries f_m_series(int m, int degree) {
    if (m < 1) throw DomainError("f_m_series: m must be at least 1");
    if (degree < 1) throw DomainError("f_m_series: degree must be at least 1");
    std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1, 0);
    BigInt power;
    for (int d = 1; d <= degree; ++d) {
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(m));
        for (int k = d; k <= degree; k += d) c[static_cast<std::size_t>(k)] += power;
    }
    return TruncatedSeries(std::move(c));
}

BigInt moment_coefficient(int m, int n, int degree) {
    if (n > degree)
        throw DomainError("moment_coefficient: n = " + std::to_string(n) + " exceeds degree " +
                          std::to_string(degree));
    if (n < 0) throw DomainError("moment_coefficient: n must be nonnegative");
    return MomentSeries(m, std::max(degree, 1)).coefficient(n);
}

MomentSeries::MomentSeries(int m, int degree)
    : m_(m), euler_(euler_series(degree)), lambert_(f_m_series(m, degree)) {}

BigInt MomentSeries::coefficient(int n) const {
    return product_coefficient(euler_, lambert_, n);
}

Rational MomentSeries::expectation(int n) const {
    if (n < 1) throw DomainError("expectation requires n >= 1");
    Rational q(coefficient(n), euler_[n]);
    q.canonicalize();
    return q;
}

} // namespace hooklaw
