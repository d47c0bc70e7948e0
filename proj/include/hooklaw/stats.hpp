#pragma once

#include <cstdint>
#include <span>

namespace hooklaw {

// Upper tail P(X >= x) of a chi-square law with `dof` degrees of freedom.
double chi_square_pvalue(double statistic, int dof);

struct ChiSquare {
    double statistic = 0.0;
    int dof = 0;
    double pvalue = 1.0;
};

// Pearson test of observed counts against equal expected counts.
ChiSquare chi_square_uniform(std::span<const std::int64_t> observed);

} // namespace hooklaw
