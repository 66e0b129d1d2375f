#pragma once

#include <cstddef>
#include <span>

namespace cmgen {

/// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);

/// CDF of Student's t with `df` degrees of freedom.
double student_t_cdf(double t, double df);

struct TTestResult {
    double t;
    double p;  ///< two-sided
    std::size_t df;
};

/// Paired t-test on a - b. Throws ArgumentError on length mismatch or fewer
/// than two pairs, UndefinedError when all differences are identical.
TTestResult paired_t_test(std::span<const double> a, std::span<const double> b);

}  // namespace cmgen
