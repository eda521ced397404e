#pragma once

#include <cstddef>
#include <functional>
#include <vector>

// Distribution functions and goodness-of-fit machinery for the statistical
// checks: the normal CDF, regularized incomplete beta (hence Beta CDFs), the
// Kolmogorov limit distribution with finite-sample critical values, and the
// two-sided Kolmogorov-Smirnov statistic against an arbitrary continuous CDF.

namespace polya {

// Standard normal CDF through erfc; accurate in both tails.
double normal_cdf(double x);

// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1],
// evaluated by the continued fraction with the symmetry flip at the
// convergence boundary. Throws invalid_argument outside the domain.
double reg_incomplete_beta(double a, double b, double x);

// CDF of the Beta(a, b) distribution; clamps x outside [0, 1].
double beta_cdf(double x, double a, double b);

// CDF of the Kolmogorov limit law K = sup_t |B(t)| of the Brownian bridge,
// by the theta-series that converges fastest on each side of x ~ 1.18.
double kolmogorov_cdf(double x);

// Inverse of kolmogorov_cdf by bisection; p in (0, 1).
double kolmogorov_quantile(double p);

// Critical value for the two-sided KS statistic of n samples at confidence
// level p (e.g. p = 0.99), using the sqrt(n) + 0.12 + 0.11/sqrt(n)
// finite-sample correction of the asymptotic quantile.
double ks_critical(std::size_t n, double p);

// Two-sided KS statistic sup_x |F_hat(x) - cdf(x)|; sorts a copy of the
// sample. Throws invalid_argument on an empty sample.
double ks_statistic(std::vector<double> xs, const std::function<double(double)>& cdf);

} // namespace polya
