#pragma once

// Log-Gamma ratios and a Hurwitz zeta tail, tuned for the quantities this
// library evaluates: sigma_n, its scaled limit, and convergent sigma_k^2
// series. The point of log_gamma_ratio is numerical: lgamma(z) - lgamma(z+s)
// computed naively loses ~5 digits at z = 10^4 (both terms ~8e4 while the
// difference is ~|s| ln z), which would sink the 1e-12 dual-form agreement
// contract for sigma_n.

namespace polya {

// ln Gamma(z) for z > 0
double log_gamma(double z);

// ln Gamma(z) - ln Gamma(z+s), stable for all z > 0, z+s > 0, |s| <= 4
double log_gamma_ratio(double z, double s);

// Gamma(z) / Gamma(z+s)
double gamma_ratio(double z, double s);

// Hurwitz zeta: sum_{j>=0} (a+j)^(-s) for s > 1, a > 0 (Euler-Maclaurin)
double hurwitz_zeta(double s, double a);

} // namespace polya
