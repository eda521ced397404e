#pragma once

#include <cstdint>
#include <string>

#include "polya/bignat.hpp"
#include "polya/model.hpp"

// Closed forms for the balanced urn: the normalizing product sigma_n and its
// Gamma-function form, the scalar clock w_n = sum sigma_k^2 with the regime
// asymptote it converges under, the exact mean and deviation variance of the
// composition vector, the limit covariance of the small/critical central
// limit theorems, and the first two moments of the large-urn limit W.
//
// Domain notes shared by everything below: tau_k = tau + kS, x = tau/S, and
// the Gamma forms live on x + sigma = (tau+m)/S. Since tau >= 1 and m >= -S,
// tau + m > -S strictly, so the only reachable Gamma pole is tau + m = 0 and
// only the very first product factor tau/(tau+m) can be negative.

namespace polya {

// Incremental evaluator of the exact product form
//   sigma_n = prod_{k=0..n-1} tau_k / (tau_k + m),
// kept as a ratio of big-integer products so a scan over n = 1..N costs O(N)
// big-integer work overall instead of O(N^2) for N fresh evaluations.
// Throws GammaPole at construction when tau + m = 0.
class SigmaProductSeries {
public:
    explicit SigmaProductSeries(const UrnModel& model);

    void advance();                            // sigma_n -> sigma_{n+1}
    std::int64_t index() const { return n_; }  // current n
    double value() const;                      // sigma_n as a double

private:
    std::int64_t tau_, S_, m_, n_ = 0;
    bool negative_;  // tau + m < 0: the k = 0 factor flips the sign once
    BigNat num_{1}, den_{1};
};

// sigma_n via the exact product (one-shot wrapper over SigmaProductSeries)
double sigma_n_product(const UrnModel& model, std::int64_t n);

// sigma_n via Gamma(n+x) Gamma(x+sigma) / (Gamma(x) Gamma(n+x+sigma))
double sigma_n_gamma(const UrnModel& model, std::int64_t n);

// Dispatching front end: exact product up to n = 10^4, Gamma form beyond.
// Throws GammaPole when tau + m = 0 and n >= 1.
double sigma_n(const UrnModel& model, std::int64_t n);

// 1/sigma_n in O(1). Exactly 0 for n >= 1 when tau + m = 0, which is what
// collapses the mean of such models onto the v1 line; no throw.
double sigma_inv(const UrnModel& model, std::int64_t n);

// lambda = lim n^sigma sigma_n = Gamma(x+sigma)/Gamma(x); GammaPole when
// tau + m = 0. Negative exactly when tau + m < 0.
double lambda_limit(const UrnModel& model);

// w_n = sum_{k=1..n} sigma_k^2, compensated O(n) summation. GammaPole when
// tau + m = 0 and n >= 1.
double w_n(const UrnModel& model, std::int64_t n);

// The constant w_n approaches under its regime normalization:
//   Small:    w_n / n^(1-2 sigma) -> lambda^2 / (1-2 sigma)
//   Critical: w_n / log n         -> lambda^2
//   Large:    w_n                 -> the convergent series total
// Throws RegimeMismatch for Traditional urns (their martingale is normalized
// by tau_n, not sigma_n) and GammaPole when tau + m = 0.
double w_asymptote(const UrnModel& model);

// E[U_n] = (n+x) v1 + sigma_n^{-1} (q/S) v2; diagonal replacement matrices
// reduce to E[U_n] = (tau_n/tau) (alpha, beta).
Vec2<double> mean_un(const UrnModel& model, std::int64_t n);

// Var(X_n). Uses the closed Gamma form where its arguments stay off poles
// (b+c > 0, m != 0, 2m != S, tau+m > 0, tau+2m > 0) and otherwise the exact
// O(n) recursion Var(X_{n+1}) = (1 + 2m/tau_n) Var(X_n) + m^2 p_n (1 - p_n)
// with p_n = E[X_n]/tau_n.
double var_xn(const UrnModel& model, std::int64_t n);

// Partial sums entering the deviation variance, closed forms:
//   A_n = sum_{k=1..n} Gamma(k+x) / Gamma(k+x+2 sigma)
//   B_n = sum_{k=1..n} Gamma(k-1+x+sigma) / Gamma(k+x+2 sigma)
//   C_n = sum_{k=1..n} Gamma(k-1+x+sigma)^2 / (Gamma(k+x) Gamma(k+x+2 sigma))
// The *_sum variants evaluate the defining sums term by term in O(n); they
// exist to cross-check the closed forms. a_n throws RegimeMismatch at
// 2m = S (its prefactor 1/(2 sigma - 1) degenerates into the logarithm that
// drives the critical regime); all throw GammaPole when a Gamma argument
// hits a pole (tau+m <= 0 for b_n/c_n, tau+2m <= 0 for all); b_n/c_n throw
// DegenerateUrn when m = 0.
double a_n(const UrnModel& model, std::int64_t n);
double b_n(const UrnModel& model, std::int64_t n);
double c_n(const UrnModel& model, std::int64_t n);
double a_n_sum(const UrnModel& model, std::int64_t n);
double b_n_sum(const UrnModel& model, std::int64_t n);
double c_n_sum(const UrnModel& model, std::int64_t n);

// Limit covariance of the small/critical CLT: gamma * (1 -1; -1 1) with
//   gamma = bc m^2 / ((1-2 sigma)(b+c)^2)  for small urns,
//   gamma = bc                             at criticality.
// Throws RegimeMismatch outside those regimes and DegenerateUrn when bc = 0
// or m = 0 (deviations vanish and the limit law collapses).
Mat2<double> clt_covariance(const UrnModel& model);

struct LargeUrnMoments {
    double ew;   // E[W]
    double ew2;  // E[W^2]
    double em2;  // E[|M_inf|^2 component]: lambda^2 E[W^2] - (q/S)^2
};

// First two moments of W = lim (X_n - n v1_x) / (n^sigma v2_x); large urns
// only, RegimeMismatch otherwise.
LargeUrnMoments large_urn_moments(const UrnModel& model);

struct WEstimatorMoments {
    double mean;    // E[(X_n - n v1_x) / (n^sigma v2_x)] at finite n
    double second;  // E of the square at finite n
};

// Exact finite-n moments of the W estimator above, for calibrating how far a
// finite-horizon sample legitimately sits from the limit moments. Large urns
// only; requires n >= 1.
WEstimatorMoments w_estimator_moments(const UrnModel& model, std::int64_t n);

// Everything the closed forms can say about one model at one horizon, with
// NaN for quantities the model leaves undefined (Gamma pole, Traditional
// asymptote) and presence flags for the regime-specific blocks.
struct MomentReport {
    std::string model;
    std::string regime;
    std::int64_t n = 0;
    double sigma_n = 0;
    double sigma_inv = 0;
    double w_n = 0;
    double lambda = 0;
    double asymptote = 0;
    Vec2<double> mean{0, 0};
    double var_x = 0;
    bool has_clt_cov = false;
    Mat2<double> clt_cov = Mat2<double>::Zero();
    bool has_large = false;
    LargeUrnMoments large{0, 0, 0};
};

MomentReport moment_report(const UrnModel& model, std::int64_t n);

}  // namespace polya
