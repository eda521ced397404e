#include "polya/formulas.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "polya/errors.hpp"
#include "polya/gamma.hpp"

// Closed-form evaluation. Everything funnels through log_gamma_ratio so the
// large-argument cancellation stays controlled; the exact product form is
// the cross-check twin for the Gamma form at moderate n.

namespace polya {

namespace {

constexpr std::int64_t kProductCutoff = 10000;

void require_off_pole(const UrnModel& model, const char* what) {
    if (model.tau + model.m == 0)
        throw GammaPole(std::string(what) + " undefined, tau + m = 0 for " + model.describe());
}

}  // namespace

SigmaProductSeries::SigmaProductSeries(const UrnModel& model)
    : tau_(model.tau), S_(model.S), m_(model.m), negative_(model.tau + model.m < 0) {
    require_off_pole(model, "sigma_n");
}

void SigmaProductSeries::advance() {
    std::int64_t tk = tau_ + n_ * S_;
    std::int64_t dk = tk + m_;  // negative only for k = 0, handled by negative_
    num_.mul_small(static_cast<std::uint64_t>(tk));
    den_.mul_small(static_cast<std::uint64_t>(dk < 0 ? -dk : dk));
    ++n_;
}

double SigmaProductSeries::value() const {
    if (n_ == 0) return 1.0;
    double r = BigNat::ratio(num_, den_);
    return negative_ ? -r : r;
}

double sigma_n_product(const UrnModel& model, std::int64_t n) {
    if (n <= 0) return 1.0;
    SigmaProductSeries series(model);
    for (std::int64_t k = 0; k < n; ++k) series.advance();
    return series.value();
}

double sigma_n_gamma(const UrnModel& model, std::int64_t n) {
    require_off_pole(model, "sigma_n");
    if (n <= 0) return 1.0;
    double x = model.x_double();
    double sig = model.sigma_double();
    double shift = log_gamma_ratio(static_cast<double>(n) + x, sig);
    if (model.tau + model.m > 0) return std::exp(shift - log_gamma_ratio(x, sig));
    // tau + m < 0 forces x + sigma into (-1,0) and x into (0,1); Gamma is
    // finite (and negative) there, so tgamma carries the sign directly
    return std::exp(shift) * (std::tgamma(x + sig) / std::tgamma(x));
}

double sigma_n(const UrnModel& model, std::int64_t n) {
    if (n <= 0) return 1.0;
    require_off_pole(model, "sigma_n");
    return n <= kProductCutoff ? sigma_n_product(model, n) : sigma_n_gamma(model, n);
}

double sigma_inv(const UrnModel& model, std::int64_t n) {
    if (n <= 0) return 1.0;
    if (model.tau + model.m == 0) return 0.0;
    double x = model.x_double();
    double sig = model.sigma_double();
    double shift = log_gamma_ratio(static_cast<double>(n) + x, sig);
    if (model.tau + model.m > 0) return std::exp(log_gamma_ratio(x, sig) - shift);
    return std::exp(-shift) * (std::tgamma(x) / std::tgamma(x + sig));
}

double lambda_limit(const UrnModel& model) {
    require_off_pole(model, "lambda");
    double x = model.x_double();
    double sig = model.sigma_double();
    if (model.tau + model.m > 0) return std::exp(-log_gamma_ratio(x, sig));
    return std::tgamma(x + sig) / std::tgamma(x);
}

double w_n(const UrnModel& model, std::int64_t n) {
    if (n <= 0) return 0.0;
    require_off_pole(model, "w_n");
    long double sig = 1.0L;
    long double sum = 0.0L, comp = 0.0L;
    for (std::int64_t k = 0; k < n; ++k) {
        long double tk = static_cast<long double>(model.tau) + static_cast<long double>(k) * model.S;
        sig *= tk / (tk + model.m);
        long double term = sig * sig - comp;
        long double next = sum + term;
        comp = (next - sum) - term;
        sum = next;
    }
    return static_cast<double>(sum);
}

double w_asymptote(const UrnModel& model) {
    if (model.regime == Regime::Traditional)
        throw RegimeMismatch("w_n asymptote applies to sigma_n-normalized urns; "
                             "diagonal urns use the tau_n martingale: " + model.describe());
    require_off_pole(model, "w_n asymptote");
    double lam = lambda_limit(model);
    double sig = model.sigma_double();
    if (model.regime == Regime::Small) return lam * lam / (1.0 - 2.0 * sig);
    if (model.regime == Regime::Critical) {
        // at sigma = 1/2 the terms decay like lambda^2/k, so the log-n slope
        // of w_n is lambda squared
        return lam * lam;
    }
    // Large: head sum plus an accelerated tail. Expanding
    //   ln(Gamma(z)/Gamma(z+sigma)) = -sigma ln z + A/z + B/z^2 + O(z^-3),
    //   A = sigma(1-sigma)/2, B = sigma(1-sigma)(1-2 sigma)/12,
    // gives sigma_k^2 = lambda^2 (k+x)^(-2 sigma) (1 + 2A/(k+x)
    // + (2B+2A^2)/(k+x)^2 + O((k+x)^-3)), so the tail beyond the cutoff is
    // three Hurwitz zeta terms and the dropped remainder stays below 1e-13
    // of the total.
    const std::int64_t cutoff = 20000;
    double x = model.x_double();
    double head = w_n(model, cutoff);
    double a = static_cast<double>(cutoff) + 1.0 + x;
    double A = sig * (1.0 - sig) / 2.0;
    double B = sig * (1.0 - sig) * (1.0 - 2.0 * sig) / 12.0;
    double tail = hurwitz_zeta(2.0 * sig, a) + 2.0 * A * hurwitz_zeta(2.0 * sig + 1.0, a)
                + (2.0 * B + 2.0 * A * A) * hurwitz_zeta(2.0 * sig + 2.0, a);
    return head + lam * lam * tail;
}

Vec2<double> mean_un(const UrnModel& model, std::int64_t n) {
    if (model.regime == Regime::Traditional) {
        // diagonal replacement: each color only reinforces itself, so the
        // mean grows proportionally from the initial composition
        double scale = static_cast<double>(model.total_at(n)) / static_cast<double>(model.tau);
        return {model.alpha * scale, model.beta * scale};
    }
    double nx = static_cast<double>(n) + model.x_double();
    double qs = static_cast<double>(model.q()) / model.S;
    return nx * model.v1_double() + (sigma_inv(model, n) * qs) * model.v2_double();
}

namespace {

void require_abc_domain(const UrnModel& model, bool needs_x_sigma) {
    if (needs_x_sigma && model.m == 0)
        throw DegenerateUrn("prefactor 1/sigma degenerates at m = 0 for " + model.describe());
    if (needs_x_sigma && model.tau + model.m <= 0)
        throw GammaPole("Gamma argument x + sigma is nonpositive for " + model.describe());
    if (model.tau + 2 * model.m <= 0)
        throw GammaPole("Gamma argument x + 2 sigma is nonpositive for " + model.describe());
}

}  // namespace

double a_n(const UrnModel& model, std::int64_t n) {
    if (2 * model.m == model.S)
        throw RegimeMismatch("A_n prefactor 1/(2 sigma - 1) degenerates at 2m = S for " + model.describe());
    require_abc_domain(model, false);
    if (n <= 0) return 0.0;
    double x = model.x_double();
    double s2 = 2.0 * model.sigma_double();
    double g0 = gamma_ratio(x + 1.0, s2 - 1.0);
    double gn = gamma_ratio(static_cast<double>(n) + x + 1.0, s2 - 1.0);
    return (g0 - gn) / (s2 - 1.0);
}

double b_n(const UrnModel& model, std::int64_t n) {
    require_abc_domain(model, true);
    if (n <= 0) return 0.0;
    double x = model.x_double();
    double sig = model.sigma_double();
    double h0 = gamma_ratio(x + sig, sig);
    double hn = gamma_ratio(static_cast<double>(n) + x + sig, sig);
    return (h0 - hn) / sig;
}

double c_n(const UrnModel& model, std::int64_t n) {
    require_abc_domain(model, true);
    if (n <= 0) return 0.0;
    double x = model.x_double();
    double sig = model.sigma_double();
    auto f = [&](double t) {
        return std::exp(log_gamma_ratio(t + x + sig, sig) - log_gamma_ratio(t + x, sig));
    };
    return (f(static_cast<double>(n)) - f(0.0)) / (sig * sig);
}

double a_n_sum(const UrnModel& model, std::int64_t n) {
    if (2 * model.m == model.S)
        throw RegimeMismatch("A_n prefactor 1/(2 sigma - 1) degenerates at 2m = S for " + model.describe());
    require_abc_domain(model, false);
    double x = model.x_double();
    double s2 = 2.0 * model.sigma_double();
    long double term = gamma_ratio(1.0 + x, s2);  // Gamma(1+x)/Gamma(1+x+2 sigma)
    long double sum = 0.0L, comp = 0.0L;
    for (std::int64_t k = 1; k <= n; ++k) {
        long double add = term - comp;
        long double next = sum + add;
        comp = (next - sum) - add;
        sum = next;
        term *= (static_cast<long double>(k) + x) / (static_cast<long double>(k) + x + s2);
    }
    return static_cast<double>(sum);
}

double b_n_sum(const UrnModel& model, std::int64_t n) {
    require_abc_domain(model, true);
    double x = model.x_double();
    double sig = model.sigma_double();
    long double term = gamma_ratio(x + sig, 1.0 + sig);  // Gamma(x+sigma)/Gamma(1+x+2 sigma)
    long double sum = 0.0L, comp = 0.0L;
    for (std::int64_t k = 1; k <= n; ++k) {
        long double add = term - comp;
        long double next = sum + add;
        comp = (next - sum) - add;
        sum = next;
        term *= (static_cast<long double>(k) - 1.0L + x + sig)
              / (static_cast<long double>(k) + x + 2.0L * sig);
    }
    return static_cast<double>(sum);
}

double c_n_sum(const UrnModel& model, std::int64_t n) {
    require_abc_domain(model, true);
    double x = model.x_double();
    double sig = model.sigma_double();
    long double term = std::exp(2.0 * log_gamma(x + sig) - log_gamma(1.0 + x)
                              - log_gamma(1.0 + x + 2.0 * sig));
    long double sum = 0.0L, comp = 0.0L;
    for (std::int64_t k = 1; k <= n; ++k) {
        long double add = term - comp;
        long double next = sum + add;
        comp = (next - sum) - add;
        sum = next;
        long double num = static_cast<long double>(k) - 1.0L + x + sig;
        term *= num * num
              / ((static_cast<long double>(k) + x) * (static_cast<long double>(k) + x + 2.0L * sig));
    }
    return static_cast<double>(sum);
}

double var_xn(const UrnModel& model, std::int64_t n) {
    if (n <= 0 || model.m == 0) return 0.0;
    bool closed_ok = model.b + model.c > 0 && 2 * model.m != model.S
                  && model.tau + model.m > 0 && model.tau + 2 * model.m > 0;
    if (closed_ok) {
        double x = model.x_double();
        double sig = model.sigma_double();
        double qs = static_cast<double>(model.q()) / model.S;
        double lam = lambda_limit(model);
        double sn = static_cast<double>(model.b * model.c) * a_n(model, n)
                  + static_cast<double>(model.b - model.c) * qs / lam * b_n(model, n)
                  - qs * qs / (lam * lam) * c_n(model, n);
        double bc = static_cast<double>(model.b + model.c);
        double mm = static_cast<double>(model.m);
        return mm * mm / (bc * bc)
             * std::exp(-log_gamma_ratio(static_cast<double>(n) + x, 2.0 * sig)) * sn;
    }
    // exact second-moment recursion; covers diagonal, critical, and
    // negative-m urns where the Gamma arguments above leave the domain
    long double ex = static_cast<long double>(model.alpha);
    long double var = 0.0L;
    long double mm = static_cast<long double>(model.m);
    for (std::int64_t k = 0; k < n; ++k) {
        long double tk = static_cast<long double>(model.tau) + static_cast<long double>(k) * model.S;
        long double p = ex / tk;
        var = (1.0L + 2.0L * mm / tk) * var + mm * mm * p * (1.0L - p);
        ex = ex * (1.0L + mm / tk) + static_cast<long double>(model.c);
    }
    return static_cast<double>(var);
}

Mat2<double> clt_covariance(const UrnModel& model) {
    if (model.regime != Regime::Small && model.regime != Regime::Critical)
        throw RegimeMismatch(std::string("CLT covariance applies to small and critical urns, got ")
                             + regime_name(model.regime) + " for " + model.describe());
    if (model.m == 0 || model.b * model.c == 0)
        throw DegenerateUrn("deviations vanish, bc m^2 = 0 for " + model.describe());
    double g;
    if (model.regime == Regime::Critical) {
        g = static_cast<double>(model.b * model.c);
    } else {
        double bc = static_cast<double>(model.b + model.c);
        g = static_cast<double>(model.b * model.c) * static_cast<double>(model.m * model.m)
          / ((1.0 - 2.0 * model.sigma_double()) * bc * bc);
    }
    Mat2<double> cov;
    cov << g, -g, -g, g;
    return cov;
}

LargeUrnMoments large_urn_moments(const UrnModel& model) {
    if (model.regime != Regime::Large)
        throw RegimeMismatch(std::string("W moments exist for large urns only, got ")
                             + regime_name(model.regime) + " for " + model.describe());
    double x = model.x_double();
    double sig = model.sigma_double();
    double qs = static_cast<double>(model.q()) / model.S;
    double lam = lambda_limit(model);
    double core = static_cast<double>(model.b * model.c) * x / (2.0 * sig - 1.0)
                + static_cast<double>(model.b - model.c) * qs / sig + qs * qs / (sig * sig);
    LargeUrnMoments out;
    out.ew = qs / lam;
    out.ew2 = sig * sig * gamma_ratio(x, 2.0 * sig) * core;
    out.em2 = lam * lam * out.ew2 - qs * qs;
    return out;
}

WEstimatorMoments w_estimator_moments(const UrnModel& model, std::int64_t n) {
    if (model.regime != Regime::Large)
        throw RegimeMismatch(std::string("W estimator moments exist for large urns only, got ")
                             + regime_name(model.regime) + " for " + model.describe());
    if (n < 1) throw std::invalid_argument("w_estimator_moments requires n >= 1");
    double x = model.x_double();
    double sig = model.sigma_double();
    double qs = static_cast<double>(model.q()) / model.S;
    double v1x = model.v1_double()[0];
    double v2x = model.v2_double()[0];
    double offset = x * v1x + sigma_inv(model, n) * qs * v2x;
    double scale = std::pow(static_cast<double>(n), sig) * v2x;
    WEstimatorMoments out;
    out.mean = offset / scale;
    out.second = (var_xn(model, n) + offset * offset) / (scale * scale);
    return out;
}

MomentReport moment_report(const UrnModel& model, std::int64_t n) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    MomentReport rep;
    rep.model = model.describe();
    rep.regime = regime_name(model.regime);
    rep.n = n;
    try {
        rep.sigma_n = sigma_n(model, n);
    } catch (const GammaPole&) {
        rep.sigma_n = nan;
    }
    rep.sigma_inv = sigma_inv(model, n);
    try {
        rep.w_n = w_n(model, n);
    } catch (const GammaPole&) {
        rep.w_n = nan;
    }
    try {
        rep.lambda = lambda_limit(model);
    } catch (const GammaPole&) {
        rep.lambda = nan;
    }
    try {
        rep.asymptote = w_asymptote(model);
    } catch (const UrnError&) {
        rep.asymptote = nan;
    }
    rep.mean = mean_un(model, n);
    rep.var_x = var_xn(model, n);
    try {
        rep.clt_cov = clt_covariance(model);
        rep.has_clt_cov = true;
    } catch (const UrnError&) {
        rep.has_clt_cov = false;
    }
    if (model.regime == Regime::Large) {
        rep.large = large_urn_moments(model);
        rep.has_large = true;
    }
    return rep;
}

}  // namespace polya
