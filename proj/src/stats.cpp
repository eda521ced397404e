#include "polya/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "polya/gamma.hpp"

namespace polya {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Continued fraction for the incomplete beta, modified Lentz iteration.
double beta_cf(double a, double b, double x) {
    constexpr double tiny = 1e-300;
    constexpr double eps = 3e-16;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) {
        d = tiny;
    }
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 400; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) {
            d = tiny;
        }
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) {
            d = tiny;
        }
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) {
            break;
        }
    }
    return h;
}

} // namespace

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double reg_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::invalid_argument("incomplete beta needs positive shape parameters");
    }
    if (!(x >= 0.0) || !(x <= 1.0)) {
        throw std::invalid_argument("incomplete beta argument outside [0, 1]");
    }
    if (x == 0.0) {
        return 0.0;
    }
    if (x == 1.0) {
        return 1.0;
    }
    const double front = std::exp(a * std::log(x) + b * std::log1p(-x) + log_gamma(a + b) -
                                  log_gamma(a) - log_gamma(b));
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_cf(a, b, x) / a;
    }
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double beta_cdf(double x, double a, double b) {
    if (x <= 0.0) {
        return 0.0;
    }
    if (x >= 1.0) {
        return 1.0;
    }
    return reg_incomplete_beta(a, b, x);
}

double kolmogorov_cdf(double x) {
    if (x <= 0.0) {
        return 0.0;
    }
    if (x < 1.18) {
        // Theta transform, very sharp for small x.
        const double t = std::exp(-kPi * kPi / (8.0 * x * x));
        const double t8 = std::pow(t, 8.0);
        // Terms are t^(2k-1)^2: t, t^9, t^25, t^49.
        const double sum = t * (1.0 + t8 * (1.0 + t8 * t8 * (1.0 + t8 * t8 * t8)));
        return std::sqrt(2.0 * kPi) / x * sum;
    }
    // Alternating series, sharp for large x.
    double sum = 0.0;
    for (int k = 1; k <= 32; ++k) {
        const double term = std::exp(-2.0 * k * k * x * x);
        sum += (k % 2 == 1) ? term : -term;
        if (term < 1e-18) {
            break;
        }
    }
    return 1.0 - 2.0 * sum;
}

double kolmogorov_quantile(double p) {
    if (!(p > 0.0) || !(p < 1.0)) {
        throw std::invalid_argument("Kolmogorov quantile needs p in (0, 1)");
    }
    double lo = 1e-3;
    double hi = 4.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (kolmogorov_cdf(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double ks_critical(std::size_t n, double p) {
    if (n == 0) {
        throw std::invalid_argument("KS critical value needs a nonempty sample");
    }
    const double rootn = std::sqrt(static_cast<double>(n));
    return kolmogorov_quantile(p) / (rootn + 0.12 + 0.11 / rootn);
}

double ks_statistic(std::vector<double> xs, const std::function<double(double)>& cdf) {
    if (xs.empty()) {
        throw std::invalid_argument("KS statistic needs a nonempty sample");
    }
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        d = std::max(d, f - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
    }
    return d;
}

} // namespace polya
