#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "data/reference_values.h"
#include "polya/rng.hpp"
#include "polya/stats.hpp"

namespace td = polya::testdata;
using polya::beta_cdf;
using polya::kolmogorov_cdf;
using polya::kolmogorov_quantile;
using polya::ks_critical;
using polya::ks_statistic;
using polya::normal_cdf;
using polya::reg_incomplete_beta;

TEST_CASE("incomplete beta matches frozen references", "[stats]") {
    for (const auto& c : td::kBetaInc) {
        REQUIRE_THAT(reg_incomplete_beta(c.a, c.b, c.x),
                     Catch::Matchers::WithinAbs(c.value, 5e-13));
    }
}

TEST_CASE("incomplete beta symmetry and edges", "[stats]") {
    const double pairs[][3] = {
        {0.5, 0.5, 0.2}, {1.5, 2.5, 0.35}, {4.0, 0.7, 0.81}, {2.0, 2.0, 0.5}, {6.5, 3.0, 0.62},
    };
    for (const auto& p : pairs) {
        const double direct = reg_incomplete_beta(p[0], p[1], p[2]);
        const double flipped = 1.0 - reg_incomplete_beta(p[1], p[0], 1.0 - p[2]);
        REQUIRE_THAT(direct, Catch::Matchers::WithinAbs(flipped, 1e-13));
    }
    REQUIRE(reg_incomplete_beta(2.0, 3.0, 0.0) == 0.0);
    REQUIRE(reg_incomplete_beta(2.0, 3.0, 1.0) == 1.0);
    REQUIRE(beta_cdf(-0.5, 2.0, 3.0) == 0.0);
    REQUIRE(beta_cdf(1.5, 2.0, 3.0) == 1.0);
    REQUIRE_THROWS_AS(reg_incomplete_beta(0.0, 1.0, 0.5), std::invalid_argument);
    REQUIRE_THROWS_AS(reg_incomplete_beta(1.0, -2.0, 0.5), std::invalid_argument);
    REQUIRE_THROWS_AS(reg_incomplete_beta(1.0, 1.0, 1.5), std::invalid_argument);
}

TEST_CASE("normal CDF values and symmetry", "[stats]") {
    REQUIRE(normal_cdf(0.0) == 0.5);
    REQUIRE_THAT(normal_cdf(1.959963984540054), Catch::Matchers::WithinAbs(0.975, 1e-12));
    REQUIRE_THAT(normal_cdf(-1.0), Catch::Matchers::WithinAbs(0.15865525393145707, 1e-14));
    for (double x : {0.3, 1.7, 4.0, 7.5}) {
        REQUIRE_THAT(normal_cdf(x) + normal_cdf(-x), Catch::Matchers::WithinAbs(1.0, 1e-15));
    }
    REQUIRE(normal_cdf(-9.0) > 0.0);
    REQUIRE(normal_cdf(-9.0) < 1e-18);
}

TEST_CASE("Kolmogorov distribution matches frozen references", "[stats]") {
    for (const auto& c : td::kKolmogorovCdf) {
        REQUIRE_THAT(kolmogorov_cdf(c.x), Catch::Matchers::WithinAbs(c.value, 1e-12));
    }
    REQUIRE(kolmogorov_cdf(0.0) == 0.0);
    REQUIRE(kolmogorov_cdf(-1.0) == 0.0);
    REQUIRE(kolmogorov_cdf(5.0) > 1.0 - 1e-15);

    // Continuity across the series switch point.
    REQUIRE_THAT(kolmogorov_cdf(1.18 - 1e-9),
                 Catch::Matchers::WithinAbs(kolmogorov_cdf(1.18 + 1e-9), 1e-8));

    double prev = 0.0;
    for (double x = 0.2; x < 2.6; x += 0.1) {
        const double cur = kolmogorov_cdf(x);
        REQUIRE(cur > prev);
        prev = cur;
    }
}

TEST_CASE("Kolmogorov quantile inverts the CDF", "[stats]") {
    REQUIRE_THAT(kolmogorov_quantile(0.99), Catch::Matchers::WithinAbs(td::kKolmogorov99, 1e-9));
    for (double p : {0.05, 0.5, 0.95, 0.99}) {
        REQUIRE_THAT(kolmogorov_cdf(kolmogorov_quantile(p)),
                     Catch::Matchers::WithinAbs(p, 1e-10));
    }
    REQUIRE_THROWS_AS(kolmogorov_quantile(0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(kolmogorov_quantile(1.0), std::invalid_argument);

    const double crit = ks_critical(10000, 0.99);
    REQUIRE_THAT(crit, Catch::Matchers::WithinAbs(td::kKolmogorov99 / (100.0 + 0.12 + 0.0011),
                                                  1e-12));
    REQUIRE_THROWS_AS(ks_critical(0, 0.99), std::invalid_argument);
}

TEST_CASE("KS statistic agrees with hand-computed cases", "[stats]") {
    auto uniform = [](double x) { return x; };
    REQUIRE_THAT(ks_statistic({0.1, 0.2, 0.3}, uniform),
                 Catch::Matchers::WithinAbs(0.7, 1e-15));
    REQUIRE_THAT(ks_statistic({0.25, 0.75}, uniform),
                 Catch::Matchers::WithinAbs(0.25, 1e-15));
    REQUIRE_THAT(ks_statistic({0.5}, uniform), Catch::Matchers::WithinAbs(0.5, 1e-15));
    REQUIRE_THROWS_AS(ks_statistic({}, uniform), std::invalid_argument);
}

TEST_CASE("KS test accepts true uniforms and rejects squared ones", "[stats]") {
    polya::RandomStream rng(424242, 0);
    const std::size_t n = 10000;
    std::vector<double> xs(n);
    for (auto& x : xs) {
        x = static_cast<double>(rng.next_u64() >> 11) * 0x1.0p-53;
    }
    auto uniform = [](double v) { return v; };
    const double crit = ks_critical(n, 0.99);
    REQUIRE(ks_statistic(xs, uniform) < crit);

    std::vector<double> sq(n);
    for (std::size_t i = 0; i < n; ++i) {
        sq[i] = xs[i] * xs[i];
    }
    REQUIRE(ks_statistic(sq, uniform) > crit);
    // And the fix: squared uniforms against their true CDF sqrt(x).
    REQUIRE(ks_statistic(sq, [](double v) { return std::sqrt(v); }) < crit);
}
