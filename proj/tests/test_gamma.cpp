#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "data/reference_values.h"
#include "polya/gamma.hpp"

namespace td = polya::testdata;

TEST_CASE("log_gamma matches lgamma on its domain", "[gamma]") {
    for (double z : {0.1, 0.5, 1.0, 2.5, 41.0, 1e6}) {
        REQUIRE(polya::log_gamma(z) == Catch::Approx(std::lgamma(z)).margin(1e-12));
    }
    REQUIRE_THROWS_AS(polya::log_gamma(0.0), std::domain_error);
    REQUIRE_THROWS_AS(polya::log_gamma(-2.5), std::domain_error);
}

TEST_CASE("log_gamma_ratio matches 50-digit references", "[gamma]") {
    for (const auto& c : td::kLogGammaRatio) {
        const double got = polya::log_gamma_ratio(c.z, c.s);
        INFO("z=" << c.z << " s=" << c.s);
        REQUIRE(got == Catch::Approx(c.value).margin(1e-13 * std::max(1.0, std::fabs(c.value))));
    }
}

TEST_CASE("log_gamma_ratio identities", "[gamma]") {
    // Gamma(z)/Gamma(z+1) = 1/z
    for (double z : {0.3, 1.0, 7.5, 3333.25, 9.75e7}) {
        REQUIRE(polya::log_gamma_ratio(z, 1.0) ==
                Catch::Approx(-std::log(z)).epsilon(1e-14).margin(1e-14));
    }
    // s = 0 collapses to zero, and the ratio telescopes:
    // lgr(z, s+1) = lgr(z, s) - ln(z+s)
    REQUIRE(polya::log_gamma_ratio(5.5, 0.0) == 0.0);
    for (double z : {0.5, 2.0, 40.0}) {
        for (double s : {-0.4, 0.25, 1.5}) {
            const double lhs = polya::log_gamma_ratio(z, s + 1.0);
            const double rhs = polya::log_gamma_ratio(z, s) - std::log(z + s);
            REQUIRE(lhs == Catch::Approx(rhs).margin(1e-13));
        }
    }
    REQUIRE_THROWS_AS(polya::log_gamma_ratio(0.0, 0.5), std::domain_error);
    REQUIRE_THROWS_AS(polya::log_gamma_ratio(0.5, -0.5), std::domain_error);
}

TEST_CASE("gamma_ratio agrees with direct evaluation at small arguments", "[gamma]") {
    REQUIRE(polya::gamma_ratio(5.0, 1.0) == Catch::Approx(0.2).epsilon(1e-14));
    REQUIRE(polya::gamma_ratio(0.5, 0.5) ==
            Catch::Approx(std::sqrt(M_PI)).epsilon(1e-14)); // Gamma(1/2)/Gamma(1)
}

TEST_CASE("hurwitz_zeta matches 50-digit references", "[gamma]") {
    for (const auto& c : td::kHurwitz) {
        const double got = polya::hurwitz_zeta(c.s, c.a);
        INFO("s=" << c.s << " a=" << c.a);
        REQUIRE(got == Catch::Approx(c.value).epsilon(1e-12).margin(1e-280));
    }
}

TEST_CASE("hurwitz_zeta special values and domain", "[gamma]") {
    REQUIRE(polya::hurwitz_zeta(2.0, 1.0) == Catch::Approx(M_PI * M_PI / 6.0).epsilon(1e-14));
    REQUIRE_THROWS_AS(polya::hurwitz_zeta(1.0, 2.0), std::domain_error);
    REQUIRE_THROWS_AS(polya::hurwitz_zeta(2.0, 0.0), std::domain_error);
}
