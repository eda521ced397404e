#pragma once

#include <cstdint>
#include <string>

#include "polya/rational.hpp"

// Balanced two-color urn model: replacement matrix, initial composition, and
// the derived spectral data (balance S, second eigenvalue m, ratio sigma,
// eigenvectors v1/v2 of the transposed matrix, regime classification).

namespace polya {

enum class Regime { Traditional, Small, Critical, Large };

const char* regime_name(Regime r);

struct UrnModel {
    // replacement matrix rows: draw red -> add (a,b), draw white -> add (c,d)
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t d = 0;
    // initial composition (alpha red, beta white)
    std::int64_t alpha = 0;
    std::int64_t beta = 0;

    std::int64_t S = 0;   // balance: a+b = c+d
    std::int64_t m = 0;   // second eigenvalue of the transposed matrix: a-c = d-b
    std::int64_t tau = 0; // initial total: alpha+beta
    Rat sigma;            // m/S, exact

    Regime regime = Regime::Small;

    // eigenvectors of the transposed replacement matrix, defined when b+c > 0:
    // v1 = S/(b+c) * (c, b) for eigenvalue S, v2 = S/(b+c) * (1, -1) for m
    bool eigen_defined = false;
    Vec2<Rat> v1;
    Vec2<Rat> v2;

    // initial-composition skew b*alpha - c*beta; drives the v2 component of
    // the mean and the centring of the large-urn limit
    std::int64_t q() const { return b * alpha - c * beta; }

    // tau/S, the Gamma-function offset appearing in every closed form
    Rat x() const { return Rat(tau, S); }

    double sigma_double() const { return sigma.to_double(); }
    double x_double() const { return x().to_double(); }
    Vec2<double> v1_double() const { return {v1[0].to_double(), v1[1].to_double()}; }
    Vec2<double> v2_double() const { return {v2[0].to_double(), v2[1].to_double()}; }

    // total balls after n draws (deterministic)
    std::int64_t total_at(std::int64_t n) const { return tau + n * S; }

    std::string describe() const; // e.g. "[2,1;1,2] init (1,1)"
};

// Validates and derives everything. Throws BalanceViolation if a+b != c+d,
// EmptyUrn if alpha+beta = 0, ZeroGrowth if S = 0, std::invalid_argument on
// negative entries.
UrnModel build_model(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                     std::int64_t alpha, std::int64_t beta);

} // namespace polya
