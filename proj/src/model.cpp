#include "polya/model.hpp"

#include <sstream>
#include <stdexcept>

#include "polya/errors.hpp"

namespace polya {

const char* regime_name(Regime r) {
    switch (r) {
    case Regime::Traditional: return "Traditional";
    case Regime::Small: return "Small";
    case Regime::Critical: return "Critical";
    case Regime::Large: return "Large";
    }
    return "?";
}

std::string UrnModel::describe() const {
    std::ostringstream os;
    os << "[" << a << "," << b << ";" << c << "," << d << "] init (" << alpha << "," << beta
       << ")";
    return os.str();
}

UrnModel build_model(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                     std::int64_t alpha, std::int64_t beta) {
    if (a < 0 || b < 0 || c < 0 || d < 0 || alpha < 0 || beta < 0) {
        throw std::invalid_argument("build_model: entries must be nonnegative");
    }
    if (a + b != c + d) {
        std::ostringstream os;
        os << "rows add " << a + b << " and " << c + d << " balls";
        throw BalanceViolation(os.str());
    }
    UrnModel mod;
    mod.a = a;
    mod.b = b;
    mod.c = c;
    mod.d = d;
    mod.alpha = alpha;
    mod.beta = beta;
    mod.S = a + b;
    mod.m = a - c;
    mod.tau = alpha + beta;
    if (mod.tau == 0) {
        throw EmptyUrn("alpha + beta must be at least 1");
    }
    if (mod.S == 0) {
        throw ZeroGrowth("replacement rows add no balls");
    }
    mod.sigma = Rat(mod.m, mod.S);

    mod.eigen_defined = (b + c) > 0;
    if (mod.eigen_defined) {
        mod.v1 = {Rat(mod.S * c, b + c), Rat(mod.S * b, b + c)};
        mod.v2 = {Rat(mod.S, b + c), Rat(-mod.S, b + c)};
        // sigma < 1 strictly here; split on sigma vs 1/2 exactly
        if (Rat(2) * mod.sigma < Rat(1)) {
            mod.regime = Regime::Small;
        } else if (Rat(2) * mod.sigma == Rat(1)) {
            mod.regime = Regime::Critical;
        } else {
            mod.regime = Regime::Large;
        }
    } else {
        // b = c = 0 forces m = S, sigma = 1: the one-color-feeds-itself urn
        mod.regime = Regime::Traditional;
        mod.v1 = {Rat(0), Rat(0)};
        mod.v2 = {Rat(0), Rat(0)};
    }
    return mod;
}

} // namespace polya
