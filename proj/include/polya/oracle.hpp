#pragma once

#include <cstdint>
#include <vector>

#include "polya/model.hpp"

// Exact-arithmetic oracle: exhaustive path enumeration of the urn at small
// horizons, plus rational evaluations of the closed forms it arbitrates.
// Deliberately the dumbest correct computation available, so a disagreement
// always indicts the closed form or its numerics, never the oracle.

namespace polya {

// one support point of the exact law of X_n
struct ExactAtom {
    std::int64_t x;
    Rat prob;
};

// Law of X_n from walking every positive-probability draw sequence and
// accumulating exact path probabilities (Y_n = tau_n - X_n throughout).
// Throws TooLarge above n = 12: 2^n paths, and the checked __int128
// rationals are sized for that bound.
std::vector<ExactAtom> enumerate_xn(const UrnModel& model, std::int64_t n);

Vec2<Rat> oracle_mean(const UrnModel& model, std::int64_t n);  // exact E[U_n]
Rat oracle_var(const UrnModel& model, std::int64_t n);         // exact Var(X_n)

// E[p_k (1 - p_k)] with p_k = X_k / tau_k, the conditional-variance weight
// entering the quadratic variation
Rat oracle_p_variance_term(const UrnModel& model, std::int64_t k);

// sigma_n and its reciprocal as exact rationals. sigma_n_exact throws
// GammaPole at tau + m = 0; sigma_inv_exact is exactly zero there, which is
// the collapse the mean formula relies on.
Rat sigma_n_exact(const UrnModel& model, std::int64_t n);
Rat sigma_inv_exact(const UrnModel& model, std::int64_t n);

// Mean closed form in rationals: (n+x) v1 + sigma_n^{-1} (q/S) v2, with the
// diagonal-urn reduction (tau_n/tau) (alpha, beta).
Vec2<Rat> closed_mean_exact(const UrnModel& model, std::int64_t n);

// (0,0) entries of E[<M>_n] and E[M_n M_n^T] for the sigma_n-normalized
// deviation martingale M_n; both matrices are this entry times (1 -1; -1 1),
// and since M_0 = 0 the two entries must agree exactly.
Rat oracle_expected_qvar(const UrnModel& model, std::int64_t n);
Rat oracle_expected_mart_sq(const UrnModel& model, std::int64_t n);

}  // namespace polya
