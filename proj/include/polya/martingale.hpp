#pragma once

#include <cstdint>
#include <vector>

#include "polya/errors.hpp"
#include "polya/model.hpp"
#include "polya/rational.hpp"
#include "polya/simulate.hpp"

// Martingale views of an urn trajectory. Diagonal urns carry the classical
// proportion martingale M_n = X_n / tau_n; every other balanced urn carries
// the normalized deviation M_n = sigma_n (U_n - E[U_n]), whose components sum
// to zero by construction. Both come with their predictable quadratic
// variation so convergence diagnostics can compare realized spread against
// the closed-form envelope m^2 w_n.

namespace polya {

// Streaming accumulator for the (0,0) entry of <M>_n of the normalized
// deviation martingale,
//   <M>_n = m^2 sum_{k=0}^{n-1} sigma_{k+1}^2 p_k (1 - p_k),  p_k = X_k / tau_k.
// The full matrix is that entry times (1 -1; -1 1). Feed it the pre-draw red
// count of each step in order; sigma_{k+1} is maintained by the product
// recurrence and the sum is compensated. Also usable on its own in streaming
// simulation loops where no trajectory is stored.
class QvarAccumulator {
public:
    // Throws GammaPole when tau + m = 0, where sigma_n is undefined.
    explicit QvarAccumulator(const UrnModel& model);

    // Consume X_k (the red count before draw k+1) and advance to step k+1.
    void push(std::uint64_t x_before_draw);

    // (0,0) entry of <M>_n after n pushes.
    double value() const { return static_cast<double>(sum_); }

    std::int64_t steps() const { return k_; }

private:
    std::int64_t tau_;
    std::int64_t S_;
    std::int64_t m_;
    std::int64_t k_ = 0;
    long double m2_;
    long double sig_ = 1.0L; // sigma_k after k pushes
    long double sum_ = 0.0L;
    long double comp_ = 0.0L;
};

// One martingale per regime, sharing a container. is_scalar selects which
// pair of columns is populated.
struct MartingalePath {
    bool is_scalar = false;

    // Diagonal urns: M_n = X_n / tau_n and running sum of the conditional
    // increment variances S^2 M_k (1 - M_k) / tau_{k+1}^2.
    std::vector<double> scalar_values;
    std::vector<double> scalar_qvar;

    // All other balanced urns: M_n = sigma_n (U_n - E[U_n]) and the (0,0)
    // entry of <M>_n. The second component of each value is exactly the
    // negative of the first.
    std::vector<Vec2<double>> values;
    std::vector<double> qvar;
};

// Proportion martingale of a diagonal-urn trajectory. Throws RegimeMismatch
// for any urn with off-diagonal replacement.
MartingalePath traditional_mart(const Trajectory& traj);

// Normalized deviation martingale of a non-diagonal balanced urn. Throws
// RegimeMismatch for diagonal urns (use traditional_mart) and GammaPole when
// tau + m = 0.
MartingalePath generalized_mart(const Trajectory& traj);

} // namespace polya
