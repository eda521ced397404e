#pragma once

#include <cstdint>
#include <vector>

#include "polya/errors.hpp"
#include "polya/model.hpp"
#include "polya/simulate.hpp"

// Replication harness. Runs R independent trajectories on counter-based
// streams keyed by (master_seed, replicate index), evaluates one functional
// per replicate at each checkpoint, and aggregates with mergeable moment
// accumulators. Replicates are processed in fixed-size chunks whose partial
// accumulators are merged in chunk order, so results are bit-identical for
// any worker thread count.

namespace polya {

// Per-replicate scalar evaluated at each checkpoint n.
//   FinalState       X_n
//   ScaledDeviation  ((X_n - E[X_n]) - (Y_n - E[Y_n])) / (sqrt(2) s(n)) with
//                    s(n) = sqrt(n) below the critical line and sqrt(n log n)
//                    on it; X_n + Y_n is deterministic, so the components of
//                    U_n - E[U_n] cancel exactly and the variance converges
//                    to the (1,-1)/sqrt(2) projection of the limit covariance
//   MartingalePath   martingale value: X_n / tau_n for diagonal urns,
//                    first component of sigma_n (U_n - E[U_n]) otherwise
//   WEstimate        (X_n - n v1_x) / (n^sigma v2_x), the scalar coefficient
//                    along v2 whose limit is W (large urns only)
//   QslSum           running quadratic sum of squared deviations with its
//                    regime's log normalization (small and critical urns)
enum class Functional { FinalState, ScaledDeviation, MartingalePath, WEstimate, QslSum };

struct SimConfig {
    UrnModel model;
    std::uint64_t horizon = 1;
    std::uint64_t reps = 1;
    std::uint64_t master_seed = 0;
    Functional functional = Functional::FinalState;
    std::vector<std::uint64_t> checkpoints; // strictly increasing, <= horizon; empty means {horizon}
};

// Streaming central moments with pairwise merge, exact in count and stable
// in mean/M2..M4, so chunked parallel aggregation reproduces the one-pass
// result to rounding.
struct MomentAccumulator {
    std::uint64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;
    double m3 = 0.0;
    double m4 = 0.0;

    void add(double x);
    void merge(const MomentAccumulator& other);

    double variance() const;       // sample variance, 0 below two observations
    double std_error_mean() const; // sqrt(variance / count)
    double skewness() const;
    double kurtosis() const;       // plain (not excess); 3 for a Gaussian
};

struct CheckpointStats {
    std::uint64_t n = 0;
    MomentAccumulator moments;
    std::vector<double> values; // one per replicate, in replicate order
};

struct RunResult {
    std::vector<CheckpointStats> checkpoints;
    std::uint64_t total_steps = 0;
    double seconds = 0.0;

    double steps_per_second() const { return seconds > 0.0 ? total_steps / seconds : 0.0; }
};

// Runs the full replication. Deterministic given config: replicate r always
// draws from stream r and aggregation order is fixed. Throws
// invalid_argument on malformed configs, OverflowHorizon past the ball-count
// cap, RegimeMismatch when the functional does not apply to the model's
// regime, and GammaPole for the sigma_n-normalized martingale at tau+m=0.
RunResult run(const SimConfig& config);

// The W sample: per replicate, the coefficient of (U_n - n v1) along v2 at
// the horizon. Large regime only.
std::vector<double> w_estimate(const SimConfig& config);

} // namespace polya
