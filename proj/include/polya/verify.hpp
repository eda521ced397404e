#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polya/model.hpp"

// Statistical verification suite: turns the limit theorems into seeded,
// deterministic pass/fail records, plus exact small-horizon gates against
// the enumeration oracle. Every record names its gate, carries the seed and
// sample sizes that produced it, quotes its standard errors in the notes,
// and passes exactly when |statistic - reference| <= tolerance. Checks are
// independent of each other; each owns its replication run.

namespace polya {

struct VerifyReport {
    std::string name;        // gate name, e.g. "clt_var"
    double statistic = 0.0;  // measured value
    double reference = 0.0;  // target value
    double tolerance = 0.0;  // acceptance half-width in the same units
    bool pass = false;       // |statistic - reference| <= tolerance
    std::uint64_t seed = 0;  // master seed of the run (0 for exact gates)
    std::uint64_t reps = 0;  // replicates (0 for exact gates, 1 for paths)
    std::uint64_t horizon = 0;
    std::string notes;       // model, standard errors, caveats
};

// One JSON object per line, keys in schema order (name, statistic,
// reference, tolerance, pass, seed, reps, horizon, notes). Deterministic:
// equal reports serialize to equal bytes.
std::string to_json_line(const VerifyReport& report);

// The fixed model grid: diagonal (1,0,0,1), small (2,1,1,2), critical
// (3,1,1,3), large (4,1,1,4), each with initial compositions (1,1), (2,1).
std::vector<UrnModel> verification_grid();

// Exact gates against the exhaustive enumeration over the whole grid: law
// mass, closed-form means in rationals and doubles, variances, and the
// quadratic-variation identity E[<M>_n] = E[M_n M_n^T]. No randomness.
std::vector<VerifyReport> check_oracle();

// Diagonal urns: KS distance of the fraction M_n from its limit
// Beta(alpha/S, beta/S) at the 1% critical value, plus the martingale mean
// gate E[M_n] = alpha/tau. Throws RegimeMismatch off the diagonal and
// DegenerateUrn when one color is absent.
std::vector<VerifyReport> check_beta_limit(const UrnModel& model, std::uint64_t n,
                                           std::uint64_t reps, std::uint64_t seed);

// Diagonal urns: the standardized late-time increment
// sqrt(n) (M_N - M_n) / sqrt(M_n (1 - M_n)) against N(0, 1): variance,
// mean, KS, kurtosis. M_N proxies the almost-sure limit; requires
// N >= 100 n (DegenerateProxy otherwise).
std::vector<VerifyReport> check_traditional_clt(const UrnModel& model, std::uint64_t n,
                                                std::uint64_t big_n, std::uint64_t reps,
                                                std::uint64_t seed);

// Small and critical urns: the (1,-1)/sqrt(2) projection of the scaled
// deviation against N(0, 2 gamma): variance, KS, and the exact cancellation
// of the (1,1) projection. Throws RegimeMismatch elsewhere, DegenerateUrn
// when bc = 0.
std::vector<VerifyReport> check_clt(const UrnModel& model, std::uint64_t n,
                                    std::uint64_t reps, std::uint64_t seed);

// Quadratic strong law along one path: the log-normalized sum of squared
// deviations within 25% of its almost-sure limit. Requires horizon >= 10^6
// (invalid_argument below); regime errors as check_clt.
std::vector<VerifyReport> check_qsl(const UrnModel& model, std::uint64_t horizon,
                                    std::uint64_t seed);

// Iterated-logarithm diagnostic: running sup of the normalized squared
// deviation alongside the limsup constant. Never gates: pass is always
// true and the tolerance field records the observed gap.
std::vector<VerifyReport> lil_diagnostic(const UrnModel& model, std::uint64_t horizon,
                                         std::uint64_t seed);

// Large urns: sample mean and second moment of the W estimator against the
// exact finite-horizon moments (limit moments quoted in notes), plus one
// path checking U_n/n against v1 within 1% at horizon 10^6.
std::vector<VerifyReport> check_large_urn(const UrnModel& model, std::uint64_t n,
                                          std::uint64_t reps, std::uint64_t seed);

// The whole suite over the grid at production sample sizes. Each check
// instance derives its own master seed from the one given, so no two share
// random streams; the same seed yields byte-identical reports.
std::vector<VerifyReport> verify_all(std::uint64_t seed);

// One named slice of the suite (oracle, beta, tradclt, clt, qsl, lil, large)
// or "all". Slices keep the per-instance seed offsets of the full suite, so
// a slice rerun reproduces the corresponding records bit for bit. Throws
// std::invalid_argument for an unknown selector.
std::vector<VerifyReport> verify_selected(const std::string& selector, std::uint64_t seed);

} // namespace polya
