#include "polya/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "polya/formulas.hpp"
#include "polya/rng.hpp"

// Replicate r is a pure function of (master_seed, r), and chunk accumulators
// are merged in chunk-index order after all workers finish, so thread
// scheduling can never reorder arithmetic. Moment updates follow the
// one-pass central-moment recurrences and their pairwise combination rules.

namespace polya {

namespace {

constexpr std::uint64_t kChunkSize = 4096;

struct EvalCtx {
    Functional f = Functional::FinalState;
    Regime regime = Regime::Traditional;
    bool mart_scalar = false;
    double v1x = 0.0;
    double v1y = 0.0;
    double v2x = 0.0;
    double sigma = 0.0;
    double tau = 0.0;
    double growth = 0.0;
    // per checkpoint, 2 E[X_n] - tau_n: subtracting it from X_n - Y_n
    // centers the deviation on the exact mean (ScaledDeviation only)
    std::vector<double> dev_center;
};

EvalCtx make_ctx(const UrnModel& model, Functional f,
                 const std::vector<std::uint64_t>& cps) {
    EvalCtx ctx;
    ctx.f = f;
    ctx.regime = model.regime;
    ctx.mart_scalar = model.regime == Regime::Traditional;
    if (model.eigen_defined) {
        const Vec2<double> v1 = model.v1_double();
        ctx.v1x = v1(0);
        ctx.v1y = v1(1);
        ctx.v2x = model.v2_double()(0);
    }
    ctx.sigma = model.sigma_double();
    ctx.tau = static_cast<double>(model.tau);
    ctx.growth = static_cast<double>(model.S);
    if (f == Functional::ScaledDeviation) {
        ctx.dev_center.reserve(cps.size());
        for (std::uint64_t n : cps) {
            const auto sn = static_cast<std::int64_t>(n);
            const double mean_x = mean_un(model, sn)(0);
            const double total = static_cast<double>(model.total_at(sn));
            ctx.dev_center.push_back(2.0 * mean_x - total);
        }
    }
    return ctx;
}

std::uint64_t min_checkpoint(const EvalCtx& ctx) {
    switch (ctx.f) {
    case Functional::FinalState:
    case Functional::MartingalePath:
        return 0;
    case Functional::ScaledDeviation:
        return ctx.regime == Regime::Critical ? 2 : 1;
    case Functional::WEstimate:
        return 1;
    case Functional::QslSum:
        // log log n must be positive for the critical normalization.
        return ctx.regime == Regime::Critical ? 3 : 2;
    }
    return 0;
}

void validate(const SimConfig& config, const std::vector<std::uint64_t>& cps) {
    if (config.reps < 1) {
        throw std::invalid_argument("reps must be at least 1");
    }
    if (config.horizon < 1) {
        throw std::invalid_argument("horizon must be at least 1");
    }
    check_horizon(config.model, config.horizon);
    for (std::size_t i = 0; i < cps.size(); ++i) {
        if (i > 0 && cps[i] <= cps[i - 1]) {
            throw std::invalid_argument("checkpoints must be strictly increasing");
        }
        if (cps[i] > config.horizon) {
            throw std::invalid_argument("checkpoint past the horizon");
        }
    }
    const Regime reg = config.model.regime;
    switch (config.functional) {
    case Functional::FinalState:
        break;
    case Functional::ScaledDeviation:
        if (reg != Regime::Small && reg != Regime::Critical) {
            throw RegimeMismatch("scaled deviations normalize a CLT below or on the "
                                 "critical line: " +
                                 config.model.describe());
        }
        break;
    case Functional::MartingalePath:
        if (reg != Regime::Traditional && config.model.tau + config.model.m == 0) {
            throw GammaPole("sigma_n is undefined when tau + m = 0: " + config.model.describe());
        }
        break;
    case Functional::WEstimate:
        if (reg != Regime::Large) {
            throw RegimeMismatch("W estimates require the large regime: " +
                                 config.model.describe());
        }
        break;
    case Functional::QslSum:
        if (reg != Regime::Small && reg != Regime::Critical) {
            throw RegimeMismatch("quadratic strong laws hold below or on the critical "
                                 "line: " +
                                 config.model.describe());
        }
        break;
    }
}

double eval_at(const EvalCtx& ctx, std::size_t ci, std::uint64_t n, std::uint64_t x,
               std::uint64_t y, long double sig, long double ex, long double qsum) {
    const double nd = static_cast<double>(n);
    switch (ctx.f) {
    case Functional::FinalState:
        return static_cast<double>(x);
    case Functional::ScaledDeviation: {
        // Center on the exact mean: X_n + Y_n equals E[X_n] + E[Y_n]
        // deterministically, so the components of U_n - E[U_n] cancel exactly
        // and the (1, -1) projection carries everything. Centering on n v1
        // instead would leave a deterministic o(scale) drift along v2 that
        // decays too slowly to ignore at feasible horizons.
        const double d = (static_cast<double>(x) - static_cast<double>(y)) - ctx.dev_center[ci];
        const double scale = ctx.regime == Regime::Critical ? std::sqrt(nd * std::log(nd))
                                                            : std::sqrt(nd);
        return d / (std::sqrt(2.0) * scale);
    }
    case Functional::MartingalePath:
        if (ctx.mart_scalar) {
            return static_cast<double>(x) / (ctx.tau + nd * ctx.growth);
        }
        return static_cast<double>(sig * (static_cast<long double>(x) - ex));
    case Functional::WEstimate:
        return (static_cast<double>(x) - nd * ctx.v1x) / (std::pow(nd, ctx.sigma) * ctx.v2x);
    case Functional::QslSum:
        return static_cast<double>(qsum) /
               (ctx.regime == Regime::Critical ? std::log(std::log(nd)) : std::log(nd));
    }
    return 0.0;
}

void run_replicate(const SimConfig& config, const EvalCtx& ctx,
                   const std::vector<std::uint64_t>& cps, std::uint64_t rep, RunResult& out) {
    RandomStream rng(config.master_seed, rep);
    const UrnModel& model = config.model;
    const long double m_ld = static_cast<long double>(model.m);
    const long double c_ld = static_cast<long double>(model.c);
    const long double tau_ld = static_cast<long double>(model.tau);
    const long double growth_ld = static_cast<long double>(model.S);

    long double sig = 1.0L;                                // sigma_n
    long double ex = static_cast<long double>(model.alpha); // E[X_n]
    long double qsum = 0.0L;
    long double qcomp = 0.0L;
    std::size_t ci = 0;

    const UrnState start = initial_state(model);
    while (ci < cps.size() && cps[ci] == 0) {
        out.checkpoints[ci].values[rep] = eval_at(ctx, ci, 0, start.X, start.Y, sig, ex, qsum);
        ++ci;
    }

    const bool track_mart = ctx.f == Functional::MartingalePath && !ctx.mart_scalar;
    const bool track_qsl = ctx.f == Functional::QslSum;
    const bool crit = ctx.regime == Regime::Critical;

    simulate_observe(model, config.horizon, rng,
                     [&](const UrnState& prev, bool, const UrnState& next) {
                         if (track_mart) {
                             const long double tn = tau_ld + static_cast<long double>(prev.n) * growth_ld;
                             sig *= tn / (tn + m_ld);
                             ex = ex * (1.0L + m_ld / tn) + c_ld;
                         } else if (track_qsl) {
                             const std::uint64_t k = next.n;
                             if (!crit || k >= 2) {
                                 const long double kd = static_cast<long double>(k);
                                 const long double d =
                                     static_cast<long double>(next.X) - kd * ctx.v1x;
                                 const long double norm2 = d * d + (d - tau_ld) * (d - tau_ld);
                                 const long double denom = crit ? kd * std::log(kd) : kd;
                                 const long double term = norm2 / (denom * denom) - qcomp;
                                 const long double sum = qsum + term;
                                 qcomp = (sum - qsum) - term;
                                 qsum = sum;
                             }
                         }
                         if (ci < cps.size() && next.n == cps[ci]) {
                             out.checkpoints[ci].values[rep] =
                                 eval_at(ctx, ci, next.n, next.X, next.Y, sig, ex, qsum);
                             ++ci;
                         }
                     });
}

} // namespace

void MomentAccumulator::add(double x) {
    const double n1 = static_cast<double>(count);
    ++count;
    const double n = static_cast<double>(count);
    const double delta = x - mean;
    const double dn = delta / n;
    const double dn2 = dn * dn;
    const double term1 = delta * dn * n1;
    mean += dn;
    m4 += term1 * dn2 * (n * n - 3.0 * n + 3.0) + 6.0 * dn2 * m2 - 4.0 * dn * m3;
    m3 += term1 * dn * (n - 2.0) - 3.0 * dn * m2;
    m2 += term1;
}

void MomentAccumulator::merge(const MomentAccumulator& other) {
    if (other.count == 0) {
        return;
    }
    if (count == 0) {
        *this = other;
        return;
    }
    const double na = static_cast<double>(count);
    const double nb = static_cast<double>(other.count);
    const double n = na + nb;
    const double delta = other.mean - mean;
    const double d2 = delta * delta;
    const double m4n = m4 + other.m4 +
                       d2 * d2 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
                       6.0 * d2 * (na * na * other.m2 + nb * nb * m2) / (n * n) +
                       4.0 * delta * (na * other.m3 - nb * m3) / n;
    const double m3n = m3 + other.m3 + delta * d2 * na * nb * (na - nb) / (n * n) +
                       3.0 * delta * (na * other.m2 - nb * m2) / n;
    mean += delta * nb / n;
    m2 += other.m2 + d2 * na * nb / n;
    m3 = m3n;
    m4 = m4n;
    count += other.count;
}

double MomentAccumulator::variance() const {
    return count >= 2 ? m2 / static_cast<double>(count - 1) : 0.0;
}

double MomentAccumulator::std_error_mean() const {
    return count >= 1 ? std::sqrt(variance() / static_cast<double>(count)) : 0.0;
}

double MomentAccumulator::skewness() const {
    if (count < 2 || m2 <= 0.0) {
        return 0.0;
    }
    const double n = static_cast<double>(count);
    return std::sqrt(n) * m3 / std::pow(m2, 1.5);
}

double MomentAccumulator::kurtosis() const {
    if (count < 2 || m2 <= 0.0) {
        return 0.0;
    }
    const double n = static_cast<double>(count);
    return n * m4 / (m2 * m2);
}

RunResult run(const SimConfig& config) {
    const std::vector<std::uint64_t> cps =
        config.checkpoints.empty() ? std::vector<std::uint64_t>{config.horizon}
                                   : config.checkpoints;
    validate(config, cps);
    const EvalCtx ctx = make_ctx(config.model, config.functional, cps);
    if (!cps.empty() && cps.front() < min_checkpoint(ctx)) {
        throw std::invalid_argument("checkpoint below the functional's smallest valid step");
    }

    RunResult out;
    out.checkpoints.resize(cps.size());
    for (std::size_t i = 0; i < cps.size(); ++i) {
        out.checkpoints[i].n = cps[i];
        out.checkpoints[i].values.assign(config.reps, 0.0);
    }

    const std::uint64_t nchunks = (config.reps + kChunkSize - 1) / kChunkSize;
    std::vector<std::vector<MomentAccumulator>> chunk_acc(
        nchunks, std::vector<MomentAccumulator>(cps.size()));
    std::atomic<std::uint64_t> cursor{0};
    auto work = [&]() {
        for (;;) {
            const std::uint64_t chunk = cursor.fetch_add(1);
            if (chunk >= nchunks) {
                return;
            }
            const std::uint64_t lo = chunk * kChunkSize;
            const std::uint64_t hi = std::min(config.reps, lo + kChunkSize);
            for (std::uint64_t r = lo; r < hi; ++r) {
                run_replicate(config, ctx, cps, r, out);
                for (std::size_t i = 0; i < cps.size(); ++i) {
                    chunk_acc[chunk][i].add(out.checkpoints[i].values[r]);
                }
            }
        }
    };

    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t hw = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t nthreads = std::min<std::uint64_t>(hw, nchunks);
    if (nthreads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (std::uint64_t t = 0; t < nthreads; ++t) {
            pool.emplace_back(work);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.total_steps = config.reps * config.horizon;

    for (std::uint64_t chunk = 0; chunk < nchunks; ++chunk) {
        for (std::size_t i = 0; i < cps.size(); ++i) {
            out.checkpoints[i].moments.merge(chunk_acc[chunk][i]);
        }
    }
    return out;
}

std::vector<double> w_estimate(const SimConfig& config) {
    SimConfig cfg = config;
    cfg.functional = Functional::WEstimate;
    cfg.checkpoints = {config.horizon};
    RunResult res = run(cfg);
    return std::move(res.checkpoints.back().values);
}

} // namespace polya
