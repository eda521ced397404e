#include "polya/martingale.hpp"

// The path builders run per-step recurrences in long double: sigma_n via its
// defining product, E[X_n] via E[X_{n+1}] = E[X_n](1 + m/tau_n) + c. Each
// step adds one rounding, so the drift stays below ~n * 5e-19 relative,
// orders under the 1e-9 reconstruction tolerance used in tests even at the
// 1e6 horizons the diagnostics run at.

namespace polya {

QvarAccumulator::QvarAccumulator(const UrnModel& model)
    : tau_(model.tau),
      S_(model.S),
      m_(model.m),
      m2_(static_cast<long double>(model.m) * static_cast<long double>(model.m)) {
    if (model.tau + model.m == 0) {
        throw GammaPole("sigma_n is undefined when tau + m = 0: " + model.describe());
    }
}

void QvarAccumulator::push(std::uint64_t x_before_draw) {
    const long double tk = static_cast<long double>(tau_) + static_cast<long double>(k_) * S_;
    sig_ *= tk / (tk + m_);
    const long double p = static_cast<long double>(x_before_draw) / tk;
    const long double term = m2_ * sig_ * sig_ * p * (1.0L - p) - comp_;
    const long double next = sum_ + term;
    comp_ = (next - sum_) - term;
    sum_ = next;
    ++k_;
}

MartingalePath traditional_mart(const Trajectory& traj) {
    const UrnModel& model = traj.model;
    if (model.regime != Regime::Traditional) {
        throw RegimeMismatch("proportion martingale needs a diagonal replacement matrix: " +
                             model.describe());
    }
    MartingalePath path;
    path.is_scalar = true;
    const std::size_t len = traj.states.size();
    path.scalar_values.reserve(len);
    path.scalar_qvar.reserve(len);

    long double qv = 0.0L;
    long double comp = 0.0L;
    const long double s2 = static_cast<long double>(model.S) * static_cast<long double>(model.S);
    path.scalar_values.push_back(static_cast<double>(
        static_cast<long double>(model.alpha) / static_cast<long double>(model.tau)));
    path.scalar_qvar.push_back(0.0);
    for (std::size_t i = 0; i + 1 < len; ++i) {
        const long double tn = static_cast<long double>(model.total_at(static_cast<std::int64_t>(i)));
        const long double tn1 =
            static_cast<long double>(model.total_at(static_cast<std::int64_t>(i) + 1));
        const long double mk = static_cast<long double>(traj.states[i].X) / tn;
        const long double term = s2 * mk * (1.0L - mk) / (tn1 * tn1) - comp;
        const long double next = qv + term;
        comp = (next - qv) - term;
        qv = next;
        path.scalar_values.push_back(
            static_cast<double>(static_cast<long double>(traj.states[i + 1].X) / tn1));
        path.scalar_qvar.push_back(static_cast<double>(qv));
    }
    return path;
}

MartingalePath generalized_mart(const Trajectory& traj) {
    const UrnModel& model = traj.model;
    if (model.regime == Regime::Traditional) {
        throw RegimeMismatch("normalized deviation martingale degenerates on diagonal urns; "
                             "use traditional_mart: " +
                             model.describe());
    }
    MartingalePath path;
    path.is_scalar = false;
    const std::size_t len = traj.states.size();
    path.values.reserve(len);
    path.qvar.reserve(len);

    QvarAccumulator acc(model);
    long double sig = 1.0L;                               // sigma_n
    long double ex = static_cast<long double>(model.alpha); // E[X_n]
    path.values.push_back(Vec2<double>{0.0, 0.0});        // sigma_0 (X_0 - E[X_0]) = 0
    path.qvar.push_back(0.0);
    for (std::size_t i = 0; i + 1 < len; ++i) {
        const long double tn = static_cast<long double>(model.total_at(static_cast<std::int64_t>(i)));
        acc.push(traj.states[i].X);
        sig *= tn / (tn + model.m);
        ex = ex * (1.0L + static_cast<long double>(model.m) / tn) + static_cast<long double>(model.c);
        const double v =
            static_cast<double>(sig * (static_cast<long double>(traj.states[i + 1].X) - ex));
        path.values.push_back(Vec2<double>{v, -v});
        path.qvar.push_back(acc.value());
    }
    return path;
}

} // namespace polya
