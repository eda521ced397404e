#include "polya/oracle.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "polya/errors.hpp"

namespace polya {

namespace {

constexpr std::int64_t kMaxHorizon = 12;

void check_cap(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("enumeration horizon must be nonnegative");
    if (n > kMaxHorizon)
        throw TooLarge("exhaustive enumeration walks 2^n paths, capped at n = 12, got n = "
                       + std::to_string(n));
}

void require_off_pole(const UrnModel& model) {
    if (model.tau + model.m == 0)
        throw GammaPole("sigma_n undefined, tau + m = 0 for " + model.describe());
}

void walk(const UrnModel& model, std::int64_t n, std::int64_t k, std::int64_t x,
          const Rat& prob, std::map<std::int64_t, Rat>& law) {
    if (k == n) {
        auto [it, inserted] = law.try_emplace(x, prob);
        if (!inserted) it->second += prob;
        return;
    }
    const std::int64_t total = model.total_at(k);
    if (x > 0) walk(model, n, k + 1, x + model.a, prob * Rat(x, total), law);
    if (x < total) walk(model, n, k + 1, x + model.c, prob * Rat(total - x, total), law);
}

}  // namespace

std::vector<ExactAtom> enumerate_xn(const UrnModel& model, std::int64_t n) {
    check_cap(n);
    std::map<std::int64_t, Rat> law;
    walk(model, n, 0, model.alpha, Rat(1), law);
    std::vector<ExactAtom> atoms;
    atoms.reserve(law.size());
    for (const auto& [x, p] : law) atoms.push_back({x, p});
    return atoms;
}

Vec2<Rat> oracle_mean(const UrnModel& model, std::int64_t n) {
    Rat ex(0);
    for (const auto& a : enumerate_xn(model, n)) ex += Rat(a.x) * a.prob;
    return {ex, Rat(model.total_at(n)) - ex};
}

Rat oracle_var(const UrnModel& model, std::int64_t n) {
    Rat ex(0), exx(0);
    for (const auto& a : enumerate_xn(model, n)) {
        const Rat xr(a.x);
        ex += xr * a.prob;
        exx += xr * xr * a.prob;
    }
    return exx - ex * ex;
}

Rat oracle_p_variance_term(const UrnModel& model, std::int64_t k) {
    const Rat total(model.total_at(k));
    Rat out(0);
    for (const auto& a : enumerate_xn(model, k)) {
        const Rat p = Rat(a.x) / total;
        out += p * (Rat(1) - p) * a.prob;
    }
    return out;
}

Rat sigma_inv_exact(const UrnModel& model, std::int64_t n) {
    Rat out(1);
    for (std::int64_t k = 0; k < n; ++k) {
        const std::int64_t tk = model.total_at(k);
        out *= Rat(tk + model.m, tk);
    }
    return out;
}

Rat sigma_n_exact(const UrnModel& model, std::int64_t n) {
    require_off_pole(model);
    return Rat(1) / sigma_inv_exact(model, n);
}

Vec2<Rat> closed_mean_exact(const UrnModel& model, std::int64_t n) {
    if (model.regime == Regime::Traditional) {
        const Rat scale(model.total_at(n), model.tau);
        return {Rat(model.alpha) * scale, Rat(model.beta) * scale};
    }
    const Rat nx = Rat(n) + model.x();
    const Rat qs(model.q(), model.S);
    const Rat si = sigma_inv_exact(model, n);
    return {nx * model.v1[0] + si * qs * model.v2[0],
            nx * model.v1[1] + si * qs * model.v2[1]};
}

Rat oracle_expected_qvar(const UrnModel& model, std::int64_t n) {
    if (n <= 0) return Rat(0);
    check_cap(n - 1);  // deepest enumeration below
    require_off_pole(model);
    const Rat m2(model.m * model.m);
    Rat out(0);
    Rat sig(1);
    for (std::int64_t k = 0; k < n; ++k) {
        const std::int64_t tk = model.total_at(k);
        sig *= Rat(tk, tk + model.m);  // sigma_{k+1}
        out += m2 * sig * sig * oracle_p_variance_term(model, k);
    }
    return out;
}

Rat oracle_expected_mart_sq(const UrnModel& model, std::int64_t n) {
    if (n <= 0) return Rat(0);
    const Rat sig = sigma_n_exact(model, n);
    return sig * sig * oracle_var(model, n);
}

}  // namespace polya
