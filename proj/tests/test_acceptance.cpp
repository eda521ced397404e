// Acceptance gate: one test per shipped guarantee, each printing a single
// ACCEPTANCE line with the measured numbers so a log scan shows the whole
// contract at a glance. Everything runs through public entry points; exact
// references come from the enumeration oracle and from constants frozen out
// of an independent high-precision evaluation, and every statistical check
// runs at a pinned seed recorded next to the call.

#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "data/reference_values.h"
#include "polya/formulas.hpp"
#include "polya/model.hpp"
#include "polya/oracle.hpp"
#include "polya/verify.hpp"

namespace {

using namespace polya;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// printed before the gates fire so a FAIL still shows its numbers
void report_line(int idx, const char* name, bool pass, const std::string& detail) {
    std::printf("ACCEPTANCE %02d %-22s %s (%s)\n", idx, name, pass ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
}

const testdata::ModelRef& frozen(const char* name) {
    for (const auto& m : testdata::kModels)
        if (std::strcmp(m.name, name) == 0) return m;
    FAIL("no frozen reference named " << name);
    return testdata::kModels[0];
}

const VerifyReport& record(const std::vector<VerifyReport>& reports, const char* name) {
    for (const auto& r : reports)
        if (r.name == name) return r;
    FAIL("no record named " << name);
    return reports.front();
}

double rel(double value, double reference) {
    return std::abs(value - reference) / std::abs(reference);
}

}  // namespace

TEST_CASE("acceptance: closed-form mean equals exhaustive enumeration", "[acceptance]") {
    Timer t;
    const auto grid = verification_grid();
    int checked = 0;
    int mismatched = 0;
    for (const auto& model : grid)
        for (std::int64_t n = 1; n <= 10; ++n) {
            const Vec2<Rat> closed = closed_mean_exact(model, n);
            const Vec2<Rat> walked = oracle_mean(model, n);
            ++checked;
            if (!(closed(0) == walked(0) && closed(1) == walked(1))) ++mismatched;
        }
    const double sec = t.seconds();
    const bool pass = mismatched == 0 && sec < 10.0;
    report_line(1, "mean_vs_enumeration", pass,
                std::to_string(checked) + " exact rational comparisons over 8 models, n = 1..10, " +
                    fmt(sec) + " s");
    REQUIRE(mismatched == 0);
    REQUIRE(sec < 10.0);
}

TEST_CASE("acceptance: sigma_n dual forms agree and approach lambda", "[acceptance]") {
    Timer t;
    const auto grid = verification_grid();
    double worst_form_gap = 0.0;    // product vs Gamma form, every n up to 1e4
    double worst_lambda_gap = 0.0;  // n^sigma sigma_n vs lambda at n = 1e6
    for (const auto& model : grid) {
        SigmaProductSeries series(model);
        for (std::int64_t n = 1; n <= 10000; ++n) {
            series.advance();
            const double g = sigma_n_gamma(model, n);
            worst_form_gap = std::max(worst_form_gap, rel(series.value(), g));
        }
        const double lambda = lambda_limit(model);
        const double scaled = std::pow(1e6, model.sigma_double()) * sigma_n(model, 1000000);
        worst_lambda_gap = std::max(worst_lambda_gap, rel(scaled, lambda));
    }
    const double sec = t.seconds();
    const bool pass = worst_form_gap < 1e-12 && worst_lambda_gap < 1e-3 && sec < 5.0;
    report_line(2, "sigma_dual_form", pass,
                "max form gap " + fmt(worst_form_gap) + ", max lambda gap " +
                    fmt(worst_lambda_gap) + ", 8 models, " + fmt(sec) + " s");
    REQUIRE(worst_form_gap < 1e-12);
    REQUIRE(worst_lambda_gap < 1e-3);
    REQUIRE(sec < 5.0);
}

TEST_CASE("acceptance: w_n settles on its regime asymptote", "[acceptance]") {
    Timer t;
    const auto grid = verification_grid();
    const double big_n = static_cast<double>(testdata::kWBigN);

    // small regime: w_n / n^(1-2 sigma) -> lambda^2 / (1-2 sigma)
    const auto& small = grid[2];
    const auto& small_ref = frozen("small");
    const double small_stat =
        w_n(small, testdata::kWBigN) / std::pow(big_n, 1.0 - 2.0 * small.sigma_double());
    const double small_gap = rel(small_stat, small_ref.asymptote);
    const double small_tie = rel(w_asymptote(small), small_ref.asymptote);

    // critical line: w_n / log n -> lambda^2
    const auto& critical = grid[4];
    const auto& critical_ref = frozen("critical");
    const double critical_stat = w_n(critical, testdata::kWBigN) / std::log(big_n);
    const double critical_gap = rel(critical_stat, w_asymptote(critical));
    const double critical_tie = rel(w_asymptote(critical), critical_ref.asymptote);

    // large regime: w_n converges outright, so gate the finite sum against
    // the frozen partial sum and the asymptote against the frozen series total
    const auto& large = grid[6];
    const auto& large_ref = frozen("large");
    const double large_sum = w_n(large, testdata::kWBigN);
    const double large_gap = rel(large_sum, large_ref.w_big);
    const double large_tie = rel(w_asymptote(large), large_ref.asymptote);
    const bool large_coherent = large_sum < w_asymptote(large);

    const double sec = t.seconds();
    const bool pass = small_gap < 0.01 && small_tie < 1e-12 && critical_gap < 0.02 &&
                      critical_tie < 1e-12 && large_gap < 1e-6 && large_tie < 1e-6 &&
                      large_coherent && sec < 10.0;
    report_line(3, "w_trichotomy", pass,
                "small " + fmt(small_stat) + " vs " + fmt(small_ref.asymptote) + ", critical " +
                    fmt(critical_stat) + " vs " + fmt(w_asymptote(critical)) + ", large " +
                    fmt(large_sum) + " -> " + fmt(w_asymptote(large)) + ", " + fmt(sec) + " s");
    REQUIRE(small_gap < 0.01);
    REQUIRE(small_tie < 1e-12);
    REQUIRE(critical_gap < 0.02);
    REQUIRE(critical_tie < 1e-12);
    REQUIRE(large_gap < 1e-6);
    REQUIRE(large_tie < 1e-6);
    REQUIRE(large_coherent);
    REQUIRE(sec < 10.0);
}

TEST_CASE("acceptance: diagonal urn fraction converges to the Beta law", "[acceptance]") {
    Timer t;
    const auto grid = verification_grid();
    const auto reports = check_beta_limit(grid[0], 10000, 10000, 1042);
    const auto& ks = record(reports, "beta_limit_ks");
    const double sec = t.seconds();
    const bool pass = ks.pass && sec < 60.0;
    report_line(4, "beta_limit", pass,
                "KS " + fmt(ks.statistic) + " vs 1% critical " + fmt(ks.tolerance) +
                    ", Beta(1, 1), n = 1e4, 1e4 reps, seed 1042, " + fmt(sec) + " s");
    REQUIRE(ks.pass);
    REQUIRE(sec < 60.0);
}

TEST_CASE("acceptance: late-time fluctuations of the fraction are normal", "[acceptance]") {
    Timer t;
    const auto grid = verification_grid();
    const auto reports = check_traditional_clt(grid[0], 1000, 100000, 10000, 3042);
    const auto& var = record(reports, "trad_clt_var");
    const auto& ks = record(reports, "trad_clt_ks");
    const double sec = t.seconds();
    const bool pass = var.pass && ks.pass && sec < 300.0;
    report_line(5, "late_time_normality", pass,
                "var " + fmt(var.statistic) + " in 1 +- 0.05, KS " + fmt(ks.statistic) +
                    " vs 1% critical " + fmt(ks.tolerance) + ", seed 3042, " + fmt(sec) + " s");
    REQUIRE(var.reference == 1.0);
    REQUIRE(var.tolerance == 0.05);
    REQUIRE(var.pass);
    REQUIRE(ks.pass);
    REQUIRE(sec < 300.0);
}

TEST_CASE("acceptance: scaled deviation is normal below the critical line", "[acceptance]") {
    Timer t;
    const auto grid = verification_grid();
    const auto reports = check_clt(grid[2], 100000, 10000, 5042);
    const auto& var = record(reports, "clt_var");
    const double sec = t.seconds();
    const bool pass = var.pass && sec < 300.0;
    report_line(6, "small_clt", pass,
                "projected var " + fmt(var.statistic) + " vs 3/2 +- 5%, sqrt(n) scale, n = 1e5, "
                    "1e4 reps, seed 5042, " + fmt(sec) + " s");
    REQUIRE(var.reference == Catch::Approx(1.5));
    REQUIRE(var.pass);
    REQUIRE(sec < 300.0);
}

TEST_CASE("acceptance: scaled deviation is normal on the critical line", "[acceptance]") {
    Timer t;
    const auto grid = verification_grid();
    const auto reports = check_clt(grid[4], 100000, 10000, 7042);
    const auto& var = record(reports, "clt_var");
    const double sec = t.seconds();
    const bool pass = var.pass && sec < 300.0;
    report_line(7, "critical_clt", pass,
                "projected var " + fmt(var.statistic) + " vs 2 +- 5%, sqrt(n log n) scale, "
                    "n = 1e5, 1e4 reps, seed 7042, " + fmt(sec) + " s");
    REQUIRE(var.reference == Catch::Approx(2.0));
    REQUIRE(var.notes.find("sqrt(n log n)") != std::string::npos);
    REQUIRE(var.pass);
    REQUIRE(sec < 300.0);
}

TEST_CASE("acceptance: quadratic strong law on a single path", "[acceptance]") {
    const auto grid = verification_grid();
    Timer t_small;
    const auto small = check_qsl(grid[2], 1000000, 9043);
    const double sec_small = t_small.seconds();
    Timer t_critical;
    const auto critical = check_qsl(grid[4], 1000000, 21010);
    const double sec_critical = t_critical.seconds();
    const auto& s = record(small, "qsl_limit");
    const auto& c = record(critical, "qsl_limit");
    const bool pass = s.pass && c.pass && sec_small < 60.0 && sec_critical < 60.0;
    report_line(8, "quadratic_strong_law", pass,
                "small " + fmt(s.statistic) + " vs 3/2 +- 25% at seed 9043, critical " +
                    fmt(c.statistic) + " vs 2 +- 25% at seed 21010, n = 1e6, " +
                    fmt(sec_small + sec_critical) + " s");
    REQUIRE(s.reference == Catch::Approx(1.5));
    REQUIRE(c.reference == Catch::Approx(2.0));
    REQUIRE(s.pass);
    REQUIRE(c.pass);
    REQUIRE(sec_small < 60.0);
    REQUIRE(sec_critical < 60.0);
}

TEST_CASE("acceptance: large urn limit moments and almost-sure direction", "[acceptance]") {
    Timer t;
    const auto grid = verification_grid();
    const auto reports = check_large_urn(grid[6], 100000, 100000, 17042);
    const auto& mean = record(reports, "large_w_mean");
    const auto& second = record(reports, "large_w_second");
    const auto& path = record(reports, "large_v1_path");
    const double sec = t.seconds();
    // E[W] = 0 for this model, so the sample mean must sit within its three
    // standard errors of zero as well as of the exact finite-n reference
    const bool mean_near_zero = std::abs(mean.statistic) <= mean.tolerance;
    const bool pass =
        mean.pass && mean_near_zero && second.pass && path.pass && sec < 600.0;
    report_line(9, "large_limit_moments", pass,
                "E[W] " + fmt(mean.statistic) + " +- " + fmt(mean.tolerance) + ", E[W^2] " +
                    fmt(second.statistic) + " vs " + fmt(second.reference) +
                    ", path deviation " + fmt(path.statistic) + " < 1%, 1e5 reps, seed 17042, " +
                    fmt(sec) + " s");
    REQUIRE(mean.pass);
    REQUIRE(mean_near_zero);
    REQUIRE(second.pass);
    REQUIRE(path.pass);
    REQUIRE(sec < 600.0);
}

TEST_CASE("acceptance: iterated-logarithm diagnostic runs and reports", "[acceptance]") {
    Timer t;
    const auto grid = verification_grid();
    const auto small = lil_diagnostic(grid[2], 1000000, 13042);
    const auto critical = lil_diagnostic(grid[4], 1000000, 15042);
    const auto& s = record(small, "lil_sup");
    const auto& c = record(critical, "lil_sup");
    const double sec = t.seconds();
    // the limsup is approached only on exponentially sparse scales, so the
    // diagnostic never gates: it must run, report the closed-form constants,
    // and record the observed gap as its tolerance
    const bool never_gates = s.pass && c.pass &&
                             s.tolerance == std::abs(s.statistic - s.reference) &&
                             c.tolerance == std::abs(c.statistic - c.reference) &&
                             s.notes.find("diagnostic only") != std::string::npos;
    const bool pass = never_gates && sec < 60.0;
    report_line(10, "lil_diagnostic", pass,
                "small sup " + fmt(s.statistic) + " vs constant " + fmt(s.reference) +
                    ", critical sup " + fmt(c.statistic) + " vs constant " + fmt(c.reference) +
                    ", non-gating, " + fmt(sec) + " s");
    REQUIRE(s.reference == Catch::Approx(1.5));
    REQUIRE(c.reference == Catch::Approx(2.0));
    REQUIRE(never_gates);
    REQUIRE(sec < 60.0);
}

TEST_CASE("acceptance: the full verification suite is deterministic", "[acceptance]") {
    Timer t;
    const auto first = verify_all(42);
    const auto second = verify_all(42);
    std::string first_payload;
    std::string second_payload;
    for (const auto& r : first) first_payload += to_json_line(r) + "\n";
    for (const auto& r : second) second_payload += to_json_line(r) + "\n";
    int failed = 0;
    for (const auto& r : first)
        if (!r.pass) ++failed;
    const double sec = t.seconds();
    const bool identical = first_payload == second_payload;
    const bool pass = identical && failed == 0 && first.size() == 44;
    report_line(11, "determinism", pass,
                std::to_string(first.size()) + " records byte-identical across reruns, " +
                    std::to_string(failed) + " failures, seed 42, " + fmt(sec) + " s");
    REQUIRE(first.size() == 44);
    REQUIRE(identical);
    REQUIRE(failed == 0);
}
