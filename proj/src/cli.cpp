// Command-line front end over the library: flag parsing, seed resolution,
// output routing, and the exit-code policy live here; the math stays in the
// library modules. Machine output goes to stdout unless --output names a
// file, in which case stdout carries a short human summary instead.

#include "polya/cli.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polya/errors.hpp"
#include "polya/formulas.hpp"
#include "polya/model.hpp"
#include "polya/rational.hpp"
#include "polya/rng.hpp"
#include "polya/simulate.hpp"
#include "polya/verify.hpp"

namespace polya {

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

int usage_error(const std::string& what, const std::string& hint) {
    std::cerr << "usage error: " << what << "\n";
    std::cerr << "hint: " << hint << "\n";
    return 2;
}

// --seed wins; otherwise POLYA_SEED; otherwise a default that is printed so
// no check ever runs on an unstated seed. Returns false (usage error) only
// for a malformed environment value.
bool resolve_seed(bool flag_given, std::uint64_t flag_value, CliConfig& cfg) {
    if (flag_given) {
        cfg.seed = flag_value;
        cfg.seed_given = true;
        return true;
    }
    if (const char* env = std::getenv("POLYA_SEED")) {
        const std::string text(env);
        std::uint64_t value = 0;
        const char* end = text.data() + text.size();
        const auto [ptr, ec] = std::from_chars(text.data(), end, value);
        if (text.empty() || ec != std::errc{} || ptr != end) {
            std::cerr << "usage error: POLYA_SEED must be a nonnegative integer, got '" << text
                      << "'\n";
            std::cerr << "hint: export POLYA_SEED=42 or pass --seed\n";
            return false;
        }
        cfg.seed = value;
        cfg.seed_given = true;
        std::cerr << "note: seed " << value << " from POLYA_SEED\n";
        return true;
    }
    cfg.seed = kDefaultSeed;
    std::cerr << "note: seed defaulted to " << kDefaultSeed
              << "; set --seed or POLYA_SEED to choose\n";
    return true;
}

int do_simulate(const CliConfig& cfg, const UrnModel& model) {
    std::ofstream file;
    if (!cfg.output.empty()) {
        file.open(cfg.output, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot write " << cfg.output << "\n";
            return 1;
        }
    }
    std::ostream& dst = cfg.output.empty() ? std::cout : file;

    RandomStream rng(cfg.seed, 0);
    dst << "n,X,Y\n";
    const UrnState start = initial_state(model);
    dst << start.n << ',' << start.X << ',' << start.Y << '\n';
    simulate_observe(model, cfg.horizon, rng,
                     [&dst](const UrnState&, bool, const UrnState& next) {
                         dst << next.n << ',' << next.X << ',' << next.Y << '\n';
                     });
    dst.flush();
    if (!dst) {
        std::cerr << "error: short write to " << (cfg.output.empty() ? "stdout" : cfg.output)
                  << "\n";
        return 1;
    }
    if (!cfg.output.empty()) {
        std::cout << "wrote " << (cfg.horizon + 1) << " rows for " << model.describe()
                  << " (seed " << cfg.seed << ") -> " << cfg.output << "\n";
    }
    return 0;
}

int do_moments(const CliConfig& cfg, const UrnModel& model) {
    const MomentReport rep = moment_report(model, static_cast<std::int64_t>(cfg.horizon));
    nlohmann::ordered_json j;
    j["model"] = rep.model;
    j["regime"] = rep.regime;
    j["n"] = rep.n;
    j["sigma_n"] = rep.sigma_n;
    j["sigma_inv"] = rep.sigma_inv;
    j["w_n"] = rep.w_n;
    j["lambda"] = rep.lambda;
    j["asymptote"] = rep.asymptote;
    j["mean"] = nlohmann::ordered_json::array({rep.mean(0), rep.mean(1)});
    j["var_x"] = rep.var_x;
    if (rep.has_clt_cov) {
        j["clt_cov"] = nlohmann::ordered_json::array(
            {nlohmann::ordered_json::array({rep.clt_cov(0, 0), rep.clt_cov(0, 1)}),
             nlohmann::ordered_json::array({rep.clt_cov(1, 0), rep.clt_cov(1, 1)})});
    } else {
        j["clt_cov"] = nullptr;
    }
    if (rep.has_large) {
        j["large"] = {{"ew", rep.large.ew}, {"ew2", rep.large.ew2}, {"em2", rep.large.em2}};
    } else {
        j["large"] = nullptr;
    }
    const std::string payload = j.dump() + "\n";

    if (cfg.output.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!(file << payload).flush()) {
        std::cerr << "error: cannot write " << cfg.output << "\n";
        return 1;
    }
    std::cout << "wrote moment report for " << rep.model << " at n = " << rep.n << " -> "
              << cfg.output << "\n";
    return 0;
}

int do_regime(const UrnModel& model) {
    std::cout << regime_name(model.regime) << " (σ = " << model.sigma.to_string() << ")\n";
    if (model.regime == Regime::Traditional) {
        std::cout << "w_n asymptote: none; X_n / tau_n is already a bounded martingale\n";
        return 0;
    }
    try {
        const double c = w_asymptote(model);
        if (model.regime == Regime::Small) {
            const Rat expo(model.S - 2 * model.m, model.S);
            std::cout << "w_n / n^(" << expo.to_string() << ") -> " << fmt(c) << "\n";
        } else if (model.regime == Regime::Critical) {
            std::cout << "w_n / log n -> " << fmt(c) << "\n";
        } else {
            std::cout << "w_n -> " << fmt(c) << " (convergent series)\n";
        }
    } catch (const UrnError& e) {
        std::cout << "w_n asymptote: undefined (" << e.what() << ")\n";
    }
    return 0;
}

// Single-model verify: the chosen check on the given urn at its default
// sample sizes unless --horizon/--reps override them.
std::vector<VerifyReport> run_single_model(const CliConfig& cfg, const UrnModel& model) {
    const std::string& sel = cfg.selector;
    auto pick = [](std::uint64_t flag, std::uint64_t fallback) {
        return flag != 0 ? flag : fallback;
    };
    if (sel == "beta") {
        return check_beta_limit(model, pick(cfg.horizon, 10000), pick(cfg.reps, 10000),
                                cfg.seed);
    }
    if (sel == "tradclt") {
        const std::uint64_t n = pick(cfg.horizon, 1000);
        return check_traditional_clt(model, n, 100 * n, pick(cfg.reps, 10000), cfg.seed);
    }
    if (sel == "clt") {
        return check_clt(model, pick(cfg.horizon, 100000), pick(cfg.reps, 10000), cfg.seed);
    }
    if (sel == "qsl") {
        return check_qsl(model, pick(cfg.horizon, 1000000), cfg.seed);
    }
    if (sel == "lil") {
        return lil_diagnostic(model, pick(cfg.horizon, 1000000), cfg.seed);
    }
    return check_large_urn(model, pick(cfg.horizon, 100000), pick(cfg.reps, 20000), cfg.seed);
}

int do_verify(const CliConfig& cfg, const UrnModel* model) {
    const std::vector<VerifyReport> records =
        model ? run_single_model(cfg, *model) : verify_selected(cfg.selector, cfg.seed);

    std::string payload;
    std::size_t gating = 0, passed = 0, diagnostic = 0;
    for (const auto& r : records) {
        payload += to_json_line(r);
        payload += '\n';
        if (r.name == "lil_sup") {
            // Diagnostic records report constants and never gate the run.
            ++diagnostic;
            continue;
        }
        ++gating;
        if (r.pass) ++passed;
    }
    const bool ok = passed == gating;

    if (cfg.output.empty()) {
        std::cout << payload;
        return ok ? 0 : 1;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!(file << payload).flush()) {
        std::cerr << "error: cannot write " << cfg.output << "\n";
        return 1;
    }
    for (const auto& r : records) {
        char line[192];
        std::snprintf(line, sizeof(line), "%s %-20s %s vs %s (tol %s)\n",
                      r.pass ? "  ok" : "FAIL", r.name.c_str(), fmt(r.statistic).c_str(),
                      fmt(r.reference).c_str(), fmt(r.tolerance).c_str());
        std::cout << line;
    }
    std::cout << (ok ? "passed " : "FAILED: passed ") << passed << " of " << gating
              << " gating records";
    if (diagnostic > 0) std::cout << " (+" << diagnostic << " diagnostic)";
    std::cout << ", seed " << cfg.seed << " -> " << cfg.output << "\n";
    return ok ? 0 : 1;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CliConfig cfg;
    std::uint64_t seed_flag = 0;

    CLI::App app{"balanced two-color urn: simulate, evaluate closed forms, verify limit laws"};
    app.require_subcommand(1);

    auto* sim = app.add_subcommand("simulate", "sample one trajectory, CSV rows n,X,Y");
    auto* mom = app.add_subcommand("moments", "closed-form moment report as JSON");
    auto* reg = app.add_subcommand("regime", "print the classification and w_n asymptote");
    auto* ver = app.add_subcommand("verify", "statistical checks, one JSON report per line");

    for (CLI::App* sub : {sim, mom, reg}) {
        sub->add_option("--model", cfg.model, "replacement matrix, row-major a,b,c,d")
            ->required()
            ->delimiter(',');
        sub->add_option("--init", cfg.init, "starting composition alpha,beta")
            ->required()
            ->delimiter(',');
    }

    auto* sim_n = sim->add_option("-n,--horizon", cfg.horizon, "number of draws (default 100)");
    auto* sim_seed = sim->add_option("--seed", seed_flag, "master seed for the random stream");
    sim->add_option("-o,--output", cfg.output, "write the CSV here instead of stdout");
    auto* sim_fmt = sim->add_option("--format", cfg.format, "output format (csv)")
                        ->check(CLI::IsMember({"csv", "json"}));

    mom->add_option("-n,--horizon", cfg.horizon, "report step (default 0)");
    mom->add_option("-o,--output", cfg.output, "write the JSON here instead of stdout");
    auto* mom_fmt = mom->add_option("--format", cfg.format, "output format (json)")
                        ->check(CLI::IsMember({"csv", "json"}));

    auto* ver_check =
        ver->add_option("--check", cfg.selector,
                        "which checks: oracle|beta|tradclt|clt|qsl|lil|large|all")
            ->check(CLI::IsMember({"oracle", "beta", "tradclt", "clt", "qsl", "lil", "large",
                                   "all"}));
    auto* ver_all = ver->add_flag("--all", "run every check (same as --check all)");
    ver_all->excludes(ver_check);
    ver->add_option("--model", cfg.model,
                    "run the chosen check on this matrix instead of the built-in grid")
        ->delimiter(',');
    ver->add_option("--init", cfg.init, "starting composition alpha,beta")->delimiter(',');
    auto* ver_n =
        ver->add_option("-n,--horizon", cfg.horizon, "single-model mode: steps for the check");
    auto* ver_reps =
        ver->add_option("--reps", cfg.reps, "single-model mode: replicates for the check");
    auto* ver_seed = ver->add_option("--seed", seed_flag, "master seed; every record carries it");
    ver->add_option("-o,--output", cfg.output,
                    "write JSON lines here; stdout then carries a summary");
    auto* ver_fmt = ver->add_option("--format", cfg.format, "output format (json)")
                        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        std::cerr << "hint: see --help or '<subcommand> --help' for flags\n";
        return 2;
    }

    try {
        if (reg->parsed()) {
            cfg.subcommand = "regime";
            if (cfg.model.size() != 4 || cfg.init.size() != 2) {
                return usage_error("--model takes a,b,c,d and --init takes alpha,beta",
                                   "example: regime --model 2,1,1,2 --init 1,1");
            }
            return do_regime(build_model(cfg.model[0], cfg.model[1], cfg.model[2], cfg.model[3],
                                         cfg.init[0], cfg.init[1]));
        }

        if (sim->parsed()) {
            cfg.subcommand = "simulate";
            cfg.format = cfg.format.empty() ? "csv" : cfg.format;
            if (sim_fmt->count() && cfg.format != "csv") {
                return usage_error("simulate writes CSV only", "drop --format or pass csv");
            }
            if (cfg.model.size() != 4 || cfg.init.size() != 2) {
                return usage_error("--model takes a,b,c,d and --init takes alpha,beta",
                                   "example: simulate --model 2,1,1,2 --init 1,1 -n 1000");
            }
            if (!sim_n->count()) cfg.horizon = 100;
            if (!resolve_seed(sim_seed->count() > 0, seed_flag, cfg)) return 2;
            return do_simulate(cfg, build_model(cfg.model[0], cfg.model[1], cfg.model[2],
                                                cfg.model[3], cfg.init[0], cfg.init[1]));
        }

        if (mom->parsed()) {
            cfg.subcommand = "moments";
            cfg.format = cfg.format.empty() ? "json" : cfg.format;
            if (mom_fmt->count() && cfg.format != "json") {
                return usage_error("moments writes JSON only", "drop --format or pass json");
            }
            if (cfg.model.size() != 4 || cfg.init.size() != 2) {
                return usage_error("--model takes a,b,c,d and --init takes alpha,beta",
                                   "example: moments --model 4,1,1,4 --init 1,1 -n 0");
            }
            return do_moments(cfg, build_model(cfg.model[0], cfg.model[1], cfg.model[2],
                                               cfg.model[3], cfg.init[0], cfg.init[1]));
        }

        cfg.subcommand = "verify";
        cfg.format = cfg.format.empty() ? "json" : cfg.format;
        if (ver_fmt->count() && cfg.format != "json") {
            return usage_error("verify writes JSON lines only", "drop --format or pass json");
        }
        if (ver_all->count()) cfg.selector = "all";
        if (cfg.selector.empty()) cfg.selector = "all";

        const bool model_given = !cfg.model.empty() || !cfg.init.empty();
        if (model_given) {
            if (cfg.model.size() != 4 || cfg.init.size() != 2) {
                return usage_error("--model takes a,b,c,d and --init takes alpha,beta",
                                   "example: verify --check clt --model 2,1,1,2 --init 1,1");
            }
            if (cfg.selector == "all" || cfg.selector == "oracle") {
                return usage_error("'" + cfg.selector + "' runs on the built-in grid",
                                   "pick --check beta|tradclt|clt|qsl|lil|large with --model");
            }
            if (ver_reps->count() && (cfg.selector == "qsl" || cfg.selector == "lil")) {
                return usage_error(cfg.selector + " is a single-path check",
                                   "drop --reps; use -n to change its horizon");
            }
        } else {
            if (ver_n->count() || ver_reps->count()) {
                return usage_error("--horizon/--reps apply to single-model mode",
                                   "suite slices run at pinned sizes; add --model/--init");
            }
        }
        if (!resolve_seed(ver_seed->count() > 0, seed_flag, cfg)) return 2;

        if (model_given) {
            const UrnModel model = build_model(cfg.model[0], cfg.model[1], cfg.model[2],
                                               cfg.model[3], cfg.init[0], cfg.init[1]);
            return do_verify(cfg, &model);
        }
        return do_verify(cfg, nullptr);
    } catch (const UrnError& e) {
        // what() already leads with the error's name.
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace polya
