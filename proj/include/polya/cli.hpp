#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Command-line front end: parse flags into a CliConfig, build the model,
// and dispatch to simulation, closed-form reports, regime classification,
// or the verification suite. Exit code 0 means success and every gating
// check passed, 1 means a gating check failed or a domain error, 2 means
// a usage error.

namespace polya {

// One parsed invocation. simulate writes a trajectory CSV (n,X,Y), moments
// writes a closed-form report as JSON, regime prints the classification and
// the applicable w_n asymptote, verify writes one JSON report per line.
struct CliConfig {
    std::string subcommand;          // simulate | moments | regime | verify
    std::vector<std::int64_t> model; // replacement matrix, row-major a,b,c,d
    std::vector<std::int64_t> init;  // starting composition alpha,beta
    std::uint64_t horizon = 0;
    std::uint64_t reps = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;    // --seed or POLYA_SEED present
    std::string output;         // file path; empty writes to stdout
    std::string format;         // csv | json, defaulted per subcommand
    std::string selector;       // verify slice, "all" when unset
};

// Runs one invocation end to end; argv follows main() conventions.
int run_cli(int argc, const char* const* argv);

} // namespace polya
