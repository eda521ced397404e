// Thin entry point so the whole front end stays testable in-process.

#include "polya/cli.hpp"

int main(int argc, char** argv) {
    return polya::run_cli(argc, argv);
}
