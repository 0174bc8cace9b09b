#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace subrack {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 2,
    kExitInputError = 3,
    kExitCapOrUndecided = 4,
};

/**
 * Entry point of the command-line tool. args excludes the program name:
 *   catalog | lattice | invariants | nilpotence | pnilpotence --p P
 *   | cycleforms [--atom X] [--refined] | verify [--max-order N]
 * with --group, --format text|json|dot, --mode auto|explicit|implicit,
 * --seed and --verbose accepted before or after the subcommand.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subrack
