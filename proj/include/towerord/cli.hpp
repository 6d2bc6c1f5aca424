#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "towerord/fixture.hpp"

namespace towerord {

// Dispatcher shared by the binary and the tests.  `argv` excludes the
// program name.  Returns the exit status: 0 success, 1 for domain or
// parse errors, 2 for internal invariant violations.  Failures print a
// single line "error:<kind>:<message>" to `err`.
//
// Subcommands:
//   cmp <order> <t1> <t2>               LT / GT / EQ-INCOMPARABLE
//   dom <order> <t>                     IN / OUT
//   wf <order> <t> [--budget <n>]       verdict + evidence (default 64)
//   rank <order> <t> --set <t1,...>     rank within the restriction
//   ordertype <order> --set <t1,...>    size if strictly linear
//   enum <order> [--max <n>]            one domain term per line
//   dot <order> --set <t1,...>          Graphviz digraph of the restriction
//   fixture run <path>                  execute the fixture's checks
int run_command(const std::vector<std::string>& argv, std::ostream& out,
                std::ostream& err);

// Runs every [check] of a fixture against its declarations.  Each check
// prints a "-- check <i>: ..." header followed by the output the same
// subcommand would produce; a final "checks: <n> run, <k> ok" line
// summarizes.  Returns 0 when every check succeeded, else the worst
// exit status seen.  Fixtures additionally get the check kind
// `embed <diagram> <gamma-id> <eta-id>`, printing TRUE/FALSE.
int run_fixture(const Fixture& f, std::ostream& out, std::ostream& err);

}  // namespace towerord
