#pragma once

namespace falsebottom::cli {

// Parses argv, dispatches to the subcommand and maps exceptions onto the
// exit-code contract: 0 success, 1 internal failure, 2 bad user input.
int run_cli(int argc, char** argv);

}  // namespace falsebottom::cli
