// cli.hpp: Command-line front end

#pragma once

namespace otto::cli {

// Subcommands gslc, elc, nelc, tau-scan, phase and check. Returns 0 on
// success, 2 on usage errors and 1 on run or check failures.
int cli_main(int argc, char** argv);

} // namespace otto::cli
