#pragma once

namespace alia {

/// Full CLI entry point (subcommands eval, verify, tau-solve, table, report).
/// Returns the process exit code: 0 all-pass, 1 suite failure, 2 usage error.
int cli_main(int argc, const char* const* argv);

}  // namespace alia
