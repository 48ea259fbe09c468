// cli.h - command-line front end
#pragma once

namespace wsm {

// Dispatch argv and run one subcommand. Returns 0 on success, 1 on a domain
// error (diagnostic `error: <tag>: <message>` on stderr), 2 on a usage error.
int run_cli(int argc, const char* const* argv);

} // namespace wsm
