#pragma once

#include <iosfwd>

#include "atfdwt/error.hpp"

namespace atfdwt {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,  // verify: recovered secret differs
  kExitUsage = 2,     // bad arguments or unmet size preconditions
  kExitIo = 3,        // unreadable/unwritable files, malformed images
};

int exit_code_for(ErrorKind kind) noexcept;

/// Entry point of the `atfdwt` tool. argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace atfdwt
