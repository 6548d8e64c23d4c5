#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "invform/error.hpp"

namespace invform::cli {

/// Process exit codes.
enum ExitCode : int {
  kComputed = 0,
  kVerificationFailure = 1,
  kInputError = 2,
  kCapabilityError = 3,
};

[[nodiscard]] int exit_code_for(ErrorKind kind) noexcept;

/// Runs one command line (without the program name). JSON goes to `out`;
/// the instance path "-" reads from `in`.
int run(const std::vector<std::string>& args, std::ostream& out, std::istream& in);

}  // namespace invform::cli
