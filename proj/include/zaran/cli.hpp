#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zaran::cli {

enum ExitCode : int {
  kCompleted = 0,
  kRefutation = 1,  // a witness or counterexample was found
  kUsage = 2,       // usage, validation or I/O error
};

/// Runs one command line (without the program name). Reports go to `out`
/// unless redirected to a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& value);

}  // namespace zaran::cli
