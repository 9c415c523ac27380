#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cayley::cli {

/// Parses and runs one command line (program name excluded). Reports go to
/// `out`, diagnostics to `err`. Returns the process exit code: 0 on success,
/// 1 on analysis failures (invalid tables, failed checks), 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cayley::cli
