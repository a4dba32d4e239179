#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace accbt::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,          ///< bad arguments, unreadable or malformed input
  kCompile = 3,        ///< cyclic action dependencies
  kConfig = 4,         ///< unknown preset or action, bad world config
  kCompatibility = 5,  ///< q-table, report or manifest does not match
};

/// Runs one `accbt` invocation; `args` excludes the program name. Output
/// directories default to subdirectories of $ACCBT_OUT (or the working
/// directory when unset).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace accbt::cli
