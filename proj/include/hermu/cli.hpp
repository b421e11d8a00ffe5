#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hermu::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. args excludes the program name.
///   catalog
///   transfer <selector>
///   check <form|selector> [--limit N] [--filter F]
///   prove <case|selector> <n>
///   verify (--all | <selector>...) [--limit N] [--genus-limit N] [--json PATH]
///   represent <form> <n>
/// Global: --catalog PATH replaces the built-in table.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

}  // namespace hermu::cli
