#ifndef QBETTI_CLI_HPP
#define QBETTI_CLI_HPP

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "qbetti/verdict.hpp"

namespace qbetti::cli
{

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;

/// 1 if any VIOLATION, else 3 if any INCONCLUSIVE, else 0.
int exit_code_for(std::span<Verdict const> verdicts);

/// Runs one invocation. `args` excludes the program name. The document goes
/// to `out` (or the --output file), diagnostics to `err`.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // namespace qbetti::cli

#endif
