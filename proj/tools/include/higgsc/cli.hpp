#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "higgs/multipoly.hpp"
#include "higgs/unipoly.hpp"

namespace higgsc {

inline constexpr const char* kSchemaVersion = "higgsc/1";

enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitUsage = 2, kExitResource = 3 };

/// Runs one invocation; args excludes the program name. Results go to out,
/// diagnostics and progress to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "3αβ + 2γ": Greek letters, implicit unit coefficients, superscript exponents.
std::string displayPoly(const higgs::MultiPoly& p);
std::string latexPoly(const higgs::MultiPoly& p);
std::string latexPoly(const higgs::UniPoly& p, const std::string& var = "t");

}  // namespace higgsc
