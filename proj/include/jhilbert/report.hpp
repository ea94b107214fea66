// Command dispatch and report emission shared by the C API and the CLI.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "jhilbert/coefficients.hpp"
#include "jhilbert/northcott.hpp"
#include "jhilbert/problem.hpp"

namespace jh {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitParse = 2,
  kExitHypothesis = 3,
  kExitNonStabilized = 4,
  kExitCrossCheck = 5,
};

struct RunOptions {
  std::uint64_t seed = 0;
  /// Largest n for per-n checks; 0 selects r_J(I) + d + 2.
  std::uint32_t nmax = 0;
  std::uint32_t capM = 200;
  /// Hilbert fit window; 0 selects d + 2.
  std::uint32_t window = 0;
  HypothesisFlags flags;
  ColonReading reading = ColonReading::X1;
  bool oracle = false;
};

struct RunResult {
  nlohmann::ordered_json report;
  int exitCode = kExitOk;
};

const std::vector<std::string>& commandNames();

/// Runs one command. Never throws for mathematical failures; they become
/// diagnostics and exit codes. Throws std::invalid_argument for an unknown command.
RunResult runCommand(const std::string& command, const ProblemSpec& spec, const RunOptions& options);

enum class ReportFormat { Json, Table };

std::string emitReport(const nlohmann::ordered_json& report, ReportFormat format);

}  // namespace jh
