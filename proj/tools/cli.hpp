#ifndef COZC_TOOLS_CLI_HPP
#define COZC_TOOLS_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "cozc/corpus.hpp"
#include "cozc/io.hpp"
#include "cozc/report.hpp"
#include "cozc/verify.hpp"

namespace cozc::cli {

enum ExitCode : int { kPass = 0, kCounterexample = 1, kInvalidInput = 2 };

/// Writes the corpus described by `spec` into `dir`.
std::vector<ManifestEntry> cmd_gen(const CorpusSpec& spec, const std::filesystem::path& dir);

/// Element count, center, cozero part, zero-dimensionality, c-complete
/// regularity and the σ-frame verdict of the cozero part.
Json cmd_props(const Frame& frame);

/// One row per prime ideal plus R_α, the cut-derived range and whether the
/// two agree.
Json cmd_cuts(const StepFunction& fn);

struct VerifyOutcome {
  int exit_code = kPass;
  std::vector<PropertyReport> reports;
};

/// Runs the suites; writes the JSON report when a path is given.
VerifyOutcome cmd_verify(const std::vector<Frame>& frames, const VerifyOptions& options,
                         const std::optional<std::filesystem::path>& report_path);

/// Full command line front end. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cozc::cli

#endif  // COZC_TOOLS_CLI_HPP
