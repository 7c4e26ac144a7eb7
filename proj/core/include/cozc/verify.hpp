#ifndef COZC_VERIFY_HPP
#define COZC_VERIFY_HPP

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cozc/report.hpp"
#include "cozc/step_function.hpp"

namespace cozc {

enum class Suite {
  Remark3,
  IdempotentTables,
  CutLemmas,
  CozDecomposition,
  RangeSubsets,
  SigmaFrame,
  CozProperties,
  ModelLaws,
  Oracles,
};

const char* to_string(Suite suite) noexcept;
std::vector<Suite> all_suites();
/// Accepts suite names and "all"; result is deduplicated in declaration
/// order. Throws InvalidInput on an unknown name, before any work is done.
std::vector<Suite> parse_suites(const std::vector<std::string>& names);

struct VerifyOptions {
  std::vector<Suite> suites = all_suites();
  std::uint64_t seed = 7;
  /// Sampled step functions (and function pairs) per frame.
  std::size_t samples = 50;
  std::size_t jobs = 1;
};

/// Minimal non-⊥ complemented elements.
ElementSet center_atoms(const Frame& frame);

/// Per-frame generator seed; depends only on the run seed and the frame name,
/// so a single frame replays identically in any corpus.
std::uint64_t frame_seed(std::uint64_t seed, std::string_view frame_name);

/// At most four blocks, each a join of center atoms, with distinct values
/// drawn from {−2, −1, 0, 1/2, 1, 2, 3}.
StepFunction sample_step_function(const Frame& frame, std::mt19937_64& rng);

/// Sorted values, midpoints of neighbours, and one beyond each extreme.
std::vector<Rational> evaluation_grid(std::span<const Rational> values);

/// R1, R2, R3, R4 for both operands and the ⋄-formula for +, ·, ∨, ∧; five
/// reports named r1, r2, r3, r4, diamond.
std::vector<PropertyReport> model_laws_check(const StepFunction& alpha, const StepFunction& beta);

/// e(x,−), e(−,x) and the same for k·e against the case tables.
PropertyReport remark3_check(const Frame& frame, Element support, const Rational& k);

/// (e₁ ⋄ e₂)(x,−) and (e₁ ⋄ e₂)(−,x) against the case tables.
PropertyReport idempotent_table_check(const Frame& frame, Element c1, Element c2, Op op);

/// Runs the selected suites on one frame. Every record is named
/// "<suite>:<check>"; unexpected library errors become failed records.
std::vector<PropertyReport> verify_frame(const Frame& frame, const VerifyOptions& options);

/// Worker pool over frames; the result is ordered by (frame, property)
/// whatever the scheduling.
std::vector<PropertyReport> verify_frames(const std::vector<Frame>& frames,
                                          const VerifyOptions& options);

/// True when no mandatory record has a false verdict.
bool all_mandatory_pass(std::span<const PropertyReport> reports);
const PropertyReport* first_failure(std::span<const PropertyReport> reports);

/// JSON array of records.
Json reports_json(std::span<const PropertyReport> reports);

}  // namespace cozc

#endif  // COZC_VERIFY_HPP
