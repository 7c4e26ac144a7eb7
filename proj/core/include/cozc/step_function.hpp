#ifndef COZC_STEP_FUNCTION_HPP
#define COZC_STEP_FUNCTION_HPP

#include <optional>
#include <span>
#include <vector>

#include "cozc/frame.hpp"
#include "cozc/rational.hpp"

namespace cozc {

enum class Op { Add, Mul, Join, Meet };
enum class CutSide { Upper, Lower };

struct Part {
  Element element;
  Rational value;

  friend bool operator==(const Part&, const Part&) = default;
};

/**
 * A continuous real function on a finite frame, represented by a partition
 * of ⊤ into pairwise disjoint complemented elements with one rational value
 * per block.
 *
 * Canonical form: no ⊥ blocks, distinct values (equal-valued blocks are
 * joined), blocks ordered by element index. Two step functions are equal
 * iff they denote the same frame map.
 */
class StepFunction {
 public:
  /// Throws DegenerateFrame, NotComplementedPart, NotAPartition,
  /// FrameMismatch or InvalidInput (empty part list).
  static StepFunction make(const Frame& frame, std::vector<Part> parts);
  static StepFunction constant(const Frame& frame, const Rational& value);

  const Frame& frame() const { return frame_; }
  std::span<const Part> parts() const { return parts_; }
  /// Block values in ascending order.
  std::vector<Rational> values() const;
  bool is_idempotent() const;

  friend bool operator==(const StepFunction& lhs, const StepFunction& rhs);

 private:
  friend StepFunction combine(const StepFunction&, const StepFunction&, Op);
  friend StepFunction scale(const Rational&, const StepFunction&);
  /// Merges equal values and drops ⊥ blocks; callers guarantee a partition.
  static StepFunction canonical(const Frame& frame, std::vector<Part> parts);
  StepFunction(Frame frame, std::vector<Part> parts)
      : frame_(std::move(frame)), parts_(std::move(parts)) {}

  Frame frame_;
  std::vector<Part> parts_;
};

/// A step function with values in {0, 1}: the indicator of a complemented
/// element.
class Idempotent {
 public:
  /// e_a: 1 on a, 0 on a'. Throws NotComplemented.
  static Idempotent indicator(const Frame& frame, Element a);
  /// Throws NotIdempotent.
  static Idempotent from(StepFunction fn);

  const StepFunction& fn() const { return fn_; }
  operator const StepFunction&() const { return fn_; }  // NOLINT(google-explicit-constructor)
  /// coz(e), the block where e is 1.
  Element support() const;

  friend bool operator==(const Idempotent&, const Idempotent&) = default;

 private:
  explicit Idempotent(StepFunction fn) : fn_(std::move(fn)) {}
  StepFunction fn_;
};

const char* to_string(Op op) noexcept;
Rational apply(Op op, const Rational& lhs, const Rational& rhs);

/// An endpoint of an interval; nullopt stands for −∞ (lower) or +∞ (upper).
using Bound = std::optional<Rational>;

/// α(p, q): join of the blocks whose value lies strictly between the bounds.
/// Throws EmptyInterval when both bounds are finite and lower ≥ upper.
Element eval(const StepFunction& fn, const Bound& lower, const Bound& upper);
/// α(p, −)
Element eval_above(const StepFunction& fn, const Rational& p);
/// α(−, q)
Element eval_below(const StepFunction& fn, const Rational& q);

/// Common-refinement construction of α ⋄ β. Throws FrameMismatch.
StepFunction combine(const StepFunction& lhs, const StepFunction& rhs, Op op);
StepFunction scale(const Rational& k, const StepFunction& fn);

StepFunction operator+(const StepFunction& lhs, const StepFunction& rhs);
StepFunction operator-(const StepFunction& lhs, const StepFunction& rhs);
StepFunction operator*(const StepFunction& lhs, const StepFunction& rhs);
StepFunction operator*(const Rational& k, const StepFunction& fn);

/// α(−, 0) ∨ α(0, −)
Element coz(const StepFunction& fn);

/// {r : coz(α − r) ≠ ⊤}, decided from the definition for each candidate
/// block value.
RationalSet range_set(const StepFunction& fn);

/// Upper: α(u_r), the join of blocks with value < r.
/// Lower: α(l_r), the join of blocks with value > r.
Element eval_cut(const StepFunction& fn, const Rational& r, CutSide side);

/// Indicators of the nonzero-valued blocks; their cozeros join to coz(α).
std::vector<Idempotent> decompose_coz(const StepFunction& fn);

}  // namespace cozc

#endif  // COZC_STEP_FUNCTION_HPP
