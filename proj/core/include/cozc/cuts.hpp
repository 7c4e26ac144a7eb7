#ifndef COZC_CUTS_HPP
#define COZC_CUTS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cozc/report.hpp"
#include "cozc/step_function.hpp"

namespace cozc {

/// A prime ideal held extensionally, plus the join-irreducible j with
/// members = {x : j ≰ x} when it was built from one.
class PrimeIdeal {
 public:
  PrimeIdeal(const Frame& frame, ElementSet members, std::optional<Element> witness = std::nullopt);

  std::uint64_t frame_id() const { return frame_id_; }
  const ElementSet& members() const { return members_; }
  const std::optional<Element>& witness() const { return witness_; }
  bool contains(Element a) const;
  /// "{a,bot}" style listing of member names.
  std::string label(const Frame& frame) const;

  friend bool operator==(const PrimeIdeal& lhs, const PrimeIdeal& rhs) {
    return lhs.frame_id_ == rhs.frame_id_ && lhs.members_ == rhs.members_;
  }

 private:
  std::uint64_t frame_id_;
  ElementSet members_;
  std::vector<char> mask_;
  std::optional<Element> witness_;
};

/// Checks proper, down-closed, join-closed and prime directly.
bool is_prime_ideal(const Frame& frame, std::span<const Element> members);

/// One ideal per join-irreducible j, members {x : j ≰ x}; sorted by member
/// list. Throws DegenerateFrame on the one-element frame.
std::vector<PrimeIdeal> prime_ideals(const Frame& frame);

/// Filters all subsets of the carrier; frames of at most 16 elements
/// (SizeTooLarge otherwise). Same ordering as prime_ideals.
std::vector<PrimeIdeal> prime_ideals_brute_force(const Frame& frame);

/// Summary of P_u(α) = {x : α(x,−) ∈ P} and P_l(α) = {x : α(−,x) ∈ P}:
/// P_u = [value, ∞) and P_l = (−∞, value] when both ends are attained.
struct CutDescription {
  Rational value;
  bool upper_attained = false;
  bool lower_attained = false;

  friend bool operator==(const CutDescription&, const CutDescription&) = default;
};

bool in_upper_cut(const StepFunction& fn, const PrimeIdeal& ideal, const Rational& x);
bool in_lower_cut(const StepFunction& fn, const PrimeIdeal& ideal, const Rational& x);

/// Computes inf P_u and sup P_l from ray evaluations. Throws FrameMismatch,
/// and InvariantViolation if the two ends do not coincide.
CutDescription cut(const StepFunction& fn, const PrimeIdeal& ideal);

/// Value of α on the unique block above the join-irreducible j.
Rational value_at(const StepFunction& fn, Element join_irreducible);

/// cut(α ⋄ β, P) = cut(α, P) ⋄ cut(β, P) for ⋄ ∈ {+, ·, ∨, ∧}. Witness rows
/// say whether both operands are idempotent or general.
PropertyReport cut_homomorphism_check(const StepFunction& lhs, const StepFunction& rhs,
                                      const PrimeIdeal& ideal);

/// ∑ rᵢeᵢ built by scale/combine, then its cut value at P. Throws
/// LengthMismatch, FrameMismatch, and InvariantViolation if the value is not
/// ∑ rᵢ·cut(eᵢ, P).
Rational linear_combination_cut(std::span<const Rational> coeffs,
                                 std::span<const Idempotent> idems, const PrimeIdeal& ideal);

/// ∑ rᵢeᵢ; the constant 0 for empty input. Throws LengthMismatch.
StepFunction linear_combination(const Frame& frame, std::span<const Rational> coeffs,
                                std::span<const Idempotent> idems);

/// {cut(α, P).value : P prime}.
RationalSet range_via_cuts(const StepFunction& fn);

/// A ⋄ B = {a ⋄ b}.
RationalSet elementwise(const RationalSet& lhs, const RationalSet& rhs, Op op);

/// R_{∑rᵢeᵢ} ⊆ R_{r₁e₁} + ⋯ + R_{rₙeₙ}
PropertyReport linear_range_subset_check(std::span<const Rational> coeffs,
                                         std::span<const Idempotent> idems);
/// R_{e₁⋄e₂} ⊆ R_{e₁} ⋄ R_{e₂}, and cut(e₁⋄e₂, P).value ∈ R_{e₁⋄e₂} for every P.
PropertyReport binary_range_subset_check(const Idempotent& e1, const Idempotent& e2, Op op);
/// α = ∑ eₙ/2ⁿ (n = 0..N): R_α ⊆ ∑ R_{eₙ/2ⁿ} and coz(α) = ⋁ coz(eₙ).
PropertyReport series_range_subset_check(const Frame& frame, std::span<const Idempotent> idems);

/// inf P_u(α) = sup P_l(α) at every prime ideal, with the bound n recorded.
PropertyReport bounded_cut_check(const StepFunction& fn);

/// ⌈max |value|⌉ + 1, so that −n ≤ α ≤ n.
Rational cut_bound(const StepFunction& fn);

}  // namespace cozc

#endif  // COZC_CUTS_HPP
