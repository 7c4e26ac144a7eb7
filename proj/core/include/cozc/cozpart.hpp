#ifndef COZC_COZPART_HPP
#define COZC_COZPART_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "cozc/report.hpp"
#include "cozc/step_function.hpp"

namespace cozc {

/// The cozero part {coz(α)} of a finite frame together with, for every
/// member, a step function whose cozero it is.
struct CozPart {
  Frame frame;
  ElementSet members;  // index order
  std::map<Element, StepFunction> generator;

  bool contains(Element a) const;
  /// Complement of a computed inside the part; nullopt if there is none.
  std::optional<Element> complement_in(Element a) const;
  /// a ≺ b with the separating element x taken from the part.
  std::optional<Element> rather_below_in(Element a, Element b) const;
};

/// Closes the atoms of the center under joins. Each member's generator is
/// ∑ e_{cₙ}/2ⁿ over the atoms cₙ below it, so coz(generator) is the member.
/// With countable_only every generator is also checked to have a finite
/// range (always true here, asserted). Throws DegenerateFrame.
CozPart coz_part(const Frame& frame, bool countable_only = true);

/// Lattice laws, closure under every finite join, and a ∧ ⋁T = ⋁(a ∧ t).
/// Subsets T are enumerated exhaustively when |S| ≤ 12.
PropertyReport sigma_frame_check(const CozPart& part);

/// Every x is the join of the complemented elements below it.
PropertyReport is_zero_dimensional(const Frame& frame);
/// Every x is the join of the cozero elements below it.
PropertyReport is_c_completely_regular(const Frame& frame);

PropertyReport is_regular_sigma(const CozPart& part);
PropertyReport is_normal(const CozPart& part);
PropertyReport is_perfectly_normal(const CozPart& part);
PropertyReport is_alexandroff(const CozPart& part);

/// Literal shrinkability, shrinkability with dₙ ≺ aₙ, and paracompactness,
/// over every cover when |S| ≤ 12 and 1000 seeded samples otherwise.
/// Returns the three reports in that order.
std::vector<PropertyReport> cover_checks(const CozPart& part, std::uint64_t seed = 0x5eed);

}  // namespace cozc

#endif  // COZC_COZPART_HPP
