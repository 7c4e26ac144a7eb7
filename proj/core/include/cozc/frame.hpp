#ifndef COZC_FRAME_HPP
#define COZC_FRAME_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cozc {

/// Handle to an element of a specific Frame. The frame tag makes mixing
/// elements of different frames detectable; all Frame operations check it.
struct Element {
  std::uint64_t frame_id = 0;
  std::uint32_t index = 0;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

using ElementSet = std::vector<Element>;

/**
 * A finite frame: a bounded distributive lattice given by its elements and
 * cover relation. Construction validates the order and precomputes meet,
 * join and pseudocomplement tables, so every later query is a lookup.
 *
 * Element indices follow the lexicographic order of element names, which
 * makes the index assignment independent of the order the input lists them.
 *
 * Frames are immutable and cheap to copy (shared state); they may be read
 * concurrently from any number of threads.
 */
class Frame {
 public:
  using CoverPair = std::pair<std::string, std::string>;

  /// Throws Error with kind NotAPartialOrder, NoBounds, NotALattice,
  /// NotDistributive or InvalidInput.
  static Frame build(std::string name, std::vector<std::string> elements,
                     const std::vector<CoverPair>& covers);

  const std::string& name() const;
  std::uint64_t id() const;
  std::size_t size() const;

  Element top() const;
  Element bottom() const;
  Element at(std::size_t index) const;
  Element element(std::string_view name) const;
  std::optional<Element> find(std::string_view name) const;
  const std::string& name_of(Element a) const;
  ElementSet elements() const;
  bool owns(Element a) const noexcept;

  bool leq(Element a, Element b) const;
  Element meet(Element a, Element b) const;
  Element join(Element a, Element b) const;
  Element big_join(std::span<const Element> set) const;
  Element big_meet(std::span<const Element> set) const;

  /// Largest x with a ∧ x = ⊥.
  Element pseudocomplement(Element a) const;
  /// Largest x with a ∧ x ≤ b.
  Element heyting_impl(Element a, Element b) const;
  bool is_complemented(Element a) const;
  /// Throws NotComplemented unless a ∨ a* = ⊤.
  Element complement(Element a) const;

  /// a ≺ b, decided as a* ∨ b = ⊤.
  bool rather_below(Element a, Element b) const;
  /// Exhaustive search for x with a ∧ x = ⊥ and x ∨ b = ⊤.
  std::optional<Element> rather_below_witness(Element a, Element b) const;

  const ElementSet& join_irreducibles() const;
  /// All complemented elements, in index order.
  const ElementSet& center() const;
  /// Hasse diagram, sorted by (lower name, upper name).
  std::vector<std::pair<Element, Element>> covers() const;

  /// Same name, same element names, same order.
  friend bool operator==(const Frame& lhs, const Frame& rhs);

 private:
  struct Impl;
  explicit Frame(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::uint32_t check(Element a) const;

  std::shared_ptr<const Impl> impl_;
};

/// Result of reconstructing a frame as the downsets of its join-irreducibles.
struct BirkhoffCheck {
  bool isomorphic = false;
  std::size_t join_irreducible_count = 0;
  std::size_t downset_count = 0;
  std::string detail;
};

/// Maps x ↦ {j ∈ J(F) : j ≤ x} and verifies it is an order isomorphism onto
/// the downset lattice of the join-irreducible poset.
BirkhoffCheck birkhoff_reconstruction(const Frame& frame);

}  // namespace cozc

#endif  // COZC_FRAME_HPP
