#ifndef COZC_CORPUS_HPP
#define COZC_CORPUS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cozc/frame.hpp"

namespace cozc {

/// A finite poset on {0, …, size−1}, stored as its Hasse diagram.
struct Poset {
  std::size_t size = 0;
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper), sorted

  /// Builds from any strict-order generating pairs; reduces to covers.
  /// Throws InvalidInput on cycles or out-of-range labels.
  static Poset make(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  /// Reflexive-transitive order matrix.
  std::vector<std::vector<char>> order() const;

  /// Isomorphism-invariant code: the lexicographically least strict-order
  /// bit string over all labelings that sort elements by (#below, #above).
  std::uint64_t canonical_code() const;
  /// The relabeling that realises canonical_code.
  Poset canonical() const;

  friend bool operator==(const Poset&, const Poset&) = default;
};

/// Tries every bijection; intended as an oracle for small sizes.
bool isomorphic_brute_force(const Poset& lhs, const Poset& rhs);

/// One representative per isomorphism class of posets with n elements,
/// 1 ≤ n ≤ 6, ordered by canonical code. Throws SizeTooLarge / InvalidInput.
std::vector<Poset> enumerate_posets(std::size_t n);

/// Downward-closed subsets ordered by inclusion. Poset elements are named
/// a, b, c, … and a downset by its members, e.g. "{a,c}".
Frame downset_lattice(const Poset& poset, std::string name);

enum class GeneratorKind { AllPosets, Boolean, Chain, Topology, RandomDownset, Default };

const char* to_string(GeneratorKind kind) noexcept;
/// Throws InvalidInput for unknown names.
GeneratorKind parse_generator_kind(std::string_view name);

/// boolean: 2ⁿ with n ≤ 6; chain: n elements, 1 ≤ n ≤ 64; topology: open-set
/// lattices of `count` seeded random topologies on n ≤ 6 points.
std::vector<Frame> standard_frames(GeneratorKind kind, std::size_t size, std::uint64_t seed,
                                   std::size_t count = 1);

Frame boolean_frame(std::size_t exponent);
Frame chain_frame(std::size_t elements);
/// T0 quotient of a random preorder on `points` points, then its downsets.
Frame random_topology(std::size_t points, std::uint64_t seed);
/// Downsets of a random poset on `size` points.
Frame random_downset(std::size_t size, std::uint64_t seed);

struct CorpusSpec {
  GeneratorKind kind = GeneratorKind::Default;
  std::size_t min_size = 1;
  std::size_t max_size = 5;
  std::uint64_t seed = 7;
  std::size_t count = 20;
};

struct CorpusEntry {
  Frame frame;
  std::string kind;
  std::uint64_t seed = 0;
};

/// Deterministic for a fixed spec. Default: all posets of size 1..5, 2ⁿ for
/// n ≤ 4, chains of 2..8 elements and 20 random topologies on ≤ 5 points.
std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec);

}  // namespace cozc

#endif  // COZC_CORPUS_HPP
