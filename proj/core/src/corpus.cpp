#include "cozc/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <unordered_set>

#include "cozc/error.hpp"

namespace cozc {

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

std::string point_name(std::size_t i) {
  return i < 26 ? std::string(1, static_cast<char>('a' + i)) : "p" + std::to_string(i);
}

std::vector<std::size_t> linear_extension(const std::vector<std::vector<char>>& order) {
  const auto n = order.size();
  std::vector<std::size_t> below(n, 0), idx(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) below[i] += order[j][i];
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return below[a] < below[b]; });
  return idx;
}

// Strict-order bit string of `order` read through `perm` (new position → old label).
std::uint64_t code_of(const std::vector<std::vector<char>>& order,
                      const std::vector<std::size_t>& perm) {
  std::uint64_t code = 0;
  const auto n = perm.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) code = (code << 1) | static_cast<std::uint64_t>(order[perm[a]][perm[b]] != 0);
  return code;
}

std::pair<std::uint64_t, std::vector<std::size_t>> canonical_labeling(const Poset& poset) {
  const auto order = poset.order();
  const auto n = poset.size;
  std::vector<std::pair<std::size_t, std::size_t>> key(n, {0, 0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      key[i].first += order[j][i];
      key[i].second += order[i][j];
    }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](auto a, auto b) { return key[a] < key[b]; });

  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [begin, end)
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && key[perm[j]] == key[perm[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  std::uint64_t best = ~std::uint64_t{0};
  std::vector<std::size_t> best_perm = perm;
  std::function<void(std::size_t)> walk = [&](std::size_t block) {
    if (block == blocks.size()) {
      const auto code = code_of(order, perm);
      if (code < best) {
        best = code;
        best_perm = perm;
      }
      return;
    }
    auto [b, e] = blocks[block];
    std::sort(perm.begin() + b, perm.begin() + e);
    do {
      walk(block + 1);
    } while (std::next_permutation(perm.begin() + b, perm.begin() + e));
  };
  walk(0);
  return {best, best_perm};
}

}  // namespace

Poset Poset::make(std::size_t size, const Pairs& pairs) {
  std::vector<std::vector<char>> lt(size, std::vector<char>(size, 0));
  for (auto [a, b] : pairs) {
    if (a >= size || b >= size) throw Error(ErrorKind::InvalidInput, "poset label out of range");
    lt[a][b] = 1;
  }
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < size; ++i)
      if (lt[i][k])
        for (std::size_t j = 0; j < size; ++j)
          if (lt[k][j]) lt[i][j] = 1;
  for (std::size_t i = 0; i < size; ++i)
    if (lt[i][i]) throw Error(ErrorKind::InvalidInput, "poset relation has a cycle");
  Poset out;
  out.size = size;
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      if (!lt[a][b]) continue;
      bool direct = true;
      for (std::size_t c = 0; c < size && direct; ++c)
        if (lt[a][c] && lt[c][b]) direct = false;
      if (direct) out.covers.emplace_back(a, b);
    }
  return out;
}

std::vector<std::vector<char>> Poset::order() const {
  std::vector<std::vector<char>> le(size, std::vector<char>(size, 0));
  for (std::size_t i = 0; i < size; ++i) le[i][i] = 1;
  for (auto [a, b] : covers) le[a][b] = 1;
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < size; ++i)
      if (le[i][k])
        for (std::size_t j = 0; j < size; ++j)
          if (le[k][j]) le[i][j] = 1;
  return le;
}

std::uint64_t Poset::canonical_code() const { return canonical_labeling(*this).first; }

Poset Poset::canonical() const {
  const auto perm = canonical_labeling(*this).second;
  std::vector<std::size_t> relabel(size);
  for (std::size_t pos = 0; pos < size; ++pos) relabel[perm[pos]] = pos;
  Pairs pairs;
  for (auto [a, b] : covers) pairs.emplace_back(relabel[a], relabel[b]);
  return make(size, pairs);
}

bool isomorphic_brute_force(const Poset& lhs, const Poset& rhs) {
  if (lhs.size != rhs.size || lhs.covers.size() != rhs.covers.size()) return false;
  const auto a = lhs.order();
  const auto b = rhs.order();
  std::vector<std::size_t> perm(lhs.size);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (std::size_t i = 0; i < lhs.size && same; ++i)
      for (std::size_t j = 0; j < lhs.size && same; ++j) same = a[i][j] == b[perm[i]][perm[j]];
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<Poset> enumerate_posets(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "poset size must be at least 1");
  if (n > 6) throw Error(ErrorKind::SizeTooLarge, "poset enumeration is limited to 6 elements");

  // Naturally labelled posets: element k is added with any downset of
  // {0, …, k−1} as its strict lower set. Every poset arises this way.
  std::map<std::uint64_t, Poset> classes;
  std::vector<std::uint32_t> below(n, 0);
  std::function<void(std::size_t)> grow = [&](std::size_t k) {
    if (k == n) {
      Pairs pairs;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
          if ((below[j] >> i) & 1u) pairs.emplace_back(i, j);
      auto poset = Poset::make(n, pairs);
      const auto code = poset.canonical_code();
      if (!classes.contains(code)) classes.emplace(code, poset.canonical());
      return;
    }
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      bool closed = true;
      for (std::size_t x = 0; x < k && closed; ++x)
        if ((mask >> x) & 1u) closed = (below[x] & ~mask) == 0;
      if (!closed) continue;
      below[k] = mask;
      grow(k + 1);
    }
  };
  grow(0);

  std::vector<Poset> out;
  out.reserve(classes.size());
  for (auto& [code, poset] : classes) out.push_back(std::move(poset));
  return out;
}

Frame downset_lattice(const Poset& poset, std::string name) {
  const auto n = poset.size;
  if (n > 63) throw Error(ErrorKind::SizeTooLarge, "downset lattices limited to 63-point posets");
  const auto order = poset.order();
  std::vector<std::uint64_t> strictly_below(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && order[j][i]) strictly_below[i] |= std::uint64_t{1} << j;

  const auto ext = linear_extension(order);
  std::vector<std::uint64_t> downsets;
  std::function<void(std::size_t, std::uint64_t)> walk = [&](std::size_t pos, std::uint64_t set) {
    if (pos == n) {
      downsets.push_back(set);
      return;
    }
    const auto x = ext[pos];
    walk(pos + 1, set);
    if ((strictly_below[x] & ~set) == 0) walk(pos + 1, set | (std::uint64_t{1} << x));
  };
  walk(0, 0);

  auto label = [&](std::uint64_t set) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i)
      if ((set >> i) & 1u) {
        s += (first ? "" : ",") + point_name(i);
        first = false;
      }
    return s + "}";
  };

  std::unordered_set<std::uint64_t> present(downsets.begin(), downsets.end());
  std::vector<std::string> elements;
  std::vector<Frame::CoverPair> covers;
  for (auto d : downsets) {
    elements.push_back(label(d));
    for (std::size_t x = 0; x < n; ++x) {
      const auto bit = std::uint64_t{1} << x;
      if (!(d & bit) && present.contains(d | bit)) covers.emplace_back(label(d), label(d | bit));
    }
  }
  return Frame::build(std::move(name), std::move(elements), covers);
}

const char* to_string(GeneratorKind kind) noexcept {
  switch (kind) {
    case GeneratorKind::AllPosets: return "all-posets";
    case GeneratorKind::Boolean: return "boolean";
    case GeneratorKind::Chain: return "chain";
    case GeneratorKind::Topology: return "topology";
    case GeneratorKind::RandomDownset: return "random-downset";
    case GeneratorKind::Default: return "default";
  }
  return "?";
}

GeneratorKind parse_generator_kind(std::string_view name) {
  for (auto kind : {GeneratorKind::AllPosets, GeneratorKind::Boolean, GeneratorKind::Chain,
                    GeneratorKind::Topology, GeneratorKind::RandomDownset, GeneratorKind::Default})
    if (name == to_string(kind)) return kind;
  throw Error(ErrorKind::InvalidInput, "unknown generator kind '" + std::string(name) + "'");
}

Frame boolean_frame(std::size_t exponent) {
  if (exponent > 6) throw Error(ErrorKind::SizeTooLarge, "boolean exponent limited to 6");
  return downset_lattice(Poset::make(exponent, {}), "bool" + std::to_string(exponent));
}

Frame chain_frame(std::size_t elements) {
  if (elements == 0) throw Error(ErrorKind::InvalidInput, "a chain needs at least one element");
  if (elements > 64) throw Error(ErrorKind::SizeTooLarge, "chain length limited to 64");
  Pairs pairs;
  for (std::size_t i = 0; i + 2 < elements; ++i) pairs.emplace_back(i, i + 1);
  return downset_lattice(Poset::make(elements - 1, pairs), "chain" + std::to_string(elements));
}

Frame random_topology(std::size_t points, std::uint64_t seed) {
  if (points == 0) throw Error(ErrorKind::InvalidInput, "a topology needs at least one point");
  if (points > 6) throw Error(ErrorKind::SizeTooLarge, "random topologies limited to 6 points");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<char>> pre(points, std::vector<char>(points, 0));
  for (std::size_t i = 0; i < points; ++i) pre[i][i] = 1;
  for (std::size_t i = 0; i < points; ++i)
    for (std::size_t j = 0; j < points; ++j)
      if (i != j && rng() % 3 == 0) pre[i][j] = 1;
  for (std::size_t k = 0; k < points; ++k)
    for (std::size_t i = 0; i < points; ++i)
      if (pre[i][k])
        for (std::size_t j = 0; j < points; ++j)
          if (pre[k][j]) pre[i][j] = 1;

  // Kolmogorov quotient: points related both ways collapse.
  std::vector<std::size_t> cls(points);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < points; ++i) {
    auto it = std::find_if(reps.begin(), reps.end(),
                           [&](std::size_t r) { return pre[i][r] && pre[r][i]; });
    if (it == reps.end()) {
      cls[i] = reps.size();
      reps.push_back(i);
    } else {
      cls[i] = static_cast<std::size_t>(it - reps.begin());
    }
  }
  Pairs pairs;
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b)
      if (a != b && pre[reps[a]][reps[b]]) pairs.emplace_back(a, b);
  return downset_lattice(Poset::make(reps.size(), pairs),
                         "topo" + std::to_string(points) + "_s" + std::to_string(seed));
}

Frame random_downset(std::size_t size, std::uint64_t seed) {
  if (size > 8) throw Error(ErrorKind::SizeTooLarge, "random posets limited to 8 points");
  std::mt19937_64 rng(seed);
  Pairs pairs;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      if (rng() >> 63) pairs.emplace_back(i, j);
  return downset_lattice(Poset::make(size, pairs),
                         "rdown" + std::to_string(size) + "_s" + std::to_string(seed));
}

std::vector<Frame> standard_frames(GeneratorKind kind, std::size_t size, std::uint64_t seed,
                                   std::size_t count) {
  std::vector<Frame> out;
  switch (kind) {
    case GeneratorKind::Boolean: out.push_back(boolean_frame(size)); break;
    case GeneratorKind::Chain: out.push_back(chain_frame(size)); break;
    case GeneratorKind::Topology:
      for (std::size_t i = 0; i < count; ++i) out.push_back(random_topology(size, seed + i));
      break;
    case GeneratorKind::RandomDownset:
      for (std::size_t i = 0; i < count; ++i) out.push_back(random_downset(size, seed + i));
      break;
    default:
      throw Error(ErrorKind::InvalidInput,
                  std::string("not a standard family: ") + to_string(kind));
  }
  return out;
}

std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec) {
  if (spec.min_size > spec.max_size)
    throw Error(ErrorKind::InvalidInput, "min size exceeds max size");
  std::vector<CorpusEntry> out;
  auto add = [&](Frame frame, GeneratorKind kind, std::uint64_t seed) {
    out.push_back(CorpusEntry{std::move(frame), to_string(kind), seed});
  };
  const auto span = spec.max_size - spec.min_size + 1;
  switch (spec.kind) {
    case GeneratorKind::AllPosets:
      if (spec.max_size > 6)
        throw Error(ErrorKind::SizeTooLarge, "poset enumeration is limited to 6 elements");
      for (auto n = spec.min_size; n <= spec.max_size; ++n) {
        const auto posets = enumerate_posets(n);
        for (std::size_t i = 0; i < posets.size(); ++i) {
          auto idx = std::to_string(i);
          idx.insert(0, 3 - std::min<std::size_t>(3, idx.size()), '0');
          add(downset_lattice(posets[i], "poset" + std::to_string(n) + "_" + idx), spec.kind, 0);
        }
      }
      break;
    case GeneratorKind::Boolean:
    case GeneratorKind::Chain:
      for (auto n = spec.min_size; n <= spec.max_size; ++n)
        add(standard_frames(spec.kind, n, spec.seed).front(), spec.kind, 0);
      break;
    case GeneratorKind::Topology:
    case GeneratorKind::RandomDownset:
      for (std::size_t i = 0; i < spec.count; ++i)
        add(standard_frames(spec.kind, spec.min_size + i % span, spec.seed + i).front(), spec.kind,
            spec.seed + i);
      break;
    case GeneratorKind::Default:
      for (auto& e : generate_corpus({GeneratorKind::AllPosets, 1, 5, 0, 0})) out.push_back(e);
      for (auto& e : generate_corpus({GeneratorKind::Boolean, 1, 4, 0, 0})) out.push_back(e);
      for (auto& e : generate_corpus({GeneratorKind::Chain, 2, 8, 0, 0})) out.push_back(e);
      for (auto& e : generate_corpus({GeneratorKind::Topology, 1, 5, spec.seed, 20}))
        out.push_back(e);
      break;
  }
  return out;
}

}  // namespace cozc
