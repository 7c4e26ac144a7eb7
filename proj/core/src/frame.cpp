#include "cozc/frame.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>

#include "cozc/error.hpp"

namespace cozc {

struct Frame::Impl {
  std::string name;
  std::uint64_t id = 0;
  std::vector<std::string> names;  // sorted; position == index
  std::uint32_t n = 0;
  std::vector<std::uint8_t> leq;
  std::vector<std::uint32_t> meet;
  std::vector<std::uint32_t> join;
  std::vector<std::uint32_t> pseudo;
  std::uint32_t bottom = 0;
  std::uint32_t top = 0;
  ElementSet join_irreducibles;
  ElementSet center;

  bool le(std::uint32_t a, std::uint32_t b) const { return leq[std::size_t{a} * n + b] != 0; }
  std::uint32_t m(std::uint32_t a, std::uint32_t b) const { return meet[std::size_t{a} * n + b]; }
  std::uint32_t j(std::uint32_t a, std::uint32_t b) const { return join[std::size_t{a} * n + b]; }
};

namespace {

std::atomic<std::uint64_t> next_frame_id{1};

std::string triple(const std::vector<std::string>& names, std::uint32_t a, std::uint32_t b,
                   std::uint32_t c) {
  return "(" + names[a] + ", " + names[b] + ", " + names[c] + ")";
}

// Greatest element among `candidates` w.r.t. the order, if one dominates all.
template <class Le>
std::optional<std::uint32_t> greatest(const std::vector<std::uint32_t>& candidates,
                                      const std::vector<std::uint32_t>& rank, Le le) {
  if (candidates.empty()) return std::nullopt;
  std::uint32_t best = candidates.front();
  for (auto c : candidates)
    if (rank[c] > rank[best]) best = c;
  for (auto c : candidates)
    if (!le(c, best)) return std::nullopt;
  return best;
}

}  // namespace

Frame Frame::build(std::string name, std::vector<std::string> elements,
                   const std::vector<CoverPair>& covers) {
  if (elements.empty()) throw Error(ErrorKind::NoBounds, "frame '" + name + "' has no elements");
  std::sort(elements.begin(), elements.end());
  if (auto dup = std::adjacent_find(elements.begin(), elements.end()); dup != elements.end())
    throw Error(ErrorKind::InvalidInput, "duplicate element name '" + *dup + "'");

  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->id = next_frame_id.fetch_add(1, std::memory_order_relaxed);
  impl->names = std::move(elements);
  const auto n = static_cast<std::uint32_t>(impl->names.size());
  impl->n = n;
  const auto& names = impl->names;

  auto lookup = [&](const std::string& s) -> std::uint32_t {
    auto it = std::lower_bound(names.begin(), names.end(), s);
    if (it == names.end() || *it != s)
      throw Error(ErrorKind::InvalidInput, "cover references undeclared element '" + s + "'");
    return static_cast<std::uint32_t>(it - names.begin());
  };

  auto& leq = impl->leq;
  leq.assign(std::size_t{n} * n, 0);
  for (std::uint32_t i = 0; i < n; ++i) leq[std::size_t{i} * n + i] = 1;
  for (const auto& [lo, hi] : covers) {
    auto a = lookup(lo);
    auto b = lookup(hi);
    if (a == b) throw Error(ErrorKind::NotAPartialOrder, "element '" + lo + "' covers itself");
    leq[std::size_t{a} * n + b] = 1;
  }
  for (std::uint32_t k = 0; k < n; ++k)
    for (std::uint32_t i = 0; i < n; ++i)
      if (leq[std::size_t{i} * n + k])
        for (std::uint32_t x = 0; x < n; ++x)
          if (leq[std::size_t{k} * n + x]) leq[std::size_t{i} * n + x] = 1;

  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      if (impl->le(a, b) && impl->le(b, a))
        throw Error(ErrorKind::NotAPartialOrder,
                    "cycle between '" + names[a] + "' and '" + names[b] + "'");

  std::optional<std::uint32_t> bottom, top;
  for (std::uint32_t a = 0; a < n; ++a) {
    bool below_all = true, above_all = true;
    for (std::uint32_t x = 0; x < n; ++x) {
      below_all = below_all && impl->le(a, x);
      above_all = above_all && impl->le(x, a);
    }
    if (below_all) bottom = a;
    if (above_all) top = a;
  }
  if (!bottom || !top)
    throw Error(ErrorKind::NoBounds,
                std::string("frame '") + impl->name + "' lacks a " + (!bottom ? "bottom" : "top"));
  impl->bottom = *bottom;
  impl->top = *top;

  std::vector<std::uint32_t> below(n, 0), above(n, 0);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t x = 0; x < n; ++x) {
      below[a] += impl->le(x, a);
      above[a] += impl->le(a, x);
    }

  impl->meet.assign(std::size_t{n} * n, 0);
  impl->join.assign(std::size_t{n} * n, 0);
  std::vector<std::uint32_t> lower, upper;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a; b < n; ++b) {
      lower.clear();
      upper.clear();
      for (std::uint32_t c = 0; c < n; ++c) {
        if (impl->le(c, a) && impl->le(c, b)) lower.push_back(c);
        if (impl->le(a, c) && impl->le(b, c)) upper.push_back(c);
      }
      auto glb = greatest(lower, below, [&](auto x, auto y) { return impl->le(x, y); });
      auto lub = greatest(upper, above, [&](auto x, auto y) { return impl->le(y, x); });
      if (!glb || !lub)
        throw Error(ErrorKind::NotALattice, "'" + names[a] + "' and '" + names[b] + "' have no " +
                                                (!glb ? "meet" : "join"));
      impl->meet[std::size_t{a} * n + b] = impl->meet[std::size_t{b} * n + a] = *glb;
      impl->join[std::size_t{a} * n + b] = impl->join[std::size_t{b} * n + a] = *lub;
    }
  }

  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (impl->m(a, impl->j(b, c)) != impl->j(impl->m(a, b), impl->m(a, c)))
          throw Error(ErrorKind::NotDistributive,
                      "a∧(b∨c) ≠ (a∧b)∨(a∧c) for (a, b, c) = " + triple(names, a, b, c));

  impl->pseudo.assign(n, impl->bottom);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint32_t acc = impl->bottom;
    for (std::uint32_t x = 0; x < n; ++x)
      if (impl->m(a, x) == impl->bottom) acc = impl->j(acc, x);
    impl->pseudo[a] = acc;
  }

  for (std::uint32_t x = 0; x < n; ++x) {
    if (x == impl->bottom) continue;
    bool irreducible = true;
    for (std::uint32_t a = 0; a < n && irreducible; ++a)
      for (std::uint32_t b = a; b < n; ++b)
        if (impl->j(a, b) == x && a != x && b != x) {
          irreducible = false;
          break;
        }
    if (irreducible) impl->join_irreducibles.push_back(Element{impl->id, x});
  }
  for (std::uint32_t a = 0; a < n; ++a)
    if (impl->j(a, impl->pseudo[a]) == impl->top) impl->center.push_back(Element{impl->id, a});

  return Frame(std::move(impl));
}

std::uint32_t Frame::check(Element a) const {
  if (a.frame_id != impl_->id || a.index >= impl_->n) {
    std::ostringstream os;
    os << "element #" << a.index << " of frame id " << a.frame_id << " used with frame '"
       << impl_->name << "' (id " << impl_->id << ")";
    throw Error(ErrorKind::FrameMismatch, os.str());
  }
  return a.index;
}

const std::string& Frame::name() const { return impl_->name; }
std::uint64_t Frame::id() const { return impl_->id; }
std::size_t Frame::size() const { return impl_->n; }
Element Frame::top() const { return {impl_->id, impl_->top}; }
Element Frame::bottom() const { return {impl_->id, impl_->bottom}; }

Element Frame::at(std::size_t index) const {
  if (index >= impl_->n) throw Error(ErrorKind::InvalidInput, "element index out of range");
  return {impl_->id, static_cast<std::uint32_t>(index)};
}

std::optional<Element> Frame::find(std::string_view name) const {
  const auto& names = impl_->names;
  auto it = std::lower_bound(names.begin(), names.end(), name,
                             [](const std::string& s, std::string_view v) { return s < v; });
  if (it == names.end() || *it != name) return std::nullopt;
  return Element{impl_->id, static_cast<std::uint32_t>(it - names.begin())};
}

Element Frame::element(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw Error(ErrorKind::InvalidInput,
              "frame '" + impl_->name + "' has no element '" + std::string(name) + "'");
}

const std::string& Frame::name_of(Element a) const { return impl_->names[check(a)]; }

ElementSet Frame::elements() const {
  ElementSet out;
  out.reserve(impl_->n);
  for (std::uint32_t i = 0; i < impl_->n; ++i) out.push_back({impl_->id, i});
  return out;
}

bool Frame::owns(Element a) const noexcept { return a.frame_id == impl_->id && a.index < impl_->n; }

bool Frame::leq(Element a, Element b) const { return impl_->le(check(a), check(b)); }

Element Frame::meet(Element a, Element b) const { return {impl_->id, impl_->m(check(a), check(b))}; }

Element Frame::join(Element a, Element b) const { return {impl_->id, impl_->j(check(a), check(b))}; }

Element Frame::big_join(std::span<const Element> set) const {
  std::uint32_t acc = impl_->bottom;
  for (auto e : set) acc = impl_->j(acc, check(e));
  return {impl_->id, acc};
}

Element Frame::big_meet(std::span<const Element> set) const {
  std::uint32_t acc = impl_->top;
  for (auto e : set) acc = impl_->m(acc, check(e));
  return {impl_->id, acc};
}

Element Frame::pseudocomplement(Element a) const { return {impl_->id, impl_->pseudo[check(a)]}; }

Element Frame::heyting_impl(Element a, Element b) const {
  const auto ia = check(a);
  const auto ib = check(b);
  std::uint32_t acc = impl_->bottom;
  for (std::uint32_t x = 0; x < impl_->n; ++x)
    if (impl_->le(impl_->m(ia, x), ib)) acc = impl_->j(acc, x);
  return {impl_->id, acc};
}

bool Frame::is_complemented(Element a) const {
  const auto i = check(a);
  return impl_->j(i, impl_->pseudo[i]) == impl_->top;
}

Element Frame::complement(Element a) const {
  if (!is_complemented(a))
    throw Error(ErrorKind::NotComplemented,
                "'" + name_of(a) + "' has no complement in frame '" + impl_->name + "'");
  return pseudocomplement(a);
}

bool Frame::rather_below(Element a, Element b) const {
  return impl_->j(impl_->pseudo[check(a)], check(b)) == impl_->top;
}

std::optional<Element> Frame::rather_below_witness(Element a, Element b) const {
  const auto ia = check(a);
  const auto ib = check(b);
  for (std::uint32_t x = 0; x < impl_->n; ++x)
    if (impl_->m(ia, x) == impl_->bottom && impl_->j(x, ib) == impl_->top)
      return Element{impl_->id, x};
  return std::nullopt;
}

const ElementSet& Frame::join_irreducibles() const { return impl_->join_irreducibles; }
const ElementSet& Frame::center() const { return impl_->center; }

std::vector<std::pair<Element, Element>> Frame::covers() const {
  const auto n = impl_->n;
  std::vector<std::pair<Element, Element>> out;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      if (a == b || !impl_->le(a, b)) continue;
      bool direct = true;
      for (std::uint32_t c = 0; c < n && direct; ++c)
        if (c != a && c != b && impl_->le(a, c) && impl_->le(c, b)) direct = false;
      if (direct) out.emplace_back(Element{impl_->id, a}, Element{impl_->id, b});
    }
  // indices already follow name order, so (a, b) index order is name order.
  return out;
}

bool operator==(const Frame& lhs, const Frame& rhs) {
  if (lhs.impl_ == rhs.impl_) return true;
  return lhs.impl_->name == rhs.impl_->name && lhs.impl_->names == rhs.impl_->names &&
         lhs.impl_->leq == rhs.impl_->leq;
}

BirkhoffCheck birkhoff_reconstruction(const Frame& frame) {
  BirkhoffCheck result;
  const auto& jis = frame.join_irreducibles();
  const auto n = frame.size();
  const auto k = jis.size();
  result.join_irreducible_count = k;

  // Linear extension of J: fewer elements below first.
  std::vector<std::size_t> order(k);
  std::vector<std::size_t> rank(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    order[i] = i;
    for (std::size_t t = 0; t < k; ++t) rank[i] += frame.leq(jis[t], jis[i]);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });

  std::vector<std::vector<char>> image(n, std::vector<char>(k, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < k; ++i) image[x][i] = frame.leq(jis[i], frame.at(x)) ? 1 : 0;

  auto fail = [&](std::string why) {
    result.isomorphic = false;
    result.detail = std::move(why);
    return result;
  };

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      bool subset = true;
      for (std::size_t i = 0; i < k && subset; ++i) subset = !image[x][i] || image[y][i];
      if (subset != frame.leq(frame.at(x), frame.at(y)))
        return fail("order not reflected between '" + frame.name_of(frame.at(x)) + "' and '" +
                    frame.name_of(frame.at(y)) + "'");
    }

  // Count downsets of J; stop once the count exceeds the frame size.
  std::size_t count = 0;
  std::vector<char> chosen(k, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t pos) {
    if (count > n) return;
    if (pos == k) {
      ++count;
      return;
    }
    const auto i = order[pos];
    walk(pos + 1);
    bool allowed = true;
    for (std::size_t t = 0; t < k && allowed; ++t)
      if (t != i && frame.leq(jis[t], jis[i]) && !chosen[t]) allowed = false;
    if (allowed) {
      chosen[i] = 1;
      walk(pos + 1);
      chosen[i] = 0;
    }
  };
  walk(0);
  result.downset_count = count;
  if (count != n)
    return fail("join-irreducible poset has " + std::to_string(count) + " downsets but frame has " +
                std::to_string(n) + " elements");
  result.isomorphic = true;
  return result;
}

}  // namespace cozc
