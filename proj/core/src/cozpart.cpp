#include "cozc/cozpart.hpp"

#include <algorithm>
#include <random>

#include "cozc/error.hpp"

namespace cozc {

namespace {

Json names_json(const Frame& frame, std::span<const Element> set) {
  Json out = Json::array();
  for (auto e : set) out.push_back(frame.name_of(e));
  return out;
}

// Subsets of `members` selected by the low bits of `mask`.
ElementSet subset_of(const ElementSet& members, std::uint64_t mask) {
  ElementSet out;
  for (std::size_t i = 0; i < members.size(); ++i)
    if ((mask >> i) & 1u) out.push_back(members[i]);
  return out;
}

constexpr std::size_t kExhaustiveLimit = 12;

// ∀ b, c ∈ S: a∧b = a∧c ⟺ ∀n: aₙ∨b = aₙ∨c
bool separates(const CozPart& part, Element a, const ElementSet& sequence) {
  const auto& f = part.frame;
  for (auto b : part.members)
    for (auto c : part.members) {
      const bool lhs = f.meet(a, b) == f.meet(a, c);
      bool rhs = true;
      for (auto an : sequence) rhs = rhs && f.join(an, b) == f.join(an, c);
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace

bool CozPart::contains(Element a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

std::optional<Element> CozPart::complement_in(Element a) const {
  for (auto x : members)
    if (frame.meet(a, x) == frame.bottom() && frame.join(a, x) == frame.top()) return x;
  return std::nullopt;
}

std::optional<Element> CozPart::rather_below_in(Element a, Element b) const {
  for (auto x : members)
    if (frame.meet(a, x) == frame.bottom() && frame.join(x, b) == frame.top()) return x;
  return std::nullopt;
}

CozPart coz_part(const Frame& frame, bool countable_only) {
  if (frame.size() < 2)
    throw Error(ErrorKind::DegenerateFrame, "cozero part of the one-element frame is not modelled");
  const auto& center = frame.center();
  ElementSet atoms;
  for (auto c : center) {
    if (c == frame.bottom()) continue;
    bool minimal = true;
    for (auto d : center)
      if (d != c && d != frame.bottom() && frame.leq(d, c)) minimal = false;
    if (minimal) atoms.push_back(c);
  }

  std::vector<char> in(frame.size(), 0);
  in[frame.bottom().index] = 1;
  for (auto a : atoms) in[a.index] = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (auto x : frame.elements())
      for (auto y : frame.elements())
        if (in[x.index] && in[y.index] && !in[frame.join(x, y).index]) {
          in[frame.join(x, y).index] = 1;
          grew = true;
        }
  }

  CozPart part{frame, {}, {}};
  for (auto x : frame.elements())
    if (in[x.index]) part.members.push_back(x);

  for (auto m : part.members) {
    auto alpha = StepFunction::constant(frame, 0);
    Rational weight = 1;
    for (auto a : atoms) {
      if (!frame.leq(a, m)) continue;
      alpha = alpha + scale(weight, Idempotent::indicator(frame, a).fn());
      weight /= 2;
    }
    if (coz(alpha) != m)
      throw Error(ErrorKind::InvariantViolation,
                  "generator for '" + frame.name_of(m) + "' has the wrong cozero");
    if (countable_only && range_set(alpha).size() > alpha.parts().size())
      throw Error(ErrorKind::InvariantViolation, "generator outside C_c(L)");
    part.generator.emplace(m, std::move(alpha));
  }
  return part;
}

PropertyReport sigma_frame_check(const CozPart& part) {
  const auto& f = part.frame;
  const auto& s = part.members;
  PropertyReport report(f.name(), "sigma-frame");
  report.expect(part.contains(f.bottom()) && part.contains(f.top()),
                {{"reason", "bottom or top missing"}});
  for (auto a : s)
    for (auto b : s) {
      report.expect(part.contains(f.meet(a, b)),
                    {{"reason", "not meet-closed"}, {"a", f.name_of(a)}, {"b", f.name_of(b)}});
      report.expect(part.contains(f.join(a, b)),
                    {{"reason", "not join-closed"}, {"a", f.name_of(a)}, {"b", f.name_of(b)}});
      for (auto c : s)
        report.expect(f.meet(a, f.join(b, c)) == f.join(f.meet(a, b), f.meet(a, c)),
                      {{"reason", "not distributive"},
                       {"a", f.name_of(a)},
                       {"b", f.name_of(b)},
                       {"c", f.name_of(c)}});
    }
  const bool exhaustive = s.size() <= kExhaustiveLimit;
  if (exhaustive) {
    const std::uint64_t limit = std::uint64_t{1} << s.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      const auto subset = subset_of(s, mask);
      const auto joined = f.big_join(subset);
      report.expect(part.contains(joined),
                    {{"reason", "join of subset escapes"}, {"subset", names_json(f, subset)}});
      for (auto a : s) {
        ElementSet pieces;
        for (auto t : subset) pieces.push_back(f.meet(a, t));
        report.expect(f.meet(a, joined) == f.big_join(pieces),
                      {{"reason", "infinite distributive law"},
                       {"a", f.name_of(a)},
                       {"subset", names_json(f, subset)}});
      }
    }
  }
  report.witness({{"members", names_json(f, s)}, {"exhaustive_subsets", exhaustive}});
  return report;
}

namespace {

PropertyReport based_on(const Frame& frame, const ElementSet& base, std::string property) {
  PropertyReport report(frame.name(), std::move(property));
  for (auto x : frame.elements()) {
    ElementSet below;
    for (auto c : base)
      if (frame.leq(c, x)) below.push_back(c);
    const auto joined = frame.big_join(below);
    Json row{{"element", frame.name_of(x)}, {"base_elements_below", names_json(frame, below)}};
    if (report.expect(joined == x, {{"element", frame.name_of(x)}, {"join", frame.name_of(joined)}}))
      report.witness(std::move(row));
  }
  return report;
}

}  // namespace

PropertyReport is_zero_dimensional(const Frame& frame) {
  return based_on(frame, frame.center(), "zero-dimensional");
}

PropertyReport is_c_completely_regular(const Frame& frame) {
  if (frame.size() < 2) return based_on(frame, frame.elements(), "c-completely-regular");
  return based_on(frame, coz_part(frame).members, "c-completely-regular");
}

PropertyReport is_regular_sigma(const CozPart& part) {
  const auto& f = part.frame;
  PropertyReport report(f.name(), "regular");
  for (auto a : part.members) {
    Json seq = Json::array();
    ElementSet below;
    for (auto b : part.members)
      if (auto x = part.rather_below_in(b, a)) {
        below.push_back(b);
        seq.push_back({{"b", f.name_of(b)}, {"separator", f.name_of(*x)}});
      }
    const auto joined = f.big_join(below);
    report.expect(joined == a, {{"element", f.name_of(a)}, {"join_of_rather_below", f.name_of(joined)}});
    report.witness({{"element", f.name_of(a)}, {"sequence", std::move(seq)}});
  }
  return report;
}

PropertyReport is_normal(const CozPart& part) {
  const auto& f = part.frame;
  PropertyReport report(f.name(), "normal");
  auto works = [&](Element a, Element b, Element u, Element v) {
    return f.join(a, u) == f.top() && f.join(v, b) == f.top() && f.meet(u, v) == f.bottom();
  };
  for (auto a : part.members)
    for (auto b : part.members) {
      if (f.join(a, b) != f.top()) continue;
      std::optional<std::pair<Element, Element>> found;
      bool canonical = false;
      auto u = part.complement_in(a);
      auto v = part.complement_in(b);
      if (u && v && works(a, b, *u, *v)) {
        found = {*u, *v};
        canonical = true;
      }
      for (auto x : part.members) {
        if (found) break;
        for (auto y : part.members)
          if (works(a, b, x, y)) {
            found = {x, y};
            break;
          }
      }
      if (report.expect(found.has_value(), {{"a", f.name_of(a)}, {"b", f.name_of(b)}}))
        report.witness({{"a", f.name_of(a)},
                        {"b", f.name_of(b)},
                        {"u", f.name_of(found->first)},
                        {"v", f.name_of(found->second)},
                        {"canonical", canonical}});
    }
  return report;
}

PropertyReport is_perfectly_normal(const CozPart& part) {
  const auto& f = part.frame;
  PropertyReport report(f.name(), "perfectly-normal");
  const auto normal = is_normal(part);
  if (!normal.verdict) report.fail({{"reason", "not normal"}, {"normal", *normal.counterexample}});
  for (auto a : part.members) {
    std::optional<ElementSet> found;
    std::string how;
    if (auto c = part.complement_in(a); c && separates(part, a, {*c})) {
      found = ElementSet{*c};
      how = "complement";
    }
    for (auto x : part.members) {
      if (found) break;
      if (separates(part, a, {x})) {
        found = ElementSet{x};
        how = "single";
      }
    }
    if (!found && part.members.size() <= kExhaustiveLimit) {
      const std::uint64_t limit = std::uint64_t{1} << part.members.size();
      for (std::uint64_t mask = 0; mask < limit && !found; ++mask) {
        auto seq = subset_of(part.members, mask);
        if (separates(part, a, seq)) {
          found = std::move(seq);
          how = "exhaustive";
        }
      }
    }
    if (report.expect(found.has_value(), {{"element", f.name_of(a)}}))
      report.witness({{"element", f.name_of(a)},
                      {"sequence", names_json(f, *found)},
                      {"search", how}});
  }
  return report;
}

PropertyReport is_alexandroff(const CozPart& part) {
  const auto& f = part.frame;
  PropertyReport report(f.name(), "alexandroff");
  const auto normal = is_normal(part);
  report.expect(normal.verdict, {{"reason", "not normal"}});
  for (auto a : part.members) {
    std::vector<std::pair<Element, Element>> seq;
    if (a != f.bottom()) {
      if (auto c = part.complement_in(a)) {
        seq.emplace_back(a, *c);
      } else {
        for (auto an : part.members) {
          if (!f.leq(an, a)) continue;
          for (auto bn : part.members)
            if (f.join(bn, a) == f.top() && f.meet(bn, an) == f.bottom()) {
              seq.emplace_back(an, bn);
              break;
            }
        }
      }
    }
    Element joined = f.bottom();
    Json rows = Json::array();
    bool ok = true;
    for (auto [an, bn] : seq) {
      joined = f.join(joined, an);
      ok = ok && f.join(bn, a) == f.top() && f.meet(bn, an) == f.bottom();
      rows.push_back({{"a_n", f.name_of(an)}, {"b_n", f.name_of(bn)}});
    }
    if (report.expect(ok && joined == a, {{"element", f.name_of(a)}, {"join", f.name_of(joined)}}))
      report.witness({{"element", f.name_of(a)}, {"sequence", std::move(rows)}});
  }
  return report;
}

std::vector<PropertyReport> cover_checks(const CozPart& part, std::uint64_t seed) {
  const auto& f = part.frame;
  const auto& s = part.members;
  PropertyReport literal(f.name(), "shrinkable");
  PropertyReport strong(f.name(), "shrinkable-rather-below");
  PropertyReport para(f.name(), "paracompact");
  strong.mandatory = false;

  std::vector<ElementSet> covers;
  const bool exhaustive = s.size() <= kExhaustiveLimit;
  if (exhaustive) {
    const std::uint64_t limit = std::uint64_t{1} << s.size();
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      auto cover = subset_of(s, mask);
      if (f.big_join(cover) == f.top()) covers.push_back(std::move(cover));
    }
  } else {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 100000 && covers.size() < 1000; ++attempt) {
      ElementSet cover;
      for (auto x : s)
        if (rng() >> 63) cover.push_back(x);
      if (!cover.empty() && f.big_join(cover) == f.top()) covers.push_back(std::move(cover));
    }
  }

  constexpr std::size_t kShown = 8;
  for (const auto& cover : covers) {
    // (i) dₙ = aₙ
    literal.expect(f.big_join(cover) == f.top(), {{"cover", names_json(f, cover)}});

    // (ii) dₙ = largest element of S rather below aₙ
    ElementSet shrunk;
    bool each_below = true;
    for (auto an : cover) {
      ElementSet below;
      for (auto b : s)
        if (part.rather_below_in(b, an)) below.push_back(b);
      const auto dn = f.big_join(below);
      each_below = each_below && part.rather_below_in(dn, an).has_value();
      shrunk.push_back(dn);
    }
    strong.expect(each_below && f.big_join(shrunk) == f.top(),
                  {{"cover", names_json(f, cover)}, {"shrink", names_json(f, shrunk)}});

    // (iii) refinement {⊤} when ⊤ is a member, the cover itself otherwise;
    // finite covers are locally finite with p(m) the full index set.
    const bool has_top = std::find(cover.begin(), cover.end(), f.top()) != cover.end();
    const ElementSet refinement = has_top ? ElementSet{f.top()} : cover;
    bool refines = f.big_join(refinement) == f.top();
    for (auto bm : refinement)
      refines = refines && std::any_of(cover.begin(), cover.end(),
                                       [&](Element an) { return f.leq(bm, an); });
    para.expect(refines, {{"cover", names_json(f, cover)}});

    if (literal.witnesses.size() < kShown) {
      literal.witness({{"cover", names_json(f, cover)}, {"shrink", names_json(f, cover)}});
      strong.witness({{"cover", names_json(f, cover)}, {"shrink", names_json(f, shrunk)}});
      para.witness({{"cover", names_json(f, cover)},
                    {"refinement", names_json(f, refinement)},
                    {"locally_finite_via", names_json(f, refinement)}});
    }
  }
  const Json summary{{"covers", covers.size()},
                     {"exhaustive", exhaustive},
                     {"note", "finite covers: checks degenerate at finite scale"}};
  for (auto* r : {&literal, &strong, &para}) r->witness(summary);
  return {std::move(literal), std::move(strong), std::move(para)};
}

}  // namespace cozc
