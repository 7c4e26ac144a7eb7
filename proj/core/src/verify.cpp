#include "cozc/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

#include "cozc/cozpart.hpp"
#include "cozc/cuts.hpp"
#include "cozc/error.hpp"
#include "cozc/frame.hpp"

namespace cozc {

namespace {

__extension__ using i128 = __int128;

template <class Detail>
void check(PropertyReport& report, bool ok, Detail&& detail) {
  if (ok)
    report.expect(true);
  else
    report.fail(detail());
}

template <class Context>
void absorb(PropertyReport& into, const PropertyReport& from, Context&& context) {
  into.checked += from.checked;
  if (!from.verdict && into.verdict) {
    Json c = context();
    c["detail"] = from.counterexample ? *from.counterexample : Json(nullptr);
    into.verdict = false;
    into.counterexample = std::move(c);
  }
}

Json fn_json(const StepFunction& fn) {
  Json parts = Json::array();
  for (const auto& p : fn.parts())
    parts.push_back({fn.frame().name_of(p.element), format_rational(p.value)});
  return parts;
}

std::string bound_str(const Bound& b, bool lower) {
  return b ? format_rational(*b) : (lower ? "-inf" : "+inf");
}

std::vector<Bound> extend(const std::vector<Rational>& grid) {
  std::vector<Bound> out{std::nullopt};
  for (const auto& g : grid) out.emplace_back(g);
  out.emplace_back(std::nullopt);
  return out;
}

/// eval over every i < j of an extended grid.
class IntervalTable {
 public:
  IntervalTable(const StepFunction& fn, const std::vector<Bound>& ext)
      : n_(ext.size()), cells_(n_ * n_, fn.frame().bottom()) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) cells_[i * n_ + j] = eval(fn, ext[i], ext[j]);
  }
  Element operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<Element> cells_;
};

std::optional<Rational> min_gap(const std::vector<Rational>& sorted) {
  std::optional<Rational> gap;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    Rational d = sorted[i] - sorted[i - 1];
    if (!gap || d < *gap) gap = d;
  }
  return gap;
}

Rational magnitude(const Rational& x) { return x < 0 ? Rational(-x) : x; }

void r_laws(const StepFunction& fn, PropertyReport& r1, PropertyReport& r2, PropertyReport& r3,
            PropertyReport& r4) {
  const auto& f = fn.frame();
  const auto values = fn.values();
  const auto grid = evaluation_grid(values);
  const auto fine = evaluation_grid(grid);
  const auto ext = extend(fine);
  const IntervalTable t(fn, ext);

  // Positions of the coarse grid (and both infinities) inside the fine one.
  std::vector<std::size_t> at{0};
  for (const auto& g : grid)
    at.push_back(1 + static_cast<std::size_t>(std::lower_bound(fine.begin(), fine.end(), g) -
                                              fine.begin()));
  at.push_back(ext.size() - 1);
  const auto m = at.size();

  auto interval = [&](std::size_t i, std::size_t j) {
    return Json::array({bound_str(ext[i], true), bound_str(ext[j], false)});
  };

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t d = c + 1; d < m; ++d) {
          const auto lo = std::max(at[a], at[c]);
          const auto hi = std::min(at[b], at[d]);
          const auto expected = lo < hi ? t(lo, hi) : f.bottom();
          check(r1, f.meet(t(at[a], at[b]), t(at[c], at[d])) == expected, [&] {
            return Json{{"first", interval(at[a], at[b])},
                        {"second", interval(at[c], at[d])},
                        {"meet", f.name_of(f.meet(t(at[a], at[b]), t(at[c], at[d])))},
                        {"expected", f.name_of(expected)}};
          });
          if (a <= c && c < b && b <= d)
            check(r2, f.join(t(at[a], at[b]), t(at[c], at[d])) == t(at[a], at[d]), [&] {
              return Json{{"first", interval(at[a], at[b])},
                          {"second", interval(at[c], at[d])},
                          {"expected", f.name_of(t(at[a], at[d]))}};
            });
        }

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Element acc = f.bottom();
      for (auto r = at[a] + 1; r < at[b]; ++r)
        for (auto s = r + 1; s < at[b]; ++s) acc = f.join(acc, t(r, s));
      check(r3, acc == t(at[a], at[b]), [&] {
        return Json{{"interval", interval(at[a], at[b])},
                    {"value", f.name_of(t(at[a], at[b]))},
                    {"inner_join", f.name_of(acc)}};
      });
    }

  check(r4, t(0, ext.size() - 1) == f.top(),
        [&] { return Json{{"whole_line", f.name_of(t(0, ext.size() - 1))}}; });
}

/// Endpoint of an interval in a common integer scale; inf is −1 or +1 for
/// the infinite ends.
struct Scaled {
  int inf = 0;
  i128 v = 0;
};

struct Scale {
  Integer unit = 1;

  void include(const Rational& x) {
    unit = boost::multiprecision::lcm(unit, boost::multiprecision::denominator(x));
  }
  i128 operator()(const Rational& x) const {
    const Integer n =
        boost::multiprecision::numerator(x) * (unit / boost::multiprecision::denominator(x));
    if (n != 0 && boost::multiprecision::msb(abs(n)) > 60)
      throw Error(ErrorKind::InvariantViolation, "model-law oracle scale overflow");
    return static_cast<i128>(n.convert_to<long long>());
  }
  Scaled operator()(const Bound& b, bool lower) const {
    if (!b) return {lower ? -1 : 1, 0};
    return {0, (*this)(*b)};
  }
};

struct Piece {
  Scaled lo, hi;
  Element value;
};

void diamond(const StepFunction& alpha, const StepFunction& beta, Op op, PropertyReport& report) {
  const auto& f = alpha.frame();
  const auto gamma = combine(alpha, beta, op);
  const auto va = alpha.values();
  const auto vb = beta.values();
  const auto vg = gamma.values();
  const auto ga = evaluation_grid(va);
  const auto gb = evaluation_grid(vb);
  const auto gg = evaluation_grid(vg);

  // Tight intervals v ± δ isolate one block of each operand and map into any
  // grid interval that contains the combined value.
  Rational d = 1;
  for (const auto& gap : {min_gap(va), min_gap(vb)})
    if (gap && *gap < d) d = *gap;
  if (auto gap = min_gap(vg); gap && *gap / 2 < d) d = *gap / 2;
  Rational bound = 0;
  for (const auto* vs : {&va, &vb})
    for (const auto& v : *vs) bound = std::max(bound, magnitude(v));
  const Rational delta = d / (4 * (bound + 1));

  Scale scale;
  for (const auto* g : {&ga, &gb, &gg})
    for (const auto& x : *g) scale.include(x);
  for (const auto* vs : {&va, &vb})
    for (const auto& v : *vs) {
      scale.include(v - delta);
      scale.include(v + delta);
    }

  auto pieces = [&](const StepFunction& fn, const std::vector<Rational>& grid,
                    const std::vector<Rational>& values) {
    std::vector<Piece> out;
    const auto ext = extend(grid);
    auto add = [&](const Bound& lo, const Bound& hi) {
      const auto e = eval(fn, lo, hi);
      if (e != f.bottom()) out.push_back({scale(lo, true), scale(hi, false), e});
    };
    for (std::size_t i = 0; i < ext.size(); ++i)
      for (std::size_t j = i + 1; j < ext.size(); ++j) add(ext[i], ext[j]);
    for (const auto& v : values) add(Bound(v - delta), Bound(v + delta));
    return out;
  };
  const auto pa = pieces(alpha, ga, va);
  const auto pb = pieces(beta, gb, vb);

  const auto ext = extend(gg);
  const auto n = ext.size();
  const bool product = op == Op::Mul;
  std::vector<i128> grid;
  for (const auto& g : gg) grid.push_back(scale(g));
  if (product) {  // corner products live at the squared scale
    const auto unit = static_cast<i128>(scale.unit.convert_to<long long>());
    for (auto& g : grid) g *= unit;
  }

  std::vector<Element> contrib(n * n, f.bottom());
  for (const auto& x : pa)
    for (const auto& y : pb) {
      const auto m = f.meet(x.value, y.value);
      if (m == f.bottom()) continue;
      Scaled lo, hi;
      switch (op) {
        case Op::Add:
          lo = (x.lo.inf || y.lo.inf) ? Scaled{-1, 0} : Scaled{0, x.lo.v + y.lo.v};
          hi = (x.hi.inf || y.hi.inf) ? Scaled{1, 0} : Scaled{0, x.hi.v + y.hi.v};
          break;
        case Op::Join:
          lo = x.lo.inf ? y.lo : y.lo.inf ? x.lo : Scaled{0, std::max(x.lo.v, y.lo.v)};
          hi = (x.hi.inf || y.hi.inf) ? Scaled{1, 0} : Scaled{0, std::max(x.hi.v, y.hi.v)};
          break;
        case Op::Meet:
          lo = (x.lo.inf || y.lo.inf) ? Scaled{-1, 0} : Scaled{0, std::min(x.lo.v, y.lo.v)};
          hi = x.hi.inf ? y.hi : y.hi.inf ? x.hi : Scaled{0, std::min(x.hi.v, y.hi.v)};
          break;
        case Op::Mul: {
          if (x.lo.inf || x.hi.inf || y.lo.inf || y.hi.inf) continue;
          const std::array<i128, 4> corners{x.lo.v * y.lo.v, x.lo.v * y.hi.v, x.hi.v * y.lo.v,
                                            x.hi.v * y.hi.v};
          lo = {0, *std::min_element(corners.begin(), corners.end())};
          hi = {0, *std::max_element(corners.begin(), corners.end())};
          break;
        }
      }
      // Largest grid index ≤ lo and smallest ≥ hi (0 and n−1 are the infinities).
      std::size_t a = 0, b = n - 1;
      if (!lo.inf) a = static_cast<std::size_t>(std::upper_bound(grid.begin(), grid.end(), lo.v) - grid.begin());
      if (!hi.inf) {
        auto k = static_cast<std::size_t>(std::lower_bound(grid.begin(), grid.end(), hi.v) - grid.begin());
        b = k == grid.size() ? n - 1 : k + 1;
      }
      contrib[a * n + b] = f.join(contrib[a * n + b], m);
    }

  // rhs(i, j) = ⋁ contrib(a, b) over i ≤ a < b ≤ j.
  std::vector<Element> rhs(n * n, f.bottom());
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = i; j < n; ++j) {
      auto acc = contrib[i * n + j];
      if (i + 1 <= j) acc = f.join(acc, rhs[(i + 1) * n + j]);
      if (j > i) acc = f.join(acc, rhs[i * n + j - 1]);
      rhs[i * n + j] = acc;
    }

  const IntervalTable lhs(gamma, ext);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      check(report, lhs(i, j) == rhs[i * n + j], [&] {
        return Json{{"op", to_string(op)},
                    {"interval", {bound_str(ext[i], true), bound_str(ext[j], false)}},
                    {"combined", f.name_of(lhs(i, j))},
                    {"formula", f.name_of(rhs[i * n + j])}};
      });
}

// ---------------------------------------------------------------------------
// suites

const std::array<Rational, 6> kCoefficients{Rational(-2), Rational(-1), Rational(0),
                                            Rational(1),  Rational(2),  Rational(1, 2)};
constexpr std::size_t kFamilyCenterLimit = 16;
constexpr std::size_t kSampledFamilies = 300;

std::vector<ElementSet> idempotent_families(const ElementSet& center, std::mt19937_64& rng) {
  std::vector<ElementSet> out;
  const auto n = center.size();
  if (n <= kFamilyCenterLimit) {
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back({center[i]});
      for (std::size_t j = i; j < n; ++j) {
        out.push_back({center[i], center[j]});
        for (std::size_t k = j; k < n; ++k) out.push_back({center[i], center[j], center[k]});
      }
    }
    return out;
  }
  for (std::size_t s = 0; s < kSampledFamilies; ++s) {
    ElementSet family;
    const auto len = 1 + rng() % 3;
    for (std::size_t i = 0; i < len; ++i) family.push_back(center[rng() % n]);
    std::sort(family.begin(), family.end());
    out.push_back(std::move(family));
  }
  return out;
}

template <class Fn>
void for_each_coefficients(std::size_t len, Fn&& fn) {
  std::vector<std::size_t> digits(len, 0);
  std::vector<Rational> coeffs(len);
  while (true) {
    for (std::size_t i = 0; i < len; ++i) coeffs[i] = kCoefficients[digits[i]];
    fn(coeffs);
    std::size_t i = 0;
    while (i < len && ++digits[i] == kCoefficients.size()) digits[i++] = 0;
    if (i == len) return;
  }
}

std::vector<Idempotent> indicators(const Frame& frame, const ElementSet& family) {
  std::vector<Idempotent> out;
  for (auto c : family) out.push_back(Idempotent::indicator(frame, c));
  return out;
}

Json names(const Frame& frame, const ElementSet& set) {
  Json out = Json::array();
  for (auto e : set) out.push_back(frame.name_of(e));
  return out;
}

std::vector<std::pair<Element, Element>> idempotent_pairs(const Frame& frame, std::mt19937_64& rng) {
  const auto& center = frame.center();
  std::vector<std::pair<Element, Element>> out;
  if (center.size() <= kFamilyCenterLimit) {
    for (auto a : center)
      for (auto b : center) out.emplace_back(a, b);
  } else {
    for (std::size_t s = 0; s < kSampledFamilies; ++s)
      out.emplace_back(center[rng() % center.size()], center[rng() % center.size()]);
  }
  return out;
}

std::vector<StepFunction> samples(const Frame& frame, std::mt19937_64& rng, std::size_t count) {
  std::vector<StepFunction> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_step_function(frame, rng));
  return out;
}

std::vector<PropertyReport> suite_remark3(const Frame& frame) {
  PropertyReport unit(frame.name(), "unit");
  PropertyReport positive(frame.name(), "positive-multiple");
  PropertyReport negative(frame.name(), "negative-multiple");
  const std::array<Rational, 3> pos{Rational(2), Rational(1, 2), Rational(3)};
  const std::array<Rational, 3> neg{Rational(-1), Rational(-1, 2), Rational(-2)};
  for (auto c : frame.center()) {
    auto ctx = [&] { return Json{{"support", frame.name_of(c)}}; };
    absorb(unit, remark3_check(frame, c, 1), ctx);
    for (const auto& k : pos) absorb(positive, remark3_check(frame, c, k), ctx);
    for (const auto& k : neg) absorb(negative, remark3_check(frame, c, k), ctx);
  }
  const auto n = frame.center().size();
  unit.witness({{"idempotents", n}, {"k", "1"}});
  positive.witness({{"idempotents", n}, {"k", {"2/1", "1/2", "3/1"}}});
  negative.witness({{"idempotents", n}, {"k", {"-1/1", "-1/2", "-2/1"}}});
  return {unit, positive, negative};
}

std::vector<PropertyReport> suite_idempotent_tables(const Frame& frame) {
  std::vector<PropertyReport> out;
  const auto& center = frame.center();
  const bool in_scope = center.size() <= kFamilyCenterLimit;
  for (auto op : {Op::Add, Op::Mul, Op::Join, Op::Meet}) {
    static const char* const kNames[] = {"sum", "product", "join", "meet"};
    PropertyReport report(frame.name(), kNames[static_cast<int>(op)]);
    if (!in_scope) {
      report.mandatory = false;
      report.witness({{"skipped", "center has more than 16 elements"}});
      out.push_back(std::move(report));
      continue;
    }
    for (auto a : center)
      for (auto b : center)
        absorb(report, idempotent_table_check(frame, a, b, op),
               [&] { return Json{{"c1", frame.name_of(a)}, {"c2", frame.name_of(b)}}; });
    report.witness({{"pairs", center.size() * center.size()}});
    out.push_back(std::move(report));
  }
  return out;
}

std::vector<PropertyReport> suite_cut_lemmas(const Frame& frame, std::mt19937_64& rng,
                                             std::size_t count) {
  const auto ideals = prime_ideals(frame);
  const auto fns = samples(frame, rng, count);
  PropertyReport coincidence(frame.name(), "coincidence");
  PropertyReport idem(frame.name(), "idempotent-values");
  PropertyReport scaling(frame.name(), "scaling");
  PropertyReport additivity(frame.name(), "additivity");
  PropertyReport bounded(frame.name(), "bounded");
  PropertyReport linear(frame.name(), "linear-combination");
  const std::array<Rational, 5> ks{Rational(2), Rational(-1), Rational(1, 2), Rational(-3, 2),
                                   Rational(0)};

  for (const auto& fn : fns) {
    const auto fj = [&] { return Json{{"alpha", fn_json(fn)}}; };
    for (const auto& ideal : ideals) {
      auto ctx = [&] {
        auto c = fj();
        c["ideal"] = ideal.label(frame);
        return c;
      };
      // The blocks partition ⊤ ∉ P, and disjoint blocks cannot both avoid a
      // prime ideal, so exactly one block lies outside P.
      std::vector<Rational> outside;
      for (const auto& p : fn.parts())
        if (!ideal.contains(p.element)) outside.push_back(p.value);
      if (outside.size() != 1) {
        coincidence.fail(ctx());
        continue;
      }
      CutDescription c;
      try {
        c = cut(fn, ideal);
      } catch (const Error& e) {
        auto d = ctx();
        d["error"] = e.what();
        coincidence.fail(d);
        continue;
      }
      const Rational eps = 1 / Rational(4);
      check(coincidence,
            c.value == outside.front() && c.upper_attained && c.lower_attained &&
                in_upper_cut(fn, ideal, c.value) && !in_upper_cut(fn, ideal, c.value - eps) &&
                in_lower_cut(fn, ideal, c.value) && !in_lower_cut(fn, ideal, c.value + eps),
            [&] {
              auto d = ctx();
              d["cut"] = format_rational(c.value);
              d["expected"] = format_rational(outside.front());
              return d;
            });
      for (const auto& k : ks) {
        const auto scaled = cut(scale(k, fn), ideal).value;
        check(scaling, scaled == k * c.value, [&] {
          auto d = ctx();
          d["k"] = format_rational(k);
          d["scaled_cut"] = format_rational(scaled);
          return d;
        });
      }
    }
    absorb(bounded, bounded_cut_check(fn), fj);
  }
  for (std::size_t i = 0; i + 1 < fns.size(); ++i)
    for (const auto& ideal : ideals)
      absorb(additivity, cut_homomorphism_check(fns[i], fns[i + 1], ideal), [&] {
        return Json{{"alpha", fn_json(fns[i])}, {"beta", fn_json(fns[i + 1])},
                    {"ideal", ideal.label(frame)}};
      });

  for (auto c : frame.center()) {
    const auto e = Idempotent::indicator(frame, c);
    for (const auto& ideal : ideals) {
      const auto v = cut(e, ideal).value;
      check(idem, v == (ideal.contains(c) ? 0 : 1), [&] {
        return Json{{"support", frame.name_of(c)},
                    {"ideal", ideal.label(frame)},
                    {"cut", format_rational(v)}};
      });
    }
  }
  std::size_t pairs = 0;
  for (auto [a, b] : idempotent_pairs(frame, rng)) {
    ++pairs;
    const auto ea = Idempotent::indicator(frame, a);
    const auto eb = Idempotent::indicator(frame, b);
    for (const auto& ideal : ideals)
      absorb(additivity, cut_homomorphism_check(ea, eb, ideal), [&] {
        return Json{{"e1", frame.name_of(a)}, {"e2", frame.name_of(b)},
                    {"ideal", ideal.label(frame)}};
      });
  }

  std::size_t families = 0;
  for (const auto& family : idempotent_families(frame.center(), rng)) {
    ++families;
    const auto idems = indicators(frame, family);
    for_each_coefficients(family.size(), [&](const std::vector<Rational>& coeffs) {
      for (const auto& ideal : ideals) {
        Rational expected = 0;
        for (std::size_t i = 0; i < family.size(); ++i)
          if (!ideal.contains(family[i])) expected += coeffs[i];
        auto ctx = [&] {
          Json cj = Json::array();
          for (const auto& k : coeffs) cj.push_back(format_rational(k));
          return Json{{"family", names(frame, family)},
                      {"coefficients", cj},
                      {"ideal", ideal.label(frame)},
                      {"expected", format_rational(expected)}};
        };
        try {
          const auto v = linear_combination_cut(coeffs, idems, ideal);
          check(linear, v == expected, [&] {
            auto d = ctx();
            d["cut"] = format_rational(v);
            return d;
          });
        } catch (const Error& e) {
          auto d = ctx();
          d["error"] = e.what();
          linear.fail(d);
        }
      }
    });
  }

  coincidence.witness({{"functions", fns.size()}, {"prime_ideals", ideals.size()}});
  idem.witness({{"idempotents", frame.center().size()}, {"prime_ideals", ideals.size()}});
  scaling.witness({{"functions", fns.size()}, {"k", {"2/1", "-1/1", "1/2", "-3/2", "0/1"}}});
  additivity.witness({{"idempotent_pairs", pairs}, {"function_pairs", fns.size() - 1}});
  bounded.witness({{"functions", fns.size()}});
  linear.witness({{"families", families}, {"coefficients", {"-2/1", "-1/1", "0/1", "1/1", "2/1", "1/2"}}});
  return {coincidence, idem, scaling, additivity, bounded, linear};
}

std::vector<PropertyReport> suite_coz_decomposition(const Frame& frame, std::mt19937_64& rng,
                                                    std::size_t count) {
  PropertyReport decomposition(frame.name(), "decompose");
  PropertyReport range(frame.name(), "range-set");
  PropertyReport cuts(frame.name(), "eval-cut");
  PropertyReport stabilization(frame.name(), "stabilization");
  PropertyReport dimension(frame.name(), "zero-dimensional-iff-c-completely-regular");

  for (const auto& fn : samples(frame, rng, count)) {
    auto ctx = [&] { return Json{{"alpha", fn_json(fn)}}; };
    Element nonzero = frame.bottom();
    RationalSet values;
    Rational smallest = 0;
    for (const auto& p : fn.parts()) {
      values.insert(p.value);
      if (p.value != 0) {
        nonzero = frame.join(nonzero, p.element);
        if (smallest == 0 || magnitude(p.value) < smallest) smallest = magnitude(p.value);
      }
    }
    Element joined = frame.bottom();
    bool complemented = true;
    for (const auto& e : decompose_coz(fn)) {
      joined = frame.join(joined, e.support());
      complemented = complemented && frame.is_complemented(e.support());
    }
    check(decomposition, coz(fn) == nonzero && joined == nonzero && complemented, [&] {
      auto d = ctx();
      d["coz"] = frame.name_of(coz(fn));
      d["decomposition_join"] = frame.name_of(joined);
      d["expected"] = frame.name_of(nonzero);
      return d;
    });

    const auto rs = range_set(fn);
    check(range, rs == values, ctx);
    const auto vs = fn.values();
    for (const auto& r : evaluation_grid(vs)) {
      const bool in_range = values.contains(r);
      check(range, (coz(fn - StepFunction::constant(frame, r)) != frame.top()) == in_range, [&] {
        auto d = ctx();
        d["r"] = format_rational(r);
        return d;
      });
      const auto up = eval_cut(fn, r, CutSide::Upper);
      const auto low = eval_cut(fn, r, CutSide::Lower);
      const bool split = frame.join(up, low) == frame.top() && frame.meet(up, low) == frame.bottom();
      check(cuts, in_range ? frame.join(up, low) != frame.top()
                           : split && frame.is_complemented(up) && frame.is_complemented(low),
            [&] {
              auto d = ctx();
              d["r"] = format_rational(r);
              d["upper"] = frame.name_of(up);
              d["lower"] = frame.name_of(low);
              return d;
            });
    }

    Element approx = frame.bottom();
    if (smallest != 0) {
      std::size_t n = 1;
      while (Rational(1, n) >= smallest) ++n;
      for (std::size_t k = 1; k <= n; ++k)
        approx = frame.join(approx, frame.join(eval_below(fn, Rational(-1, k)),
                                               eval_above(fn, Rational(1, k))));
    }
    check(stabilization, approx == coz(fn), [&] {
      auto d = ctx();
      d["approximation"] = frame.name_of(approx);
      return d;
    });
  }

  const auto zd = is_zero_dimensional(frame);
  const auto cr = is_c_completely_regular(frame);
  const bool boolean = frame.center().size() == frame.size();
  check(dimension, zd.verdict == cr.verdict && zd.verdict == boolean, [&] {
    return Json{{"zero_dimensional", zd.verdict},
                {"c_completely_regular", cr.verdict},
                {"boolean", boolean}};
  });
  dimension.witness({{"zero_dimensional", zd.verdict}, {"c_completely_regular", cr.verdict}});
  for (auto* r : {&decomposition, &range, &cuts, &stabilization})
    r->witness({{"functions", count}});
  return {decomposition, range, cuts, stabilization, dimension};
}

std::vector<PropertyReport> suite_range_subsets(const Frame& frame, std::mt19937_64& rng,
                                                std::size_t count) {
  PropertyReport via_cuts(frame.name(), "range-via-cuts");
  PropertyReport linear(frame.name(), "linear");
  PropertyReport binary(frame.name(), "binary");
  PropertyReport series(frame.name(), "series");

  for (const auto& fn : samples(frame, rng, count)) {
    const auto a = range_via_cuts(fn);
    const auto b = range_set(fn);
    check(via_cuts, a == b, [&] {
      Json ja = Json::array(), jb = Json::array();
      for (const auto& x : a) ja.push_back(format_rational(x));
      for (const auto& x : b) jb.push_back(format_rational(x));
      return Json{{"alpha", fn_json(fn)}, {"via_cuts", ja}, {"range_set", jb}};
    });
  }

  std::size_t pairs = 0;
  for (auto [x, y] : idempotent_pairs(frame, rng)) {
    ++pairs;
    const auto ex = Idempotent::indicator(frame, x);
    const auto ey = Idempotent::indicator(frame, y);
    for (auto op : {Op::Add, Op::Mul, Op::Join, Op::Meet})
      absorb(binary, binary_range_subset_check(ex, ey, op), [&] {
        return Json{{"e1", frame.name_of(x)}, {"e2", frame.name_of(y)}, {"op", to_string(op)}};
      });
  }

  std::size_t families = 0;
  for (const auto& family : idempotent_families(frame.center(), rng)) {
    ++families;
    const auto idems = indicators(frame, family);
    auto ctx = [&] { return Json{{"family", names(frame, family)}}; };
    absorb(series, series_range_subset_check(frame, idems), ctx);
    for_each_coefficients(family.size(), [&](const std::vector<Rational>& coeffs) {
      absorb(linear, linear_range_subset_check(coeffs, idems), [&] {
        Json cj = Json::array();
        for (const auto& k : coeffs) cj.push_back(format_rational(k));
        auto d = ctx();
        d["coefficients"] = cj;
        return d;
      });
    });
  }
  via_cuts.witness({{"functions", count}});
  linear.witness({{"families", families}});
  binary.witness({{"idempotent_pairs", pairs}, {"ops", {"+", "*", "join", "meet"}}});
  series.witness({{"families", families}});
  return {via_cuts, linear, binary, series};
}

std::vector<PropertyReport> suite_sigma_frame(const Frame& frame) {
  auto report = sigma_frame_check(coz_part(frame));
  report.property = "coz-part";
  return {report};
}

std::vector<PropertyReport> suite_coz_properties(const Frame& frame) {
  const auto part = coz_part(frame);
  const bool hypothesis = is_zero_dimensional(frame).verdict;
  std::vector<PropertyReport> out{is_regular_sigma(part), is_normal(part),
                                  is_perfectly_normal(part), is_alexandroff(part)};
  for (auto& r : cover_checks(part, frame_seed(0x5eed, frame.name()))) out.push_back(std::move(r));
  if (!hypothesis)
    for (auto& r : out) {
      r.mandatory = false;
      r.witness({{"hypothesis", "unmet: frame is not completely regular"}});
    }
  return out;
}

std::vector<PropertyReport> suite_model_laws(const Frame& frame, std::mt19937_64& rng,
                                             std::size_t count) {
  std::vector<PropertyReport> acc;
  for (const char* name : {"r1", "r2", "r3", "r4", "diamond"}) acc.emplace_back(frame.name(), name);
  for (std::size_t i = 0; i < count; ++i) {
    const auto alpha = sample_step_function(frame, rng);
    const auto beta = sample_step_function(frame, rng);
    const auto got = model_laws_check(alpha, beta);
    for (std::size_t k = 0; k < acc.size(); ++k)
      absorb(acc[k], got[k],
             [&] { return Json{{"alpha", fn_json(alpha)}, {"beta", fn_json(beta)}}; });
  }
  for (auto& r : acc) r.witness({{"pairs", count}});
  return acc;
}

std::vector<PropertyReport> suite_oracles(const Frame& frame) {
  PropertyReport primes(frame.name(), "prime-ideals");
  PropertyReport rather(frame.name(), "rather-below");
  PropertyReport birkhoff(frame.name(), "birkhoff");

  if (frame.size() <= 16) {
    const auto fast = prime_ideals(frame);
    const auto slow = prime_ideals_brute_force(frame);
    check(primes, fast == slow, [&] {
      Json a = Json::array(), b = Json::array();
      for (const auto& p : fast) a.push_back(p.label(frame));
      for (const auto& p : slow) b.push_back(p.label(frame));
      return Json{{"join_irreducible", a}, {"brute_force", b}};
    });
    for (const auto& p : fast) primes.expect(is_prime_ideal(frame, p.members()), {{"ideal", p.label(frame)}});
    primes.witness({{"prime_ideals", fast.size()}});
  } else {
    primes.mandatory = false;
    primes.witness({{"skipped", "frame has more than 16 elements"}});
  }

  if (frame.size() <= 32) {
    for (auto a : frame.elements())
      for (auto b : frame.elements()) {
        const auto w = frame.rather_below_witness(a, b);
        check(rather, frame.rather_below(a, b) == w.has_value(), [&] {
          return Json{{"a", frame.name_of(a)}, {"b", frame.name_of(b)}, {"witness", w.has_value()}};
        });
      }
    rather.witness({{"pairs", frame.size() * frame.size()}});
  } else {
    rather.mandatory = false;
    rather.witness({{"skipped", "frame has more than 32 elements"}});
  }

  const auto b = birkhoff_reconstruction(frame);
  check(birkhoff, b.isomorphic, [&] { return Json{{"detail", b.detail}}; });
  birkhoff.witness({{"join_irreducibles", b.join_irreducible_count}, {"downsets", b.downset_count}});
  return {primes, rather, birkhoff};
}

std::vector<PropertyReport> run_suite(Suite suite, const Frame& frame, const VerifyOptions& options) {
  std::mt19937_64 rng(frame_seed(options.seed, frame.name()) ^
                      (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(suite) + 1)));
  switch (suite) {
    case Suite::Remark3: return suite_remark3(frame);
    case Suite::IdempotentTables: return suite_idempotent_tables(frame);
    case Suite::CutLemmas: return suite_cut_lemmas(frame, rng, options.samples);
    case Suite::CozDecomposition: return suite_coz_decomposition(frame, rng, options.samples);
    case Suite::RangeSubsets: return suite_range_subsets(frame, rng, options.samples);
    case Suite::SigmaFrame: return suite_sigma_frame(frame);
    case Suite::CozProperties: return suite_coz_properties(frame);
    case Suite::ModelLaws: return suite_model_laws(frame, rng, options.samples);
    case Suite::Oracles: return suite_oracles(frame);
  }
  return {};
}

}  // namespace

const char* to_string(Suite suite) noexcept {
  switch (suite) {
    case Suite::Remark3: return "remark3";
    case Suite::IdempotentTables: return "idempotent-tables";
    case Suite::CutLemmas: return "cut-lemmas";
    case Suite::CozDecomposition: return "coz-decomposition";
    case Suite::RangeSubsets: return "range-subsets";
    case Suite::SigmaFrame: return "sigma-frame";
    case Suite::CozProperties: return "coz-properties";
    case Suite::ModelLaws: return "model-laws";
    case Suite::Oracles: return "oracles";
  }
  return "?";
}

std::vector<Suite> all_suites() {
  return {Suite::Remark3,      Suite::IdempotentTables, Suite::CutLemmas,
          Suite::CozDecomposition, Suite::RangeSubsets, Suite::SigmaFrame,
          Suite::CozProperties, Suite::ModelLaws,       Suite::Oracles};
}

std::vector<Suite> parse_suites(const std::vector<std::string>& names) {
  std::vector<char> chosen(all_suites().size(), 0);
  for (const auto& name : names) {
    if (name == "all") {
      std::fill(chosen.begin(), chosen.end(), 1);
      continue;
    }
    bool known = false;
    for (auto s : all_suites())
      if (name == to_string(s)) {
        chosen[static_cast<std::size_t>(s)] = 1;
        known = true;
      }
    if (!known) throw Error(ErrorKind::InvalidInput, "unknown suite '" + name + "'");
  }
  std::vector<Suite> out;
  for (auto s : all_suites())
    if (chosen[static_cast<std::size_t>(s)]) out.push_back(s);
  return out;
}

ElementSet center_atoms(const Frame& frame) {
  ElementSet atoms;
  const auto& center = frame.center();
  for (auto c : center) {
    if (c == frame.bottom()) continue;
    bool minimal = true;
    for (auto d : center)
      if (d != c && d != frame.bottom() && frame.leq(d, c)) minimal = false;
    if (minimal) atoms.push_back(c);
  }
  return atoms;
}

std::uint64_t frame_seed(std::uint64_t seed, std::string_view frame_name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char ch : frame_name) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h ^ (seed * 0x9e3779b97f4a7c15ULL);
}

StepFunction sample_step_function(const Frame& frame, std::mt19937_64& rng) {
  auto atoms = center_atoms(frame);
  if (atoms.empty()) throw Error(ErrorKind::DegenerateFrame, "no step functions on the one-element frame");
  std::shuffle(atoms.begin(), atoms.end(), rng);
  const auto blocks = 1 + rng() % std::min<std::size_t>(4, atoms.size());
  std::vector<Element> joins(blocks, frame.bottom());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const auto b = i < blocks ? i : rng() % blocks;
    joins[b] = frame.join(joins[b], atoms[i]);
  }
  std::vector<Rational> pool{Rational(-2), Rational(-1), Rational(0), Rational(1, 2),
                             Rational(1),  Rational(2),  Rational(3)};
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<Part> parts;
  for (std::size_t b = 0; b < blocks; ++b) parts.push_back(Part{joins[b], pool[b]});
  return StepFunction::make(frame, std::move(parts));
}

std::vector<Rational> evaluation_grid(std::span<const Rational> values) {
  std::vector<Rational> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) return {Rational(0)};
  std::vector<Rational> out{sorted.front() - 1};
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0) out.push_back((sorted[i - 1] + sorted[i]) / 2);
    out.push_back(sorted[i]);
  }
  out.push_back(sorted.back() + 1);
  return out;
}

std::vector<PropertyReport> model_laws_check(const StepFunction& alpha, const StepFunction& beta) {
  if (alpha.frame().id() != beta.frame().id())
    throw Error(ErrorKind::FrameMismatch, "model laws need two functions on one frame");
  const auto& name = alpha.frame().name();
  std::vector<PropertyReport> out;
  for (const char* n : {"r1", "r2", "r3", "r4", "diamond"}) out.emplace_back(name, n);
  for (const auto* fn : {&alpha, &beta}) r_laws(*fn, out[0], out[1], out[2], out[3]);
  for (auto op : {Op::Add, Op::Mul, Op::Join, Op::Meet}) diamond(alpha, beta, op, out[4]);
  return out;
}

PropertyReport remark3_check(const Frame& frame, Element support, const Rational& k) {
  if (k == 0) throw Error(ErrorKind::InvalidInput, "multiple tables need k ≠ 0");
  const auto e = Idempotent::indicator(frame, support);
  const auto fn = k == 1 ? e.fn() : scale(k, e.fn());
  const auto c = support;
  const auto cc = frame.complement(support);
  const auto top = frame.top(), bot = frame.bottom();
  PropertyReport report(frame.name(), "remark3");
  const std::array<Rational, 3> anchors{Rational(0), Rational(1), k};
  for (const auto& x : evaluation_grid(anchors)) {
    Element above, below;
    if (k > 0) {
      above = x < 0 ? top : x < k ? c : bot;
      below = x <= 0 ? bot : x <= k ? cc : top;
    } else {
      above = x >= 0 ? bot : x >= k ? cc : top;
      below = x > 0 ? top : x > k ? c : bot;
    }
    const auto got_above = eval_above(fn, x);
    const auto got_below = eval_below(fn, x);
    check(report, got_above == above && got_below == below, [&] {
      return Json{{"k", format_rational(k)},
                  {"x", format_rational(x)},
                  {"above", frame.name_of(got_above)},
                  {"expected_above", frame.name_of(above)},
                  {"below", frame.name_of(got_below)},
                  {"expected_below", frame.name_of(below)}};
    });
  }
  return report;
}

PropertyReport idempotent_table_check(const Frame& frame, Element c1, Element c2, Op op) {
  const auto e1 = Idempotent::indicator(frame, c1);
  const auto e2 = Idempotent::indicator(frame, c2);
  const auto fn = combine(e1, e2, op);
  const auto top = frame.top(), bot = frame.bottom();
  const auto n1 = frame.complement(c1), n2 = frame.complement(c2);
  PropertyReport report(frame.name(), std::string("table-") + to_string(op));
  const std::array<Rational, 3> anchors{Rational(0), Rational(1), Rational(2)};
  for (const auto& x : evaluation_grid(anchors)) {
    Element above = bot, below = bot;
    switch (op) {
      case Op::Add:
        above = x < 0 ? top : x < 1 ? frame.join(c1, c2) : x < 2 ? frame.meet(c1, c2) : bot;
        // ⊤ for x > 2, not ⊥: the sum is at most 2 everywhere, so the
        // ray (−, x) is all of ⊤ there.
        below = x <= 0 ? bot : x <= 1 ? frame.meet(n1, n2) : x <= 2 ? frame.join(n1, n2) : top;
        break;
      case Op::Mul:
        above = x < 0 ? top : x < 1 ? frame.meet(c1, c2) : bot;
        below = x <= 0 ? bot : x <= 1 ? frame.join(n1, n2) : top;
        break;
      case Op::Join:
        above = x < 0 ? top : x < 1 ? frame.join(c1, c2) : bot;
        below = x <= 0 ? bot : x <= 1 ? frame.meet(n1, n2) : top;
        break;
      case Op::Meet:
        above = x < 0 ? top : x < 1 ? frame.meet(c1, c2) : bot;
        below = x <= 0 ? bot : x <= 1 ? frame.join(n1, n2) : top;
        break;
    }
    const auto got_above = eval_above(fn, x);
    const auto got_below = eval_below(fn, x);
    check(report, got_above == above && got_below == below, [&] {
      return Json{{"op", to_string(op)},
                  {"x", format_rational(x)},
                  {"above", frame.name_of(got_above)},
                  {"expected_above", frame.name_of(above)},
                  {"below", frame.name_of(got_below)},
                  {"expected_below", frame.name_of(below)}};
    });
  }
  if (op == Op::Add)
    check(report, coz(fn) == frame.join(c1, c2),
          [&] { return Json{{"coz_sum", frame.name_of(coz(fn))}}; });
  return report;
}

std::vector<PropertyReport> verify_frame(const Frame& frame, const VerifyOptions& options) {
  std::vector<PropertyReport> out;
  if (frame.size() < 2) {
    PropertyReport r(frame.name(), "frame:degenerate");
    r.mandatory = false;
    r.witness({{"reason", "one-element frame carries no step functions"}});
    out.push_back(std::move(r));
    return out;
  }
  for (auto suite : options.suites) {
    const std::string prefix = std::string(to_string(suite)) + ":";
    std::vector<PropertyReport> got;
    try {
      got = run_suite(suite, frame, options);
    } catch (const std::exception& e) {
      PropertyReport r(frame.name(), "error");
      r.fail({{"error", e.what()}});
      got.push_back(std::move(r));
    }
    for (auto& r : got) {
      r.frame = frame.name();
      r.property = prefix + r.property;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<PropertyReport> verify_frames(const std::vector<Frame>& frames,
                                          const VerifyOptions& options) {
  std::vector<std::vector<PropertyReport>> per_frame(frames.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < frames.size();)
      per_frame[i] = verify_frame(frames[i], options);
  };
  const auto jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(1, frames.size()));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<PropertyReport> out;
  for (auto& reports : per_frame)
    for (auto& r : reports) out.push_back(std::move(r));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.frame, a.property) < std::tie(b.frame, b.property);
  });
  return out;
}

bool all_mandatory_pass(std::span<const PropertyReport> reports) {
  return first_failure(reports) == nullptr;
}

const PropertyReport* first_failure(std::span<const PropertyReport> reports) {
  for (const auto& r : reports)
    if (r.mandatory && !r.verdict) return &r;
  return nullptr;
}

Json reports_json(std::span<const PropertyReport> reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

}  // namespace cozc
