#include "cozc/cuts.hpp"

#include <algorithm>

#include "cozc/error.hpp"

namespace cozc {

namespace {

void require_same(const StepFunction& fn, const PrimeIdeal& ideal) {
  if (fn.frame().id() != ideal.frame_id())
    throw Error(ErrorKind::FrameMismatch,
                "prime ideal does not belong to frame '" + fn.frame().name() + "'");
}

Json set_json(const RationalSet& set) {
  Json out = Json::array();
  for (const auto& r : set) out.push_back(format_rational(r));
  return out;
}

bool subset(const RationalSet& inner, const RationalSet& outer, Rational* missing) {
  for (const auto& x : inner)
    if (!outer.contains(x)) {
      if (missing) *missing = x;
      return false;
    }
  return true;
}

void sort_ideals(std::vector<PrimeIdeal>& ideals) {
  std::sort(ideals.begin(), ideals.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
    return a.members() < b.members();
  });
}

}  // namespace

PrimeIdeal::PrimeIdeal(const Frame& frame, ElementSet members, std::optional<Element> witness)
    : frame_id_(frame.id()), members_(std::move(members)), mask_(frame.size(), 0),
      witness_(witness) {
  std::sort(members_.begin(), members_.end());
  for (auto e : members_) {
    if (!frame.owns(e))
      throw Error(ErrorKind::FrameMismatch, "ideal member from another frame");
    mask_[e.index] = 1;
  }
}

bool PrimeIdeal::contains(Element a) const {
  if (a.frame_id != frame_id_ || a.index >= mask_.size())
    throw Error(ErrorKind::FrameMismatch, "membership test with an element of another frame");
  return mask_[a.index] != 0;
}

std::string PrimeIdeal::label(const Frame& frame) const {
  std::vector<std::string> names;
  for (auto e : members_) names.push_back(frame.name_of(e));
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + "}";
}

bool is_prime_ideal(const Frame& frame, std::span<const Element> members) {
  std::vector<char> in(frame.size(), 0);
  for (auto e : members) {
    if (!frame.owns(e)) throw Error(ErrorKind::FrameMismatch, "ideal member from another frame");
    in[e.index] = 1;
  }
  if (members.empty() || in[frame.top().index]) return false;
  const auto all = frame.elements();
  for (auto x : all) {
    if (!in[x.index]) continue;
    for (auto y : all) {
      if (frame.leq(y, x) && !in[y.index]) return false;
      if (in[y.index] && !in[frame.join(x, y).index]) return false;
    }
  }
  for (auto a : all)
    for (auto b : all)
      if (in[frame.meet(a, b).index] && !in[a.index] && !in[b.index]) return false;
  return true;
}

std::vector<PrimeIdeal> prime_ideals(const Frame& frame) {
  if (frame.size() < 2)
    throw Error(ErrorKind::DegenerateFrame, "the one-element frame has no prime ideals");
  std::vector<PrimeIdeal> out;
  for (auto j : frame.join_irreducibles()) {
    ElementSet members;
    for (auto x : frame.elements())
      if (!frame.leq(j, x)) members.push_back(x);
    out.emplace_back(frame, std::move(members), j);
  }
  sort_ideals(out);
  return out;
}

std::vector<PrimeIdeal> prime_ideals_brute_force(const Frame& frame) {
  const auto n = frame.size();
  if (n < 2) throw Error(ErrorKind::DegenerateFrame, "the one-element frame has no prime ideals");
  if (n > 16)
    throw Error(ErrorKind::SizeTooLarge, "brute-force enumeration limited to 16 elements");
  const auto all = frame.elements();
  std::vector<std::uint32_t> down(n, 0);
  for (auto x : all)
    for (auto y : all)
      if (frame.leq(y, x)) down[x.index] |= 1u << y.index;

  std::vector<PrimeIdeal> out;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    bool closed = true;
    for (std::size_t x = 0; x < n && closed; ++x)
      if ((mask >> x) & 1u) closed = (down[x] & ~mask) == 0;
    if (!closed) continue;
    ElementSet members;
    for (auto x : all)
      if ((mask >> x.index) & 1u) members.push_back(x);
    if (is_prime_ideal(frame, members)) out.emplace_back(frame, std::move(members));
  }
  sort_ideals(out);
  return out;
}

bool in_upper_cut(const StepFunction& fn, const PrimeIdeal& ideal, const Rational& x) {
  require_same(fn, ideal);
  return ideal.contains(eval_above(fn, x));
}

bool in_lower_cut(const StepFunction& fn, const PrimeIdeal& ideal, const Rational& x) {
  require_same(fn, ideal);
  return ideal.contains(eval_below(fn, x));
}

CutDescription cut(const StepFunction& fn, const PrimeIdeal& ideal) {
  require_same(fn, ideal);
  // Both rays are constant between consecutive block values, so the infimum
  // and supremum over the rationals are attained at block values. α(max,−)
  // and α(−,min) are ⊥, hence the searches below always succeed.
  const auto values = fn.values();
  std::optional<Rational> inf_upper, sup_lower;
  for (const auto& v : values)
    if (in_upper_cut(fn, ideal, v)) {
      inf_upper = v;
      break;
    }
  for (auto it = values.rbegin(); it != values.rend(); ++it)
    if (in_lower_cut(fn, ideal, *it)) {
      sup_lower = *it;
      break;
    }
  if (!inf_upper || !sup_lower || *inf_upper != *sup_lower)
    throw Error(ErrorKind::InvariantViolation, "inf P_u and sup P_l differ on frame '" +
                                                   fn.frame().name() + "'");
  CutDescription out;
  out.value = *inf_upper;
  out.upper_attained = in_upper_cut(fn, ideal, out.value);
  out.lower_attained = in_lower_cut(fn, ideal, out.value);
  return out;
}

Rational value_at(const StepFunction& fn, Element join_irreducible) {
  for (const auto& part : fn.parts())
    if (fn.frame().leq(join_irreducible, part.element)) return part.value;
  throw Error(ErrorKind::InvalidInput, "'" + fn.frame().name_of(join_irreducible) +
                                           "' lies below no block of the partition");
}

PropertyReport cut_homomorphism_check(const StepFunction& lhs, const StepFunction& rhs,
                                      const PrimeIdeal& ideal) {
  require_same(lhs, ideal);
  require_same(rhs, ideal);
  PropertyReport report(lhs.frame().name(), "cut-homomorphism");
  const bool idempotent_case = lhs.is_idempotent() && rhs.is_idempotent();
  const auto a = cut(lhs, ideal).value;
  const auto b = cut(rhs, ideal).value;
  for (auto op : {Op::Add, Op::Mul, Op::Join, Op::Meet}) {
    const auto combined = cut(combine(lhs, rhs, op), ideal).value;
    const auto expected = apply(op, a, b);
    Json row{{"op", to_string(op)},
             {"value", format_rational(combined)},
             {"expected", format_rational(expected)},
             {"idempotent_case", idempotent_case}};
    report.expect(combined == expected, row);
    report.witness(std::move(row));
  }
  return report;
}

StepFunction linear_combination(const Frame& frame, std::span<const Rational> coeffs,
                                std::span<const Idempotent> idems) {
  if (coeffs.size() != idems.size())
    throw Error(ErrorKind::LengthMismatch, std::to_string(coeffs.size()) + " coefficients for " +
                                               std::to_string(idems.size()) + " idempotents");
  auto acc = StepFunction::constant(frame, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    acc = combine(acc, scale(coeffs[i], idems[i].fn()), Op::Add);
  return acc;
}

Rational linear_combination_cut(std::span<const Rational> coeffs,
                                std::span<const Idempotent> idems, const PrimeIdeal& ideal) {
  if (coeffs.size() != idems.size())
    throw Error(ErrorKind::LengthMismatch, std::to_string(coeffs.size()) + " coefficients for " +
                                               std::to_string(idems.size()) + " idempotents");
  if (idems.empty()) return 0;
  const auto& frame = idems.front().fn().frame();
  const auto value = cut(linear_combination(frame, coeffs, idems), ideal).value;
  Rational expected = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    expected += coeffs[i] * cut(idems[i].fn(), ideal).value;
  if (value != expected)
    throw Error(ErrorKind::InvariantViolation,
                "cut of linear combination is " + format_rational(value) + ", expected " +
                    format_rational(expected));
  return value;
}

RationalSet range_via_cuts(const StepFunction& fn) {
  RationalSet out;
  for (const auto& ideal : prime_ideals(fn.frame())) out.insert(cut(fn, ideal).value);
  return out;
}

RationalSet elementwise(const RationalSet& lhs, const RationalSet& rhs, Op op) {
  RationalSet out;
  for (const auto& a : lhs)
    for (const auto& b : rhs) out.insert(apply(op, a, b));
  return out;
}

PropertyReport linear_range_subset_check(std::span<const Rational> coeffs,
                                         std::span<const Idempotent> idems) {
  if (coeffs.size() != idems.size())
    throw Error(ErrorKind::LengthMismatch, "coefficient and idempotent counts differ");
  if (idems.empty()) throw Error(ErrorKind::InvalidInput, "empty idempotent family");
  const auto& frame = idems.front().fn().frame();
  PropertyReport report(frame.name(), "range-subset-linear");
  const auto alpha = linear_combination(frame, coeffs, idems);
  const auto range = range_set(alpha);
  RationalSet sum{0};
  for (std::size_t i = 0; i < idems.size(); ++i)
    sum = elementwise(sum, range_set(scale(coeffs[i], idems[i].fn())), Op::Add);
  Rational missing;
  report.expect(subset(range, sum, &missing),
                {{"missing", format_rational(missing)}, {"range", set_json(range)}});
  report.witness({{"range", set_json(range)}, {"sum_of_ranges", set_json(sum)}});
  return report;
}

PropertyReport binary_range_subset_check(const Idempotent& e1, const Idempotent& e2, Op op) {
  const auto& frame = e1.fn().frame();
  PropertyReport report(frame.name(), std::string("range-subset-") + to_string(op));
  const auto combined = combine(e1.fn(), e2.fn(), op);
  const auto range = range_set(combined);
  const auto bound = elementwise(range_set(e1.fn()), range_set(e2.fn()), op);
  Rational missing;
  report.expect(subset(range, bound, &missing),
                {{"missing", format_rational(missing)}, {"range", set_json(range)}});
  for (const auto& ideal : prime_ideals(frame)) {
    const auto x = cut(combined, ideal).value;
    report.expect(range.contains(x),
                  {{"ideal", ideal.label(frame)}, {"cut_value", format_rational(x)}});
  }
  report.witness({{"range", set_json(range)}, {"bound", set_json(bound)}});
  return report;
}

PropertyReport series_range_subset_check(const Frame& frame, std::span<const Idempotent> idems) {
  PropertyReport report(frame.name(), "range-subset-series");
  auto alpha = StepFunction::constant(frame, 0);
  RationalSet sum{0};
  Element joined = frame.bottom();
  Rational weight = 1;
  for (const auto& e : idems) {
    auto term = scale(weight, e.fn());
    alpha = combine(alpha, term, Op::Add);
    sum = elementwise(sum, range_set(term), Op::Add);
    joined = frame.join(joined, e.support());
    weight /= 2;
  }
  const auto range = range_set(alpha);
  Rational missing;
  report.expect(subset(range, sum, &missing),
                {{"missing", format_rational(missing)}, {"range", set_json(range)}});
  report.expect(coz(alpha) == joined, {{"coz", frame.name_of(coz(alpha))},
                                       {"join_of_cozeros", frame.name_of(joined)}});
  report.witness({{"range", set_json(range)},
                  {"sum_of_ranges", set_json(sum)},
                  {"coz", frame.name_of(coz(alpha))}});
  return report;
}

Rational cut_bound(const StepFunction& fn) {
  Rational largest = 0;
  for (const auto& part : fn.parts()) {
    Rational mag = part.value < 0 ? Rational(-part.value) : part.value;
    if (mag > largest) largest = mag;
  }
  const auto num = boost::multiprecision::numerator(largest);
  const auto den = boost::multiprecision::denominator(largest);
  return Rational((num + den - 1) / den + 1);
}

PropertyReport bounded_cut_check(const StepFunction& fn) {
  const auto& frame = fn.frame();
  PropertyReport report(frame.name(), "bounded-cut");
  const auto n = cut_bound(fn);
  const Rational half(1, 2);
  for (const auto& ideal : prime_ideals(frame)) {
    Json row{{"ideal", ideal.label(frame)}, {"bound", format_rational(n)}};
    try {
      const auto c = cut(fn, ideal);
      row["value"] = format_rational(c.value);
      report.expect(c.upper_attained && c.lower_attained, row);
    } catch (const Error& e) {
      row["error"] = e.what();
      report.fail(row);
      continue;
    }
    report.expect(in_upper_cut(fn, ideal, n + half) && in_lower_cut(fn, ideal, -n - half), row);
    report.witness(std::move(row));
  }
  return report;
}

}  // namespace cozc
