#include "cozc/step_function.hpp"

#include <algorithm>
#include <map>

#include "cozc/error.hpp"

namespace cozc {

StepFunction StepFunction::canonical(const Frame& frame, std::vector<Part> parts) {
  std::map<Rational, Element> by_value;
  const auto bottom = frame.bottom();
  for (auto& part : parts) {
    if (part.element == bottom) continue;
    auto [it, fresh] = by_value.try_emplace(std::move(part.value), part.element);
    if (!fresh) it->second = frame.join(it->second, part.element);
  }
  std::vector<Part> out;
  out.reserve(by_value.size());
  for (auto& [value, element] : by_value) out.push_back(Part{element, value});
  std::sort(out.begin(), out.end(),
            [](const Part& a, const Part& b) { return a.element.index < b.element.index; });
  return StepFunction(frame, std::move(out));
}

StepFunction StepFunction::make(const Frame& frame, std::vector<Part> parts) {
  if (frame.size() < 2)
    throw Error(ErrorKind::DegenerateFrame,
                "frame '" + frame.name() + "' has a single element; R(L) is not modelled there");
  if (parts.empty()) throw Error(ErrorKind::NotAPartition, "no parts given");
  for (const auto& part : parts)
    if (!frame.is_complemented(part.element))
      throw Error(ErrorKind::NotComplementedPart,
                  "part '" + frame.name_of(part.element) + "' is not complemented");
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (frame.meet(parts[i].element, parts[j].element) != frame.bottom())
        throw Error(ErrorKind::NotAPartition, "parts '" + frame.name_of(parts[i].element) +
                                                  "' and '" + frame.name_of(parts[j].element) +
                                                  "' overlap");
  Element cover = frame.bottom();
  for (const auto& part : parts) cover = frame.join(cover, part.element);
  if (cover != frame.top())
    throw Error(ErrorKind::NotAPartition,
                "parts join to '" + frame.name_of(cover) + "' instead of top");
  return canonical(frame, std::move(parts));
}

StepFunction StepFunction::constant(const Frame& frame, const Rational& value) {
  return make(frame, {Part{frame.top(), value}});
}

std::vector<Rational> StepFunction::values() const {
  std::vector<Rational> out;
  out.reserve(parts_.size());
  for (const auto& p : parts_) out.push_back(p.value);
  std::sort(out.begin(), out.end());
  return out;
}

bool StepFunction::is_idempotent() const {
  return std::all_of(parts_.begin(), parts_.end(),
                     [](const Part& p) { return p.value == 0 || p.value == 1; });
}

bool operator==(const StepFunction& lhs, const StepFunction& rhs) {
  return lhs.frame_.id() == rhs.frame_.id() && lhs.parts_ == rhs.parts_;
}

Idempotent Idempotent::indicator(const Frame& frame, Element a) {
  const auto rest = frame.complement(a);
  return Idempotent(StepFunction::make(frame, {Part{a, 1}, Part{rest, 0}}));
}

Idempotent Idempotent::from(StepFunction fn) {
  if (!fn.is_idempotent())
    throw Error(ErrorKind::NotIdempotent, "step function takes values outside {0, 1}");
  return Idempotent(std::move(fn));
}

Element Idempotent::support() const { return coz(fn_); }

const char* to_string(Op op) noexcept {
  switch (op) {
    case Op::Add: return "+";
    case Op::Mul: return "*";
    case Op::Join: return "join";
    case Op::Meet: return "meet";
  }
  return "?";
}

Rational apply(Op op, const Rational& lhs, const Rational& rhs) {
  switch (op) {
    case Op::Add: return lhs + rhs;
    case Op::Mul: return lhs * rhs;
    case Op::Join: return lhs < rhs ? rhs : lhs;
    case Op::Meet: return lhs < rhs ? lhs : rhs;
  }
  return lhs;
}

Element eval(const StepFunction& fn, const Bound& lower, const Bound& upper) {
  if (lower && upper && *lower >= *upper)
    throw Error(ErrorKind::EmptyInterval, "lower bound " + format_rational(*lower) +
                                              " is not below upper bound " +
                                              format_rational(*upper));
  const auto& frame = fn.frame();
  Element acc = frame.bottom();
  for (const auto& part : fn.parts())
    if ((!lower || *lower < part.value) && (!upper || part.value < *upper))
      acc = frame.join(acc, part.element);
  return acc;
}

Element eval_above(const StepFunction& fn, const Rational& p) { return eval(fn, p, std::nullopt); }

Element eval_below(const StepFunction& fn, const Rational& q) { return eval(fn, std::nullopt, q); }

StepFunction combine(const StepFunction& lhs, const StepFunction& rhs, Op op) {
  const auto& frame = lhs.frame();
  if (frame.id() != rhs.frame().id())
    throw Error(ErrorKind::FrameMismatch, "cannot combine functions on frames '" + frame.name() +
                                              "' and '" + rhs.frame().name() + "'");
  std::vector<Part> parts;
  parts.reserve(lhs.parts().size() * rhs.parts().size());
  for (const auto& a : lhs.parts())
    for (const auto& b : rhs.parts()) {
      auto piece = frame.meet(a.element, b.element);
      if (piece != frame.bottom()) parts.push_back(Part{piece, apply(op, a.value, b.value)});
    }
  return StepFunction::canonical(frame, std::move(parts));
}

StepFunction scale(const Rational& k, const StepFunction& fn) {
  std::vector<Part> parts(fn.parts().begin(), fn.parts().end());
  for (auto& part : parts) part.value *= k;
  return StepFunction::canonical(fn.frame(), std::move(parts));
}

StepFunction operator+(const StepFunction& lhs, const StepFunction& rhs) {
  return combine(lhs, rhs, Op::Add);
}

StepFunction operator-(const StepFunction& lhs, const StepFunction& rhs) {
  return combine(lhs, scale(-1, rhs), Op::Add);
}

StepFunction operator*(const StepFunction& lhs, const StepFunction& rhs) {
  return combine(lhs, rhs, Op::Mul);
}

StepFunction operator*(const Rational& k, const StepFunction& fn) { return scale(k, fn); }

Element coz(const StepFunction& fn) {
  const Rational zero = 0;
  const auto& frame = fn.frame();
  return frame.join(eval_below(fn, zero), eval_above(fn, zero));
}

RationalSet range_set(const StepFunction& fn) {
  RationalSet out;
  const auto& frame = fn.frame();
  for (const auto& part : fn.parts()) {
    auto shifted = fn - StepFunction::constant(frame, part.value);
    if (coz(shifted) != frame.top()) out.insert(part.value);
  }
  return out;
}

Element eval_cut(const StepFunction& fn, const Rational& r, CutSide side) {
  return side == CutSide::Upper ? eval_below(fn, r) : eval_above(fn, r);
}

std::vector<Idempotent> decompose_coz(const StepFunction& fn) {
  std::vector<Idempotent> out;
  for (const auto& part : fn.parts())
    if (part.value != 0) out.push_back(Idempotent::indicator(fn.frame(), part.element));
  return out;
}

}  // namespace cozc
