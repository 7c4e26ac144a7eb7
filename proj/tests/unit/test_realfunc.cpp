#include <doctest.h>

#include "cozc/verify.hpp"
#include "fixtures.hpp"

using namespace cozc;
using fixtures::kind_of;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("5") == q(5));
  CHECK(parse_rational("-3/2") == q(-3, 2));
  CHECK(parse_rational("4/-8") == q(-1, 2));
  CHECK(parse_rational("+6/4") == q(3, 2));
  CHECK(format_rational(q(5)) == "5/1");
  CHECK(format_rational(q(-6, 4)) == "-3/2");
  CHECK(format_rational(q(0)) == "0/1");
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "--1", "1/2/3"})
    CHECK_MESSAGE(kind_of([&] { parse_rational(bad); }) == ErrorKind::ParseError, bad);
}

TEST_CASE("step_function: construction and canonical form") {
  auto b2 = fixtures::b2();
  const auto a = b2.element("a"), b = b2.element("b");
  auto ea = StepFunction::make(b2, {{a, q(1)}, {b, q(0)}});
  CHECK(ea.is_idempotent());
  CHECK(ea == Idempotent::indicator(b2, a).fn());

  auto five = StepFunction::make(b2, {{b2.top(), q(5)}});
  CHECK(five == StepFunction::constant(b2, 5));
  CHECK(five.parts().size() == 1);

  // equal values merge, ⊥ parts vanish
  auto merged = StepFunction::make(b2, {{a, q(2)}, {b, q(2)}, {b2.bottom(), q(7)}});
  CHECK(merged == StepFunction::constant(b2, 2));

  CHECK(kind_of([&] { StepFunction::make(b2, {}); }) == ErrorKind::NotAPartition);
  CHECK(kind_of([&] { StepFunction::make(b2, {{a, q(1)}}); }) == ErrorKind::NotAPartition);
  CHECK(kind_of([&] { StepFunction::make(b2, {{a, q(1)}, {b2.top(), q(0)}}); }) ==
        ErrorKind::NotAPartition);

  auto c3 = fixtures::c3();
  CHECK(kind_of([&] {
          StepFunction::make(c3, {{c3.element("m"), q(1)}, {c3.top(), q(0)}});
        }) == ErrorKind::NotComplementedPart);
  auto one = Frame::build("one", {"p"}, {});
  CHECK(kind_of([&] { StepFunction::constant(one, 0); }) == ErrorKind::DegenerateFrame);
  CHECK(kind_of([&] { StepFunction::make(b2, {{c3.top(), q(1)}}); }) == ErrorKind::FrameMismatch);
}

TEST_CASE("indicator") {
  auto b2 = fixtures::b2();
  CHECK(Idempotent::indicator(b2, b2.top()).fn() == StepFunction::constant(b2, 1));
  CHECK(Idempotent::indicator(b2, b2.bottom()).fn() == StepFunction::constant(b2, 0));
  CHECK(coz(Idempotent::indicator(b2, b2.element("a"))) == b2.element("a"));
  auto c3 = fixtures::c3();
  CHECK(kind_of([&] { Idempotent::indicator(c3, c3.element("m")); }) == ErrorKind::NotComplemented);
  CHECK(kind_of([&] { Idempotent::from(StepFunction::constant(b2, 2)); }) == ErrorKind::NotIdempotent);
}

TEST_CASE("eval: rays and intervals") {
  auto b2 = fixtures::b2();
  const auto a = b2.element("a");
  const auto ea = Idempotent::indicator(b2, a).fn();
  CHECK(eval_above(ea, q(0)) == a);
  CHECK(eval_above(ea, q(1, 2)) == a);
  CHECK(eval_above(ea, q(1)) == b2.bottom());
  const auto five = StepFunction::constant(b2, 5);
  CHECK(eval_below(five, q(5)) == b2.bottom());
  CHECK(eval_below(five, q(6)) == b2.top());
  CHECK(eval(ea, std::nullopt, std::nullopt) == b2.top());
  CHECK(eval(ea, q(-1), q(1, 2)) == b2.element("b"));
  CHECK(kind_of([&] { eval(ea, q(1), q(1)); }) == ErrorKind::EmptyInterval);
  CHECK(kind_of([&] { eval(ea, q(2), q(1)); }) == ErrorKind::EmptyInterval);
}

TEST_CASE("combine and scale: frozen examples") {
  auto b2 = fixtures::b2();
  const auto a = b2.element("a"), b = b2.element("b");
  const auto ea = Idempotent::indicator(b2, a).fn();
  const auto eb = Idempotent::indicator(b2, b).fn();
  CHECK(eval_above(combine(ea, ea, Op::Add), q(3, 2)) == a);
  CHECK(combine(ea, eb, Op::Mul) == StepFunction::constant(b2, 0));
  CHECK(ea + StepFunction::constant(b2, 0) == ea);
  CHECK(scale(0, ea) == StepFunction::constant(b2, 0));
  const auto neg = scale(-1, ea);
  CHECK(eval_below(neg, q(0)) == a);
  CHECK(eval_below(neg, q(-1, 2)) == a);
  CHECK(eval_below(neg, q(-1)) == b2.bottom());
  const auto k = q(3);
  for (const auto& x : {q(0), q(1), q(5, 2)}) CHECK(eval_above(scale(k, ea), x) == a);
  CHECK(eval_above(scale(k, ea), k) == b2.bottom());
  CHECK(combine(ea, eb, Op::Join) == StepFunction::constant(b2, 1));
  CHECK(combine(ea, eb, Op::Meet) == StepFunction::constant(b2, 0));
  CHECK(ea - ea == StepFunction::constant(b2, 0));
  CHECK(q(2) * ea == scale(2, ea));
  CHECK(ea * ea == ea);
  auto c3 = fixtures::c3();
  CHECK(kind_of([&] { combine(ea, StepFunction::constant(c3, 1), Op::Add); }) ==
        ErrorKind::FrameMismatch);
}

TEST_CASE("coz, range_set, eval_cut, decompose_coz") {
  auto b2 = fixtures::b2();
  const auto a = b2.element("a"), b = b2.element("b");
  const auto ea = Idempotent::indicator(b2, a).fn();
  const auto eb = Idempotent::indicator(b2, b).fn();
  CHECK(coz(StepFunction::constant(b2, 0)) == b2.bottom());
  CHECK(coz(scale(2, ea) + scale(3, eb)) == b2.top());
  CHECK(range_set(StepFunction::constant(b2, 5)) == RationalSet{q(5)});
  CHECK(range_set(ea) == RationalSet{q(0), q(1)});
  CHECK(range_set(ea + eb) == RationalSet{q(1)});

  CHECK(eval_cut(ea, q(1, 2), CutSide::Upper) == b);
  CHECK(eval_cut(ea, q(1, 2), CutSide::Lower) == a);
  CHECK(eval_cut(StepFunction::constant(b2, 0), q(-1), CutSide::Lower) == b2.top());
  const auto up = eval_cut(ea, q(3), CutSide::Upper), low = eval_cut(ea, q(3), CutSide::Lower);
  CHECK(b2.join(up, low) == b2.top());
  CHECK(b2.meet(up, low) == b2.bottom());

  CHECK(decompose_coz(StepFunction::constant(b2, 0)).empty());
  const auto one = decompose_coz(ea);
  REQUIRE(one.size() == 1);
  CHECK(one.front().fn() == ea);
  const auto two = decompose_coz(scale(2, ea) + scale(3, eb));
  REQUIRE(two.size() == 2);
  CHECK(b2.join(two[0].support(), two[1].support()) == b2.top());
}

TEST_CASE("range_set matches the values of non-bottom parts on sampled functions") {
  auto f = fixtures::b2_times_c3();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    const auto fn = sample_step_function(f, rng);
    RationalSet values;
    for (const auto& p : fn.parts()) values.insert(p.value);
    CHECK(range_set(fn) == values);
  }
}

TEST_CASE("single and two-idempotent tables on B2, B2xC3 and C4") {
  for (const auto& f : {fixtures::b2(), fixtures::b2_times_c3(), fixtures::c4()}) {
    for (auto c : f.center()) {
      for (const auto& k : {q(1), q(2), q(1, 3), q(-1), q(-5, 2)})
        CHECK(remark3_check(f, c, k).verdict);
      for (auto d : f.center())
        for (auto op : {Op::Add, Op::Mul, Op::Join, Op::Meet})
          CHECK(idempotent_table_check(f, c, d, op).verdict);
    }
  }
}

TEST_CASE("the sum table above 2 is top, not bottom") {
  auto b2 = fixtures::b2();
  const auto ea = Idempotent::indicator(b2, b2.element("a")).fn();
  CHECK(eval_below(ea + ea, q(3)) == b2.top());
  CHECK(eval_below(ea + ea, q(5, 2)) == b2.top());
}

TEST_CASE("model laws hold on sampled pairs and the grid is the documented one") {
  CHECK(evaluation_grid(std::vector<Rational>{q(1), q(0), q(3)}) ==
        std::vector<Rational>{q(-1), q(0), q(1, 2), q(1), q(2), q(3), q(4)});
  auto f = fixtures::b2_times_c3();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    const auto alpha = sample_step_function(f, rng);
    const auto beta = sample_step_function(f, rng);
    const auto reports = model_laws_check(alpha, beta);
    REQUIRE(reports.size() == 5);
    for (const auto& r : reports) {
      CHECK_MESSAGE(r.verdict, r.property);
      CHECK(r.checked > 0);
    }
  }
}

TEST_CASE("coz stabilises at the finite stage") {
  auto b2 = fixtures::b2();
  const auto alpha = scale(q(1, 3), Idempotent::indicator(b2, b2.element("a")).fn()) +
                     scale(q(-2), Idempotent::indicator(b2, b2.element("b")).fn());
  Element acc = b2.bottom();
  for (int n = 1; n <= 4; ++n)
    acc = b2.join(acc, b2.join(eval_below(alpha, q(-1, n)), eval_above(alpha, q(1, n))));
  CHECK(acc == coz(alpha));
  CHECK(b2.join(eval_below(alpha, q(-1)), eval_above(alpha, q(1))) != coz(alpha));
}
