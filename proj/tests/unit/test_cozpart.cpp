#include <doctest.h>

#include "cozc/corpus.hpp"
#include "cozc/cozpart.hpp"
#include "fixtures.hpp"

using namespace cozc;

TEST_CASE("coz part: frozen examples") {
  auto c3 = fixtures::c3();
  CHECK(coz_part(c3).members == ElementSet{c3.bottom(), c3.top()});
  auto b2 = fixtures::b2();
  CHECK(coz_part(b2).members.size() == 4);
  auto c4 = fixtures::c4();
  CHECK(coz_part(c4).members.size() == 2);
  auto prod = fixtures::b2_times_c3();
  CHECK(coz_part(prod).members == prod.center());
}

TEST_CASE("coz part: generators have the member as cozero") {
  auto f = fixtures::b2_times_c3();
  const auto part = coz_part(f);
  for (auto m : part.members) {
    REQUIRE(part.generator.count(m) == 1);
    CHECK(coz(part.generator.at(m)) == m);
    CHECK(part.contains(m));
    CHECK(part.complement_in(m) == f.complement(m));
  }
  CHECK_FALSE(part.contains(f.element("bot.m")));
}

TEST_CASE("sigma frame and zero dimensionality") {
  for (const auto& f : {fixtures::v_poset(), fixtures::c3(), fixtures::b2(), fixtures::b2_times_c3()})
    CHECK(sigma_frame_check(coz_part(f)).verdict);
  CHECK(is_zero_dimensional(fixtures::b2()).verdict);
  CHECK(is_c_completely_regular(fixtures::b2()).verdict);
  CHECK_FALSE(is_zero_dimensional(fixtures::b2_times_c3()).verdict);
  CHECK_FALSE(is_c_completely_regular(fixtures::c3()).verdict);
  for (std::size_t n = 1; n <= 4; ++n) CHECK(is_zero_dimensional(boolean_frame(n)).verdict);
  for (std::size_t n = 3; n <= 6; ++n) {
    CHECK_FALSE(is_zero_dimensional(chain_frame(n)).verdict);
    CHECK_FALSE(is_c_completely_regular(chain_frame(n)).verdict);
  }
}

TEST_CASE("separation properties of the coz part on Boolean frames") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto part = coz_part(boolean_frame(n));
    CHECK(is_regular_sigma(part).verdict);
    CHECK(is_normal(part).verdict);
    CHECK(is_perfectly_normal(part).verdict);
    CHECK(is_alexandroff(part).verdict);
    const auto covers = cover_checks(part);
    REQUIRE(covers.size() == 3);
    for (const auto& r : covers) CHECK_MESSAGE(r.verdict, r.property);
  }
}

TEST_CASE("rather below inside the coz part") {
  auto b2 = fixtures::b2();
  const auto part = coz_part(b2);
  const auto a = b2.element("a");
  CHECK(part.rather_below_in(a, a) == b2.element("b"));
  CHECK(part.rather_below_in(b2.top(), a) == std::nullopt);
}
