#include <doctest.h>

#include "cozc/corpus.hpp"
#include "cozc/verify.hpp"
#include "fixtures.hpp"

using namespace cozc;
using fixtures::kind_of;

TEST_CASE("parse_suites") {
  CHECK(parse_suites({"all"}) == all_suites());
  CHECK(parse_suites({"cut-lemmas", "remark3", "cut-lemmas"}) ==
        std::vector<Suite>{Suite::Remark3, Suite::CutLemmas});
  CHECK(kind_of([] { parse_suites({"remark3", "nope"}); }) == ErrorKind::InvalidInput);
  for (auto s : all_suites()) CHECK(parse_suites({to_string(s)}) == std::vector<Suite>{s});
}

TEST_CASE("center atoms") {
  CHECK(center_atoms(boolean_frame(3)).size() == 3);
  CHECK(center_atoms(fixtures::b2_times_c3()).size() == 3);
  CHECK(center_atoms(chain_frame(4)).size() == 1);
}

TEST_CASE("sampling is seeded") {
  auto f = fixtures::b2_times_c3();
  std::mt19937_64 r1(42), r2(42);
  for (int i = 0; i < 10; ++i) CHECK(sample_step_function(f, r1) == sample_step_function(f, r2));
  CHECK(frame_seed(7, f.name()) == frame_seed(7, f.name()));
  CHECK(frame_seed(7, f.name()) != frame_seed(8, f.name()));
}

TEST_CASE("verify_frame passes every mandatory suite on small frames") {
  VerifyOptions options;
  options.samples = 8;
  for (const auto& f : {fixtures::b2(), fixtures::c3(), fixtures::v_poset(), fixtures::b2_times_c3()}) {
    const auto reports = verify_frame(f, options);
    CHECK(!reports.empty());
    CHECK(all_mandatory_pass(reports));
    if (const auto* bad = first_failure(reports)) FAIL(bad->frame << " " << bad->property);
    for (const auto& r : reports) CHECK(r.property.find(':') != std::string::npos);
  }
}

TEST_CASE("the one-element frame is reported as degenerate") {
  const auto reports = verify_frame(Frame::build("one", {"p"}, {}), VerifyOptions{});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].property == "frame:degenerate");
  CHECK_FALSE(reports[0].mandatory);
  CHECK(all_mandatory_pass(reports));
}

TEST_CASE("verify_frames is deterministic across job counts") {
  std::vector<Frame> frames{fixtures::b2(), chain_frame(3), fixtures::v_poset()};
  VerifyOptions one;
  one.samples = 5;
  one.suites = {Suite::CutLemmas, Suite::ModelLaws};
  VerifyOptions three = one;
  three.jobs = 3;
  CHECK(reports_json(verify_frames(frames, one)) == reports_json(verify_frames(frames, three)));
}

TEST_CASE("a failing record is found and reported") {
  std::vector<PropertyReport> reports(2);
  reports[1].frame = "F";
  reports[1].property = "x:y";
  reports[1].fail({{"why", 1}});
  CHECK_FALSE(all_mandatory_pass(reports));
  REQUIRE(first_failure(reports) == &reports[1]);
  reports[1].mandatory = false;
  CHECK(all_mandatory_pass(reports));
  const auto json = reports_json(reports);
  CHECK(json.is_array());
  CHECK(json[1]["counterexample"]["why"] == 1);
}
