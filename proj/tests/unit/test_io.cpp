#include <doctest.h>

#include <filesystem>

#include "cozc/corpus.hpp"
#include "cozc/io.hpp"
#include "fixtures.hpp"

using namespace cozc;
using fixtures::kind_of;
namespace fs = std::filesystem;

TEST_CASE("frame round trip") {
  for (const auto& f : {fixtures::b2(), fixtures::v_poset(), fixtures::b2_times_c3(), chain_frame(1)}) {
    const auto text = serialize_frame(f);
    const auto back = parse_frame(text);
    CHECK(back == f);
    CHECK(serialize_frame(back) == text);
  }
}

TEST_CASE("frame serialization: frozen text") {
  CHECK(serialize_frame(fixtures::b1()) ==
        "{\n  \"name\": \"B1\",\n  \"elements\": [\n    \"bot\",\n    \"top\"\n  ],\n"
        "  \"covers\": [\n    [\n      \"bot\",\n      \"top\"\n    ]\n  ]\n}\n");
}

TEST_CASE("frame parse errors") {
  CHECK(kind_of([] { parse_frame("{"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_frame("[]"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_frame(R"({"name": "x", "elements": ["a"]})"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_frame(R"({"name": 3, "elements": ["a"], "covers": []})"); }) ==
        ErrorKind::ParseError);
  CHECK(kind_of([] {
          parse_frame(R"({"name": "x", "elements": ["a", "b"], "covers": [["a", "z"]]})");
        }) == ErrorKind::ParseError);
  CHECK(kind_of([] {
          parse_frame(R"({"name":"M3","elements":["bot","a","b","c","top"],"covers":[["bot","a"],["bot","b"],["bot","c"],["a","top"],["b","top"],["c","top"]]})");
        }) == ErrorKind::NotDistributive);
  try {
    parse_frame("{\n  \"name\": \"x\",\n  oops\n}");
    FAIL("accepted bad json");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
}

TEST_CASE("step function round trip and frame check") {
  auto b2 = fixtures::b2();
  const auto fn = StepFunction::make(b2, {{b2.element("a"), Rational(-3, 2)}, {b2.element("b"), Rational(4)}});
  const auto text = serialize_step_function(fn);
  CHECK(parse_step_function(text, b2) == fn);
  CHECK(text.find("\"-3/2\"") != std::string::npos);
  CHECK(kind_of([&] { parse_step_function(text, fixtures::c3()); }) == ErrorKind::FrameMismatch);
  CHECK(kind_of([&] {
          parse_step_function(R"({"frame":"B2","parts":[["a","1"]]})", b2);
        }) == ErrorKind::NotAPartition);
  CHECK(kind_of([&] {
          parse_step_function(R"({"frame":"B2","parts":[["top","x"]]})", b2);
        }) == ErrorKind::ParseError);
}

TEST_CASE("write_corpus and expand_frame_paths") {
  const auto dir = fs::temp_directory_path() / "cozc_test_io_corpus";
  fs::remove_all(dir);
  CorpusSpec spec{GeneratorKind::Chain, 2, 4, 1, 1};
  const auto manifest = write_corpus(generate_corpus(spec), dir);
  REQUIRE(manifest.size() == 3);
  CHECK(fs::exists(dir / "manifest.json"));
  const auto paths = expand_frame_paths({dir});
  CHECK(paths.size() == 3);
  for (const auto& p : paths) CHECK(p.filename() != "manifest.json");
  CHECK(parse_frame(read_text_file(paths.front())).size() == 2);
  CHECK(kind_of([&] { read_text_file(dir / "missing.json"); }) == ErrorKind::IoError);
  fs::remove_all(dir);
}
