#ifndef COZC_TESTS_FIXTURES_HPP
#define COZC_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "cozc/error.hpp"
#include "cozc/frame.hpp"
#include "cozc/step_function.hpp"

namespace fixtures {

using cozc::Frame;

inline Frame b1() { return Frame::build("B1", {"bot", "top"}, {{"bot", "top"}}); }

inline Frame b2() {
  return Frame::build("B2", {"bot", "a", "b", "top"},
                      {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
}

inline Frame c3() { return Frame::build("C3", {"bot", "m", "top"}, {{"bot", "m"}, {"m", "top"}}); }

inline Frame c4() {
  return Frame::build("C4", {"bot", "m", "n", "top"}, {{"bot", "m"}, {"m", "n"}, {"n", "top"}});
}

inline std::vector<std::string> m3_elements() { return {"bot", "a", "b", "c", "top"}; }
inline std::vector<Frame::CoverPair> m3_covers() {
  return {{"bot", "a"}, {"bot", "b"}, {"bot", "c"}, {"a", "top"}, {"b", "top"}, {"c", "top"}};
}

/// Downsets of the poset x < z > y.
inline Frame v_poset() {
  return Frame::build("V", {"0", "x", "y", "xy", "xyz"},
                      {{"0", "x"}, {"0", "y"}, {"x", "xy"}, {"y", "xy"}, {"xy", "xyz"}});
}

/// B2 × C3 with elements named "<b2>.<c3>".
inline Frame b2_times_c3() {
  const std::vector<std::string> left{"bot", "a", "b", "top"};
  const std::vector<std::string> right{"bot", "m", "top"};
  const std::vector<Frame::CoverPair> lc{{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}};
  const std::vector<Frame::CoverPair> rc{{"bot", "m"}, {"m", "top"}};
  std::vector<std::string> elements;
  std::vector<Frame::CoverPair> covers;
  for (const auto& l : left)
    for (const auto& r : right) elements.push_back(l + "." + r);
  for (const auto& [lo, hi] : lc)
    for (const auto& r : right) covers.emplace_back(lo + "." + r, hi + "." + r);
  for (const auto& l : left)
    for (const auto& [lo, hi] : rc) covers.emplace_back(l + "." + lo, l + "." + hi);
  return Frame::build("B2xC3", elements, covers);
}

inline cozc::ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const cozc::Error& e) {
    return e.kind();
  }
  throw std::logic_error("no cozc::Error raised");
}

}  // namespace fixtures

#endif  // COZC_TESTS_FIXTURES_HPP
