#include <doctest.h>

#include <algorithm>

#include "cozc/corpus.hpp"
#include "fixtures.hpp"

using namespace cozc;
using fixtures::kind_of;

namespace {

// Brute-force oracles over the order alone.
Element largest_with(const Frame& f, auto&& pred) {
  std::optional<Element> best;
  for (auto x : f.elements())
    if (pred(x) && (!best || f.leq(*best, x))) best = x;
  for (auto x : f.elements())
    if (pred(x)) REQUIRE(f.leq(x, *best));
  return *best;
}

}  // namespace

TEST_CASE("build: B1, B2 and C3 are frames") {
  auto f = fixtures::b1();
  CHECK(f.size() == 2);
  CHECK(f.name_of(f.top()) == "top");
  CHECK(f.name_of(f.bottom()) == "bot");

  auto b2 = fixtures::b2();
  CHECK(b2.size() == 4);
  const auto a = b2.element("a"), b = b2.element("b");
  CHECK(b2.meet(a, b) == b2.bottom());
  CHECK(b2.join(a, b) == b2.top());
  CHECK(b2.big_join({}) == b2.bottom());
  CHECK(b2.big_meet({}) == b2.top());

  auto c3 = fixtures::c3();
  const auto m = c3.element("m");
  CHECK(c3.join(m, m) == m);
}

TEST_CASE("build: indices follow name order, whatever the input order") {
  auto f = Frame::build("X", {"top", "bot", "b", "a"},
                        {{"b", "top"}, {"bot", "a"}, {"a", "top"}, {"bot", "b"}});
  CHECK(f.name_of(f.at(0)) == "a");
  CHECK(f.name_of(f.at(3)) == "top");
  CHECK_FALSE(f == fixtures::b2());  // different name
  CHECK(Frame::build("B2", {"top", "bot", "b", "a"},
                     {{"b", "top"}, {"bot", "a"}, {"a", "top"}, {"bot", "b"}}) == fixtures::b2());
  CHECK(f.covers().size() == 4);
}

TEST_CASE("build: validation errors") {
  CHECK(kind_of([] { Frame::build("M3", fixtures::m3_elements(), fixtures::m3_covers()); }) ==
        ErrorKind::NotDistributive);
  // N5: bot < a < c < top, bot < b < top
  CHECK(kind_of([] {
          Frame::build("N5", {"bot", "a", "b", "c", "top"},
                       {{"bot", "a"}, {"a", "c"}, {"c", "top"}, {"bot", "b"}, {"b", "top"}});
        }) == ErrorKind::NotDistributive);
  CHECK(kind_of([] { Frame::build("cyc", {"x", "y"}, {{"x", "y"}, {"y", "x"}}); }) ==
        ErrorKind::NotAPartialOrder);
  CHECK(kind_of([] { Frame::build("self", {"x"}, {{"x", "x"}}); }) == ErrorKind::NotAPartialOrder);
  CHECK(kind_of([] { Frame::build("anti", {"x", "y"}, {}); }) == ErrorKind::NoBounds);
  // two maximal elements below nothing common: no top
  CHECK(kind_of([] { Frame::build("vee", {"bot", "x", "y"}, {{"bot", "x"}, {"bot", "y"}}); }) ==
        ErrorKind::NoBounds);
  // bowtie: x, y both below p and q; no least upper bound of x and y
  CHECK(kind_of([] {
          Frame::build("bowtie", {"bot", "x", "y", "p", "q", "top"},
                       {{"bot", "x"}, {"bot", "y"}, {"x", "p"}, {"x", "q"}, {"y", "p"},
                        {"y", "q"}, {"p", "top"}, {"q", "top"}});
        }) == ErrorKind::NotALattice);
  CHECK(kind_of([] { Frame::build("dup", {"x", "x"}, {}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { Frame::build("unk", {"x"}, {{"x", "z"}}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("build: M3 failure names a witness triple") {
  try {
    Frame::build("M3", fixtures::m3_elements(), fixtures::m3_covers());
    FAIL("accepted M3");
  } catch (const Error& e) {
    const std::string what = e.what();
    CHECK(what.find("NotDistributive") == 0);
    CHECK(what.find("(a, b, c) = (") != std::string::npos);
  }
}

TEST_CASE("the one-element frame is accepted") {
  auto f = Frame::build("one", {"p"}, {});
  CHECK(f.top() == f.bottom());
  CHECK(f.pseudocomplement(f.top()) == f.top());
}

TEST_CASE("mixing frames is rejected") {
  auto a = fixtures::b2(), b = fixtures::b2();
  CHECK(kind_of([&] { a.meet(a.top(), b.top()); }) == ErrorKind::FrameMismatch);
  CHECK_FALSE(a.owns(b.top()));
}

TEST_CASE("pseudocomplement, implication and complements: frozen values") {
  auto c3 = fixtures::c3();
  const auto m = c3.element("m");
  CHECK(c3.pseudocomplement(m) == c3.bottom());
  CHECK(c3.pseudocomplement(c3.bottom()) == c3.top());
  CHECK(c3.heyting_impl(c3.top(), m) == m);
  CHECK_FALSE(c3.is_complemented(m));
  CHECK(kind_of([&] { c3.complement(m); }) == ErrorKind::NotComplemented);
  CHECK_FALSE(c3.rather_below(m, m));
  CHECK(c3.join_irreducibles() == ElementSet{m, c3.top()});
  CHECK(c3.center() == ElementSet{c3.bottom(), c3.top()});

  auto b2 = fixtures::b2();
  const auto a = b2.element("a"), b = b2.element("b");
  CHECK(b2.pseudocomplement(a) == b);
  CHECK(b2.join(a, b2.pseudocomplement(a)) == b2.top());
  CHECK(b2.heyting_impl(a, b) == b);
  CHECK(b2.heyting_impl(a, a) == b2.top());
  CHECK(b2.complement(a) == b);
  CHECK(b2.complement(b2.top()) == b2.bottom());
  CHECK(b2.rather_below(a, a));
  CHECK(b2.rather_below_witness(a, a) == b);
  CHECK(b2.center().size() == 4);
}

TEST_CASE("lattice primitives agree with brute force on every poset frame up to 4 points") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& poset : enumerate_posets(n)) {
      const auto f = downset_lattice(poset, "t");
      const auto all = f.elements();
      for (auto a : all) {
        CHECK(f.pseudocomplement(a) ==
              largest_with(f, [&](Element x) { return f.meet(a, x) == f.bottom(); }));
        CHECK(f.meet(a, f.pseudocomplement(a)) == f.bottom());
        CHECK(f.is_complemented(a) == std::any_of(all.begin(), all.end(), [&](Element x) {
                return f.meet(a, x) == f.bottom() && f.join(a, x) == f.top();
              }));
        for (auto b : all) {
          CHECK(f.heyting_impl(a, b) ==
                largest_with(f, [&](Element x) { return f.leq(f.meet(a, x), b); }));
          CHECK(f.rather_below(a, b) == f.rather_below_witness(a, b).has_value());
          // meet and join from the order
          CHECK(f.meet(a, b) == largest_with(f, [&](Element x) { return f.leq(x, a) && f.leq(x, b); }));
        }
      }
      CHECK(f.heyting_impl(f.top(), f.bottom()) == f.pseudocomplement(f.top()));
      for (auto c : f.center()) CHECK(f.complement(f.complement(c)) == c);
      // join-irreducibles from the definition
      ElementSet ji;
      for (auto j : all) {
        if (j == f.bottom()) continue;
        bool irreducible = true;
        for (auto x : all)
          for (auto y : all)
            if (f.join(x, y) == j && x != j && y != j) irreducible = false;
        if (irreducible) ji.push_back(j);
      }
      CHECK(f.join_irreducibles() == ji);
      CHECK(birkhoff_reconstruction(f).isomorphic);
    }
}

TEST_CASE("center of a finite frame is a Boolean sublattice") {
  auto f = fixtures::b2_times_c3();
  const auto& center = f.center();
  CHECK(center.size() == 8);
  for (auto x : center)
    for (auto y : center) {
      CHECK(std::find(center.begin(), center.end(), f.meet(x, y)) != center.end());
      CHECK(std::find(center.begin(), center.end(), f.join(x, y)) != center.end());
      CHECK(f.complement(f.meet(x, y)) == f.join(f.complement(x), f.complement(y)));
    }
}

TEST_CASE("birkhoff reconstruction counts") {
  auto r = birkhoff_reconstruction(fixtures::v_poset());
  CHECK(r.isomorphic);
  CHECK(r.join_irreducible_count == 3);
  CHECK(r.downset_count == 5);
  auto c4 = birkhoff_reconstruction(fixtures::c4());
  CHECK(c4.join_irreducible_count == 3);
  CHECK(c4.downset_count == 4);
}
