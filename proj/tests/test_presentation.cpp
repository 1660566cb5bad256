#include "doctest.h"
#include "arrlcs/presentation.hpp"
#include "arrlcs/wiring.hpp"

using namespace arrlcs;

static FinitePresentation randell_of(const char* json) {
  return randell_presentation(build_wiring(parse_arrangement(json)));
}

TEST_CASE("two generic affine lines commute") {
  FinitePresentation p = randell_of(
      R"({"lines":[["1","-1","0"],["1","1","-2"],["0","0","1"]],"infinity":3})");
  CHECK(p.ngens == 2);
  REQUIRE(p.relators.size() == 1);
  // the single relator abelianizes to zero and is a commutator of the two
  GroupWord r = reduced(p.relators[0]);
  auto es = exponent_sums(r);
  for (const auto& [g, e] : es) CHECK(e == 0);
  CHECK(abelianized_invariants(p).str() == "Z^2");
}

TEST_CASE("pencil of three lines: one event, two relators") {
  FinitePresentation p = randell_of(
      R"({"lines":[["1","-1","0"],["1","0","0"],["1","1","0"],["0","0","1"]],"infinity":4})");
  CHECK(p.ngens == 3);
  CHECK(p.relators.size() == 2);
  CHECK(abelianized_invariants(p).str() == "Z^3");
  for (const auto& r : p.relators) {
    for (const auto& [g, e] : exponent_sums(r)) CHECK(e == 0);
  }
}

TEST_CASE("generator bookkeeping follows labels") {
  FinitePresentation p = randell_of(
      R"({"lines":[["1","-1","0"],["1","1","-2"],["0","0","1"]],"infinity":1})");
  // infinity is label 1, so the affine members are 2 and 3
  CHECK(p.ngens == 2);
  CHECK(p.display == std::vector<int>{2, 3});
  CHECK(p.gen_of_label(2) == 1);
  CHECK(p.gen_of_label(3) == 2);
  CHECK_THROWS(p.gen_of_label(1));
  CHECK(p.gen_name(1) == "m2");
}

TEST_CASE("builtin arrangements: presentation shape") {
  for (const char* name : {"A+", "A-"}) {
    Arrangement a = builtin_arrangement(name);
    FinitePresentation p = randell_presentation(build_wiring(a));
    CHECK(p.ngens == 12);
    // one relator per wire beyond the first at each event: 23*1 + 10*2
    CHECK(p.relators.size() == 43);
    CHECK(abelianized_invariants(p).str() == "Z^12");
    // meridian labels skip the infinity member, label 4
    CHECK(p.display.size() == 12);
    for (int lab : p.display) CHECK(lab != 4);
    for (const auto& r : p.relators)
      for (const auto& [g, e] : exponent_sums(r)) CHECK(e == 0);
  }
}

TEST_CASE("abelianization matrix dimensions") {
  FinitePresentation p = randell_of(
      R"({"lines":[["1","-1","0"],["1","0","0"],["1","1","0"],["0","0","1"]],"infinity":4})");
  IntMat m = abelianization_matrix(p);
  CHECK(m.rows == static_cast<int>(p.relators.size()));
  CHECK(m.cols == p.ngens);
}

TEST_CASE("presentation printing stays in label names") {
  FinitePresentation p = randell_of(
      R"({"lines":[["1","-1","0"],["1","1","-2"],["0","0","1"]],"infinity":3})");
  std::string s = presentation_str(p);
  CHECK(s.find("m1") != std::string::npos);
  CHECK(s.find("m2") != std::string::npos);
  CHECK(s.find("m3") == std::string::npos);
}
