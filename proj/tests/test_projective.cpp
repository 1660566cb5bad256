#include "doctest.h"
#include "arrlcs/projective.hpp"

#include <random>

using namespace arrlcs;

static PPoint pt(long x, long y, long z = 1) {
  return PPoint(Triple{Int(x), Int(y), Int(z)});
}
static PLine ln(long a, long b, long c) {
  return PLine(Triple{Int(a), Int(b), Int(c)});
}

TEST_CASE("canonical triples are primitive with positive leading entry") {
  CHECK(canonical_triple(Triple{Int(-2), Int(4), Int(-6)}) == Triple{Int(1), Int(-2), Int(3)});
  CHECK(canonical_triple(Triple{Int(0), Int(0), Int(-5)}) == Triple{Int(0), Int(0), Int(1)});
  CHECK(canonical_triple(Triple{Int(6), Int(10), Int(14)}) == Triple{Int(3), Int(5), Int(7)});
  CHECK_THROWS_AS(canonical_triple(Triple{Int(0), Int(0), Int(0)}), std::invalid_argument);

  // rational version clears denominators first
  Triple t = canonical_triple(std::array<Rat, 3>{Rat(1, 2), Rat(-1, 3), Rat(1)});
  CHECK(t == Triple{Int(3), Int(-2), Int(6)});
}

TEST_CASE("line through two points, point on two lines") {
  PPoint p = pt(0, 0), q = pt(1, 1);
  PLine l(cross(p.c, q.c));
  CHECK(on_line(p, l));
  CHECK(on_line(q, l));
  CHECK(on_line(pt(7, 7), l));
  CHECK_FALSE(on_line(pt(1, 2), l));

  PPoint m = line_intersection(ln(1, 0, -1), ln(0, 1, -2));
  CHECK(m == pt(1, 2));
  CHECK_THROWS_AS(line_intersection(ln(1, 0, -1), ln(2, 0, -2)), identical_lines);
  // parallel lines meet at infinity
  PPoint inf = line_intersection(ln(1, 1, 0), ln(1, 1, -3));
  CHECK(inf.c[2] == 0);
}

TEST_CASE("collinearity determinant") {
  CHECK(collinear3(pt(0, 0), pt(1, 1), pt(2, 2)));
  CHECK_FALSE(collinear3(pt(0, 0), pt(1, 1), pt(2, 3)));
  CHECK(det3(pt(1, 2).c, pt(2, 3).c, pt(3, 4).c) == 0);
  CHECK(det3(pt(1, 2).c, pt(3, 5).c, pt(4, 7).c) == 1);
}

TEST_CASE("conic through six points: circle case") {
  // x^2 + y^2 = 25 has plenty of integer points
  std::array<PPoint, 6> ps = {pt(5, 0), pt(-5, 0), pt(0, 5), pt(3, 4), pt(4, -3), pt(-3, -4)};
  Conic c;
  CHECK(six_points_on_common_conic(ps, &c));
  CHECK(c.smooth());
  CHECK(c.contains(pt(0, -5)));
  CHECK_FALSE(c.contains(pt(1, 1)));

  // perturb one point off the circle
  ps[5] = pt(-3, 5);
  CHECK_FALSE(six_points_on_common_conic(ps, nullptr));

  // duplicates are rejected, not silently accepted
  ps[5] = ps[0];
  CHECK_THROWS_AS(six_points_on_common_conic(ps, nullptr), duplicate_points);
}

TEST_CASE("six points whose only conic is a line pair do not count") {
  // three on each of two lines: the pencil contains no smooth member
  std::array<PPoint, 6> ps = {pt(0, 0), pt(1, 0), pt(2, 0), pt(0, 1), pt(1, 2), pt(2, 3)};
  CHECK_FALSE(six_points_on_common_conic(ps, nullptr));
}

TEST_CASE("conic evaluation is projective") {
  std::array<PPoint, 6> ps = {pt(5, 0), pt(-5, 0), pt(0, 5), pt(3, 4), pt(4, -3), pt(-3, -4)};
  Conic c;
  REQUIRE(six_points_on_common_conic(ps, &c));
  // non-canonical representative of (3,4): membership unchanged
  PPoint doubled(Triple{Int(6), Int(8), Int(2)});
  CHECK(c.eval(doubled) == 0);
}

TEST_CASE("six tangent lines of a circle are recognized") {
  // lines ax + by + cz = 0 tangent to x^2 + y^2 = z^2 iff a^2 + b^2 = c^2
  std::array<PLine, 6> ls = {ln(1, 0, 1),  ln(0, 1, 1),   ln(3, 4, 5),
                             ln(4, 3, -5), ln(-3, 4, -5), ln(5, 12, 13)};
  Conic c;
  CHECK(lines_tangent_common_conic(ls, &c));
  CHECK(c.smooth());
  for (const auto& l : ls) CHECK(c.tangent_to(l));

  std::array<PLine, 6> bad = ls;
  bad[5] = ln(1, 1, 1);
  CHECK_FALSE(lines_tangent_common_conic(bad, nullptr));

  bad[5] = bad[0];
  CHECK_THROWS_AS(lines_tangent_common_conic(bad, nullptr), duplicate_lines);
}

TEST_CASE("tangency test against an explicit conic") {
  // q = x^2 + y^2 - z^2
  Conic circle{std::array<Int, 6>{Int(1), Int(0), Int(0), Int(1), Int(0), Int(-1)}};
  REQUIRE(circle.smooth());
  CHECK(circle.tangent_to(ln(1, 0, 1)));
  CHECK(circle.tangent_to(ln(3, 4, 5)));
  CHECK_FALSE(circle.tangent_to(ln(1, 0, 0)));  // secant through the center
  CHECK_FALSE(circle.tangent_to(ln(1, 0, 5)));  // misses entirely
  // dual of the dual is the original (up to the canonical scaling)
  CHECK(circle.dual().dual().q == circle.q);
}

TEST_CASE("randomized: six-point conic detection is order-independent") {
  std::mt19937 rng(20240817u);
  std::uniform_int_distribution<long> coord(-6, 6);
  for (int iter = 0; iter < 200; ++iter) {
    std::array<PPoint, 6> ps;
    bool ok = true;
    for (auto& p : ps) p = pt(coord(rng), coord(rng));
    for (int i = 0; i < 6 && ok; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (ps[i] == ps[j]) { ok = false; break; }
    if (!ok) continue;
    bool base = six_points_on_common_conic(ps, nullptr);
    std::array<PPoint, 6> sh = {ps[3], ps[0], ps[5], ps[1], ps[4], ps[2]};
    CHECK(six_points_on_common_conic(sh, nullptr) == base);
  }
}
