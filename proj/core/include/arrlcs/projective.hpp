#pragma once
#include <array>
#include <optional>
#include <vector>

#include "arrlcs/rational.hpp"

namespace arrlcs {

struct identical_lines : std::invalid_argument {
  identical_lines() : std::invalid_argument("lines are proportional") {}
};
struct duplicate_points : std::invalid_argument {
  duplicate_points() : std::invalid_argument("points not pairwise distinct") {}
};
struct duplicate_lines : std::invalid_argument {
  duplicate_lines() : std::invalid_argument("lines not pairwise distinct") {}
};

// integer-primitive triple, first nonzero entry positive
using Triple = std::array<Int, 3>;

Triple canonical_triple(const Triple& t);
Triple canonical_triple(const std::array<Rat, 3>& t);

inline bool triple_less(const Triple& a, const Triple& b) {
  for (int i = 0; i < 3; i++)
    if (int s = cmp(a[i], b[i]); s != 0) return s < 0;
  return false;
}

struct PPoint {
  Triple c{0, 0, 0};
  PPoint() = default;
  explicit PPoint(const Triple& t) : c(canonical_triple(t)) {}
  explicit PPoint(const std::array<Rat, 3>& t) : c(canonical_triple(t)) {}
  bool operator==(const PPoint& o) const { return c == o.c; }
  bool operator<(const PPoint& o) const { return triple_less(c, o.c); }
};

struct PLine {
  Triple c{0, 0, 0};  // ax + by + cz = 0
  PLine() = default;
  explicit PLine(const Triple& t) : c(canonical_triple(t)) {}
  explicit PLine(const std::array<Rat, 3>& t) : c(canonical_triple(t)) {}
  bool operator==(const PLine& o) const { return c == o.c; }
  bool operator<(const PLine& o) const { return triple_less(c, o.c); }
};

Triple cross(const Triple& a, const Triple& b);
Int det3(const Triple& r0, const Triple& r1, const Triple& r2);

PPoint line_intersection(const PLine& l1, const PLine& l2);  // throws identical_lines
bool on_line(const PPoint& p, const PLine& l);
bool collinear3(const PPoint& p1, const PPoint& p2, const PPoint& p3);

// symmetric conic q00 x^2 + q11 y^2 + q22 z^2 + 2 q01 xy + 2 q02 xz + 2 q12 yz = 0,
// stored as the integer-primitive upper triangle (q00,q01,q02,q11,q12,q22)
struct Conic {
  std::array<Int, 6> q{};
  Int eval(const PPoint& p) const;          // p^T Q p (up to the fixed scaling)
  bool contains(const PPoint& p) const { return eval(p) == 0; }
  Int det_sym() const;                      // det of the symmetric matrix
  bool smooth() const { return det_sym() != 0; }
  Conic dual() const;                       // adjugate matrix, canonicalized
  bool tangent_to(const PLine& l) const;    // l^T adj(Q) l = 0
};

// true iff a smooth conic passes through all six points (witness = first found)
bool six_points_on_common_conic(const std::array<PPoint, 6>& pts, Conic* witness = nullptr);

// dual statement: six lines tangent to a common smooth conic
bool lines_tangent_common_conic(const std::array<PLine, 6>& lines, Conic* witness = nullptr);

}  // namespace arrlcs
