#include "arrlcs/projective.hpp"

#include <cassert>

#include "arrlcs/intmat.hpp"

namespace arrlcs {

Triple canonical_triple(const Triple& t) {
  Int g = gcd(gcd(abs(t[0]), abs(t[1])), abs(t[2]));
  if (g == 0) throw std::invalid_argument("zero triple");
  Triple r{t[0] / g, t[1] / g, t[2] / g};
  for (int i = 0; i < 3; i++) {
    if (r[i] == 0) continue;
    if (r[i] < 0) { r[0] = -r[0]; r[1] = -r[1]; r[2] = -r[2]; }
    break;
  }
  return r;
}

Triple canonical_triple(const std::array<Rat, 3>& t) {
  Int lcm = 1;
  for (auto& x : t) {
    Int d = x.get_den();
    lcm = lcm / gcd(lcm, d) * d;
  }
  Triple z;
  for (int i = 0; i < 3; i++) z[i] = t[i].get_num() * (lcm / t[i].get_den());
  return canonical_triple(z);
}

Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Int det3(const Triple& r0, const Triple& r1, const Triple& r2) {
  return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) -
         r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
         r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
}

PPoint line_intersection(const PLine& l1, const PLine& l2) {
  Triple c = cross(l1.c, l2.c);
  if (c[0] == 0 && c[1] == 0 && c[2] == 0) throw identical_lines();
  return PPoint(c);
}

bool on_line(const PPoint& p, const PLine& l) {
  return p.c[0] * l.c[0] + p.c[1] * l.c[1] + p.c[2] * l.c[2] == 0;
}

bool collinear3(const PPoint& p1, const PPoint& p2, const PPoint& p3) {
  return det3(p1.c, p2.c, p3.c) == 0;
}

Int Conic::eval(const PPoint& p) const {
  const Int &x = p.c[0], &y = p.c[1], &z = p.c[2];
  return q[0] * x * x + q[3] * y * y + q[5] * z * z + 2 * q[1] * x * y +
         2 * q[2] * x * z + 2 * q[4] * y * z;
}

Int Conic::det_sym() const {
  return det3({q[0], q[1], q[2]}, {q[1], q[3], q[4]}, {q[2], q[4], q[5]});
}

namespace {
Conic canonical_conic(std::array<Int, 6> q) {
  Int g = 0;
  for (auto& x : q) g = gcd(g, x);
  if (g > 1)
    for (auto& x : q) x /= g;
  for (auto& x : q) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : q) y = -y;
    break;
  }
  return Conic{q};
}
}  // namespace

Conic Conic::dual() const {
  // adjugate of the symmetric matrix, upper triangle
  const Int &a = q[0], &b = q[1], &c = q[2], &d = q[3], &e = q[4], &f = q[5];
  return canonical_conic({d * f - e * e, c * e - b * f, b * e - c * d,
                          a * f - c * c, b * c - a * e, a * d - b * b});
}

bool Conic::tangent_to(const PLine& l) const {
  Conic adj = dual();
  const Int &x = l.c[0], &y = l.c[1], &z = l.c[2];
  return adj.q[0] * x * x + adj.q[3] * y * y + adj.q[5] * z * z +
             2 * adj.q[1] * x * y + 2 * adj.q[2] * x * z + 2 * adj.q[4] * y * z ==
         0;
}

bool six_points_on_common_conic(const std::array<PPoint, 6>& pts, Conic* witness) {
  for (int i = 0; i < 6; i++)
    for (int j = i + 1; j < 6; j++)
      if (pts[i] == pts[j]) throw duplicate_points();
  IntMat m(6, 6);
  for (int i = 0; i < 6; i++) {
    const Int &x = pts[i].c[0], &y = pts[i].c[1], &z = pts[i].c[2];
    // columns match Conic storage (q00,q01,q02,q11,q12,q22)
    m.at(i, 0) = x * x;
    m.at(i, 1) = 2 * x * y;
    m.at(i, 2) = 2 * x * z;
    m.at(i, 3) = y * y;
    m.at(i, 4) = 2 * y * z;
    m.at(i, 5) = z * z;
  }
  auto kernel = kernel_basis(m);
  if (kernel.empty()) return false;
  // det(sum c_i v_i) has degree <= 3 in each c_i, so if it vanishes on the whole
  // grid {0..3}^dim it vanishes identically and no smooth member exists
  int dim = (int)kernel.size();
  std::vector<int> c(dim, 0);
  for (;;) {
    int k = 0;
    while (k < dim && c[k] == 3) c[k++] = 0;
    if (k == dim) break;
    c[k]++;
    std::array<Int, 6> q{};
    for (int i = 0; i < dim; i++)
      for (int j = 0; j < 6; j++) q[j] += c[i] * kernel[i][j];
    if (q == std::array<Int, 6>{}) continue;
    Conic candidate = canonical_conic(q);
    if (!candidate.smooth()) continue;
    for (int i = 0; i < 6; i++) assert(candidate.contains(pts[i]));
    if (witness) *witness = candidate;
    return true;
  }
  return false;
}

bool lines_tangent_common_conic(const std::array<PLine, 6>& lines, Conic* witness) {
  for (int i = 0; i < 6; i++)
    for (int j = i + 1; j < 6; j++)
      if (lines[i] == lines[j]) throw duplicate_lines();
  std::array<PPoint, 6> dual_pts;
  for (int i = 0; i < 6; i++) dual_pts[i] = PPoint(lines[i].c);
  Conic dual_conic;
  if (!six_points_on_common_conic(dual_pts, &dual_conic)) return false;
  Conic primal = dual_conic.dual();  // adjugate of a smooth conic is smooth
  assert(primal.smooth());
  for (int i = 0; i < 6; i++) assert(primal.tangent_to(lines[i]));
  if (witness) *witness = primal;
  return true;
}

}  // namespace arrlcs
