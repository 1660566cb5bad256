#include "arrlcs/intmat.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>

namespace arrlcs {

IntMat mat_mul(const IntMat& x, const IntMat& y) {
  assert(x.cols == y.rows);
  IntMat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; i++)
    for (int k = 0; k < x.cols; k++) {
      const Int& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; j++)
        if (y.at(k, j) != 0) z.at(i, j) += xik * y.at(k, j);
    }
  return z;
}

Int det_bareiss(IntMat m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; k++) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; i++)
        if (m.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; j++) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; i++) {
      for (int j = k + 1; j < n; j++)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

int rank_bareiss(IntMat m) {
  int r = 0;
  Int prev = 1;
  for (int c = 0; c < m.cols && r < m.rows; c++) {
    int p = -1;
    for (int i = r; i < m.rows; i++)
      if (m.at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; j++) std::swap(m.at(r, j), m.at(p, j));
    for (int i = r + 1; i < m.rows; i++) {
      for (int j = c + 1; j < m.cols; j++)
        m.at(i, j) = (m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j)) / prev;
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    r++;
  }
  return r;
}

std::vector<std::vector<Int>> kernel_basis(const IntMat& m) {
  // exact RREF over Q, then read the kernel off the free columns
  int rows = m.rows, cols = m.cols;
  std::vector<std::vector<Rat>> q(rows, std::vector<Rat>(cols));
  for (int i = 0; i < rows; i++)
    for (int j = 0; j < cols; j++) q[i][j] = Rat(m.at(i, j));
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; c++) {
    int p = -1;
    for (int i = r; i < rows; i++)
      if (q[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(q[r], q[p]);
    Rat inv = q[r][c];
    for (int j = c; j < cols; j++) q[r][j] /= inv;
    for (int i = 0; i < rows; i++) {
      if (i == r || q[i][c] == 0) continue;
      Rat f = q[i][c];
      for (int j = c; j < cols; j++) q[i][j] -= f * q[r][j];
    }
    pivot_col.push_back(c);
    r++;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Int>> basis;
  for (int f = 0; f < cols; f++) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[f] = 1;
    for (int i = 0; i < (int)pivot_col.size(); i++) v[pivot_col[i]] = -q[i][f];
    Int lcm = 1;
    for (auto& x : v) lcm = lcm / gcd(lcm, Int(x.get_den())) * Int(x.get_den());
    std::vector<Int> w(cols);
    Int g = 0;
    for (int j = 0; j < cols; j++) {
      w[j] = v[j].get_num() * (lcm / v[j].get_den());
      g = gcd(g, w[j]);
    }
    if (g > 1)
      for (auto& x : w) x /= g;
    for (auto& x : w) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : w) y = -y;
      break;
    }
    basis.push_back(std::move(w));
  }
  return basis;
}

namespace {

struct SnfWork {
  IntMat d, u, v;
  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < d.cols; c++) std::swap(d.at(i, c), d.at(j, c));
    for (int c = 0; c < u.cols; c++) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < d.rows; r++) std::swap(d.at(r, i), d.at(r, j));
    for (int r = 0; r < v.rows; r++) std::swap(v.at(r, i), v.at(r, j));
  }
  void add_row(int dst, int src, const Int& f) {  // row_dst += f * row_src
    for (int c = 0; c < d.cols; c++) d.at(dst, c) += f * d.at(src, c);
    for (int c = 0; c < u.cols; c++) u.at(dst, c) += f * u.at(src, c);
  }
  void add_col(int dst, int src, const Int& f) {
    for (int r = 0; r < d.rows; r++) d.at(r, dst) += f * d.at(r, src);
    for (int r = 0; r < v.rows; r++) v.at(r, dst) += f * v.at(r, src);
  }
  void negate_row(int i) {
    for (int c = 0; c < d.cols; c++) d.at(i, c) = -d.at(i, c);
    for (int c = 0; c < u.cols; c++) u.at(i, c) = -u.at(i, c);
  }
};

}  // namespace

Snf smith_normal_form(const IntMat& m) {
  SnfWork w{m, IntMat::identity(m.rows), IntMat::identity(m.cols)};
  int n = std::min(m.rows, m.cols);
  for (int t = 0; t < n; t++) {
    // find minimal-|value| nonzero entry in the trailing block
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < w.d.rows; i++)
      for (int j = t; j < w.d.cols; j++) {
        const Int& x = w.d.at(i, j);
        if (x == 0) continue;
        Int ax = abs(x);
        if (pi < 0 || ax < best) { best = ax; pi = i; pj = j; }
      }
    if (pi < 0) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);
    for (;;) {
      if (w.d.at(t, t) < 0) w.negate_row(t);
      bool clean = true;
      for (int i = t + 1; i < w.d.rows; i++) {
        if (w.d.at(i, t) == 0) continue;
        Int q = floor_div(w.d.at(i, t), w.d.at(t, t));
        w.add_row(i, t, -q);
        if (w.d.at(i, t) != 0) {  // remainder smaller than pivot: promote it
          w.swap_rows(t, i);
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      for (int j = t + 1; j < w.d.cols; j++) {
        if (w.d.at(t, j) == 0) continue;
        Int q = floor_div(w.d.at(t, j), w.d.at(t, t));
        w.add_col(j, t, -q);
        if (w.d.at(t, j) != 0) {
          w.swap_cols(t, j);
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      // pivot must divide every remaining entry for the divisibility chain
      bool divides = true;
      for (int i = t + 1; i < w.d.rows && divides; i++)
        for (int j = t + 1; j < w.d.cols; j++)
          if (w.d.at(i, j) % w.d.at(t, t) != 0) {
            w.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
  return {std::move(w.d), std::move(w.u), std::move(w.v)};
}

std::string AbelianInvariants::str() const {
  if (rank == 0 && torsion.empty()) return "0";
  std::string s;
  if (rank > 0) s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  for (const auto& d : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.get_str();
  }
  return s;
}

std::string AbelianInvariants::primary_str() const {
  if (rank == 0 && torsion.empty()) return "0";
  std::string s;
  if (rank > 0) s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  std::map<Int, std::vector<Int>> by_prime;  // prime -> prime powers present
  for (const auto& d : torsion) {
    Int rest = d;
    for (Int p = 2; p * p <= rest;) {
      if (rest % p == 0) {
        Int pk = 1;
        while (rest % p == 0) { pk *= p; rest /= p; }
        by_prime[p].push_back(pk);
      }
      p = (p == 2) ? Int(3) : Int(p + 2);
    }
    if (rest > 1) by_prime[rest].push_back(rest);
  }
  for (auto& [p, pks] : by_prime)
    for (auto& pk : pks) {
      if (!s.empty()) s += " + ";
      s += "Z/" + pk.get_str();
    }
  return s;
}

AbelianInvariants quotient_invariants(const IntMat& rel, int ngens) {
  assert(rel.cols == ngens || rel.rows == 0);
  IntMat m = rel;
  if (m.rows == 0) m = IntMat(0, ngens);
  Snf s = smith_normal_form(m);
  AbelianInvariants inv;
  int nz = 0;
  for (int t = 0; t < std::min(m.rows, m.cols); t++) {
    const Int& d = s.d.at(t, t);
    if (d == 0) break;
    nz++;
    if (d > 1) inv.torsion.push_back(d);
  }
  inv.rank = ngens - nz;
  return inv;
}

namespace {
void enum_subsets(int n, int k, std::vector<int>& cur, int start,
                  const std::function<void(const std::vector<int>&)>& f) {
  if ((int)cur.size() == k) { f(cur); return; }
  for (int i = start; i <= n - (k - (int)cur.size()); i++) {
    cur.push_back(i);
    enum_subsets(n, k, cur, i + 1, f);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Int> invariant_factors_minors(const IntMat& m) {
  int n = std::min(m.rows, m.cols);
  std::vector<Int> dk(n + 1);  // dk[k] = gcd of all k x k minors
  dk[0] = 1;
  for (int k = 1; k <= n; k++) {
    Int g = 0;
    std::vector<int> ri, ci;
    enum_subsets(m.rows, k, ri, 0, [&](const std::vector<int>& rs) {
      enum_subsets(m.cols, k, ci, 0, [&](const std::vector<int>& cs) {
        IntMat sub(k, k);
        for (int i = 0; i < k; i++)
          for (int j = 0; j < k; j++) sub.at(i, j) = m.at(rs[i], cs[j]);
        g = gcd(g, det_bareiss(sub));
      });
    });
    dk[k] = g;
    if (g == 0) break;
  }
  std::vector<Int> factors;
  for (int k = 1; k <= n && dk[k] != 0; k++) factors.push_back(dk[k] / dk[k - 1]);
  return factors;
}

}  // namespace arrlcs
