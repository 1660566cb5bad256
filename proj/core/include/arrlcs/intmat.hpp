#pragma once
#include <string>
#include <vector>

#include "arrlcs/rational.hpp"

namespace arrlcs {

struct IntMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;
  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}
  Int& at(int r, int c) { return a[(size_t)r * cols + c]; }
  const Int& at(int r, int c) const { return a[(size_t)r * cols + c]; }
  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; i++) m.at(i, i) = 1;
    return m;
  }
  bool operator==(const IntMat& o) const = default;
};

IntMat mat_mul(const IntMat& x, const IntMat& y);

Int det_bareiss(IntMat m);   // square only
int rank_bareiss(IntMat m);  // fraction-free elimination with column pivoting

// primitive integer basis of the right kernel {v : M v = 0}, deterministic order
std::vector<std::vector<Int>> kernel_basis(const IntMat& m);

struct Snf {
  IntMat d, u, v;  // u * m * v = d, diag(d) = d1 | d2 | ..., di >= 0, u,v unimodular
};
Snf smith_normal_form(const IntMat& m);

struct AbelianInvariants {
  int rank = 0;
  std::vector<Int> torsion;  // divisibility chain, each >= 2
  bool operator==(const AbelianInvariants&) const = default;
  std::string str() const;          // e.g. "Z^211 + Z/2", "Z^23", "0"
  std::string primary_str() const;  // torsion split into prime powers
};

// invariants of Z^ngens / rowspace(rel); rel may have any number of rows
AbelianInvariants quotient_invariants(const IntMat& rel, int ngens);

// independent oracle: invariant factors via gcds of k-by-k minors (small inputs only)
std::vector<Int> invariant_factors_minors(const IntMat& m);

}  // namespace arrlcs
