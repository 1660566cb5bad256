#include "doctest.h"
#include "arrlcs/intmat.hpp"

#include <random>

using namespace arrlcs;

static IntMat mk(int r, int c, std::initializer_list<long> entries) {
  IntMat m(r, c);
  auto it = entries.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Int(*it++);
  return m;
}

static IntMat wik() {
  // full rank, elementary divisors 2, 6, 12
  return mk(3, 3, {2, 4, 4, -6, 6, 12, 10, -4, -16});
}
static IntMat sing() {
  return mk(3, 3, {1, 2, 3, 2, 4, 6, 1, 1, 1});
}

TEST_CASE("determinant and rank") {
  CHECK(det_bareiss(mk(2, 2, {1, 2, 3, 4})) == -2);
  CHECK(det_bareiss(wik()) == -144);
  CHECK(det_bareiss(sing()) == 0);
  CHECK(rank_bareiss(sing()) == 2);
  CHECK(rank_bareiss(wik()) == 3);
  CHECK(rank_bareiss(IntMat(0, 0)) == 0);
  CHECK(rank_bareiss(mk(1, 2, {0, 0})) == 0);
}

TEST_CASE("kernel basis is integral and spans") {
  IntMat a = sing();
  auto k = kernel_basis(a);
  REQUIRE(k.size() == 1);
  for (const auto& row : k) {
    for (int i = 0; i < a.rows; ++i) {
      Int s = 0;
      for (int j = 0; j < a.cols; ++j) s += a.at(i, j) * row[j];
      CHECK(s == 0);
    }
  }
  // primitive vector proportional to (1,-2,1)
  Int g = gcd(gcd(k[0][0], k[0][1]), k[0][2]);
  CHECK(abs(g) == 1);
  CHECK(k[0][0] == -k[0][1] / 2);
}

TEST_CASE("smith normal form: fixed examples") {
  {
    Snf s = smith_normal_form(wik());
    CHECK(s.d.at(0, 0) == 2);
    CHECK(s.d.at(1, 1) == 6);
    CHECK(s.d.at(2, 2) == 12);
  }
  {
    // divisibility chain forced even when entries are coprime
    Snf s = smith_normal_form(mk(2, 2, {2, 0, 0, 3}));
    CHECK(s.d.at(0, 0) == 1);
    CHECK(s.d.at(1, 1) == 6);
  }
}

TEST_CASE("smith normal form against the minors oracle") {
  std::mt19937 rng(911u);
  std::uniform_int_distribution<long> ent(-5, 5);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int iter = 0; iter < 120; ++iter) {
    int r = dim(rng), c = dim(rng);
    IntMat a(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) a.at(i, j) = Int(ent(rng));
    Snf s = smith_normal_form(a);
    std::vector<Int> oracle = invariant_factors_minors(a);
    size_t nz = 0;
    for (int t = 0; t < std::min(r, c); ++t)
      if (s.d.at(t, t) != 0) ++nz;
    REQUIRE(nz == oracle.size());
    for (size_t i = 0; i < oracle.size(); ++i) CHECK(s.d.at((int)i, (int)i) == oracle[i]);
    // transforms actually diagonalize: u * a * v = d
    IntMat prod = mat_mul(mat_mul(s.u, a), s.v);
    CHECK(prod == s.d);
    // divisibility chain
    for (size_t i = 1; i < oracle.size(); ++i) CHECK(oracle[i] % oracle[i - 1] == 0);
  }
}

TEST_CASE("quotient invariants") {
  {
    // a single row with a unit entry kills one factor, nothing else
    AbelianInvariants inv = quotient_invariants(mk(1, 3, {2, 1, 0}), 3);
    CHECK(inv.rank == 2);
    CHECK(inv.torsion.empty());
    CHECK(inv.str() == "Z^2");
  }
  {
    AbelianInvariants inv = quotient_invariants(mk(2, 2, {2, 0, 0, 2}), 2);
    CHECK(inv.rank == 0);
    REQUIRE(inv.torsion.size() == 2);
    CHECK(inv.torsion[0] == 2);
    CHECK(inv.torsion[1] == 2);
  }
  {
    AbelianInvariants inv = quotient_invariants(IntMat(0, 0), 4);
    CHECK(inv.rank == 4);
    CHECK(inv.str() == "Z^4");
  }
  {
    AbelianInvariants inv = quotient_invariants(mk(1, 2, {4, 6}), 2);
    CHECK(inv.rank == 1);
    REQUIRE(inv.torsion.size() == 1);
    CHECK(inv.torsion[0] == 2);
    CHECK(inv.str() == "Z + Z/2");
  }
}

TEST_CASE("abelian invariants formatting") {
  AbelianInvariants a;
  a.rank = 0;
  CHECK(a.str() == "0");
  a.rank = 1;
  CHECK(a.str() == "Z");
  a.rank = 211;
  a.torsion = {Int(2)};
  CHECK(a.str() == "Z^211 + Z/2");
  AbelianInvariants b;
  b.torsion = {Int(6)};
  CHECK(b.str() == "Z/6");
  CHECK(b.primary_str() == "Z/2 + Z/3");
}
