#include "doctest.h"
#include "arrlcs/braid.hpp"
#include "arrlcs/nilq.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace arrlcs;

// Random small-coefficient arrangements.  Lines are deduplicated; the first
// line serves as infinity.  Kept small so the whole suite stays quick.
static Arrangement random_arrangement(std::mt19937& rng, int max_lines) {
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<int> want(3, max_lines);
  int target = want(rng);
  std::set<PLine> seen;
  Arrangement arr;
  int guard = 0;
  while ((int)seen.size() < target && ++guard < 300) {
    long a = coef(rng), b = coef(rng), c = coef(rng);
    if (a == 0 && b == 0 && c == 0) continue;
    PLine l{canonical_triple(Triple{Int(a), Int(b), Int(c)})};
    if (!seen.insert(l).second) continue;
  }
  int lab = 0;
  for (const auto& l : seen) {
    arr.labels.push_back(++lab);
    arr.lines.push_back(l);
  }
  arr.infinity = 1;
  arr.validate();
  return arr;
}

TEST_CASE("random arrangements: lattice covers every pair exactly once") {
  std::mt19937 rng(77001u);
  for (int iter = 0; iter < 100; ++iter) {
    Arrangement arr = random_arrangement(rng, 8);
    IncidenceLattice lat = build_lattice(arr);
    std::set<std::pair<int, int>> covered;
    for (const auto& p : lat.points) {
      for (size_t i = 0; i < p.incident.size(); ++i)
        for (size_t j = i + 1; j < p.incident.size(); ++j) {
          bool fresh = covered.insert({p.incident[i], p.incident[j]}).second;
          CHECK(fresh);  // two lines meet in one point only
        }
    }
    size_t n = arr.lines.size();
    CHECK(covered.size() == n * (n - 1) / 2);

    // betti consistency: b2 counts points with multiplicity weights
    BettiNumbers b = betti_numbers(arr);
    CHECK(b.b0 == 1);
    CHECK(b.b1 == (long)n - 1);
    CHECK(b.b2 >= 0);
  }
}

TEST_CASE("random arrangements: wiring sweep is a sorted cover of the crossings") {
  std::mt19937 rng(77002u);
  for (int iter = 0; iter < 60; ++iter) {
    Arrangement arr = random_arrangement(rng, 8);
    WiringDiagram d = build_wiring(arr);
    for (size_t j = 1; j < d.events.size(); ++j) CHECK(d.events[j - 1].x < d.events[j].x);
    // every affine crossing pair appears in exactly one event
    std::set<std::pair<int, int>> covered;
    for (const auto& e : d.events)
      for (size_t i = 0; i < e.wires.size(); ++i)
        for (size_t j = i + 1; j < e.wires.size(); ++j) {
          int a = std::min(e.wires[i], e.wires[j]), b = std::max(e.wires[i], e.wires[j]);
          CHECK(covered.insert({a, b}).second);
        }
    // pairs not covered are exactly those meeting on the infinity member
    IncidenceLattice lat = build_lattice(arr);
    size_t at_infinity = 0;
    for (const auto& p : lat.points) {
      if (std::binary_search(p.incident.begin(), p.incident.end(), arr.infinity)) {
        size_t m = p.incident.size() - 1;  // affine members through the point
        at_infinity += m * (m - 1) / 2;
      }
    }
    size_t naff = arr.lines.size() - 1;
    CHECK(covered.size() + at_infinity == naff * (naff - 1) / 2);
  }
}

TEST_CASE("random arrangements: the two presentations agree through class 3") {
  std::mt19937 rng(77003u);
  int done = 0;
  for (int iter = 0; iter < 40; ++iter) {
    Arrangement arr = random_arrangement(rng, 6);
    WiringDiagram d = build_wiring(arr);
    MonodromyTuple t = braid_monodromy(d);
    CHECK(monodromy_matches_wiring(d, t));

    FinitePresentation pw = randell_presentation(d);
    FinitePresentation pb = zvk_presentation(t);
    CHECK(pw.ngens == pb.ngens);
    CHECK(pw.relators.size() == pb.relators.size());
    CHECK(abelianized_invariants(pw) == abelianized_invariants(pb));

    NqResult nw = nilpotent_quotient(pw, 3);
    NqResult nb = nilpotent_quotient(pb, 3);
    for (int k = 0; k < 3; ++k) CHECK(nw.layers[k] == nb.layers[k]);
    CHECK(pc_consistent(nw.pc));
    CHECK(pc_consistent(nb.pc));
    ++done;
  }
  CHECK(done == 40);
}

TEST_CASE("random braid words act consistently") {
  std::mt19937 rng(77004u);
  for (int iter = 0; iter < 50; ++iter) {
    int n = 3 + (int)(rng() % 4);
    std::uniform_int_distribution<int> pick(1, n - 1);
    BraidWord b;
    b.n = n;
    for (int i = 0; i < 12; ++i) {
      int j = pick(rng);
      b.w.push_back(Letter{j, rng() % 2 ? 1 : -1});
    }
    // action by b then by b^-1 is the identity
    for (int g = 1; g <= n; ++g) {
      GroupWord w = artin_action(braid_inv(b), artin_action(b, gen_word(g)));
      CHECK(w == gen_word(g));
    }
    // the product of all generators is invariant under every braid action
    GroupWord all;
    for (int g = 1; g <= n; ++g) all = wmul(all, gen_word(g));
    CHECK(artin_action(b, all) == all);
  }
}

TEST_CASE("hurwitz moves preserve the presentation invariants") {
  std::mt19937 rng(77005u);
  for (int iter = 0; iter < 10; ++iter) {
    Arrangement arr = random_arrangement(rng, 6);
    MonodromyTuple t = braid_monodromy(build_wiring(arr));
    if (t.entries.size() < 2) continue;
    std::uniform_int_distribution<int> pick(1, (int)t.entries.size() - 1);
    MonodromyTuple moved = t;
    for (int m = 0; m < 4; ++m) moved = hurwitz_move(moved, pick(rng), rng() % 2 ? 1 : -1);
    FinitePresentation p0 = zvk_presentation(t);
    FinitePresentation p1 = zvk_presentation(moved);
    CHECK(abelianized_invariants(p0) == abelianized_invariants(p1));
    NqResult n0 = nilpotent_quotient(p0, 2);
    NqResult n1 = nilpotent_quotient(p1, 2);
    CHECK(n0.layers[1] == n1.layers[1]);
  }
}
