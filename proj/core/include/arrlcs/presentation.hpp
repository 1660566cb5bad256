#pragma once
#include <string>
#include <vector>

#include "arrlcs/intmat.hpp"
#include "arrlcs/wiring.hpp"
#include "arrlcs/word.hpp"

namespace arrlcs {

// <x_1,...,x_n | relators>, with x_i displayed as m<display[i-1]> (the
// meridian's line label).  Relator letters use generator indices 1..n.
struct FinitePresentation {
  int ngens = 0;
  std::vector<int> display;  // size ngens, strictly increasing labels
  std::vector<GroupWord> relators;

  int gen_of_label(int label) const;  // 1-based index, throws if absent
  std::string gen_name(int g) const;  // "m<label>"
};

// Wiring-diagram presentation: for every multiple point with inputs
// w_1..w_l, the products of all nontrivial cyclic shifts of w_1...w_l are
// set equal to the straight product (l-1 relators per point).
FinitePresentation randell_presentation(const WiringDiagram& diag);

// Exponent-sum matrix of the relators (rows = relators).
IntMat abelianization_matrix(const FinitePresentation& p);

// Invariants of the abelianized group.
AbelianInvariants abelianized_invariants(const FinitePresentation& p);

std::string presentation_str(const FinitePresentation& p);

}  // namespace arrlcs
