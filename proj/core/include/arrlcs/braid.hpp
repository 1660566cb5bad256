#pragma once
#include <vector>

#include "arrlcs/presentation.hpp"
#include "arrlcs/wiring.hpp"
#include "arrlcs/word.hpp"

namespace arrlcs {

// A word in the Artin generators of the braid group on n strands.  Letter
// (i, +1) is sigma_i, crossing the strands at positions i and i+1 (1-based
// from the top).
struct BraidWord {
  int n = 0;
  GroupWord w;
};

BraidWord braid_mul(const BraidWord& a, const BraidWord& b);
BraidWord braid_inv(const BraidWord& a);

// Right action on free-group words whose letters are strand indices:
// under sigma_j, x_j -> x_j x_{j+1} x_j^-1 and x_{j+1} -> x_j.
// Letters of `b` are applied left to right.
GroupWord artin_action(const BraidWord& b, GroupWord w);

// Induced permutation: result[p-1] = starting position of the strand that
// ends at position p.
std::vector<int> braid_permutation(const BraidWord& b);

// Full twist on the `count` strands starting at position `start`:
// (sigma_start ... sigma_{start+count-2})^count.
BraidWord full_twist(int start, int count, int n);

// Positive half twist (Garside element) on the same block.
BraidWord half_twist(int start, int count, int n);

// One factor of the braid monodromy: the local full twist conjugated back
// to the base point.  braid = conj^-1 * full_twist(pos,len) * conj.
struct MonodromyEntry {
  BraidWord braid;
  BraidWord conj;
  int pos = 0;
  int len = 0;
};

struct MonodromyTuple {
  int n = 0;
  std::vector<int> strand_labels;  // strand i starts as wire strand_labels[i-1]
  std::vector<MonodromyEntry> entries;
};

// Reads the monodromy factors off a wiring diagram, one per multiple
// point, in sweep order.
MonodromyTuple braid_monodromy(const WiringDiagram& diag);

// Presentation with the meridian generators and, for each monodromy entry,
// the fixed-point relators of its local twist transported through conj.
FinitePresentation zvk_presentation(const MonodromyTuple& t);

// Cross-check: the factors transported through conj reproduce the wiring
// diagram's local input words verbatim, and the transported fixed-point
// relators match the wiring presentation's relators up to conjugation and
// inversion.
bool monodromy_matches_wiring(const WiringDiagram& diag,
                              const MonodromyTuple& t);

// Elementary Hurwitz move on factors (k, k+1), 1-based; dir = +1 or -1.
// Applying +1 then -1 at the same k is the identity.
MonodromyTuple hurwitz_move(const MonodromyTuple& t, int k, int dir);

// Product of all entries (in listed order) equals the full twist on all n
// strands.  Holds when no two affine lines of the diagram are parallel.
bool product_is_full_twist(const MonodromyTuple& t);

}  // namespace arrlcs
