#pragma once
#include <map>
#include <utility>
#include <vector>

#include "arrlcs/presentation.hpp"

namespace arrlcs {

// Exponent vector in normal form order: (generator index, exponent),
// sorted by ascending index, exponents nonzero.
using SparseVec = std::vector<std::pair<int, Int>>;

// Weighted polycyclic presentation of a nilpotent quotient.  Generators
// are indexed 1..ngens() with non-decreasing weights.  Relations:
//   a_i^order[i]     = power_tail[i]          (when order[i] > 0)
//   [a_j, a_i]       = comm[(j,i)]            (j > i; absent = trivial)
// with [x,y] = x y x^-1 y^-1, and every tail supported on generators of
// weight >= the relation's weight.  Source generator g maps to image[g-1].
struct PcPres {
  int nsrc = 0;
  int cls = 0;
  std::vector<int> weight;
  std::vector<Int> order;              // 0 = infinite
  std::vector<SparseVec> power_tail;   // meaningful when order > 0
  std::map<std::pair<int, int>, SparseVec> comm;
  std::vector<SparseVec> image;        // per source generator

  // each generator is introduced by exactly one relation:
  std::vector<int> def_src;                  // source gen, or 0
  std::vector<std::pair<int, int>> def_comm; // (j,i), or (0,0)
  std::vector<int> def_power;                // gen whose power rel, or 0

  int ngens() const { return (int)weight.size(); }
  const SparseVec* comm_tail(int j, int i) const;
  int first_of_weight(int w) const;  // 1-based index, ngens()+1 if none
};

// Right multiplication by generator powers with collection to the normal
// form a_1^{e_1} ... a_m^{e_m}, torsion exponents in [0, order).
class Collector {
 public:
  explicit Collector(const PcPres& pc) : pc_(pc) {}
  // state *= a_g^e
  void mul_gen(std::map<int, Int>& state, int g, const Int& e) const;
  // state *= w^power
  void mul_word(std::map<int, Int>& state, const SparseVec& w,
                const Int& power = 1) const;
  std::map<int, Int> nf(const SparseVec& w) const;

 private:
  const PcPres& pc_;
  mutable std::map<std::tuple<int, int, int>, SparseVec> conj_memo_;
  const SparseVec& conj_gen(int k, int g, int e) const;
};

// Relations of one lower-central layer: the weight-k generators of the
// final presentation present gr_k as Z^count modulo the rows of rel.
struct LayerData {
  int count = 0;
  IntMat rel;  // (#rows may be 0)
};

struct NqOptions {
  bool check_consistency = true;  // verify the final pcp, throw if broken
};

struct NqResult {
  PcPres pc;
  std::vector<AbelianInvariants> layers;  // layers[k-1] = gr_k
  std::vector<LayerData> layer_data;      // parallel to layers
};

// Nilpotent quotient of the presented group up to the given class, built
// one central layer at a time: append a central pseudo-generator to every
// non-defining relation, impose the consistency and relator equations on
// them, and eliminate.
NqResult nilpotent_quotient(const FinitePresentation& p, int cls,
                            const NqOptions& opt = {});

// Exact consistency test of a pcp (associativity and power overlaps up to
// the class bound).
bool pc_consistent(const PcPres& pc);

// Thrown by element_class_in_gr when the word is not a syntactic
// left-normed commutator of the required depth.
struct DepthError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GrClass {
  Int order;  // 0 = infinite, 1 = trivial in the layer
  bool trivial() const { return order == 1; }
};

// Class of the left-normed commutator w (letters = generator indices of
// the source presentation) in gr_k.  Needs k <= nq.pc.cls and syntactic
// depth of w >= k.
GrClass element_class_in_gr(const NqResult& nq, const GroupWord& w, int k);
GrClass element_class_in_gr(const FinitePresentation& p, const GroupWord& w,
                            int k, const NqOptions& opt = {});

// Truncated comparison of prod_{k=1}^{order} (1 - t^k)^{phis[k-1]} with
// 1 - b1 t + b2 t^2.  Returns (true, 0) if all coefficients up to degree
// `order` agree, else (false, first failing degree).
std::pair<bool, int> lcs_formula_check(const std::vector<long>& phis,
                                       const BettiNumbers& betti, int order);

}  // namespace arrlcs
