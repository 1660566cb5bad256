#include "arrlcs/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace arrlcs {

int FinitePresentation::gen_of_label(int label) const {
  auto it = std::lower_bound(display.begin(), display.end(), label);
  if (it == display.end() || *it != label)
    throw std::invalid_argument("no generator for label " +
                                std::to_string(label));
  return (int)(it - display.begin()) + 1;
}

std::string FinitePresentation::gen_name(int g) const {
  return "m" + std::to_string(display.at(g - 1));
}

namespace {

// letters are labels; renumber them to 1..n generator indices
GroupWord relabel(const GroupWord& w, const FinitePresentation& p) {
  GroupWord out;
  out.reserve(w.size());
  for (const Letter& l : w) out.push_back({p.gen_of_label(l.gen), l.exp});
  return out;
}

}  // namespace

FinitePresentation randell_presentation(const WiringDiagram& diag) {
  FinitePresentation p;
  p.display = diag.order;
  std::sort(p.display.begin(), p.display.end());
  p.ngens = (int)p.display.size();

  auto inputs = local_words(diag);
  for (const auto& in : inputs) {
    int l = (int)in.size();
    GroupWord straight;
    for (const auto& w : in) straight = wmul(straight, w);
    for (int c = 1; c < l; c++) {
      GroupWord shifted;
      for (int k = 0; k < l; k++) shifted = wmul(shifted, in[(c + k) % l]);
      p.relators.push_back(relabel(wmul(straight, winv(shifted)), p));
    }
  }
  return p;
}

IntMat abelianization_matrix(const FinitePresentation& p) {
  IntMat m((int)p.relators.size(), p.ngens);
  for (int r = 0; r < m.rows; r++)
    for (const auto& [g, e] : exponent_sums(p.relators[r]))
      m.at(r, g - 1) = e;
  return m;
}

AbelianInvariants abelianized_invariants(const FinitePresentation& p) {
  return quotient_invariants(abelianization_matrix(p), p.ngens);
}

std::string presentation_str(const FinitePresentation& p) {
  std::ostringstream os;
  os << "<";
  for (int g = 1; g <= p.ngens; g++)
    os << (g > 1 ? ", " : " ") << p.gen_name(g);
  os << " |";
  for (size_t i = 0; i < p.relators.size(); i++)
    os << (i ? ", " : " ") << word_str(p.relators[i], "m", p.display);
  os << " >";
  return os.str();
}

}  // namespace arrlcs
