#pragma once
#include <map>
#include <string>
#include <vector>

#include "arrlcs/errors.hpp"
#include "arrlcs/projective.hpp"

namespace arrlcs {

// A labeled projective line arrangement with a designated line at infinity.
struct Arrangement {
  std::vector<int> labels;   // unique positive labels, parallel to `lines`
  std::vector<PLine> lines;  // canonical coefficient triples
  int infinity = 0;          // label of the designated line at infinity

  int n() const { return static_cast<int>(lines.size()); }
  const PLine& line(int label) const;
  bool has_label(int label) const;
  void validate() const;  // throws on duplicate lines/labels or bad infinity
};

// One multiple point of the arrangement: where it is and which lines pass
// through it.  `incident` is sorted ascending.
struct LatticePoint {
  PPoint point;
  std::vector<int> incident;
  int multiplicity() const { return static_cast<int>(incident.size()); }
};

// All pairwise intersection points, grouped so coincident intersections
// become a single point with full incidence.  Sorted lexicographically by
// incidence set, so equal combinatorics gives byte-equal lattices.
struct IncidenceLattice {
  std::vector<LatticePoint> points;
};

IncidenceLattice build_lattice(const Arrangement& arr);

// multiplicity -> number of points of that multiplicity
std::map<int, int> multiplicity_histogram(const IncidenceLattice& lat);

struct BettiNumbers {
  long b0 = 1, b1 = 0, b2 = 0;
  bool operator==(const BettiNumbers&) const = default;
};

// Betti numbers of the complement of the complexified arrangement in CP^2.
BettiNumbers betti_numbers(const Arrangement& arr);

// Intended incidence data: the points of multiplicity >= 3, by label sets.
struct CombinatoricsSpec {
  int n_lines = 0;
  std::vector<std::vector<int>> high_points;  // each sorted ascending
};

// Labeled comparison of the arrangement's multiplicity->=3 points against
// `spec`.  Returns true iff the sets match exactly.
bool check_combinatorics(const Arrangement& arr, const CombinatoricsSpec& spec);

// Unordered triples of multiple points (given as indices into lat.points)
// that are collinear but do not all lie on one arrangement line.  Only
// points with multiplicity >= min_mult are considered.
std::vector<std::array<int, 3>> find_collinear_triples(
    const Arrangement& arr, const IncidenceLattice& lat, int min_mult = 3);

// The two hard-wired 13-line arrangements, labeled "A+" and "A-".  They
// realize the same incidence lattice but are not connected through
// lattice-preserving deformations; the sign picks the component.
Arrangement builtin_arrangement(const std::string& name);

// The common incidence data of the builtin pair (2 quintuple points, 11
// triple points).
CombinatoricsSpec builtin_combinatorics();

// JSON round trip.  Format:
//   {"lines": [["1","0","0"], ...], "labels": [1,...], "infinity": 4}
// Coefficients are strings holding integers or fractions "p/q".
Arrangement parse_arrangement(const std::string& json_text);
std::string serialize_arrangement(const Arrangement& arr);

}  // namespace arrlcs
