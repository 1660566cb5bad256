#pragma once
#include <string>

#include "arrlcs/arrangement.hpp"

namespace arrlcs {

// 64-bit FNV-1a, lowercase hex.
std::string fnv1a_hex(const std::string& bytes);

// How the arrangement was named on the command line, plus a content hash
// of its canonical serialization.
struct ReportMeta {
  std::string input;
  std::string hash;
};
ReportMeta make_meta(const std::string& input_name, const Arrangement& arr);

// "25x2, 11x3, 2x5" (multiplicity histogram, ascending)
std::string histogram_line(const IncidenceLattice& lat);

// JSON report bodies (deterministic: equal inputs give equal bytes)
std::string lattice_report(const Arrangement& arr, const ReportMeta& meta);
std::string present_report(const Arrangement& arr, const std::string& method,
                           const ReportMeta& meta);
std::string nq_report(const Arrangement& arr, const std::string& method,
                      int cls, const ReportMeta& meta);

// The three geometric certificates separating the two deformation classes
// of the builtin pair: an alignment of three triple points, a smooth conic
// through six triple points, a smooth conic tangent to six of the lines.
// All three hold for "A+" and all three fail for "A-".
struct Certificates {
  bool aligned = false, point_conic = false, tangent_conic = false;
  bool all() const { return aligned && point_conic && tangent_conic; }
  bool none() const { return !aligned && !point_conic && !tangent_conic; }
};
Certificates builtin_certificates(const Arrangement& arr);

// Builds both hard-wired arrangements, compares their lattices and their
// lower-central-series data up to `cls`, and reports whether the expected
// divergence (equal lattices, equal gr_1..gr_3, certificate separation,
// extra 2-torsion in gr_4 of "A+") was found.  `ok` is set accordingly.
std::string builtin_verification_report(int cls, bool* ok);

}  // namespace arrlcs
