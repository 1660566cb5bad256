#pragma once
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace arrlcs {

using Int = mpz_class;
using Rat = mpq_class;  // always canonical: denominator > 0, gcd(|num|, den) = 1

// "p/q" or "p"; throws on malformed input or zero denominator
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) {
  return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace arrlcs
