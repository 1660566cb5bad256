#pragma once
#include <map>
#include <string>
#include <vector>

namespace arrlcs {

// One letter of a free-group word: generator index (>= 1) and exponent +-1.
struct Letter {
  int gen = 0;
  int exp = 1;
  bool operator==(const Letter&) const = default;
  bool operator<(const Letter& o) const {
    return gen != o.gen ? gen < o.gen : exp < o.exp;
  }
};

// Words are kept freely reduced by the helpers below.
using GroupWord = std::vector<Letter>;

GroupWord reduced(GroupWord w);
GroupWord winv(const GroupWord& w);
GroupWord wmul(const GroupWord& a, const GroupWord& b);
GroupWord wmul(const GroupWord& a, const GroupWord& b, const GroupWord& c);
GroupWord gen_word(int g, int e = 1);

// y * x * y^-1
GroupWord wconj(const GroupWord& x, const GroupWord& y);

// [a, b] = a b a^-1 b^-1
GroupWord wcomm(const GroupWord& a, const GroupWord& b);

// [...[[g1, g2], g3]..., gk] from generator indices
GroupWord left_normed_comm(const std::vector<int>& gens);

// Canonical representative of {conjugates of w and of w^-1}: cyclically
// reduce, then take the least rotation of w and of w^-1.
GroupWord cyclic_normal(const GroupWord& w);

// generator -> total exponent
std::map<int, long> exponent_sums(const GroupWord& w);

// Depth of w as a syntactically left-normed commutator [..[x,y],..,z] whose
// innermost entries are single letters: single letter -> 1, [u,v] with v a
// single letter and u of depth d -> d+1.  Returns 0 if w has no such shape.
// The empty word counts as "any depth" and returns a large sentinel.
int left_normed_depth(const GroupWord& w);

// "m1*m5^-1*..." with generator i printed as prefix + display[i-1];
// the empty word prints as "1".
std::string word_str(const GroupWord& w, const std::string& prefix,
                     const std::vector<int>& display);
std::string word_str(const GroupWord& w);  // prefix "x", display = identity

// Parse words in the word_str format (also accepts "^k" for |k| > 1).
// Generator names are matched against prefix+display entries.
GroupWord parse_word(const std::string& s, const std::string& prefix,
                     const std::vector<int>& display);

}  // namespace arrlcs
