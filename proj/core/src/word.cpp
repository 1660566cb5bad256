#include "arrlcs/word.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "arrlcs/errors.hpp"

namespace arrlcs {

GroupWord reduced(GroupWord w) {
  GroupWord out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

GroupWord winv(const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->gen, -it->exp});
  return out;
}

GroupWord wmul(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduced(std::move(out));
}

GroupWord wmul(const GroupWord& a, const GroupWord& b, const GroupWord& c) {
  return wmul(wmul(a, b), c);
}

GroupWord gen_word(int g, int e) { return {{g, e}}; }

GroupWord wconj(const GroupWord& x, const GroupWord& y) {
  return wmul(wmul(y, x), winv(y));
}

GroupWord wcomm(const GroupWord& a, const GroupWord& b) {
  return wmul(wmul(a, b), wmul(winv(a), winv(b)));
}

GroupWord left_normed_comm(const std::vector<int>& gens) {
  if (gens.empty()) return {};
  GroupWord w = gen_word(gens[0]);
  for (size_t i = 1; i < gens.size(); i++)
    w = wcomm(w, gen_word(gens[i]));
  return w;
}

GroupWord cyclic_normal(const GroupWord& w0) {
  GroupWord w = reduced(w0);
  while (w.size() >= 2 && w.front().gen == w.back().gen &&
         w.front().exp == -w.back().exp) {
    w.erase(w.begin());
    w.pop_back();
  }
  if (w.empty()) return w;
  GroupWord best;
  auto consider = [&](const GroupWord& v) {
    for (size_t r = 0; r < v.size(); r++) {
      GroupWord rot(v.begin() + r, v.end());
      rot.insert(rot.end(), v.begin(), v.begin() + r);
      if (best.empty() || rot < best) best = rot;
    }
  };
  consider(w);
  consider(winv(w));
  return best;
}

std::map<int, long> exponent_sums(const GroupWord& w) {
  std::map<int, long> s;
  for (const Letter& l : w) {
    s[l.gen] += l.exp;
    if (s[l.gen] == 0) s.erase(l.gen);
  }
  return s;
}

int left_normed_depth(const GroupWord& w0) {
  GroupWord w = reduced(w0);
  if (w.empty()) return INT_MAX;
  if (w.size() == 1) return 1;
  // verbatim match of u x u^-1 x^-1 with x a single letter
  if (w.size() % 2 != 0) return 0;
  Letter last = w.back();
  Letter x{last.gen, -last.exp};
  size_t ulen = w.size() / 2 - 1;
  if (w[ulen] != x) return 0;
  GroupWord u(w.begin(), w.begin() + ulen);
  GroupWord expect = u;
  expect.push_back(x);
  GroupWord ui = winv(u);
  expect.insert(expect.end(), ui.begin(), ui.end());
  expect.push_back(last);
  if (expect != w) return 0;
  int d = left_normed_depth(u);
  return d == 0 ? 0 : (d == INT_MAX ? INT_MAX : d + 1);
}

std::string word_str(const GroupWord& w, const std::string& prefix,
                     const std::vector<int>& display) {
  if (w.empty()) return "1";
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j].gen == w[i].gen && w[j].exp == w[i].exp) j++;
    long e = (long)(j - i) * w[i].exp;
    if (!first) os << "*";
    first = false;
    int g = w[i].gen;
    os << prefix << (g >= 1 && g <= (int)display.size() ? display[g - 1] : g);
    if (e != 1) os << "^" << e;
    i = j;
  }
  return os.str();
}

std::string word_str(const GroupWord& w) {
  std::vector<int> display;
  for (const Letter& l : w)
    while ((int)display.size() < l.gen)
      display.push_back((int)display.size() + 1);
  return word_str(w, "x", display);
}

GroupWord parse_word(const std::string& s, const std::string& prefix,
                     const std::vector<int>& display) {
  GroupWord out;
  if (s == "1" || s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, '*')) {
    std::string name = tok;
    long e = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      try {
        e = std::stol(tok.substr(caret + 1));
      } catch (...) {
        throw parse_error("bad exponent in word token: " + tok);
      }
    }
    int g = 0;
    for (size_t i = 0; i < display.size(); i++)
      if (name == prefix + std::to_string(display[i])) g = (int)i + 1;
    if (g == 0) throw parse_error("unknown generator in word: " + name);
    for (long k = 0; k < std::abs(e); k++)
      out.push_back({g, e > 0 ? 1 : -1});
  }
  return reduced(std::move(out));
}

}  // namespace arrlcs
