#include "arrlcs/braid.hpp"

#include <algorithm>
#include <numeric>

namespace arrlcs {

BraidWord braid_mul(const BraidWord& a, const BraidWord& b) {
  BraidWord out;
  out.n = std::max(a.n, b.n);
  out.w = wmul(a.w, b.w);
  return out;
}

BraidWord braid_inv(const BraidWord& a) { return {a.n, winv(a.w)}; }

GroupWord artin_action(const BraidWord& b, GroupWord w) {
  for (const Letter& s : b.w) {
    int j = s.gen;
    GroupWord out;
    out.reserve(w.size() + 2);
    for (const Letter& l : w) {
      if (s.exp == 1) {
        if (l.gen == j) {
          if (l.exp == 1) {
            out.push_back({j, 1});
            out.push_back({j + 1, 1});
            out.push_back({j, -1});
          } else {
            out.push_back({j, 1});
            out.push_back({j + 1, -1});
            out.push_back({j, -1});
          }
        } else if (l.gen == j + 1) {
          out.push_back({j, l.exp});
        } else {
          out.push_back(l);
        }
      } else {
        if (l.gen == j) {
          out.push_back({j + 1, l.exp});
        } else if (l.gen == j + 1) {
          if (l.exp == 1) {
            out.push_back({j + 1, -1});
            out.push_back({j, 1});
            out.push_back({j + 1, 1});
          } else {
            out.push_back({j + 1, -1});
            out.push_back({j, -1});
            out.push_back({j + 1, 1});
          }
        } else {
          out.push_back(l);
        }
      }
    }
    w = reduced(std::move(out));
  }
  return w;
}

std::vector<int> braid_permutation(const BraidWord& b) {
  std::vector<int> perm(b.n);
  std::iota(perm.begin(), perm.end(), 1);
  for (const Letter& s : b.w) std::swap(perm[s.gen - 1], perm[s.gen]);
  return perm;
}

BraidWord full_twist(int start, int count, int n) {
  BraidWord b;
  b.n = n;
  for (int r = 0; r < count; r++)
    for (int i = start; i <= start + count - 2; i++) b.w.push_back({i, 1});
  return b;
}

BraidWord half_twist(int start, int count, int n) {
  BraidWord b;
  b.n = n;
  for (int top = start + count - 2; top >= start; top--)
    for (int i = start; i <= top; i++) b.w.push_back({i, 1});
  return b;
}

MonodromyTuple braid_monodromy(const WiringDiagram& diag) {
  MonodromyTuple t;
  t.n = (int)diag.order.size();
  t.strand_labels = diag.order;
  BraidWord beta{t.n, {}};
  for (const auto& ev : diag.events) {
    MonodromyEntry e;
    e.pos = ev.pos;
    e.len = ev.len;
    e.conj = beta;
    e.braid = braid_mul(braid_mul(braid_inv(beta), full_twist(ev.pos, ev.len, t.n)), beta);
    t.entries.push_back(e);
    // later events see this point's half twist first under the right action
    beta = braid_mul(half_twist(ev.pos, ev.len, t.n), beta);
  }
  return t;
}

namespace {

GroupWord strands_to_gens(const GroupWord& w, const MonodromyTuple& t,
                          const FinitePresentation& p) {
  GroupWord out;
  out.reserve(w.size());
  for (const Letter& l : w)
    out.push_back({p.gen_of_label(t.strand_labels[l.gen - 1]), l.exp});
  return out;
}

std::vector<GroupWord> entry_relators_strand(const MonodromyEntry& e, int n) {
  std::vector<GroupWord> rels;
  BraidWord local = full_twist(e.pos, e.len, n);
  for (int i = e.pos; i <= e.pos + e.len - 2; i++) {
    GroupWord bare =
        wmul(artin_action(local, gen_word(i)), winv(gen_word(i)));
    rels.push_back(artin_action(e.conj, bare));
  }
  return rels;
}

}  // namespace

FinitePresentation zvk_presentation(const MonodromyTuple& t) {
  FinitePresentation p;
  p.display = t.strand_labels;
  std::sort(p.display.begin(), p.display.end());
  p.ngens = (int)p.display.size();
  for (const auto& e : t.entries) {
    if (braid_permutation(e.braid) != braid_permutation({t.n, {}}))
      throw std::logic_error("monodromy factor is not a pure braid");
    for (const auto& r : entry_relators_strand(e, t.n))
      p.relators.push_back(strands_to_gens(r, t, p));
  }
  return p;
}

bool monodromy_matches_wiring(const WiringDiagram& diag,
                              const MonodromyTuple& t) {
  if (t.strand_labels != diag.order) return false;
  if (t.entries.size() != diag.events.size()) return false;
  FinitePresentation dummy;
  dummy.display = t.strand_labels;
  std::sort(dummy.display.begin(), dummy.display.end());
  dummy.ngens = (int)dummy.display.size();

  auto inputs = local_words(diag);
  for (size_t j = 0; j < t.entries.size(); j++) {
    const auto& e = t.entries[j];
    const auto& ev = diag.events[j];
    if (e.pos != ev.pos || e.len != ev.len) return false;
    // transported meridians = the wiring's carried words, letter for letter
    for (int k = 0; k < e.len; k++) {
      GroupWord got = artin_action(e.conj, gen_word(e.pos + k));
      GroupWord want;
      for (const Letter& l : inputs[j][k])
        want.push_back({dummy.gen_of_label(l.gen), l.exp});
      if (strands_to_gens(got, t, dummy) != want) return false;
    }
    // fixed-point relators = the commutators [product, carried word]
    int l = (int)inputs[j].size();
    GroupWord prod;
    for (const auto& w : inputs[j]) prod = wmul(prod, w);
    auto to_gens = [&](const GroupWord& w) {
      GroupWord mapped;
      for (const Letter& x : w)
        mapped.push_back({dummy.gen_of_label(x.gen), x.exp});
      return mapped;
    };
    std::vector<GroupWord> zr, rr;
    for (const auto& r : entry_relators_strand(e, t.n))
      zr.push_back(cyclic_normal(strands_to_gens(r, t, dummy)));
    for (int i = 0; i + 1 < l; i++)
      rr.push_back(cyclic_normal(to_gens(wcomm(prod, inputs[j][i]))));
    std::sort(zr.begin(), zr.end());
    std::sort(rr.begin(), rr.end());
    if (zr != rr) return false;
    // the wiring's cyclic-shift relators telescope into those commutators:
    // [P, w_c] = R_{c-1} * (w_c R_c^-1 w_c^-1)  with R_c = straight*shift_c^-1.
    // This free-word identity certifies the two relator sets have the same
    // normal closure, i.e. the presentations agree by Tietze-I moves.
    GroupWord prev_r;
    for (int c = 1; c < l; c++) {
      GroupWord shifted;
      for (int k = 0; k < l; k++)
        shifted = wmul(shifted, inputs[j][(c + k) % l]);
      GroupWord r = wmul(prod, winv(shifted));
      GroupWord lhs = wcomm(prod, inputs[j][c - 1]);
      GroupWord rhs = wmul(prev_r, wconj(winv(r), inputs[j][c - 1]));
      if (lhs != rhs) return false;
      prev_r = r;
    }
  }
  return true;
}

MonodromyTuple hurwitz_move(const MonodromyTuple& t, int k, int dir) {
  if (k < 1 || k + 1 > (int)t.entries.size())
    throw std::invalid_argument("hurwitz index out of range");
  if (dir != 1 && dir != -1)
    throw std::invalid_argument("hurwitz direction must be +1 or -1");
  MonodromyTuple out = t;
  const MonodromyEntry a = t.entries[k - 1];
  const MonodromyEntry b = t.entries[k];
  MonodromyEntry moved;
  if (dir == 1) {
    // (a, b) -> (a b a^-1, a)
    moved.pos = b.pos;
    moved.len = b.len;
    moved.braid = braid_mul(braid_mul(a.braid, b.braid), braid_inv(a.braid));
    moved.conj = braid_mul(b.conj, braid_inv(a.braid));
    out.entries[k - 1] = moved;
    out.entries[k] = a;
  } else {
    // (a, b) -> (b, b^-1 a b)
    moved.pos = a.pos;
    moved.len = a.len;
    moved.braid = braid_mul(braid_mul(braid_inv(b.braid), a.braid), b.braid);
    moved.conj = braid_mul(a.conj, b.braid);
    out.entries[k - 1] = b;
    out.entries[k] = moved;
  }
  return out;
}

bool product_is_full_twist(const MonodromyTuple& t) {
  BraidWord prod{t.n, {}};
  for (const auto& e : t.entries) prod = braid_mul(prod, e.braid);
  BraidWord big = full_twist(1, t.n, t.n);
  for (int i = 1; i <= t.n; i++)
    if (artin_action(prod, gen_word(i)) != artin_action(big, gen_word(i)))
      return false;
  return true;
}

}  // namespace arrlcs
