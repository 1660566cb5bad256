#include "arrlcs/nilq.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <tuple>

namespace arrlcs {

namespace {
constexpr long kExponentGuard = 1000000;

long small_abs(const Int& e) {
  if (!e.fits_slong_p() || std::abs(e.get_si()) > kExponentGuard)
    throw std::logic_error("collection exponent exceeds guard");
  return std::abs(e.get_si());
}
}  // namespace

const SparseVec* PcPres::comm_tail(int j, int i) const {
  auto it = comm.find({j, i});
  return it == comm.end() || it->second.empty() ? nullptr : &it->second;
}

int PcPres::first_of_weight(int w) const {
  for (int g = 1; g <= ngens(); g++)
    if (weight[g - 1] >= w) return g;
  return ngens() + 1;
}

// ---------------------------------------------------------------- collection

const SparseVec& Collector::conj_gen(int k, int g, int e) const {
  auto key = std::make_tuple(k, g, e);
  if (auto it = conj_memo_.find(key); it != conj_memo_.end())
    return it->second;
  SparseVec out;
  const SparseVec* t = pc_.comm_tail(k, g);
  if (!t) {
    out.push_back({k, 1});
  } else if (e == 1) {
    // a_g^-1 a_k a_g = (a_g^-1 t a_g) a_k, conjugating t letter by letter
    for (const auto& [m, x] : *t) {
      const SparseVec& cm = conj_gen(m, g, 1);
      if (cm.size() == 1 && cm[0].first == m && cm[0].second == 1) {
        out.push_back({m, x});
        continue;
      }
      long reps = small_abs(x);
      for (long r = 0; r < reps; r++) {
        if (x > 0)
          out.insert(out.end(), cm.begin(), cm.end());
        else
          for (auto it2 = cm.rbegin(); it2 != cm.rend(); ++it2)
            out.push_back({it2->first, -it2->second});
      }
    }
    out.push_back({k, 1});
  } else {
    // a_g a_k a_g^-1 = t^-1 a_k
    for (auto it2 = t->rbegin(); it2 != t->rend(); ++it2)
      out.push_back({it2->first, -it2->second});
    out.push_back({k, 1});
  }
  return conj_memo_[key] = std::move(out);
}

void Collector::mul_gen(std::map<int, Int>& state, int g, const Int& e) const {
  if (e == 0) return;
  auto cut = state.upper_bound(g);
  if (cut == state.end()) {
    Int& slot = state[g];
    slot += e;
    const Int& o = pc_.order[g - 1];
    if (o > 0) {
      Int f = floor_div(slot, o);
      if (f != 0) {
        slot -= f * o;
        if (slot == 0) state.erase(g);
        mul_word(state, pc_.power_tail[g - 1], f);
        return;
      }
    }
    if (slot == 0) state.erase(g);
    return;
  }

  SparseVec suffix(cut, state.end());
  state.erase(cut, state.end());
  if (e != 1 && e != -1) {
    bool allcomm = true;
    for (const auto& [k, x] : suffix)
      if (pc_.comm_tail(k, g)) {
        allcomm = false;
        break;
      }
    if (!allcomm) {
      for (const auto& kv : suffix) state.insert(kv);
      long reps = small_abs(e);
      Int step = e > 0 ? 1 : -1;
      for (long r = 0; r < reps; r++) mul_gen(state, g, step);
      return;
    }
  }
  mul_gen(state, g, e);
  for (const auto& [k, x] : suffix) {
    if (!pc_.comm_tail(k, g)) {
      mul_gen(state, k, x);
    } else {
      mul_word(state, conj_gen(k, g, e > 0 ? 1 : -1), x);
    }
  }
}

void Collector::mul_word(std::map<int, Int>& state, const SparseVec& w,
                         const Int& power) const {
  if (power == 0 || w.empty()) return;
  long reps = small_abs(power);
  for (long r = 0; r < reps; r++) {
    if (power > 0)
      for (const auto& [g, x] : w) mul_gen(state, g, x);
    else
      for (auto it = w.rbegin(); it != w.rend(); ++it)
        mul_gen(state, it->first, -it->second);
  }
}

std::map<int, Int> Collector::nf(const SparseVec& w) const {
  std::map<int, Int> state;
  mul_word(state, w);
  return state;
}

// ------------------------------------------------------------ sparse echelon

namespace {

using Row = SparseVec;

// a + c*b
Row row_axpy(const Row& a, const Int& c, const Row& b) {
  Row out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Int v = c * b[j].second;
      if (v != 0) out.push_back({b[j].first, v});
      j++;
    } else {
      Int v = a[i].second + c * b[j].second;
      if (v != 0) out.push_back({a[i].first, v});
      i++;
      j++;
    }
  }
  return out;
}

Row row_comb(const Int& ca, const Row& a, const Int& cb, const Row& b) {
  Row out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      Int v = ca * a[i].second;
      if (v != 0) out.push_back({a[i].first, v});
      i++;
    } else if (i == a.size() || b[j].first < a[i].first) {
      Int v = cb * b[j].second;
      if (v != 0) out.push_back({b[j].first, v});
      j++;
    } else {
      Int v = ca * a[i].second + cb * b[j].second;
      if (v != 0) out.push_back({a[i].first, v});
      i++;
      j++;
    }
  }
  return out;
}

class Echelon {
 public:
  void insert(Row r);
  void full_reduce();
  const std::map<int, Row>& pivots() const { return piv_; }

 private:
  std::map<int, Row> piv_;
};

void Echelon::insert(Row r0) {
  std::vector<Row> work;
  work.push_back(std::move(r0));
  while (!work.empty()) {
    Row r = std::move(work.back());
    work.pop_back();
    while (!r.empty()) {
      int p = r[0].first;
      Int a = r[0].second;
      auto it = piv_.find(p);
      if (it == piv_.end()) {
        if (a < 0)
          for (auto& [g, x] : r) x = -x;
        piv_[p] = std::move(r);
        break;
      }
      const Int& b = it->second[0].second;  // positive
      if (a % b == 0) {
        r = row_axpy(r, -(a / b), it->second);
        continue;
      }
      Int g, u, v;
      mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), b.get_mpz_t(),
                 a.get_mpz_t());
      Row np = row_comb(u, it->second, v, r);
      Row rest_old = row_axpy(it->second, -(b / g), np);
      Row rest_cur = row_axpy(r, -(a / g), np);
      piv_[p] = std::move(np);
      if (!rest_old.empty()) work.push_back(std::move(rest_old));
      r = std::move(rest_cur);
    }
  }
}

void Echelon::full_reduce() {
  for (auto it = piv_.rbegin(); it != piv_.rend(); ++it) {
    Row& r = it->second;
    size_t i = 1;
    while (i < r.size()) {
      int q = r[i].first;
      auto pit = piv_.find(q);
      if (pit == piv_.end()) {
        i++;
        continue;
      }
      const Int& d = pit->second[0].second;
      Int f = floor_div(r[i].second, d);
      if (f == 0) {
        i++;
        continue;
      }
      r = row_axpy(r, -f, pit->second);
      // entries before q are untouched; re-find position q
      while (i < r.size() && r[i].first < q) i++;
      if (i < r.size() && r[i].first == q) i++;
    }
  }
}

// -------------------------------------------------------------- one layer

struct Host {
  int kind;  // 0 = image of source gen a, 1 = power of gen a, 2 = comm (a,b)
  int a;
  int b;
};

SparseVec to_sparse(const std::map<int, Int>& m) {
  SparseVec v;
  v.reserve(m.size());
  for (const auto& [g, x] : m)
    if (x != 0) v.push_back({g, x});
  return v;
}

// reduce torsion exponents of a central (single-weight) vector, pushing
// carries into the power tails; entries and tails live above `base`
void normalize_central(SparseVec& v, const PcPres& pc) {
  std::map<int, Int> acc(v.begin(), v.end());
  for (auto it = acc.begin(); it != acc.end(); ++it) {
    const Int& o = pc.order[it->first - 1];
    if (o == 0) continue;
    Int f = floor_div(it->second, o);
    if (f == 0) continue;
    it->second -= f * o;
    for (const auto& [q, x] : pc.power_tail[it->first - 1]) acc[q] += f * x;
  }
  v = to_sparse(acc);
}

void extend_one_class(PcPres& pc, int c,
                      const std::vector<GroupWord>& relators, LayerData& layer) {
  const int m = pc.ngens();

  std::set<int> src_defined, power_defined;
  std::set<std::pair<int, int>> comm_defined;
  for (int g = 1; g <= m; g++) {
    if (pc.def_src[g - 1]) src_defined.insert(pc.def_src[g - 1]);
    if (pc.def_power[g - 1]) power_defined.insert(pc.def_power[g - 1]);
    if (pc.def_comm[g - 1].first) comm_defined.insert(pc.def_comm[g - 1]);
  }

  std::vector<Host> hosts;
  for (int g = 1; g <= pc.nsrc; g++)
    if (!src_defined.count(g)) hosts.push_back({0, g, 0});
  for (int i = 1; i <= m; i++)
    if (pc.order[i - 1] > 0 && !power_defined.count(i))
      hosts.push_back({1, i, 0});
  for (int j = 1; j <= m; j++)
    for (int i = 1; i < j; i++)
      if (pc.weight[i - 1] + pc.weight[j - 1] <= c &&
          !comm_defined.count({j, i}))
        hosts.push_back({2, j, i});
  const int K = (int)hosts.size();

  for (int t = 0; t < K; t++) {
    int idx = m + 1 + t;
    pc.weight.push_back(c);
    pc.order.push_back(0);
    pc.power_tail.push_back({});
    pc.def_src.push_back(0);
    pc.def_comm.push_back({0, 0});
    pc.def_power.push_back(0);
    const Host& h = hosts[t];
    if (h.kind == 0)
      pc.image[h.a - 1].push_back({idx, 1});
    else if (h.kind == 1)
      pc.power_tail[h.a - 1].push_back({idx, 1});
    else
      pc.comm[{h.a, h.b}].push_back({idx, 1});
  }

  Collector col(pc);
  Echelon ech;
  auto push_row = [&](const std::map<int, Int>& z1,
                      const std::map<int, Int>& z2) {
    Row r;
    auto i1 = z1.begin();
    auto i2 = z2.begin();
    while (i1 != z1.end() || i2 != z2.end()) {
      if (i2 == z2.end() || (i1 != z1.end() && i1->first < i2->first)) {
        if (i1->first <= m)
          throw std::logic_error("consistency row touches old coordinates");
        r.push_back({i1->first, i1->second});
        ++i1;
      } else if (i1 == z1.end() || i2->first < i1->first) {
        if (i2->first <= m)
          throw std::logic_error("consistency row touches old coordinates");
        r.push_back({i2->first, -i2->second});
        ++i2;
      } else {
        if (i1->second != i2->second) {
          if (i1->first <= m)
            throw std::logic_error("consistency row touches old coordinates");
          r.push_back({i1->first, i1->second - i2->second});
        }
        ++i1;
        ++i2;
      }
    }
    if (!r.empty()) ech.insert(std::move(r));
  };

  // associativity overlaps a_k a_j a_i, k > j > i, within the class bound
  for (int k = 1; k <= m; k++)
    for (int j = 1; j < k; j++) {
      if (pc.weight[k - 1] + pc.weight[j - 1] + 1 > c) continue;
      std::map<int, Int> kj;
      col.mul_gen(kj, k, 1);
      col.mul_gen(kj, j, 1);
      for (int i = 1; i < j; i++) {
        if (pc.weight[i - 1] + pc.weight[j - 1] + pc.weight[k - 1] > c)
          continue;
        std::map<int, Int> z1 = kj;
        col.mul_gen(z1, i, 1);
        std::map<int, Int> ji;
        col.mul_gen(ji, j, 1);
        col.mul_gen(ji, i, 1);
        std::map<int, Int> z2;
        col.mul_gen(z2, k, 1);
        col.mul_word(z2, to_sparse(ji));
        push_row(z1, z2);
      }
    }

  // power overlaps for torsion generators
  for (int j = 1; j <= m; j++) {
    if (pc.order[j - 1] == 0) continue;
    const Int oj = pc.order[j - 1];
    {
      std::map<int, Int> z1 = col.nf(pc.power_tail[j - 1]);
      col.mul_gen(z1, j, 1);
      std::map<int, Int> z2;
      col.mul_gen(z2, j, 1);
      col.mul_word(z2, pc.power_tail[j - 1]);
      push_row(z1, z2);
    }
    for (int i = 1; i < j; i++) {
      std::map<int, Int> z1 = col.nf(pc.power_tail[j - 1]);
      col.mul_gen(z1, i, 1);
      std::map<int, Int> ji;
      col.mul_gen(ji, j, 1);
      col.mul_gen(ji, i, 1);
      std::map<int, Int> z2;
      col.mul_gen(z2, j, oj - 1);
      col.mul_word(z2, to_sparse(ji));
      push_row(z1, z2);
    }
    for (int k = j + 1; k <= m; k++) {
      std::map<int, Int> kj;
      col.mul_gen(kj, k, 1);
      col.mul_gen(kj, j, 1);
      std::map<int, Int> z1 = kj;
      col.mul_gen(z1, j, oj - 1);
      std::map<int, Int> z2;
      col.mul_gen(z2, k, 1);
      col.mul_word(z2, pc.power_tail[j - 1]);
      push_row(z1, z2);
    }
  }

  // relator rows
  for (const GroupWord& rel : relators) {
    std::map<int, Int> z;
    for (const Letter& l : rel) col.mul_word(z, pc.image[l.gen - 1], l.exp);
    Row r;
    for (const auto& [g, x] : z) {
      if (x == 0) continue;
      if (g <= m)
        throw std::logic_error("relator image leaks below the new layer");
      r.push_back({g, x});
    }
    if (!r.empty()) ech.insert(std::move(r));
  }

  ech.full_reduce();

  // classify pseudo generators
  std::map<int, int> newidx;
  std::vector<int> surv;
  for (int t = 0; t < K; t++) {
    int p = m + 1 + t;
    auto it = ech.pivots().find(p);
    if (it != ech.pivots().end() && it->second[0].second == 1) continue;
    newidx[p] = m + 1 + (int)surv.size();
    surv.push_back(p);
  }

  // rebuild the generator block: survivors only
  auto renum = [&](const Row& rest) {
    SparseVec e;
    for (const auto& [q, x] : rest) e.push_back({newidx.at(q), x});
    return e;
  };
  std::map<int, SparseVec> expr;  // eliminated pseudo -> value (new indices)
  std::vector<std::pair<int, Row>> torsion_rows;
  for (const auto& [p, row] : ech.pivots()) {
    Row rest(row.begin() + 1, row.end());
    if (row[0].second == 1) {
      for (auto& [q, x] : rest) x = -x;
      expr[p] = renum(rest);
    } else {
      torsion_rows.push_back({p, row});
    }
  }

  pc.weight.resize(m);
  pc.order.resize(m);
  pc.power_tail.resize(m);
  pc.def_src.resize(m);
  pc.def_comm.resize(m);
  pc.def_power.resize(m);
  for (size_t s = 0; s < surv.size(); s++) {
    pc.weight.push_back(c);
    pc.order.push_back(0);
    pc.power_tail.push_back({});
    pc.def_src.push_back(0);
    pc.def_comm.push_back({0, 0});
    pc.def_power.push_back(0);
    const Host& h = hosts[surv[s] - m - 1];
    int ni = m + 1 + (int)s;
    if (h.kind == 0)
      pc.def_src[ni - 1] = h.a;
    else if (h.kind == 1)
      pc.def_power[ni - 1] = h.a;
    else
      pc.def_comm[ni - 1] = {h.a, h.b};
  }
  // torsion orders first, then tails from the highest pivot down so that
  // normalize_central sees finished later generators
  for (const auto& [p, row] : torsion_rows)
    pc.order[newidx.at(p) - 1] = row[0].second;
  for (auto it = torsion_rows.rbegin(); it != torsion_rows.rend(); ++it) {
    Row rest(it->second.begin() + 1, it->second.end());
    for (auto& [q, x] : rest) x = -x;
    SparseVec tail = renum(rest);
    normalize_central(tail, pc);
    pc.power_tail[newidx.at(it->first) - 1] = tail;
  }

  // substitute the pseudo generators inside their host relations
  for (int t = 0; t < K; t++) {
    int p = m + 1 + t;
    const Host& h = hosts[t];
    SparseVec* slot;
    if (h.kind == 0)
      slot = &pc.image[h.a - 1];
    else if (h.kind == 1)
      slot = &pc.power_tail[h.a - 1];
    else
      slot = &pc.comm[{h.a, h.b}];
    if (slot->empty() || slot->back() != std::make_pair(p, Int(1)))
      throw std::logic_error("pseudo generator lost its host slot");
    slot->pop_back();
    // split the slot into old part and already-substituted new part
    SparseVec np;
    while (!slot->empty() && slot->back().first > m) {
      np.push_back(slot->back());
      slot->pop_back();
    }
    std::reverse(np.begin(), np.end());
    if (auto e = expr.find(p); e != expr.end())
      np.insert(np.end(), e->second.begin(), e->second.end());
    else
      np.push_back({newidx.at(p), 1});
    std::sort(np.begin(), np.end());
    normalize_central(np, pc);
    slot->insert(slot->end(), np.begin(), np.end());
    if (h.kind == 2 && slot->empty()) pc.comm.erase({h.a, h.b});
  }

  // layer relation matrix over the survivors
  layer.count = (int)surv.size();
  layer.rel = IntMat((int)torsion_rows.size(), layer.count);
  for (int r = 0; r < layer.rel.rows; r++)
    for (const auto& [q, x] : torsion_rows[r].second)
      layer.rel.at(r, newidx.at(q) - m - 1) = x;

  pc.cls = c;
}

}  // namespace

// ------------------------------------------------------------- entry points

NqResult nilpotent_quotient(const FinitePresentation& p, int cls,
                            const NqOptions& opt) {
  if (cls < 1) throw std::invalid_argument("class must be >= 1");
  if (p.ngens < 1) throw std::invalid_argument("need at least one generator");
  NqResult r;
  r.pc.nsrc = p.ngens;
  r.pc.image.resize(p.ngens);
  for (int c = 1; c <= cls; c++) {
    LayerData ld;
    extend_one_class(r.pc, c, p.relators, ld);
    r.layers.push_back(quotient_invariants(ld.rel, ld.count));
    r.layer_data.push_back(std::move(ld));
    if (r.layer_data.back().count == 0) {
      while ((int)r.layers.size() < cls) {
        r.layers.push_back(quotient_invariants(IntMat(0, 0), 0));
        r.layer_data.push_back(LayerData{0, IntMat(0, 0)});
      }
      r.pc.cls = cls;
      break;
    }
  }
  if (opt.check_consistency && !pc_consistent(r.pc))
    throw std::logic_error("nilpotent quotient produced an inconsistent pcp");
  return r;
}

bool pc_consistent(const PcPres& pc) {
  Collector col(pc);
  const int m = pc.ngens();
  auto same = [](const std::map<int, Int>& a, const std::map<int, Int>& b) {
    return a == b;
  };
  for (int k = 1; k <= m; k++)
    for (int j = 1; j < k; j++) {
      if (pc.weight[k - 1] + pc.weight[j - 1] + 1 > pc.cls) continue;
      std::map<int, Int> kj;
      col.mul_gen(kj, k, 1);
      col.mul_gen(kj, j, 1);
      for (int i = 1; i < j; i++) {
        if (pc.weight[i - 1] + pc.weight[j - 1] + pc.weight[k - 1] > pc.cls)
          continue;
        std::map<int, Int> z1 = kj;
        col.mul_gen(z1, i, 1);
        std::map<int, Int> ji;
        col.mul_gen(ji, j, 1);
        col.mul_gen(ji, i, 1);
        std::map<int, Int> z2;
        col.mul_gen(z2, k, 1);
        col.mul_word(z2, to_sparse(ji));
        if (!same(z1, z2)) return false;
      }
    }
  for (int j = 1; j <= m; j++) {
    if (pc.order[j - 1] == 0) continue;
    const Int oj = pc.order[j - 1];
    {
      std::map<int, Int> z1 = col.nf(pc.power_tail[j - 1]);
      col.mul_gen(z1, j, 1);
      std::map<int, Int> z2;
      col.mul_gen(z2, j, 1);
      col.mul_word(z2, pc.power_tail[j - 1]);
      if (!same(z1, z2)) return false;
    }
    for (int i = 1; i < j; i++) {
      std::map<int, Int> z1 = col.nf(pc.power_tail[j - 1]);
      col.mul_gen(z1, i, 1);
      std::map<int, Int> ji;
      col.mul_gen(ji, j, 1);
      col.mul_gen(ji, i, 1);
      std::map<int, Int> z2;
      col.mul_gen(z2, j, oj - 1);
      col.mul_word(z2, to_sparse(ji));
      if (!same(z1, z2)) return false;
    }
    for (int k = j + 1; k <= m; k++) {
      std::map<int, Int> kj;
      col.mul_gen(kj, k, 1);
      col.mul_gen(kj, j, 1);
      std::map<int, Int> z1 = kj;
      col.mul_gen(z1, j, oj - 1);
      std::map<int, Int> z2;
      col.mul_gen(z2, k, 1);
      col.mul_word(z2, pc.power_tail[j - 1]);
      if (!same(z1, z2)) return false;
    }
  }
  return true;
}

GrClass element_class_in_gr(const NqResult& nq, const GroupWord& w, int k) {
  if (k < 1 || k > nq.pc.cls)
    throw std::invalid_argument("class out of range for this quotient");
  int d = left_normed_depth(w);
  if (d == 0 || (d != INT_MAX && d < k))
    throw DepthError("word is not a left-normed commutator of depth >= class");
  Collector col(nq.pc);
  std::map<int, Int> z;
  for (const Letter& l : w) col.mul_word(z, nq.pc.image[l.gen - 1], l.exp);
  int lo = nq.pc.first_of_weight(k);
  int hi = nq.pc.first_of_weight(k + 1);
  for (const auto& [g, x] : z)
    if (g < lo && x != 0)
      throw std::logic_error("commutator image has low-weight support");
  const LayerData& ld = nq.layer_data[k - 1];
  if (hi - lo != ld.count)
    throw std::logic_error("layer bookkeeping mismatch");
  IntMat v(1, std::max(ld.count, 1));
  for (const auto& [g, x] : z)
    if (g >= lo && g < hi) v.at(0, g - lo) = x;
  GrClass out;
  if (ld.count == 0) {
    out.order = 1;
    return out;
  }
  Snf s = smith_normal_form(ld.rel);
  IntMat y = mat_mul(v, s.v);
  Int order = 1;
  bool infinite = false;
  const int ndiag = std::min(s.d.rows, s.d.cols);
  for (int jc = 0; jc < ld.count; jc++) {
    Int dj = jc < ndiag ? s.d.at(jc, jc) : Int(0);
    const Int& yj = y.at(0, jc);
    if (dj == 0) {
      if (yj != 0) infinite = true;
    } else {
      order = lcm(order, dj / gcd(dj, yj));  // gcd(d, 0) = d, so y = 0 gives 1
    }
  }
  out.order = infinite ? Int(0) : order;
  return out;
}

GrClass element_class_in_gr(const FinitePresentation& p, const GroupWord& w,
                            int k, const NqOptions& opt) {
  return element_class_in_gr(nilpotent_quotient(p, k, opt), w, k);
}

std::pair<bool, int> lcs_formula_check(const std::vector<long>& phis,
                                       const BettiNumbers& betti, int order) {
  std::vector<Int> lhs(order + 1, 0);
  lhs[0] = 1;
  for (int k = 1; k <= order && k <= (int)phis.size(); k++) {
    if (phis[k - 1] == 0) continue;
    if (phis[k - 1] < 0) throw std::invalid_argument("negative rank");
    std::vector<Int> next(order + 1, 0);
    for (long j = 0; (long)k * j <= order; j++) {
      Int bin;
      mpz_bin_uiui(bin.get_mpz_t(), (unsigned long)phis[k - 1],
                   (unsigned long)j);
      if (j % 2) bin = -bin;
      for (int dgr = 0; dgr + k * j <= order; dgr++)
        next[dgr + k * j] += lhs[dgr] * bin;
    }
    lhs = std::move(next);
  }
  std::vector<Int> rhs(order + 1, 0);
  rhs[0] = 1;
  if (order >= 1) rhs[1] = -betti.b1;
  if (order >= 2) rhs[2] = betti.b2;
  for (int dgr = 0; dgr <= order; dgr++)
    if (lhs[dgr] != rhs[dgr]) return {false, dgr};
  return {true, 0};
}

}  // namespace arrlcs
