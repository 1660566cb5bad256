#include "arrlcs/wiring.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "arrlcs/intmat.hpp"

namespace arrlcs {

namespace {

// Integer vector m3 with v . m3 = 1 (v is primitive).
Triple unimodular_completion(const Triple& v) {
  Int g1, x0, x1;
  mpz_gcdext(g1.get_mpz_t(), x0.get_mpz_t(), x1.get_mpz_t(),
             v[0].get_mpz_t(), v[1].get_mpz_t());
  Int g2, y, z;
  mpz_gcdext(g2.get_mpz_t(), y.get_mpz_t(), z.get_mpz_t(), g1.get_mpz_t(),
             v[2].get_mpz_t());
  if (g2 != 1) throw std::logic_error("infinity line is not primitive");
  return {y * x0, y * x1, z};
}

// Move the infinity line of `arr` to z = 0; returns the non-infinity lines
// in the new coordinates, sorted by label.
std::vector<std::pair<int, Triple>> to_standard_chart(const Arrangement& arr) {
  const Triple& v = arr.line(arr.infinity).c;
  bool already = (v == Triple{0, 0, 1});
  std::array<Triple, 3> cols;
  if (!already) {
    IntMat m(1, 3);
    for (int k = 0; k < 3; k++) m.at(0, k) = v[k];
    auto ker = kernel_basis(m);
    if (ker.size() != 2) throw std::logic_error("bad kernel for infinity line");
    cols[0] = {ker[0][0], ker[0][1], ker[0][2]};
    cols[1] = {ker[1][0], ker[1][1], ker[1][2]};
    cols[2] = unimodular_completion(v);
  }
  std::vector<std::pair<int, Triple>> out;
  for (int i = 0; i < arr.n(); i++) {
    if (arr.labels[i] == arr.infinity) continue;
    const Triple& u = arr.lines[i].c;
    Triple w = u;
    if (!already)
      for (int k = 0; k < 3; k++)
        w[k] = u[0] * cols[k][0] + u[1] * cols[k][1] + u[2] * cols[k][2];
    out.emplace_back(arr.labels[i], PLine(w).c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool shear_works(const std::vector<std::pair<int, Triple>>& lines,
                 const Rat& t, std::vector<AffineLine>* result) {
  std::vector<AffineLine> aff;
  for (const auto& [label, c] : lines) {
    Rat denom = Rat(c[1]) - Rat(c[0]) * t;
    if (denom == 0) return false;  // vertical after shear
    AffineLine al;
    al.label = label;
    al.slope = -Rat(c[0]) / denom;
    al.intercept = -Rat(c[2]) / denom;
    al.slope.canonicalize();
    al.intercept.canonicalize();
    aff.push_back(al);
  }
  // distinct multiple points need distinct abscissae
  std::set<std::pair<Rat, Rat>> pts;
  for (size_t i = 0; i < aff.size(); i++)
    for (size_t j = i + 1; j < aff.size(); j++) {
      if (aff[i].slope == aff[j].slope) continue;
      Rat x = (aff[j].intercept - aff[i].intercept) /
              (aff[i].slope - aff[j].slope);
      x.canonicalize();
      Rat y = aff[i].y_at(x);
      y.canonicalize();
      pts.insert({x, y});
    }
  std::set<Rat> xs;
  for (const auto& [x, y] : pts)
    if (!xs.insert(x).second) return false;
  if (result) *result = std::move(aff);
  return true;
}

}  // namespace

GenericChart genericize(const Arrangement& arr, int max_tries) {
  auto lines = to_standard_chart(arr);
  auto candidates = [](int k) -> Rat {
    if (k == 0) return 0;
    int q = (k + 1) / 2;
    return (k % 2) ? Rat(1, q) : Rat(-1, q);
  };
  for (int k = 0; k < max_tries; k++) {
    Rat t = candidates(k);
    GenericChart chart;
    chart.t = t;
    if (shear_works(lines, t, &chart.lines)) return chart;
  }
  throw genericity_violation("no generic shear found");
}

WiringDiagram build_wiring(const GenericChart& chart) {
  WiringDiagram d;
  d.t = chart.t;
  d.lines = chart.lines;

  std::map<std::pair<Rat, Rat>, std::set<int>> at;
  const auto& aff = chart.lines;
  for (size_t i = 0; i < aff.size(); i++)
    for (size_t j = i + 1; j < aff.size(); j++) {
      if (aff[i].slope == aff[j].slope) continue;
      Rat x = (aff[j].intercept - aff[i].intercept) /
              (aff[i].slope - aff[j].slope);
      x.canonicalize();
      Rat y = aff[i].y_at(x);
      y.canonicalize();
      at[{x, y}].insert(aff[i].label);
      at[{x, y}].insert(aff[j].label);
    }

  d.base_x = at.empty() ? Rat(0) : at.begin()->first.first - 1;

  // initial top-to-bottom order: decreasing y at the base abscissa
  std::vector<std::pair<Rat, int>> ys;
  for (const auto& l : aff) ys.emplace_back(l.y_at(d.base_x), l.label);
  std::sort(ys.begin(), ys.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  for (size_t i = 0; i + 1 < ys.size(); i++)
    if (ys[i].first == ys[i + 1].first)
      throw genericity_violation("two wires coincide at the base abscissa");
  for (const auto& [y, label] : ys) d.order.push_back(label);

  std::vector<int> cur = d.order;
  Rat prev_x;
  bool have_prev = false;
  for (const auto& [pt, labels] : at) {
    if (have_prev && pt.first == prev_x)
      throw genericity_violation("two multiple points share an abscissa");
    prev_x = pt.first;
    have_prev = true;

    std::vector<int> idx;
    for (int l : labels)
      idx.push_back((int)(std::find(cur.begin(), cur.end(), l) - cur.begin()));
    std::sort(idx.begin(), idx.end());
    for (size_t k = 0; k + 1 < idx.size(); k++)
      if (idx[k + 1] != idx[k] + 1)
        throw std::logic_error("event block is not consecutive");

    WiringEvent ev;
    ev.x = pt.first;
    ev.pos = idx.front() + 1;
    ev.len = (int)idx.size();
    for (int k = 0; k < ev.len; k++) ev.wires.push_back(cur[idx[0] + k]);
    d.events.push_back(ev);

    std::reverse(cur.begin() + idx.front(), cur.begin() + idx.back() + 1);
  }
  return d;
}

WiringDiagram build_wiring(const Arrangement& arr) {
  return build_wiring(genericize(arr));
}

std::vector<std::vector<GroupWord>> local_words(const WiringDiagram& diag) {
  std::vector<GroupWord> words;
  for (int l : diag.order) words.push_back(gen_word(l));
  std::vector<std::vector<GroupWord>> inputs;
  for (const auto& ev : diag.events) {
    int p0 = ev.pos - 1;
    std::vector<GroupWord> in(words.begin() + p0, words.begin() + p0 + ev.len);
    inputs.push_back(in);
    GroupWord prefix;
    std::vector<GroupWord> out(ev.len);
    for (int k = 0; k < ev.len; k++) {
      out[ev.len - 1 - k] = wconj(in[k], prefix);
      prefix = wmul(prefix, in[k]);
    }
    for (int k = 0; k < ev.len; k++) words[p0 + k] = out[k];
  }
  return inputs;
}

}  // namespace arrlcs
