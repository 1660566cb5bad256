#include "arrlcs/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace arrlcs {

const PLine& Arrangement::line(int label) const {
  for (size_t i = 0; i < labels.size(); i++)
    if (labels[i] == label) return lines[i];
  throw std::invalid_argument("no line with label " + std::to_string(label));
}

bool Arrangement::has_label(int label) const {
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

void Arrangement::validate() const {
  if (labels.size() != lines.size())
    throw std::invalid_argument("labels/lines size mismatch");
  if (lines.size() < 2) throw std::invalid_argument("need at least 2 lines");
  std::set<int> ls(labels.begin(), labels.end());
  if (ls.size() != labels.size())
    throw std::invalid_argument("duplicate labels");
  for (int l : labels)
    if (l <= 0) throw std::invalid_argument("labels must be positive");
  std::set<PLine> seen(lines.begin(), lines.end());
  if (seen.size() != lines.size()) throw duplicate_lines();
  if (!has_label(infinity))
    throw std::invalid_argument("infinity label not in arrangement");
}

IncidenceLattice build_lattice(const Arrangement& arr) {
  arr.validate();
  std::map<PPoint, std::set<int>> at;
  int n = arr.n();
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) {
      PPoint p = line_intersection(arr.lines[i], arr.lines[j]);
      at[p].insert(arr.labels[i]);
      at[p].insert(arr.labels[j]);
    }
  IncidenceLattice lat;
  for (auto& [p, inc] : at) {
    LatticePoint lp;
    lp.point = p;
    lp.incident.assign(inc.begin(), inc.end());
    lat.points.push_back(std::move(lp));
  }
  std::sort(lat.points.begin(), lat.points.end(),
            [](const LatticePoint& a, const LatticePoint& b) {
              return a.incident < b.incident;
            });
  return lat;
}

std::map<int, int> multiplicity_histogram(const IncidenceLattice& lat) {
  std::map<int, int> h;
  for (const auto& p : lat.points) h[p.multiplicity()]++;
  return h;
}

BettiNumbers betti_numbers(const Arrangement& arr) {
  IncidenceLattice lat = build_lattice(arr);
  BettiNumbers b;
  b.b0 = 1;
  b.b1 = arr.n() - 1;  // meridians modulo the product-of-all relation
  long s = 0;
  for (const auto& p : lat.points) s += p.multiplicity() - 1;
  b.b2 = s - b.b1;
  return b;
}

bool check_combinatorics(const Arrangement& arr,
                         const CombinatoricsSpec& spec) {
  if (arr.n() != spec.n_lines) return false;
  IncidenceLattice lat = build_lattice(arr);
  std::set<std::vector<int>> got, want;
  for (const auto& p : lat.points)
    if (p.multiplicity() >= 3) got.insert(p.incident);
  for (auto hp : spec.high_points) {
    std::sort(hp.begin(), hp.end());
    want.insert(hp);
  }
  return got == want;
}

std::vector<std::array<int, 3>> find_collinear_triples(
    const Arrangement& arr, const IncidenceLattice& lat, int min_mult) {
  std::vector<int> idx;
  for (int i = 0; i < (int)lat.points.size(); i++)
    if (lat.points[i].multiplicity() >= min_mult) idx.push_back(i);
  std::vector<std::array<int, 3>> out;
  for (size_t a = 0; a < idx.size(); a++)
    for (size_t b = a + 1; b < idx.size(); b++)
      for (size_t c = b + 1; c < idx.size(); c++) {
        const auto& P = lat.points[idx[a]];
        const auto& Q = lat.points[idx[b]];
        const auto& R = lat.points[idx[c]];
        if (!collinear3(P.point, Q.point, R.point)) continue;
        // skip triples that just sit on one of the arrangement's own lines
        std::vector<int> common;
        std::set_intersection(P.incident.begin(), P.incident.end(),
                              Q.incident.begin(), Q.incident.end(),
                              std::back_inserter(common));
        bool on_arr_line = false;
        for (int l : common)
          if (std::binary_search(R.incident.begin(), R.incident.end(), l))
            on_arr_line = true;
        if (on_arr_line) continue;
        out.push_back({idx[(int)a], idx[(int)b], idx[(int)c]});
      }
  return out;
}

namespace {

Arrangement thirteen_lines(bool plus) {
  // L11, L12, L13 carry the sign choice; everything else is shared.
  std::vector<Triple> t = {
      {1, 0, 0},   // 1: x = 0
      {0, 1, 0},   // 2: y = 0
      {1, 1, -1},  // 3: x + y = z
      {0, 0, 1},   // 4: line at infinity
      {3, 3, 1},  {3, 0, 1}, {0, 3, 1}, {2, -1, 2}, {1, 0, 1}, {0, 1, -2},
  };
  if (plus) {
    t.push_back({1, -2, -2});
    t.push_back({0, 1, 1});
    t.push_back({1, 0, -2});
  } else {
    t.push_back({3, 6, -2});
    t.push_back({0, 3, -1});
    t.push_back({3, 0, -2});
  }
  Arrangement arr;
  for (int i = 0; i < 13; i++) {
    arr.labels.push_back(i + 1);
    arr.lines.push_back(PLine(t[i]));
  }
  arr.infinity = 4;
  arr.validate();

  // The two sign choices are told apart by whether the triple points
  // P_{1,11,12}, P_{2,8,9}, P_{3,4,5} line up.
  auto pt = [&](int a, int b) {
    return line_intersection(arr.line(a), arr.line(b));
  };
  bool aligned = collinear3(pt(1, 11), pt(2, 8), pt(3, 4));
  if (aligned != plus)
    throw std::logic_error("builtin arrangement failed its sign certificate");
  return arr;
}

}  // namespace

Arrangement builtin_arrangement(const std::string& name) {
  if (name == "A+") return thirteen_lines(true);
  if (name == "A-") return thirteen_lines(false);
  throw std::invalid_argument("unknown builtin arrangement: " + name);
}

CombinatoricsSpec builtin_combinatorics() {
  CombinatoricsSpec s;
  s.n_lines = 13;
  s.high_points = {{1, 4, 6, 9, 13}, {2, 4, 7, 10, 12}, {1, 5, 7},
                   {1, 8, 10},       {1, 11, 12},       {2, 5, 6},
                   {2, 8, 9},        {2, 11, 13},       {3, 4, 5},
                   {3, 6, 8},        {3, 7, 11},        {3, 9, 10},
                   {3, 12, 13}};
  return s;
}

Arrangement parse_arrangement(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("lines") || !j["lines"].is_array())
    throw parse_error("expected an object with a \"lines\" array");
  Arrangement arr;
  try {
    for (const auto& row : j["lines"]) {
      if (!row.is_array() || row.size() != 3)
        throw parse_error("each line needs exactly 3 coefficients");
      std::array<Rat, 3> c;
      for (int k = 0; k < 3; k++)
        c[k] = row[k].is_string() ? parse_rat(row[k].get<std::string>())
                                  : Rat(row[k].get<long>());
      arr.lines.push_back(PLine(c));
    }
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || j["labels"].size() != arr.lines.size())
      throw parse_error("\"labels\" must list one label per line");
    for (const auto& l : j["labels"]) arr.labels.push_back(l.get<int>());
  } else {
    for (size_t i = 0; i < arr.lines.size(); i++)
      arr.labels.push_back((int)i + 1);
  }
  arr.infinity = j.value("infinity", arr.labels.empty() ? 0 : arr.labels[0]);
  try {
    arr.validate();
  } catch (const std::exception& e) {
    throw parse_error(e.what());
  }
  return arr;
}

std::string serialize_arrangement(const Arrangement& arr) {
  nlohmann::ordered_json j;
  j["lines"] = nlohmann::ordered_json::array();
  for (const auto& l : arr.lines) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int k = 0; k < 3; k++) row.push_back(l.c[k].get_str());
    j["lines"].push_back(row);
  }
  j["labels"] = arr.labels;
  j["infinity"] = arr.infinity;
  return j.dump(2) + "\n";
}

}  // namespace arrlcs
