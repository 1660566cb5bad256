#include "arrlcs/report.hpp"

#include <cstdint>
#include <sstream>

#include "arrlcs/braid.hpp"
#include "arrlcs/nilq.hpp"
#include "arrlcs/presentation.hpp"
#include "arrlcs/wiring.hpp"
#include "json.hpp"

namespace arrlcs {

using ordered_json = nlohmann::ordered_json;

std::string fnv1a_hex(const std::string& bytes) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

ReportMeta make_meta(const std::string& input_name, const Arrangement& arr) {
  return {input_name, fnv1a_hex(serialize_arrangement(arr))};
}

std::string histogram_line(const IncidenceLattice& lat) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [mult, count] : multiplicity_histogram(lat)) {
    if (!first) os << ", ";
    first = false;
    os << count << "x" << mult;
  }
  return os.str();
}

namespace {

ordered_json meta_json(const ReportMeta& meta) {
  return {{"input", meta.input}, {"hash", meta.hash}};
}

ordered_json invariants_json(const AbelianInvariants& inv) {
  ordered_json j;
  j["rank"] = inv.rank;
  j["torsion"] = ordered_json::array();
  for (const Int& t : inv.torsion) j["torsion"].push_back(t.get_str());
  j["group"] = inv.str();
  return j;
}

FinitePresentation present_by_method(const WiringDiagram& diag,
                                     const std::string& method) {
  if (method == "wiring") return randell_presentation(diag);
  if (method == "braid") return zvk_presentation(braid_monodromy(diag));
  throw parse_error("unknown method: " + method + " (wiring|braid)");
}

ordered_json presentation_json(const FinitePresentation& p) {
  ordered_json j;
  j["generators"] = ordered_json::array();
  for (int g = 1; g <= p.ngens; g++) j["generators"].push_back(p.gen_name(g));
  j["relators"] = ordered_json::array();
  for (const auto& r : p.relators)
    j["relators"].push_back(word_str(r, "m", p.display));
  j["abelianization"] = abelianized_invariants(p).str();
  return j;
}

ordered_json certificates_json(const Certificates& c) {
  ordered_json j;
  j["triple_points_aligned"] = c.aligned;
  j["six_triple_points_on_smooth_conic"] = c.point_conic;
  j["six_lines_tangent_to_smooth_conic"] = c.tangent_conic;
  return j;
}

}  // namespace

Certificates builtin_certificates(const Arrangement& arr) {
  auto meet = [&](int i, int j) {
    return line_intersection(arr.line(i), arr.line(j));
  };
  Certificates c;
  c.aligned = collinear3(meet(1, 11), meet(2, 8), meet(3, 4));

  std::array<PPoint, 6> triples = {meet(1, 8),  meet(1, 11), meet(2, 8),
                                   meet(2, 11), meet(3, 9),  meet(3, 12)};
  Conic q;
  c.point_conic = six_points_on_common_conic(triples, &q) && q.smooth();

  std::array<PLine, 6> tang = {arr.line(6),  arr.line(7),  arr.line(8),
                               arr.line(10), arr.line(11), arr.line(13)};
  Conic qd;
  c.tangent_conic = lines_tangent_common_conic(tang, &qd) && qd.smooth();
  return c;
}

std::string lattice_report(const Arrangement& arr, const ReportMeta& meta) {
  IncidenceLattice lat = build_lattice(arr);
  ordered_json j;
  j["meta"] = meta_json(meta);
  j["lines"] = arr.n();
  j["infinity"] = arr.infinity;
  j["points"] = (int)lat.points.size();
  j["histogram"] = histogram_line(lat);
  ordered_json pts = ordered_json::array();
  for (const auto& p : lat.points) {
    ordered_json e;
    e["incident"] = p.incident;
    ordered_json coords = ordered_json::array();
    for (int k = 0; k < 3; k++) coords.push_back(p.point.c[k].get_str());
    e["point"] = coords;
    pts.push_back(e);
  }
  j["multiple_points"] = pts;
  BettiNumbers b = betti_numbers(arr);
  j["betti"] = {b.b0, b.b1, b.b2};
  auto triples = find_collinear_triples(arr, lat);
  ordered_json tr = ordered_json::array();
  for (const auto& t : triples) {
    ordered_json e = ordered_json::array();
    for (int ix : t) e.push_back(lat.points[ix].incident);
    tr.push_back(e);
  }
  j["collinear_triples"] = tr;
  return j.dump(2) + "\n";
}

std::string present_report(const Arrangement& arr, const std::string& method,
                           const ReportMeta& meta) {
  WiringDiagram diag = build_wiring(arr);
  FinitePresentation p = present_by_method(diag, method);
  ordered_json j;
  j["meta"] = meta_json(meta);
  j["method"] = method;
  j["shear_t"] = rat_str(diag.t);
  j["base_x"] = rat_str(diag.base_x);
  j["wire_order"] = diag.order;
  j["presentation"] = presentation_json(p);
  return j.dump(2) + "\n";
}

std::string nq_report(const Arrangement& arr, const std::string& method,
                      int cls, const ReportMeta& meta) {
  WiringDiagram diag = build_wiring(arr);
  FinitePresentation p = present_by_method(diag, method);
  NqResult nq = nilpotent_quotient(p, cls);
  ordered_json j;
  j["meta"] = meta_json(meta);
  j["method"] = method;
  j["class"] = cls;
  j["shear_t"] = rat_str(diag.t);
  j["base_x"] = rat_str(diag.base_x);
  j["generators"] = p.ngens;
  j["relators"] = (int)p.relators.size();
  j["pc_generators"] = nq.pc.ngens();
  ordered_json layers = ordered_json::array();
  for (int k = 1; k <= cls; k++) {
    ordered_json e;
    e["k"] = k;
    e["gr"] = invariants_json(nq.layers[k - 1]);
    layers.push_back(e);
  }
  j["layers"] = layers;
  return j.dump(2) + "\n";
}

std::string builtin_verification_report(int cls, bool* ok) {
  ordered_json j;
  bool all = true;
  CombinatoricsSpec spec = builtin_combinatorics();
  std::map<std::string, NqResult> runs;
  std::map<std::string, FinitePresentation> prs;
  std::map<std::string, Certificates> certs;
  for (const std::string name : {"A+", "A-"}) {
    Arrangement arr = builtin_arrangement(name);
    IncidenceLattice lat = build_lattice(arr);
    ordered_json e;
    e["meta"] = meta_json(make_meta(name, arr));
    e["histogram"] = histogram_line(lat);
    e["combinatorics_match"] = check_combinatorics(arr, spec);
    all = all && check_combinatorics(arr, spec);
    BettiNumbers b = betti_numbers(arr);
    e["betti"] = {b.b0, b.b1, b.b2};
    e["collinear_triples"] =
        (int)find_collinear_triples(arr, lat).size();
    certs.emplace(name, builtin_certificates(arr));
    e["certificates"] = certificates_json(certs.at(name));
    WiringDiagram diag = build_wiring(arr);
    e["shear_t"] = rat_str(diag.t);
    e["base_x"] = rat_str(diag.base_x);
    FinitePresentation p = randell_presentation(diag);
    NqResult nq = nilpotent_quotient(p, cls);
    ordered_json layers = ordered_json::array();
    for (int k = 1; k <= cls; k++) {
      ordered_json le;
      le["k"] = k;
      le["gr"] = invariants_json(nq.layers[k - 1]);
      layers.push_back(le);
    }
    e["layers"] = layers;
    if (cls >= 4) {
      GroupWord wit = left_normed_comm({p.gen_of_label(1), p.gen_of_label(5),
                                        p.gen_of_label(2), p.gen_of_label(3)});
      GrClass c4 = element_class_in_gr(nq, wit, 4);
      e["witness"] = "[[[m1,m5],m2],m3]";
      e["witness_order_gr4"] = c4.order.get_str();
    }
    j[name] = e;
    runs.emplace(name, std::move(nq));
    prs.emplace(name, std::move(p));
  }

  bool cert_sep = certs.at("A+").all() && certs.at("A-").none();
  j["certificates_separate"] = cert_sep;
  all = all && cert_sep;

  // identical lattices, identical low layers, divergence in gr_4
  bool same_low = true;
  for (int k = 1; k <= std::min(cls, 3); k++)
    same_low = same_low &&
               runs.at("A+").layers[k - 1] == runs.at("A-").layers[k - 1];
  j["low_layers_equal"] = same_low;
  all = all && same_low;
  if (cls >= 4) {
    const AbelianInvariants& p4 = runs.at("A+").layers[3];
    const AbelianInvariants& m4 = runs.at("A-").layers[3];
    bool diverge = p4.rank == m4.rank && m4.torsion.empty() &&
                   p4.torsion == std::vector<Int>{2};
    j["gr_4_extra_two_torsion_in_plus"] = diverge;
    all = all && diverge;
    GroupWord wit_p = left_normed_comm(
        {prs.at("A+").gen_of_label(1), prs.at("A+").gen_of_label(5),
         prs.at("A+").gen_of_label(2), prs.at("A+").gen_of_label(3)});
    bool wit_ok =
        element_class_in_gr(runs.at("A+"), wit_p, 4).order == 2 &&
        element_class_in_gr(runs.at("A-"), wit_p, 4).order == 1;
    j["witness_order_2_vs_trivial"] = wit_ok;
    all = all && wit_ok;
  }
  if (cls >= 5) {
    const AbelianInvariants& p5 = runs.at("A+").layers[4];
    const AbelianInvariants& m5 = runs.at("A-").layers[4];
    bool diverge5 = p5.rank == m5.rank && m5.torsion.empty() &&
                    p5.torsion == std::vector<Int>{2};
    j["gr_5_extra_two_torsion_in_plus"] = diverge5;
    all = all && diverge5;
  }
  j["verified"] = all;
  if (ok) *ok = all;
  return j.dump(2) + "\n";
}

}  // namespace arrlcs
