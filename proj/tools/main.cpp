// arrlcs: fundamental-group workbench for rational line arrangements.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "arrlcs/arrangement.hpp"
#include "arrlcs/braid.hpp"
#include "arrlcs/nilq.hpp"
#include "arrlcs/presentation.hpp"
#include "arrlcs/report.hpp"
#include "arrlcs/svg.hpp"
#include "arrlcs/wiring.hpp"

using namespace arrlcs;

namespace {

Arrangement load_input(const std::string& name) {
  if (name == "A+" || name == "A-") return builtin_arrangement(name);
  std::ifstream in(name);
  if (!in) throw io_error("cannot open input file: " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_arrangement(ss.str());
}

void write_out(const std::string& path, const std::string& body) {
  if (path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) throw io_error("cannot open output file: " + path);
  out << body;
  if (!out) throw io_error("failed writing: " + path);
}

FinitePresentation make_presentation(const WiringDiagram& diag,
                                     const std::string& method) {
  if (method == "wiring") return randell_presentation(diag);
  if (method == "braid") return zvk_presentation(braid_monodromy(diag));
  throw parse_error("unknown method: " + method + " (use wiring or braid)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fundamental groups of complexified rational line arrangements"};
  app.require_subcommand(1);

  std::string input, method = "wiring", report_path, output_path;
  int cls = 2;

  auto* lat = app.add_subcommand("lattice", "intersection lattice summary");
  lat->add_option("input", input, "A+, A-, or an arrangement file")
      ->required();
  lat->add_option("--report", report_path, "write a JSON report here");

  auto* pres = app.add_subcommand("present", "fundamental group presentation");
  pres->add_option("input", input)->required();
  pres->add_option("--method", method, "wiring | braid (default wiring)");
  pres->add_option("--report", report_path, "write a JSON report here");

  auto* nqc = app.add_subcommand("nq", "lower central series quotients");
  nqc->add_option("input", input)->required();
  nqc->add_option("--method", method, "wiring | braid (default wiring)");
  nqc->add_option("--class", cls, "nilpotency class (default 2)")
      ->check(CLI::Range(1, 16));
  nqc->add_option("--report", report_path, "write a JSON report here");

  auto* ver = app.add_subcommand(
      "verify-paper",
      "check the built-in pair: equal lattices, diverging gr_4");
  ver->add_option("--class", cls, "nilpotency class (default 4)")
      ->check(CLI::Range(1, 16));
  ver->add_option("--report", report_path, "write a JSON report here");

  auto* ren = app.add_subcommand("render", "SVG picture of the affine chart");
  ren->add_option("input", input)->required();
  ren->add_option("--output", output_path, "SVG file (- for stdout)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (lat->parsed()) {
      Arrangement arr = load_input(input);
      IncidenceLattice l = build_lattice(arr);
      std::cout << histogram_line(l) << "\n";
      if (input == "A+" || input == "A-") {
        bool match = check_combinatorics(arr, builtin_combinatorics());
        std::cout << (match ? "combinatorics: match\n"
                            : "combinatorics: MISMATCH\n");
        if (!match) return 1;
      }
      if (!report_path.empty())
        write_out(report_path, lattice_report(arr, make_meta(input, arr)));
    } else if (pres->parsed()) {
      Arrangement arr = load_input(input);
      WiringDiagram diag = build_wiring(arr);
      FinitePresentation p = make_presentation(diag, method);
      std::cout << p.ngens << " generators, " << p.relators.size()
                << " relators (method: " << method << ")\n";
      std::cout << "abelianization: " << abelianized_invariants(p).str()
                << "\n";
      if (!report_path.empty())
        write_out(report_path,
                  present_report(arr, method, make_meta(input, arr)));
    } else if (nqc->parsed()) {
      if (!nqc->count("--class")) cls = 2;
      Arrangement arr = load_input(input);
      WiringDiagram diag = build_wiring(arr);
      FinitePresentation p = make_presentation(diag, method);
      NqResult nq = nilpotent_quotient(p, cls);
      for (int k = 1; k <= cls; k++)
        std::cout << "gr_" << k << " = " << nq.layers[k - 1].str() << "\n";
      if (!report_path.empty())
        write_out(report_path,
                  nq_report(arr, method, cls, make_meta(input, arr)));
    } else if (ver->parsed()) {
      if (!ver->count("--class")) cls = 4;
      bool ok = false;
      std::string body = builtin_verification_report(cls, &ok);
      std::cout << (ok ? "verified: the built-in pair shares its lattice "
                         "but not its lower central series\n"
                       : "verification FAILED\n");
      if (!report_path.empty()) write_out(report_path, body);
      return ok ? 0 : 1;
    } else if (ren->parsed()) {
      Arrangement arr = load_input(input);
      write_out(output_path, render_svg(arr));
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
