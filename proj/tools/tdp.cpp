#include <iostream>

#include "CLI11.hpp"
#include "tdpair/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Tridiagonal pairs of shape (1,2,1): construct, verify, report, enumerate"};
  app.require_subcommand(1);

  std::string input, out_path;
  bool full = false, unchecked = false, orbits = false, force = false;
  std::uint64_t p = 0;

  auto* report = app.add_subcommand("report", "Derived data and cross-checks for a parameter array");
  report->add_option("pa", input, "parameter array JSON file")->required();
  report->add_flag("--full", full, "include all bases, transition and representation matrices");
  report->add_option("--out", out_path, "write the document here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Check the TD system axioms for a matrix pair");
  verify->add_option("sys", input, "system JSON file with field, A, Astar")->required();
  verify->add_option("--out", out_path, "write the report here instead of stdout");

  auto* construct = app.add_subcommand("construct", "Canonical matrix pair of a parameter array");
  construct->add_option("pa", input, "parameter array JSON file")->required();
  construct->add_option("--out", out_path, "output system JSON file");
  construct->add_flag("--unchecked", unchecked, "build the matrices even if the array is inadmissible");

  auto* enumerate = app.add_subcommand("enumerate", "Count parameter arrays over GF(p)");
  enumerate->add_option("--p", p, "prime")->required();
  enumerate->add_flag("--orbits", orbits, "also count orbits of the dihedral action");
  enumerate->add_flag("--force", force, "ignore the grid size limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : tdpair::kExitInput;
  }

  if (report->parsed()) return tdpair::run_report(input, full, out_path, std::cout, std::cerr);
  if (verify->parsed()) return tdpair::run_verify(input, out_path, std::cout, std::cerr);
  if (construct->parsed()) return tdpair::run_construct(input, unchecked, out_path, std::cout, std::cerr);
  return tdpair::run_enumerate(p, orbits, force, std::cout, std::cerr);
}
