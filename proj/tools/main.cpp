#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace surfel::cli;
  CLI::App app{"Closed-form fields and effective moduli for nano-inhomogeneities with elastic interfaces"};
  app.require_subcommand(1);

  std::string file, out, grid_out, id, coeffs;
  int points = 0;
  bool builtin = false;

  auto* solve = app.add_subcommand("solve", "solve a scenario file and report coefficients");
  solve->add_option("file", file, "scenario (YAML)")->required();
  solve->add_option("--out", out, "write the JSON report here instead of stdout");
  solve->add_option("--grid-out", grid_out, "write field samples on the scenario grid (CSV)");

  auto* fig = app.add_subcommand("figure", "emit figure data (CSV)");
  fig->add_option("id", id, "fig2, fig3, fig4, fig5 or table1")->required();
  fig->add_option("--out", out, "output path (default stdout)");
  fig->add_option("--points", points, "number of samples along the abscissa");

  auto* tab = app.add_subcommand("table1", "effective shear modulus at c = 0.1, 0.3, 0.5 (CSV)");
  tab->add_option("--out", out, "output path (default stdout)");

  auto* ver = app.add_subcommand("verify", "check solved fields against the governing equations");
  ver->add_option("file", file, "scenario (YAML)");
  ver->add_flag("--builtin", builtin, "run the built-in scenario suite");
  ver->add_option("--coefficients", coeffs, "check these coefficients (solve report JSON)");
  ver->add_option("--out", out, "also write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return invalid_input;
  }

  try {
    if (*solve) return run_solve(file, out, grid_out, std::cout, std::cerr);
    if (*fig) return run_figure(id, out, points, std::cout, std::cerr);
    if (*tab) return run_figure("table1", out, 0, std::cout, std::cerr);
    if (*ver) return run_verify(file, builtin, coeffs, out, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return invalid_input;
  }
  return invalid_input;
}
