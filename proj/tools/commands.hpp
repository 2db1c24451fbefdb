#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "scenario.hpp"
#include "surfel/checks.hpp"
#include "surfel/figures.hpp"

namespace surfel::cli {

enum ExitCode { ok = 0, invalid_input = 1, degenerate = 2, verification_failed = 3 };

// Normalized parameters, echoed in reports and in degeneracy diagnostics.
nlohmann::json parameters_json(const Scenario& s);

nlohmann::json solve_report(const Scenario& s);
Table field_grid(const Scenario& s);

// Coefficients read back from a solve report (the "coefficients" object).
Coeff2D disk_coefficients_from(const nlohmann::json& j);
Coeff3D sphere_coefficients_from(const nlohmann::json& j);

CheckReport verify_scenario(const Scenario& s, const std::optional<nlohmann::json>& coefficients);
std::vector<CheckReport> builtin_suite();
nlohmann::json reports_json(const std::vector<CheckReport>& reps);
void print_reports(const std::vector<CheckReport>& reps, std::ostream& out);

int run_solve(const std::string& file, const std::string& out_path, const std::string& grid_path,
              std::ostream& out, std::ostream& err);
int run_figure(const std::string& id, const std::string& out_path, int points, std::ostream& out,
               std::ostream& err);
int run_verify(const std::string& file, bool builtin, const std::string& coefficients_path,
               const std::string& out_path, std::ostream& out, std::ostream& err);

}  // namespace surfel::cli
