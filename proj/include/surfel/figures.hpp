#pragma once

#include <array>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "surfel/homogenize.hpp"

namespace surfel {

// Column-major data set with unit-annotated headers, e.g. "theta (rad)".
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// Normalized nano-cavity case (mu = 1, R = 1): alumina-like surface constants,
// a weak shear load and three levels of surface tension.
namespace cavity_case {

inline constexpr double nu = 0.3;
inline constexpr double shear_load = 0.000028818;  // sigma_d / mu
inline constexpr double mu0 = 0.030156;            // mu0 / (mu R)
inline constexpr double lambda0 = 0.060312;        // lambda0 / (mu R)
inline constexpr double gamma = 0.00028382;        // gamma / mu
inline constexpr std::array<double, 3> tension{0.0, 0.0067435, 0.0097983};  // sigma0 / (mu R)

// Dimensional variant used for the size effect.
inline constexpr double mu_Pa = 34.7e9;
inline constexpr double load_Pa = 100e6;
inline constexpr double mu0_N_m = 5.2321;
inline constexpr double lambda0_N_m = 10.4641;
inline constexpr double sigma0_N_m = 1.7;
inline constexpr std::array<double, 3> radii_nm{5.0, 10.0, 20.0};

inline SphereProblem problem(double sigma0, double gamma_over_mu, double sigma_d = shear_load) {
  SphereProblem p;
  p.matrix = {1.0, nu};
  p.inhom = {0.0, 0.3};
  p.surf.mu0 = mu0;
  p.surf.lambda0 = lambda0;
  p.surf.sigma0 = sigma0;
  p.surf = with_gamma(p.surf, gamma_over_mu, 1.0);
  p.sigma_d = sigma_d;
  return p;
}

// Same surface in N/m on a sphere of radius R_nm, expressed in mu = 1, R = 1 units.
inline SphereProblem sized_problem(double R_nm) {
  const double muR = mu_Pa * R_nm * 1e-9;
  SphereProblem p;
  p.matrix = {1.0, nu};
  p.inhom = {0.0, 0.3};
  p.surf.mu0 = mu0_N_m / muR;
  p.surf.lambda0 = lambda0_N_m / muR;
  p.surf.sigma0 = sigma0_N_m / muR;
  p.surf = with_gamma(p.surf, gamma, 1.0);
  p.sigma_d = load_Pa / mu_Pa;
  return p;
}

}  // namespace cavity_case

inline std::vector<double> linspace(double a, double b, int n) {
  if (n < 2) throw InvalidInput("need at least 2 points");
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = a + (b - a) * i / (n - 1);
  x.back() = b;
  return x;
}

inline std::string tension_label(double s0) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.7g", s0);
  return buf;
}

// Hoop stress (or sigma_zz) on the cavity wall along phi = 0.
inline Table wall_stress_figure(bool zz, int n) {
  Table t;
  t.header.push_back("theta (rad)");
  std::vector<Coeff3D> cs;
  std::vector<SphereProblem> ps;
  for (double s0 : cavity_case::tension) {
    ps.push_back(cavity_case::problem(s0, cavity_case::gamma));
    cs.push_back(solve_sphere(ps.back(), InterfaceModel::so));
    t.header.push_back(std::string(zz ? "sigma_zz/mu" : "sigma_tt/mu") +
                       " sigma0/muR=" + tension_label(s0) + " (1)");
  }
  for (double th : linspace(0.0, std::numbers::pi / 2.0, n)) {
    std::vector<double> row{th};
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const SphStress s = stress_3d(cs[k], ps[k], 1.0, th, 0.0, Side::matrix);
      row.push_back(zz ? spherical_to_cartesian_stress(s, th, 0.0).zz : s.tt);
    }
    t.rows.push_back(row);
  }
  return t;
}

inline Table figure_hoop_stress(int n = 91) { return wall_stress_figure(false, n); }
inline Table figure_axial_stress(int n = 91) { return wall_stress_figure(true, n); }

// sigma_tt / sigma_d on the wall along phi = pi/2 for three radii, plus the
// size-independent classical cavity.
inline Table figure_size_effect(int n = 91) {
  Table t;
  t.header.push_back("theta (rad)");
  std::vector<SphereProblem> ps;
  std::vector<Coeff3D> cs;
  for (double R : cavity_case::radii_nm) {
    ps.push_back(cavity_case::sized_problem(R));
    cs.push_back(solve_sphere(ps.back(), InterfaceModel::so));
    t.header.push_back("sigma_tt/sigma_d R=" + tension_label(R) + "nm (1)");
  }
  ps.push_back(cavity_case::sized_problem(cavity_case::radii_nm[0]));
  cs.push_back(solve_sphere(ps.back(), InterfaceModel::classical));
  t.header.push_back("sigma_tt/sigma_d classical (1)");
  const double ph = std::numbers::pi / 2.0;
  for (double th : linspace(0.0, std::numbers::pi / 2.0, n)) {
    std::vector<double> row{th};
    for (std::size_t k = 0; k < cs.size(); ++k)
      row.push_back(stress_3d(cs[k], ps[k], 1.0, th, ph, Side::matrix).tt / ps[k].sigma_d);
    t.rows.push_back(row);
  }
  return t;
}

struct ModulusColumn {
  std::string label;
  EquivalentInhomogeneity eq;
};

inline std::vector<ModulusColumn> modulus_columns(bool all_tensions) {
  using namespace cavity_case;
  std::vector<ModulusColumn> cols;
  SphereProblem bare = problem(0.0, 0.0, 1.0);
  bare.surf = SurfaceParams{};
  cols.push_back({"classic", equivalent_inhomogeneity(bare)});
  cols.push_back({"GM", equivalent_inhomogeneity(problem(0.0, 0.0, 1.0))});
  if (!all_tensions) {
    cols.push_back({"SO", equivalent_inhomogeneity(problem(0.0, gamma, 1.0))});
    return cols;
  }
  for (double s0 : tension)
    cols.push_back({"SO sigma0/muR=" + tension_label(s0),
                    equivalent_inhomogeneity(problem(s0, gamma, 1.0))});
  return cols;
}

inline Table modulus_table(const std::vector<double>& c, bool all_tensions) {
  const auto cols = modulus_columns(all_tensions);
  const BulkMaterial m{1.0, cavity_case::nu};
  Table t;
  t.header.push_back("c (1)");
  for (const auto& col : cols) t.header.push_back("mu_ef/mu " + col.label + " (1)");
  for (double x : c) {
    std::vector<double> row{x};
    for (const auto& col : cols) row.push_back(effective_shear_from(col.eq, m, x).mu_ef_ratio);
    t.rows.push_back(row);
  }
  return t;
}

inline Table figure_effective_modulus(int n = 61) { return modulus_table(linspace(0.0, 0.6, n), true); }
inline Table table_effective_modulus() { return modulus_table({0.1, 0.3, 0.5}, false); }

inline const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"fig2", "fig3", "fig4", "fig5", "table1"};
  return ids;
}

// points <= 0 selects the default resolution.
inline Table figure(const std::string& id, int points = 0) {
  if (id == "fig2") return points > 0 ? figure_hoop_stress(points) : figure_hoop_stress();
  if (id == "fig3") return points > 0 ? figure_axial_stress(points) : figure_axial_stress();
  if (id == "fig4") return points > 0 ? figure_size_effect(points) : figure_size_effect();
  if (id == "fig5") return points > 0 ? figure_effective_modulus(points) : figure_effective_modulus();
  if (id == "table1") return table_effective_modulus();
  throw InvalidInput("unknown figure id '" + id + "' (expected fig2, fig3, fig4, fig5 or table1)");
}

}  // namespace surfel
