// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "output.hpp"
#include "scenario.hpp"
#include "surfel/surfel.hpp"

using namespace surfel;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string num(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.3e", v);
  return b;
}

double rel(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

std::vector<std::vector<double>> parse_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

// 1. Table 1 through the command layer.
Outcome table1() {
  std::ostringstream out, err;
  if (cli::run_figure("table1", "", 0, out, err) != cli::ok) return {false, "table1 failed: " + err.str()};
  const auto rows = parse_csv(out.str());
  const double expect[3][4] = {{0.1, 0.825, 0.838878, 0.838930},
                               {0.3, 0.550, 0.580938, 0.581057},
                               {0.5, 0.34375, 0.383570, 0.383725}};
  double worst = 0.0;
  if (rows.size() != 3) return {false, "expected 3 rows"};
  for (int i = 0; i < 3; ++i)
    for (int j = 1; j < 4; ++j) worst = std::max(worst, std::abs(rows[i][j] - expect[i][j]));
  // bare cavity at c = 0.1, nu = 0.3: Maxwell with mu_eq = 0, mu* = 1.1
  const double analytic = std::abs(rows[0][1] - (1.1 - 0.1 * 1.1) / (1.1 + 0.1));
  return {worst < 5e-7 && analytic < 1e-15,
          "max |diff| " + num(worst) + " over 9 values, classic c=0.1 vs analytic " + num(analytic)};
}

// 2. Closed forms against direct solves on random draws.
Outcome closed_vs_oracle() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(0, 1);
  double worst_res = 0.0, worst_gm = 0.0;
  int cavities = 0;
  for (int k = 0; k < 10000; ++k) {
    SphereProblem p;
    p.matrix = {1.0, -0.5 + 0.95 * u(rng)};
    const bool cavity = k % 10 == 0;
    cavities += cavity;
    p.inhom = {cavity ? 0.0 : std::pow(10.0, -3 + 6 * u(rng)), -0.5 + 0.95 * u(rng)};
    p.surf = {0.1 * u(rng), 0.1 * u(rng), 0.1 * u(rng), 0.0, 0.0};
    SphereProblem q = p;
    q.surf = with_gamma(q.surf, 0.1 * u(rng), 1.0);
    q.sigma_d = p.sigma_d = 2.0 * (u(rng) - 0.5);
    worst_res = std::max(worst_res, relative_residual<4>(so_shear_system(q, so_matrix(q)),
                                                         pack_shear(so_shear_part(q), 1.0)));
    worst_gm = std::max(worst_gm, coeff_distance(solve_so_shear(p), linear_solve_oracle_gm(p).c, 1.0));
  }
  return {worst_res < 1e-10 && worst_gm < 1e-10,
          "10000 draws (" + std::to_string(cavities) + " cavities): interface-system residual " +
              num(worst_res) + ", bending-free vs membrane solve " + num(worst_gm)};
}

// 3. FD-verified jump residuals.
Outcome jump_residuals() {
  namespace cc = cavity_case;
  double so = 0.0, gm = 0.0, disk = 0.0, classical = 0.0;
  for (double s0 : cc::tension) {
    const SphereProblem p = cc::problem(s0, cc::gamma);
    so = std::max(so, jump_residual_sphere(solve_sphere(p, InterfaceModel::so), p, true).worst());
    const SphereProblem g = cc::problem(s0, 0.0);
    gm = std::max(gm, jump_residual_sphere(solve_sphere(g, InterfaceModel::gm), g, false).worst());
  }
  DiskProblem d;
  d.inhom = {0.0, 0.3};
  d.surf = with_gamma({cc::mu0, cc::lambda0, cc::tension[2], 0, 0}, cc::gamma, 1.0);
  d.load = FarField2D::simple_shear(cc::shear_load);
  disk = jump_residual_2d(plane_field(solve_general_2d(d), d), d.surf).worst();
  SphereProblem bare = cc::problem(0.0, 0.0);
  bare.surf = {};
  classical = jump_residual_sphere(solve_sphere(bare, InterfaceModel::classical), bare, false).worst();
  bare.inhom = {2.0, 0.2};
  classical = std::max(classical,
                       jump_residual_sphere(solve_sphere(bare, InterfaceModel::classical), bare, false).worst());
  DiskProblem dc = d;
  dc.surf = {};
  dc.inhom = {2.0, 0.2};
  classical = std::max(classical, jump_residual_2d(plane_field(solve_general_2d(dc), dc), dc.surf).worst());
  return {so < 1e-7 && gm < 1e-7 && disk < 1e-7 && classical < 1e-12,
          "SO cavity " + num(so) + ", GM cavity " + num(gm) + ", disk " + num(disk) + ", classical " +
              num(classical)};
}

// 4. Limits.
Outcome limits() {
  // vanishing surface -> perfect bond, linearly in the surface scale
  SphereProblem p = cavity_case::problem(0.0097983, cavity_case::gamma);
  p.inhom = {2.0, 0.2};
  const Coeff3D bonded = solve_sphere(p, InterfaceModel::classical);
  // distance / eps settles to a constant: first-order recovery
  std::vector<double> dist;
  for (double eps : {1e-2, 1e-4, 1e-6, 1e-8}) {
    SphereProblem q = p;
    q.surf = {p.surf.mu0 * eps, p.surf.lambda0 * eps, p.surf.sigma0 * eps, p.surf.chi0 * eps, p.surf.zeta0 * eps};
    dist.push_back(coeff_distance(solve_sphere(q, InterfaceModel::so), bonded, 1.0) / eps);
  }
  const double d_last = dist.back() * 1e-8;
  const double drift = rel(dist[3], dist[2]);
  const bool shrinking = drift < 1e-3;
  SphereProblem z = p;
  z.surf = {};
  const double exact_zero = coeff_distance(solve_sphere(z, InterfaceModel::so), bonded, 1.0);

  // homogeneous phases -> far field
  double homog = 0.0;
  {
    SphereProblem h = cavity_case::problem(0.0, 0.0, 0.3);
    h.inhom = h.matrix;
    h.surf = {};
    Coeff3D far;
    far.D1 = far.A1 = 0.3 / 2.0;  // same uniform field on both sides
    const Coeff3D c = solve_sphere(h, InterfaceModel::so);
    DiskProblem dp;
    dp.inhom = dp.matrix;
    dp.load = {0.3, -0.2, 0.1};
    const Coeff2D c2 = solve_general_2d(dp);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0, 1);
    for (int k = 0; k < 1000; ++k) {
      const double r = 0.05 + 4 * u(rng), t = std::numbers::pi * u(rng), ph = 2 * std::numbers::pi * u(rng);
      const SphVec a = displacement_3d(c, h, r, t, ph), b = displacement_3d(far, h, r, t, ph);
      const double sc = far.D1 * r;
      homog = std::max({homog, std::abs(a.r - b.r) / sc, std::abs(a.t - b.t) / sc, std::abs(a.p - b.p) / sc});
      const PolarVec v = displacement_2d(c2, dp, r, 2 * t);
      const cplx w = far_field_displacement_2d(dp, r, 2 * t);
      homog = std::max(homog, std::hypot(v.ur - w.real(), v.ut - w.imag()) / std::abs(w));
    }
  }

  // homogeneous pressure -> F1 = F2, F3 = 0
  double hydro = 0.0;
  for (double nu : {0.0, 0.3, 0.45}) {
    DiskProblem dp;
    dp.matrix = dp.inhom = {1.0, nu};
    const HydroCoeff h2 = solve_hydro_2d(dp, 0.7);
    SphereProblem sp;
    sp.matrix = sp.inhom = {1.0, nu};
    const HydroCoeff h3 = solve_hydro_3d(sp, 0.7);
    hydro = std::max({hydro, rel(h2.F1, h2.F2), std::abs(h2.F3) / std::abs(h2.F2), rel(h3.F1, h3.F2),
                      std::abs(h3.F3) / std::abs(h3.F2)});
  }
  const bool ok = shrinking && exact_zero < 1e-12 && homog < 1e-12 && hydro < 1e-14;
  return {ok, "surface scale 1e-8 -> distance to bonded " + num(d_last) + " (linear, slope drift " + num(drift) + "; zero surface: " +
                  num(exact_zero) + "), homogeneous vs far field " + num(homog) +
                  ", hydrostatic F1/F2/F3 identities " + num(hydro)};
}

// 5(a). Hoop stress with tension: compressive, max at the pole, min at the equator, ordered.
Outcome fig2() {
  const Table t = figure("fig2");
  bool ok = true;
  for (std::size_t col = 2; col <= 3; ++col) {
    double lo = 1e300, hi = -1e300;
    for (const auto& row : t.rows) {
      ok = ok && row[col] < 0.0;
      lo = std::min(lo, row[col]);
      hi = std::max(hi, row[col]);
    }
    ok = ok && t.rows.front()[col] == hi && t.rows.back()[col] == lo;
  }
  for (const auto& row : t.rows) ok = ok && std::abs(row[3]) > std::abs(row[2]);
  return {ok, "sigma0 > 0 curves at theta=0: " + num(t.rows.front()[2]) + ", " + num(t.rows.front()[3]) +
                  "; at pi/2: " + num(t.rows.back()[2]) + ", " + num(t.rows.back()[3])};
}

// 5(b). sigma_zz with tension: max at theta = 0, min at pi/2.
Outcome fig3() {
  const Table t = figure("fig3");
  bool ok = true;
  for (std::size_t col = 2; col <= 3; ++col) {
    double lo = 1e300, hi = -1e300;
    for (const auto& row : t.rows) {
      lo = std::min(lo, row[col]);
      hi = std::max(hi, row[col]);
    }
    ok = ok && t.rows.front()[col] == hi && t.rows.back()[col] == lo;
  }
  return {ok, "sigma0 > 0 curves: extremes at the interval ends (" + num(t.rows.front()[3]) + " / " +
                  num(t.rows.back()[3]) + ")"};
}

// 5(c). Deviation from the classical curve shrinks with the radius.
Outcome fig4() {
  const Table t = figure("fig4");
  double dev[3] = {0, 0, 0};
  for (const auto& row : t.rows)
    for (int k = 0; k < 3; ++k) dev[k] = std::max(dev[k], std::abs(row[1 + k] - row[4]));
  return {dev[0] > dev[1] && dev[1] > dev[2],
          "max deviation at R = 5, 10, 20 nm: " + num(dev[0]) + ", " + num(dev[1]) + ", " + num(dev[2])};
}

// 5(d). Effective modulus: surfaces stiffen; tension barely matters.
Outcome fig5() {
  const Table t = figure("fig5");
  bool above = true;
  double spread = 0.0, spread_c = 0.0, c_ok = 0.0;
  for (const auto& row : t.rows) {
    if (row[0] <= 0.0) continue;
    for (std::size_t k = 2; k < row.size(); ++k) above = above && row[k] > row[1];
    const double s = std::max({row[3], row[4], row[5]}) - std::min({row[3], row[4], row[5]});
    if (s > spread) {
      spread = s;
      spread_c = row[0];
    }
    if (s < 1e-3) c_ok = std::max(c_ok, row[0]);
  }
  return {above && spread < 1e-3,
          std::string("GM/SO above classical: ") + (above ? "yes" : "no") + "; largest spread over sigma0 " +
              num(spread) + " at c = " + num(spread_c) + " (spread < 1e-3 up to c = " + num(c_ok) + ")"};
}

// 6. Equilibrium of every emitted stress field.
Outcome equilibrium() {
  namespace cc = cavity_case;
  double worst = 0.0;
  int fields = 0;
  auto sphere = [&](const SphereProblem& p, InterfaceModel m) {
    worst = std::max(worst, equilibrium_residual_3d(space_field(solve_sphere(p, m), p), 1000, p.inhom.mu == 0.0).worst);
    ++fields;
  };
  auto disk = [&](const DiskProblem& p) {
    worst = std::max(worst, equilibrium_residual_2d(plane_field(solve_general_2d(p), p), 1000, p.inhom.mu == 0.0).worst);
    ++fields;
  };
  for (double s0 : cc::tension) sphere(cc::problem(s0, cc::gamma), InterfaceModel::so);
  for (double R : cc::radii_nm) sphere(cc::sized_problem(R), InterfaceModel::so);
  sphere(cc::sized_problem(5.0), InterfaceModel::classical);
  SphereProblem gen;
  gen.inhom = {2.0, 0.2};
  gen.surf = {0.03, 0.05, 0.01, 1e-4, 2e-4};
  gen.sigma_d = 0.3;
  gen.sigma_h = 0.1;
  sphere(gen, InterfaceModel::so);
  for (const char* f : {"cavity_so_5nm", "cavity_gm_normalized", "inhomogeneity_gm"}) {
    const cli::Scenario s = cli::parse_scenario_file(std::string(SURFEL_SCENARIOS) + "/" + f + ".yaml");
    sphere(s.sphere(), s.model);
  }
  for (const char* f : {"disk_hydrostatic", "disk_general_so"})
    disk(cli::parse_scenario_file(std::string(SURFEL_SCENARIOS) + "/" + f + ".yaml").disk());
  DiskProblem d;
  d.inhom = {0.5, 0.2};
  d.surf = {0.05, 0.08, 0.01, 0.001, 0.002};
  d.load = {0.2, -0.3, 0.1};
  disk(d);
  return {worst < 1e-6, std::to_string(fields) + " fields x 1000 points, worst " + num(worst)};
}

// 7. Vector partial solutions against the component forms.
Outcome representation() {
  std::vector<SphereProblem> ps;
  ps.push_back(cavity_case::problem(0.0097983, cavity_case::gamma));
  SphereProblem gen;
  gen.inhom = {2.5, 0.2};
  gen.surf = {0.04, 0.06, 0.01, 0.0, 0.0};
  gen.sigma_d = 0.3;
  ps.push_back(gen);
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0, 1);
  double worst = 0.0;
  for (const SphereProblem& p : ps) {
    const Coeff3D c = solve_sphere(p, p.surf.membrane_only() ? InterfaceModel::gm : InterfaceModel::so);
    const bool cavity = p.inhom.mu == 0.0;
    for (int k = 0; k < 1000; ++k) {
      const double r = (!cavity && k % 2) ? 0.02 + 0.97 * u(rng) : 1.0 + 4 * u(rng);
      const double t = std::acos(1 - 2 * u(rng)), ph = 2 * std::numbers::pi * u(rng);
      const Side sd = side_of(r, 1.0);
      const SphVec a = displacement_3d(c, p, r, t, ph, sd), b = displacement_from_partials(c, p, r, t, ph, sd);
      const double sc = std::max({std::abs(a.r), std::abs(a.t), std::abs(a.p)});
      worst = std::max(worst, std::max({std::abs(a.r - b.r), std::abs(a.t - b.t), std::abs(a.p - b.p)}) / sc);
    }
  }
  return {worst < 1e-12, "2 scenarios x 1000 points, worst " + num(worst)};
}

// 8. Byte-identical CSV across runs.
Outcome determinism() {
  bool same = true;
  for (const std::string& id : figure_ids()) same = same && cli::to_csv(figure(id)) == cli::to_csv(figure(id));
  const cli::Scenario s = cli::parse_scenario_file(std::string(SURFEL_SCENARIOS) + "/inhomogeneity_gm.yaml");
  same = same && cli::to_csv(cli::field_grid(s)) == cli::to_csv(cli::field_grid(s));
  return {same, "all figure ids and a field grid generated twice"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 table1 reproduction", table1},
      {"2 closed form vs direct solve", closed_vs_oracle},
      {"3 interface jump residuals", jump_residuals},
      {"4 limit recovery", limits},
      {"5(a) hoop stress along the cavity", fig2},
      {"5(b) axial stress along the cavity", fig3},
      {"5(c) size effect", fig4},
      {"5(d) effective shear modulus", fig5},
      {"6 equilibrium", equilibrium},
      {"7 representation equivalence", representation},
      {"8 determinism", determinism},
  };
  const auto t0 = std::chrono::steady_clock::now();
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s  %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d of %zu criteria passed in %.1f s\n", int(criteria.size()) - failed, criteria.size(), secs);
  return failed ? 1 : 0;
}
