#pragma once

#include <string>
#include <vector>

#include "surfel/sphere_so.hpp"
#include "surfel/verify.hpp"

namespace surfel {

struct Check {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool pass() const { return value < bound; }
};

struct CheckReport {
  std::string scenario;
  std::vector<Check> checks;
  bool pass() const {
    for (const Check& c : checks)
      if (!c.pass()) return false;
    return true;
  }
};

inline bool is_classical(const SurfaceParams& s) {
  return s.mu0 == 0.0 && s.lambda0 == 0.0 && s.sigma0 == 0.0 && s.membrane_only();
}

// Relative gap between the two sides of r = R.
inline double continuity_gap_2d(const PlaneField& f, int n = 64) {
  double gap = 0.0, scale = 0.0;
  for (int j = 0; j < n; ++j) {
    const double t = 2.0 * std::numbers::pi * j / n;
    const PolarVec a = f.u(f.R, t, Side::inhomogeneity), b = f.u(f.R, t, Side::matrix);
    gap = std::max({gap, std::abs(a.ur - b.ur), std::abs(a.ut - b.ut)});
    scale = std::max({scale, std::abs(a.ur), std::abs(a.ut), std::abs(b.ur), std::abs(b.ut)});
  }
  return scale > 0.0 ? gap / scale : gap;
}

inline double continuity_gap_3d(const SpaceField& f, int n_theta = 24, int n_phi = 48) {
  double gap = 0.0, scale = 0.0;
  for (int i = 0; i < n_theta; ++i) {
    const double t = std::numbers::pi * (i + 0.5) / n_theta;
    for (int j = 0; j < n_phi; ++j) {
      const double p = 2.0 * std::numbers::pi * j / n_phi;
      const SphVec a = f.u(f.R, t, p, Side::inhomogeneity), b = f.u(f.R, t, p, Side::matrix);
      gap = std::max({gap, std::abs(a.r - b.r), std::abs(a.t - b.t), std::abs(a.p - b.p)});
      scale = std::max({scale, std::abs(a.r), std::abs(a.t), std::abs(a.p), std::abs(b.r),
                        std::abs(b.t), std::abs(b.p)});
    }
  }
  return scale > 0.0 ? gap / scale : gap;
}

// Displacement rebuilt from the complex potentials against the closed form.
inline double potential_gap_2d(const Coeff2D& c, const DiskProblem& p, int n = 200) {
  const auto mI = derive_bulk(p.inhom), m = derive_bulk(p.matrix);
  std::mt19937_64 rng(2024);
  double gap = 0.0;
  for (int k = 0; k < n; ++k) {
    const double r = sample_radius(rng, p.geom.R, 1e-3);
    const double t = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
    const Side sd = side_of(r, p.geom.R);
    const bool in = sd == Side::inhomogeneity;
    if (in && p.inhom.mu == 0.0) continue;  // potentials of a cavity interior are void
    const PolarVec a = displacement_2d(c, p, r, t, sd);
    const PolarVec b = displacement_from_potentials(potentials_2d(c, p, sd),
                                                    in ? p.inhom.mu : p.matrix.mu,
                                                    in ? mI.kappa : m.kappa, std::polar(r, t));
    const double sc = std::max({std::abs(a.ur), std::abs(a.ut), 1e-300});
    gap = std::max(gap, std::max(std::abs(a.ur - b.ur), std::abs(a.ut - b.ut)) / sc);
  }
  return gap;
}

inline CheckReport check_disk(const std::string& name, const DiskProblem& p, const Coeff2D& c) {
  CheckReport rep{name, {}};
  const PlaneField f = plane_field(c, p);
  const bool classical = is_classical(p.surf);
  rep.checks.push_back({"interface jump residual", jump_residual_2d(f, p.surf).worst(),
                        classical ? 1e-12 : 1e-8});
  rep.checks.push_back({"displacement continuity", continuity_gap_2d(f), 1e-12});
  rep.checks.push_back({"equilibrium", equilibrium_residual_2d(f, 1000, p.inhom.mu == 0.0).worst,
                        1e-6});
  rep.checks.push_back({"potentials vs displacement", potential_gap_2d(c, p), 1e-10});
  return rep;
}

inline CheckReport check_sphere(const std::string& name, const SphereProblem& p,
                                InterfaceModel model, const Coeff3D& c) {
  CheckReport rep{name, {}};
  SphereProblem q = p;
  if (model == InterfaceModel::classical) q.surf = SurfaceParams{};
  const SpaceField f = space_field(c, q);
  const bool classical = is_classical(q.surf);
  const bool bending = model == InterfaceModel::so;
  rep.checks.push_back({"interface jump residual", jump_residual_sphere(c, q, bending).worst(),
                        classical ? 1e-12 : 1e-7});
  rep.checks.push_back({"displacement continuity", continuity_gap_3d(f), 1e-12});
  rep.checks.push_back({"equilibrium", equilibrium_residual_3d(f, 1000, q.inhom.mu == 0.0).worst,
                        1e-6});
  // Shear coefficients from a direct solve of the interface system; the radial
  // pair from its own 2x2 system. The hydrostatic share of (A0, D0, E) is
  // taken out first so the comparison is against the tension-only solve.
  OracleSolve o = bending ? linear_solve_oracle_so(q, so_matrix(q)) : linear_solve_oracle_gm(q);
  if (bending) {
    const OracleSolve radial = linear_solve_oracle_gm(q);
    o.c.A0 = radial.c.A0;
    o.c.D0 = radial.c.D0;
  }
  Coeff3D cand = c;
  if (q.sigma_h != 0.0) {
    const HydroCoeff h = solve_hydro_3d(q, q.sigma_h), h0 = solve_hydro_3d(q, 0.0);
    cand.A0 += h.F1 - h0.F1;
    cand.D0 += h.F3 - h0.F3;
    cand.E -= h.F2;
  }
  double d = coeff_distance(cand, o.c, q.geom.R);
  d = std::max(d, std::abs(cand.E));
  rep.checks.push_back({"coefficients vs direct solve", d, 1e-10});
  return rep;
}

}  // namespace surfel
