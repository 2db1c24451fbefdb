#pragma once

#include <cmath>

#include "surfel/sphere_gm.hpp"

namespace surfel {

struct SOCoefficientMatrix {
  double C31 = 0.0, C32 = 0.0, C41 = 0.0, C42 = 0.0;
};

struct SOAuxiliary {
  double E11 = 0.0, E12 = 0.0, E21 = 0.0, E22 = 0.0, F = 0.0;
};

struct CurvatureChange {
  double k_phiphi = 0.0;
  double k_phitheta = 0.0;
  double k_thetatheta = 0.0;
};

struct SurfaceCoupleStress {
  double M_phiphi = 0.0;
  double M_phitheta = 0.0;
  double M_thetatheta = 0.0;
};

// Bending law of the interface. The (chi0, zeta0) placement is the one that
// reproduces gamma = (3 chi0 + 5 zeta0)/R^3 in the closed-form shear jumps.
inline SurfaceCoupleStress couple_stress(const CurvatureChange& k, const SurfaceParams& s) {
  const double a = 2.0 * s.zeta0 + s.chi0;
  return {a * k.k_phiphi + s.chi0 * k.k_thetatheta, 2.0 * s.zeta0 * k.k_phitheta,
          s.chi0 * k.k_phiphi + a * k.k_thetatheta};
}

inline SOCoefficientMatrix so_matrix(const SphereProblem& p) {
  const auto m = detail::sphere_materials(p);
  const DerivedSurface ds = derive_surface(p.surf, p.geom);
  const SurfaceParams& s = p.surf;
  const double R = p.geom.R;
  const double g = ds.gamma;
  const double rl = lame_ratio(m.nuI);  // lambda_I / mu_I
  const double muI = m.muI, laI = m.lambdaI;
  SOCoefficientMatrix C;
  C.C31 = -2.0 * muI + 2.0 / R * (s.lambda0 + s.mu0 - s.sigma0) - 6.0 * g;
  C.C32 = -3.0 * laI - 6.0 / R * (s.lambda0 + s.mu0) * (3.0 * rl + 7.0) -
          6.0 / R * s.sigma0 * (rl + 7.0) + 6.0 * g * (rl - 7.0);
  C.C41 = -muI - 1.0 / R * (3.0 * s.mu0 + s.lambda0 - s.sigma0) + g;
  C.C42 = 8.0 * laI + 7.0 * muI + s.mu0 / R * (19.0 * rl + 35.0) +
          3.0 * s.lambda0 / R * (3.0 * rl + 7.0) - s.sigma0 / R * (rl - 7.0) - g * (rl - 7.0);
  return C;
}

inline SOAuxiliary so_auxiliary(const SphereProblem& p, const SOCoefficientMatrix& C) {
  const auto m = detail::sphere_materials(p);
  const double mu = m.mu, la = m.lambda;
  const double rl = lame_ratio(m.nuI);
  const double q = 9.0 * la + 14.0 * mu;
  SOAuxiliary a;
  a.E11 = 1.0 - ((3.0 * la + 10.0 * mu) * C.C31 + (18.0 * la + 44.0 * mu) * C.C41) / (4.0 * mu * q);
  a.E12 = -((3.0 * la + 10.0 * mu) * C.C32 + (18.0 * la + 44.0 * mu) * C.C42) / (4.0 * mu * q) -
          (5.0 * rl + 7.0);
  a.E21 = 1.0 - ((15.0 * la + 34.0 * mu) * C.C31 + 6.0 * (3.0 * la + 10.0 * mu) * C.C41) /
                    (8.0 * mu * q);
  a.E22 = -3.0 * rl - ((15.0 * la + 34.0 * mu) * C.C32 + 6.0 * (3.0 * la + 10.0 * mu) * C.C42) /
                          (8.0 * mu * q);
  a.F = 15.0 * (la + 2.0 * mu) / q;
  return a;
}

// Deviatoric coefficients A1, A2, D3, D4 in closed form; D1 from the far field.
inline Coeff3D so_shear_part(const SphereProblem& p) {
  const auto m = detail::sphere_materials(p);
  const double mu = m.mu, la = m.lambda;
  const double R = p.geom.R, R3 = R * R * R, R5 = R3 * R * R;
  const SOCoefficientMatrix C = so_matrix(p);
  const SOAuxiliary a = so_auxiliary(p, C);
  const double det = a.E11 * a.E22 - a.E12 * a.E21;
  const double scale = std::abs(a.E11 * a.E22) + std::abs(a.E12 * a.E21);
  if (!(std::abs(det) > 1e-14 * scale) || !std::isfinite(det))
    throw DegenerateSystem("SO closed form: E11 E22 - E12 E21 vanishes for these parameters");
  const double q = 9.0 * la + 14.0 * mu;
  const double a1 = a.F * (a.E22 - a.E12) / det;
  const double a2R2 = a.F * (a.E11 - a.E21) / det;  // A2 R^2 / D1
  const double d3 = -(a1 * ((3.0 * la + 2.0 * mu) * C.C31 + (18.0 * la + 20.0 * mu) * C.C41) * R5 +
                      a2R2 * ((3.0 * la + 2.0 * mu) * C.C32 + (18.0 * la + 20.0 * mu) * C.C42) * R5 +
                      24.0 * mu * (mu + la) * R5) /
                    (8.0 * mu) / q;
  const double d4 = (a1 * (C.C31 + 3.0 * C.C41) * R3 + a2R2 * (C.C32 + 3.0 * C.C42) * R3 +
                     5.0 * mu * R3) /
                    q;
  Coeff3D c;
  c.D1 = p.sigma_d / (2.0 * mu);
  c.A1 = a1 * c.D1;
  c.A2 = a2R2 / (R * R) * c.D1;
  c.D3 = d3 * c.D1;
  c.D4 = d4 * c.D1;
  return c;
}

inline Coeff3D solve_so_shear(const SphereProblem& p) {
  Coeff3D c = so_shear_part(p);
  radial_tension_part(c, p);
  return c;
}

// Shear solution with the tension-only problem subtracted: the deviatoric
// coefficients are untouched and the uniform contraction disappears.
inline Coeff3D residual_subtraction(const SphereProblem& p) {
  Coeff3D full = solve_so_shear(p);
  SphereProblem tension_only = p;
  tension_only.sigma_d = 0.0;
  const Coeff3D t = solve_so_shear(tension_only);
  Coeff3D d;
  d.A0 = full.A0 - t.A0;
  d.A1 = full.A1 - t.A1;
  d.A2 = full.A2 - t.A2;
  d.D0 = full.D0 - t.D0;
  d.D1 = full.D1 - t.D1;
  d.D3 = full.D3 - t.D3;
  d.D4 = full.D4 - t.D4;
  return d;
}

struct TractionJump {
  double rr = 0.0;
  double rt = 0.0;
  double rp = 0.0;
};

// Inside-minus-matrix traction jump for the shear-mode displacement on r.
inline TractionJump jump_closed_form(double Ur, double Ut, const SurfaceParams& s,
                                     const Geometry& g, double r, double t, double ph) {
  const DerivedSurface ds = derive_surface(s, g);
  const double R3 = g.R * g.R * g.R;
  const double r2 = r * r, r4 = r2 * r2;
  const double bend = ds.gamma * R3 / r4 * (2.0 * Ur - Ut);
  const double A = 3.0 * s.lambda0 + 5.0 * s.mu0 + s.sigma0;
  const double B = s.mu0 + s.lambda0 + s.sigma0;
  const double st = std::sin(t);
  TractionJump j;
  j.rp = (2.0 / r2 * (A * Ut - 2.0 * B * Ur) - 2.0 * bend) * st * std::sin(2.0 * ph);
  j.rt = (1.0 / r2 * (-A * Ut + 2.0 * B * Ur) + bend) * std::sin(2.0 * t) * std::cos(2.0 * ph);
  j.rr = -2.0 * s.sigma0 / r +
         (1.0 / r2 *
              (6.0 * (s.lambda0 + s.mu0 + s.sigma0) * Ut -
               4.0 * (s.mu0 + s.lambda0 + 2.0 * s.sigma0) * Ur) -
          6.0 * bend) *
             st * st * std::cos(2.0 * ph);
  return j;
}

enum class InterfaceModel { classical, gm, so };

// Full sphere response (shear + hydrostatic superposed) for the given model.
inline Coeff3D solve_sphere(const SphereProblem& p, InterfaceModel model) {
  SphereProblem q = p;
  if (model == InterfaceModel::classical) q.surf = SurfaceParams{};
  Coeff3D c = model == InterfaceModel::so ? solve_so_shear(q) : solve_gm_shear(q);
  if (q.sigma_h != 0.0) {
    const HydroCoeff h = solve_hydro_3d(q, q.sigma_h);
    const HydroCoeff h0 = solve_hydro_3d(q, 0.0);  // tension part already in c
    c.A0 += -(h.F1 - h0.F1);
    c.D0 += -(h.F3 - h0.F3);
    c.E += h.F2;
  }
  return c;
}

}  // namespace surfel
