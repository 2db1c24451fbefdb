#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "surfel/disk2d.hpp"
#include "surfel/linalg.hpp"
#include "surfel/materials.hpp"

namespace surfel {

struct SphereProblem {
  BulkMaterial matrix;
  BulkMaterial inhom;
  SurfaceParams surf;
  Geometry geom;
  double sigma_d = 0.0;  // simple shear s11 = -s22
  double sigma_h = 0.0;  // hydrostatic
};

// Inside:  u_r = -r A0 + U_r(r) sin^2(t) cos(2p), u_t = U_t sin(t)cos(t)cos(2p),
//          u_p = -U_t sin(t) sin(2p), with (A1, A2) profiles.
// Matrix: same with -D0/r^2 (+ E r for a hydrostatic far field) and (D1, D3, D4) profiles.
struct Coeff3D {
  double A0 = 0.0;
  double A1 = 0.0;
  double A2 = 0.0;
  double D0 = 0.0;
  double D1 = 0.0;
  double D3 = 0.0;
  double D4 = 0.0;
  double E = 0.0;  // uniform far-field radial strain, nonzero only under hydrostatic load
};

struct SphVec {
  double r = 0.0;
  double t = 0.0;
  double p = 0.0;
};

struct SphStress {
  double rr = 0.0, tt = 0.0, pp = 0.0;
  double rt = 0.0, rp = 0.0, tp = 0.0;
};

struct CartStress {
  double xx = 0.0, yy = 0.0, zz = 0.0;
  double xy = 0.0, xz = 0.0, yz = 0.0;
};

struct RadialProfile {
  double a = 0.0, da = 0.0;    // spherically symmetric radial displacement
  double Ur = 0.0, dUr = 0.0;
  double Ut = 0.0, dUt = 0.0;
};

namespace detail {

struct SphereMaterials {
  double mu, nu, lambda, K3;
  double muI, nuI, lambdaI, K3I;
};

inline SphereMaterials sphere_materials(const SphereProblem& p) {
  validate(p.matrix, "matrix");
  validate(p.inhom, "inhomogeneity");
  if (p.matrix.mu <= 0.0) throw InvalidInput("matrix.mu must be > 0");
  const DerivedBulk m = derive_bulk(p.matrix);
  const DerivedBulk i = derive_bulk(p.inhom);
  return {p.matrix.mu, p.matrix.nu, m.lambda, m.K3,
          p.inhom.mu,  p.inhom.nu,  lame_ratio(p.inhom.nu) * p.inhom.mu, i.K3};
}

}  // namespace detail

inline RadialProfile radial_profile(const Coeff3D& c, const SphereProblem& p, double r, Side side) {
  RadialProfile f;
  if (side == Side::inhomogeneity) {
    const double nI = p.inhom.nu;
    const double q = 6.0 * nI / (1.0 - 2.0 * nI);
    const double w = (7.0 - 4.0 * nI) / (1.0 - 2.0 * nI);
    f.a = -r * c.A0;
    f.da = -c.A0;
    f.Ur = c.A1 * r - q * c.A2 * r * r * r;
    f.dUr = c.A1 - 3.0 * q * c.A2 * r * r;
    f.Ut = c.A1 * r - w * c.A2 * r * r * r;
    f.dUt = c.A1 - 3.0 * w * c.A2 * r * r;
  } else {
    const double n = p.matrix.nu;
    const double v = (5.0 - 4.0 * n) / (1.0 - 2.0 * n);
    const double r2 = r * r, r3 = r2 * r, r4 = r2 * r2, r5 = r4 * r;
    f.a = -c.D0 / r2 + c.E * r;
    f.da = 2.0 * c.D0 / r3 + c.E;
    f.Ur = c.D1 * r + 3.0 * c.D3 / r4 + v * c.D4 / r2;
    f.dUr = c.D1 - 12.0 * c.D3 / r5 - 2.0 * v * c.D4 / r3;
    f.Ut = c.D1 * r - 2.0 * c.D3 / r4 + 2.0 * c.D4 / r2;
    f.dUt = c.D1 + 8.0 * c.D3 / r5 - 4.0 * c.D4 / r3;
  }
  return f;
}

inline SphVec displacement_3d(const Coeff3D& c, const SphereProblem& p, double r, double t,
                              double ph, Side side) {
  const RadialProfile f = radial_profile(c, p, r, side);
  const double s = std::sin(t), co = std::cos(t);
  const double c2 = std::cos(2.0 * ph), s2 = std::sin(2.0 * ph);
  return {f.a + f.Ur * s * s * c2, f.Ut * s * co * c2, -f.Ut * s * s2};
}

inline SphVec displacement_3d(const Coeff3D& c, const SphereProblem& p, double r, double t,
                              double ph) {
  return displacement_3d(c, p, r, t, ph, side_of(r, p.geom.R));
}

// Strains differentiated analytically from the fixed angular structure, then Hooke's law.
inline SphStress stress_3d(const Coeff3D& c, const SphereProblem& p, double r, double t, double ph,
                           Side side) {
  const auto m = detail::sphere_materials(p);
  const double mu = side == Side::inhomogeneity ? m.muI : m.mu;
  const double lam = side == Side::inhomogeneity ? m.lambdaI : m.lambda;
  const RadialProfile f = radial_profile(c, p, r, side);
  const double s = std::sin(t), co = std::cos(t);
  const double c2 = std::cos(2.0 * ph), s2 = std::sin(2.0 * ph);
  const double ss = s * s;

  const double err = f.da + f.dUr * ss * c2;
  const double ett = (f.Ut * (co * co - ss) * c2 + f.a + f.Ur * ss * c2) / r;
  const double epp = (-2.0 * f.Ut * c2 + f.a + f.Ur * ss * c2 + f.Ut * co * co * c2) / r;
  const double ert = 0.5 * s * co * c2 * (2.0 * f.Ur / r + f.dUt - f.Ut / r);
  const double erp = 0.5 * s * s2 * (-2.0 * f.Ur / r - f.dUt + f.Ut / r);
  const double etp = -f.Ut * co * s2 / r;
  const double tr = err + ett + epp;
  return {lam * tr + 2.0 * mu * err, lam * tr + 2.0 * mu * ett, lam * tr + 2.0 * mu * epp,
          2.0 * mu * ert,            2.0 * mu * erp,            2.0 * mu * etp};
}

inline SphStress stress_3d(const Coeff3D& c, const SphereProblem& p, double r, double t,
                           double ph) {
  return stress_3d(c, p, r, t, ph, side_of(r, p.geom.R));
}

// Columns of Q are e_r, e_theta, e_phi in Cartesian components.
inline std::array<std::array<double, 3>, 3> spherical_basis(double t, double ph) {
  const double st = std::sin(t), ct = std::cos(t), sp = std::sin(ph), cp = std::cos(ph);
  return {{{st * cp, ct * cp, -sp}, {st * sp, ct * sp, cp}, {ct, -st, 0.0}}};
}

inline CartStress spherical_to_cartesian_stress(const SphStress& s, double t, double ph) {
  const auto Q = spherical_basis(t, ph);
  const double S[3][3] = {{s.rr, s.rt, s.rp}, {s.rt, s.tt, s.tp}, {s.rp, s.tp, s.pp}};
  double C[3][3] = {};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) acc += Q[i][k] * S[k][l] * Q[j][l];
      C[i][j] = acc;
    }
  return {C[0][0], C[1][1], C[2][2], C[0][1], C[0][2], C[1][2]};
}

inline std::array<double, 3> spherical_to_cartesian_vector(const SphVec& v, double t, double ph) {
  const auto Q = spherical_basis(t, ph);
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) out[i] = Q[i][0] * v.r + Q[i][1] * v.t + Q[i][2] * v.p;
  return out;
}

// ---- vector partial solutions of the Lame equation ----

using CVec3 = std::array<cplx, 3>;  // (e_r, e_theta, e_phi) components

enum class Partial { u00_3, u22_1, u22_3, U00_1, U22_1, U22_3 };

inline Partial partial_from_label(const std::string& s) {
  if (s == "u00_3") return Partial::u00_3;
  if (s == "u22_1") return Partial::u22_1;
  if (s == "u22_3") return Partial::u22_3;
  if (s == "U00_1") return Partial::U00_1;
  if (s == "U22_1") return Partial::U22_1;
  if (s == "U22_3") return Partial::U22_3;
  throw InvalidInput("unknown partial solution label '" + s + "'");
}

// S^(1)_22 and S^(3)_22 with chi_2^2 = P_2^2(cos t) e^{2ip} = 3 sin^2 t e^{2ip}.
inline CVec3 S22_1(double t, double ph) {
  const cplx e = std::polar(1.0, 2.0 * ph);
  const double s = std::sin(t), c = std::cos(t);
  return {0.0, 6.0 * s * c * e, cplx(0.0, 6.0) * s * e};
}

inline CVec3 S22_3(double t, double ph) {
  const cplx e = std::polar(1.0, 2.0 * ph);
  const double s = std::sin(t);
  return {3.0 * s * s * e, 0.0, 0.0};
}

inline CVec3 combine(cplx a, const CVec3& x, cplx b, const CVec3& y) {
  return {a * x[0] + b * y[0], a * x[1] + b * y[1], a * x[2] + b * y[2]};
}

inline CVec3 eval_partial_solution(Partial which, double nu, double r, double t, double ph) {
  switch (which) {
    case Partial::u00_3:
      return {-2.0 * (1.0 - 2.0 * nu) * r / 3.0, 0.0, 0.0};
    case Partial::u22_1:
      return combine(r / 24.0, S22_1(t, ph), r / 12.0, S22_3(t, ph));
    case Partial::u22_3: {
      const double k = r * r * r / 24.0;
      return combine(k * (7.0 - 4.0 * nu) / 21.0, S22_1(t, ph), k * 4.0 * nu / 7.0, S22_3(t, ph));
    }
    case Partial::U00_1:
      return {-1.0 / (r * r), 0.0, 0.0};
    case Partial::U22_1: {
      const double k = 1.0 / (r * r * r * r);
      return combine(k, S22_1(t, ph), -3.0 * k, S22_3(t, ph));
    }
    case Partial::U22_3: {
      const double k = 1.0 / (3.0 * r * r);
      return combine(k * (1.0 - 2.0 * nu), S22_1(t, ph), k * (5.0 - 4.0 * nu), S22_3(t, ph));
    }
  }
  return {};
}

inline CVec3 eval_partial_solution(const std::string& label, double nu, double r, double t,
                                   double ph) {
  return eval_partial_solution(partial_from_label(label), nu, r, t, ph);
}

// Shear field assembled from the vector partial solutions (no hydrostatic term).
inline SphVec displacement_from_partials(const Coeff3D& c, const SphereProblem& p, double r,
                                         double t, double ph, Side side) {
  auto re = [](const CVec3& v) { return SphVec{v[0].real(), v[1].real(), v[2].real()}; };
  auto add = [](SphVec& acc, double k, const SphVec& v) {
    acc.r += k * v.r;
    acc.t += k * v.t;
    acc.p += k * v.p;
  };
  SphVec u;
  if (side == Side::inhomogeneity) {
    const double nI = p.inhom.nu;
    add(u, 1.5 / (1.0 - 2.0 * nI) * c.A0, re(eval_partial_solution(Partial::u00_3, nI, r, t, ph)));
    add(u, 4.0 * c.A1, re(eval_partial_solution(Partial::u22_1, nI, r, t, ph)));
    add(u, -84.0 / (1.0 - 2.0 * nI) * c.A2,
        re(eval_partial_solution(Partial::u22_3, nI, r, t, ph)));
  } else {
    const double n = p.matrix.nu;
    // 2 sigma_d / mu = 4 D1
    add(u, 4.0 * c.D1, re(eval_partial_solution(Partial::u22_1, n, r, t, ph)));
    add(u, c.D0, re(eval_partial_solution(Partial::U00_1, n, r, t, ph)));
    add(u, -c.D3 / 3.0, re(eval_partial_solution(Partial::U22_1, n, r, t, ph)));
    add(u, c.D4 / (1.0 - 2.0 * n), re(eval_partial_solution(Partial::U22_3, n, r, t, ph)));
  }
  return u;
}

// ---- coefficient systems ----

// Unknowns scaled to common units: x = (A1, A2 R^2, D3 / R^5, D4 / R^3).
inline LinearSystem<4> gm_shear_system(const SphereProblem& p) {
  const auto m = detail::sphere_materials(p);
  const SurfaceParams& s = p.surf;
  const double R = p.geom.R;
  const double mu = m.mu, n = m.nu, nI = m.nuI;
  const double D1 = p.sigma_d / (2.0 * mu);
  const double w = (7.0 - 4.0 * nI) / (1.0 - 2.0 * nI);
  const double q = 6.0 * nI / (1.0 - 2.0 * nI);
  const double v5 = (5.0 - 4.0 * n) / (1.0 - 2.0 * n);
  const double v1 = (1.0 + n) / (1.0 - 2.0 * n);
  const double vm5 = (n - 5.0) / (1.0 - 2.0 * n);
  const double w7 = (7.0 + 2.0 * nI) / (1.0 - 2.0 * nI);
  const double q3 = 3.0 * nI / (1.0 - 2.0 * nI);
  const double mr = m.muI / mu;
  // f1 = fa (x1 - w x2) + fb (x1 - q x2), f2 = fc (x1 - w x2) + fd (x1 - q x2)
  const double fa = ((s.mu0 - s.sigma0) - 3.0 * (s.lambda0 + 2.0 * s.mu0)) / (6.0 * mu * R);
  const double fb = (s.lambda0 + s.mu0 + s.sigma0) / (3.0 * mu * R);
  const double fc = (s.lambda0 + s.mu0 + s.sigma0) / (mu * R);
  const double fd = -2.0 * (s.lambda0 + s.mu0 + 2.0 * s.sigma0) / (3.0 * mu * R);

  LinearSystem<4> sys;
  sys.M << 1.0, -w, 2.0, -2.0,
           1.0, -q, -3.0, -v5,
           mr - 6.0 * (fa + fb), -mr * w7 + 6.0 * (fa * w + fb * q), -8.0, -2.0 * v1,
           mr - 3.0 * (fc + fd), mr * q3 + 3.0 * (fc * w + fd * q), 12.0, -2.0 * vm5;
  sys.b << D1, D1, D1, D1;
  return sys;
}

// Spherically symmetric pair, unknowns (A0, D0 / R^3).
inline LinearSystem<2> gm_radial_system(const SphereProblem& p) {
  const auto m = detail::sphere_materials(p);
  const DerivedSurface ds = derive_surface(p.surf, p.geom);
  const double R = p.geom.R;
  const double nI = m.nuI;
  LinearSystem<2> sys;
  sys.M << -1.0, 1.0,
           m.muI / m.mu * (1.0 + nI) / (1.0 - 2.0 * nI) + ds.eta0 / m.mu, 2.0;
  sys.b << 0.0, p.surf.sigma0 / (m.mu * R);
  return sys;
}

inline void unpack_shear(Coeff3D& c, const Eigen::Vector4d& x, double R) {
  c.A1 = x(0);
  c.A2 = x(1) / (R * R);
  c.D3 = x(2) * std::pow(R, 5);
  c.D4 = x(3) * R * R * R;
}

inline Eigen::Vector4d pack_shear(const Coeff3D& c, double R) {
  return {c.A1, c.A2 * R * R, c.D3 / std::pow(R, 5), c.D4 / (R * R * R)};
}

// Tension-driven uniform contraction (A0, D0) in closed form.
inline void radial_tension_part(Coeff3D& c, const SphereProblem& p) {
  const auto m = detail::sphere_materials(p);
  const DerivedSurface ds = derive_surface(p.surf, p.geom);
  const double R = p.geom.R;
  const double den = 4.0 * m.mu + 3.0 * m.K3I + 2.0 * ds.eta0;
  if (!(den > 0.0)) throw DegenerateSystem("sphere: 4 mu + 3 K_I + 2 eta0 is not positive");
  c.A0 = 2.0 * p.surf.sigma0 / R / den;
  c.D0 = c.A0 * R * R * R;
}

inline Coeff3D solve_gm_shear(const SphereProblem& p) {
  if (!p.surf.membrane_only())
    throw InvalidInput("solve_gm_shear: bending stiffnesses must be zero for the GM interface");
  Coeff3D c;
  radial_tension_part(c, p);
  c.D1 = p.sigma_d / (2.0 * p.matrix.mu);
  const auto sol = solve_checked<4>(gm_shear_system(p), "GM shear system");
  unpack_shear(c, sol.x, p.geom.R);
  return c;
}

inline HydroCoeff solve_hydro_3d(const SphereProblem& p, double sigma_h) {
  const auto m = detail::sphere_materials(p);
  const DerivedSurface ds = derive_surface(p.surf, p.geom);
  const double R = p.geom.R;
  const double s0 = p.surf.sigma0;
  const double den = 4.0 * m.mu + 3.0 * m.K3I + 2.0 * ds.eta0;
  if (!(den > 0.0)) throw DegenerateSystem("sphere: 4 mu + 3 K_I + 2 eta0 is not positive");
  HydroCoeff h;
  h.dim = 3;
  h.F1 = ((1.0 + 4.0 * m.mu / (3.0 * m.K3)) * sigma_h - 2.0 * s0 / R) / den;
  h.F2 = sigma_h / (3.0 * m.K3);
  h.F3 = R * R * R *
         (sigma_h * ((1.0 - m.K3I / m.K3) - 2.0 * ds.eta0 / (3.0 * m.K3)) - 2.0 * s0 / R) / den;
  return h;
}

// Radial field of a hydrostatic solution expressed through the Coeff3D slots.
inline Coeff3D hydro_as_coeff(const HydroCoeff& h) {
  Coeff3D c;
  c.A0 = -h.F1;
  c.D0 = -h.F3;
  c.E = h.F2;
  return c;
}

}  // namespace surfel
