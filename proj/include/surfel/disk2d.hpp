#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "surfel/materials.hpp"

namespace surfel {

using cplx = std::complex<double>;

enum class Side { inhomogeneity, matrix };

inline Side side_of(double r, double R) { return r < R ? Side::inhomogeneity : Side::matrix; }

struct FarField2D {
  double s11 = 0.0;
  double s22 = 0.0;
  double s12 = 0.0;

  static FarField2D simple_shear(double sd) { return {sd, -sd, 0.0}; }
  static FarField2D hydrostatic(double sh) { return {sh, sh, 0.0}; }
};

struct DiskProblem {
  BulkMaterial matrix;
  BulkMaterial inhom;
  SurfaceParams surf;
  Geometry geom;
  FarField2D load;
};

struct Coeff2D {
  double reA1 = 0.0;
  cplx Am1{};  // A_{-1}
  cplx A3{};
  double delta1 = 0.0;
  double delta2 = 0.0;
  double omega0 = 0.0;
  double omega1 = 0.0;
  double omega2 = 0.0;
};

struct ChristensenLoCoeff2D {
  double d1 = 0.0;
  double a1 = 0.0;
  double a3 = 0.0;
  double c3 = 0.0;
};

// Radial-only response: u_r = F1 r inside, F2 r + F3 / r^(dim-1) outside.
struct HydroCoeff {
  double F1 = 0.0;
  double F2 = 0.0;
  double F3 = 0.0;
  int dim = 2;
};

struct PolarVec {
  double ur = 0.0;
  double ut = 0.0;
};

struct PolarStress {
  double rr = 0.0;
  double tt = 0.0;
  double rt = 0.0;
};

inline cplx ipow(cplx z, int n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  cplx r(1.0, 0.0);
  for (int k = 0; k < n; ++k) r *= z;
  return r;
}

// Finite Laurent polynomial sum_k c_k z^{p_k}; all potentials here have this form.
struct Laurent {
  std::array<int, 3> power{};
  std::array<cplx, 3> coef{};

  cplx value(cplx z) const {
    cplx s{};
    for (int k = 0; k < 3; ++k) s += coef[k] * ipow(z, power[k]);
    return s;
  }
  cplx d1(cplx z) const {
    cplx s{};
    for (int k = 0; k < 3; ++k)
      if (power[k] != 0) s += coef[k] * double(power[k]) * ipow(z, power[k] - 1);
    return s;
  }
  cplx d2(cplx z) const {
    cplx s{};
    for (int k = 0; k < 3; ++k) {
      const int p = power[k];
      if (p != 0 && p != 1) s += coef[k] * double(p * (p - 1)) * ipow(z, p - 2);
    }
    return s;
  }
};

struct Potentials2D {
  Laurent phi;
  Laurent psi;
};

namespace detail {

struct DiskMaterials {
  double mu, kappa, K2;
  double muI, kappaI, K2I;
};

inline DiskMaterials disk_materials(const DiskProblem& p) {
  validate(p.matrix, "matrix");
  validate(p.inhom, "inhomogeneity");
  if (p.matrix.mu <= 0.0) throw InvalidInput("matrix.mu must be > 0");
  const DerivedBulk m = derive_bulk(p.matrix);
  const DerivedBulk i = derive_bulk(p.inhom);
  return {p.matrix.mu, m.kappa, m.K2, p.inhom.mu, i.kappa, i.K2};
}

}  // namespace detail

inline Coeff2D solve_general_2d(const DiskProblem& p) {
  const auto m = detail::disk_materials(p);
  const DerivedSurface s = derive_surface(p.surf, p.geom);
  const double R = p.geom.R;
  const double s0 = p.surf.sigma0;
  const FarField2D& f = p.load;

  Coeff2D c;
  c.delta1 = m.muI / (m.kappaI - 1.0) + m.mu / 2.0 + s.eta;
  if (!(c.delta1 > 0.0))
    throw DegenerateSystem("disk: Delta1 = mu_I/(kappa_I-1) + mu/2 + eta is not positive");

  const double b1 = m.mu + m.kappa * m.muI;
  const double b2 = m.mu * m.kappaI + m.muI;
  c.delta2 = b1 * b2 + s.eta1 * (3.0 * m.kappaI * b1 + m.kappa * b2) +
             12.0 * m.kappa * m.kappaI * s.eta * (s0 / (4.0 * R) + s.gamma_disk);
  if (c.delta2 == 0.0 || !std::isfinite(c.delta2))
    throw DegenerateSystem("disk: Delta2 vanishes for these parameters");

  c.omega0 = m.K2I - m.K2 + 2.0 * s.eta;
  c.omega1 = m.muI - m.mu + s.eta1;
  c.omega2 = m.muI * m.kappa / m.kappaI - m.mu + 3.0 * m.kappa * s.eta1 + 3.0 * s.eta2;

  const double sh = 0.5 * (f.s11 + f.s22);
  c.reA1 = R / (2.0 * (m.K2I + m.mu + 2.0 * s.eta)) * ((m.kappa + 1.0) / 2.0 * sh - s0 / R);

  const cplx dev_m(f.s22 - f.s11, -2.0 * f.s12);
  const cplx dev_p(f.s22 - f.s11, 2.0 * f.s12);
  const double k4 = (m.kappa + 1.0) / 4.0;
  c.Am1 = -k4 * (b2 + 3.0 * m.kappaI * s.eta1) / c.delta2 * R * dev_m;
  c.A3 = -k4 * (m.kappaI * s.eta2) / c.delta2 * R * dev_p;
  return c;
}

// Simple-shear entry point written from the real-valued shear formulas;
// kept separate from the general path so the two can be compared.
inline Coeff2D solve_shear_2d(const DiskProblem& p) {
  const auto m = detail::disk_materials(p);
  const DerivedSurface s = derive_surface(p.surf, p.geom);
  const double R = p.geom.R;
  const double s0 = p.surf.sigma0;
  const double sd = p.load.s11;
  if (p.load.s22 != -sd || p.load.s12 != 0.0)
    throw InvalidInput("solve_shear_2d expects s11 = -s22, s12 = 0");

  Coeff2D c;
  c.delta1 = m.muI / (m.kappaI - 1.0) + m.mu / 2.0 + s.eta;
  if (!(c.delta1 > 0.0))
    throw DegenerateSystem("disk: Delta1 = mu_I/(kappa_I-1) + mu/2 + eta is not positive");
  const double b1 = m.mu + m.kappa * m.muI;
  const double b2 = m.mu * m.kappaI + m.muI;
  c.delta2 = b1 * b2 + s.eta1 * (3.0 * m.kappaI * b1 + m.kappa * b2) +
             12.0 * m.kappa * m.kappaI * s.eta * (s0 / (4.0 * R) + s.gamma_disk);
  if (c.delta2 == 0.0 || !std::isfinite(c.delta2))
    throw DegenerateSystem("disk: Delta2 vanishes for these parameters");
  c.omega0 = m.K2I - m.K2 + 2.0 * s.eta;
  c.omega1 = m.muI - m.mu + s.eta1;
  c.omega2 = m.muI * m.kappa / m.kappaI - m.mu + 3.0 * m.kappa * s.eta1 + 3.0 * s.eta2;

  c.reA1 = -s0 / (2.0 * (m.K2I + m.mu + 2.0 * s.eta));
  const double k2 = (m.kappa + 1.0) / 2.0;
  c.Am1 = k2 * (b2 + 3.0 * m.kappaI * s.eta1) / c.delta2 * R * sd;
  c.A3 = k2 * m.kappaI * s.eta2 / c.delta2 * R * sd;
  return c;
}

inline ChristensenLoCoeff2D cl_coefficients(const Coeff2D& c, const DiskProblem& p) {
  const auto m = detail::disk_materials(p);
  const DerivedSurface s = derive_surface(p.surf, p.geom);
  const double R = p.geom.R;
  const double Am1 = c.Am1.real();
  const double A3 = c.A3.real();
  ChristensenLoCoeff2D cl;
  cl.d1 = 4.0 * m.muI / m.kappaI * (3.0 * A3 / R + m.kappaI * Am1 / R);
  cl.a1 = 4.0 * m.muI / m.kappaI * A3 / R;
  cl.a3 = 4.0 / (m.kappa + 1.0) * (3.0 * s.eta2 * A3 / R - c.omega1 * Am1 / R);
  cl.c3 = 4.0 / (m.kappa + 1.0) * ((c.omega1 + m.kappa * s.eta2) * Am1 / R - c.omega2 * A3 / R);
  return cl;
}

// Christensen-Lo style shear field plus the radial surface-tension term.
// Needs mu_I > 0 for the inside branch (the representation carries R/(4 mu_I)).
inline PolarVec cl_displacement_2d(const ChristensenLoCoeff2D& cl, const DiskProblem& p, double r,
                                   double t) {
  const auto m = detail::disk_materials(p);
  const DerivedSurface s = derive_surface(p.surf, p.geom);
  const double R = p.geom.R;
  const double sd = p.load.s11;
  const double A = -1.0 / (2.0 * (m.K2I + m.mu + 2.0 * s.eta));
  const double c2 = std::cos(2.0 * t), s2 = std::sin(2.0 * t);
  const double x = r / R;
  if (r < R) {
    const double k = R / (4.0 * m.muI);
    return {A * p.surf.sigma0 * x + k * (cl.d1 * x + (m.kappaI - 3.0) * cl.a1 * x * x * x) * c2,
            k * (-cl.d1 * x + (m.kappaI + 3.0) * cl.a1 * x * x * x) * s2};
  }
  const double k = R / (4.0 * m.mu);
  const double y = 1.0 / x;
  return {A * p.surf.sigma0 * y +
              k * (2.0 * sd * x + (m.kappa + 1.0) * cl.a3 * y + cl.c3 * y * y * y) * c2,
          k * (-2.0 * sd * x - (m.kappa - 1.0) * cl.a3 * y + cl.c3 * y * y * y) * s2};
}

inline HydroCoeff solve_hydro_2d(const DiskProblem& p, double sigma_h) {
  const auto m = detail::disk_materials(p);
  const DerivedSurface s = derive_surface(p.surf, p.geom);
  const double R = p.geom.R;
  const double s0 = p.surf.sigma0;
  const double den = 2.0 * (m.K2I + m.mu + 2.0 * s.eta);
  if (!(den > 0.0)) throw DegenerateSystem("disk: K_I + mu + 2 eta is not positive");
  HydroCoeff h;
  h.dim = 2;
  h.F1 = ((m.kappa + 1.0) / 2.0 * sigma_h - s0 / R) / den;
  h.F2 = sigma_h / (2.0 * m.K2);
  h.F3 = -R * R / den * (sigma_h * (m.K2I / m.K2 - 1.0 + 2.0 * s.eta / m.K2) + s0 / R);
  return h;
}

inline cplx far_field_displacement_2d(const DiskProblem& p, double r, double t) {
  const auto m = detail::disk_materials(p);
  const FarField2D& f = p.load;
  const cplx e2m = std::polar(1.0, -2.0 * t);
  return (m.kappa - 1.0) * (f.s11 + f.s22) / (8.0 * m.mu) * r -
         cplx(f.s22 - f.s11, -2.0 * f.s12) / (4.0 * m.mu) * r * e2m;
}

inline PolarVec displacement_2d(const Coeff2D& c, const DiskProblem& p, double r, double t,
                                Side side) {
  const auto m = detail::disk_materials(p);
  const DerivedSurface s = derive_surface(p.surf, p.geom);
  const double R = p.geom.R;
  const cplx e2p = std::polar(1.0, 2.0 * t);
  const cplx e2m = std::conj(e2p);
  cplx u;
  if (side == Side::inhomogeneity) {
    const double x = r / R, x3 = x * x * x;
    u = c.reA1 * x + c.A3 * x3 * e2p +
        (3.0 / m.kappaI * std::conj(c.A3) * (x - x3) + c.Am1 * x) * e2m;
  } else {
    const double y = R / r, y3 = y * y * y;
    const cplx Am1b = std::conj(c.Am1), A3b = std::conj(c.A3);
    u = (-(m.kappa - 1.0) * (c.omega0 * c.reA1 + p.surf.sigma0 / 2.0) * y +
         m.kappa * (-c.omega1 * c.Am1 + 3.0 * s.eta2 * A3b) * y * e2m +
         (-c.omega1 * Am1b + 3.0 * s.eta2 * c.A3) * y * e2p +
         ((c.omega1 + m.kappa * s.eta2) * Am1b - c.omega2 * c.A3) * y3 * e2p) /
            (m.mu * (m.kappa + 1.0)) +
        far_field_displacement_2d(p, r, t);
  }
  return {u.real(), u.imag()};
}

inline PolarVec displacement_2d(const Coeff2D& c, const DiskProblem& p, double r, double t) {
  return displacement_2d(c, p, r, t, side_of(r, p.geom.R));
}

inline Potentials2D potentials_2d(const Coeff2D& c, const DiskProblem& p, Side side) {
  const auto m = detail::disk_materials(p);
  const DerivedSurface s = derive_surface(p.surf, p.geom);
  const double R = p.geom.R;
  const FarField2D& f = p.load;
  Potentials2D out;
  if (side == Side::inhomogeneity) {
    out.phi.power = {1, 3, 0};
    out.phi.coef = {2.0 * m.muI / (m.kappaI - 1.0) * c.reA1 / R,
                    2.0 * m.muI / m.kappaI * c.A3 / (R * R * R), 0.0};
    out.psi.power = {1, 0, 0};
    out.psi.coef = {-2.0 * m.muI * (3.0 / m.kappaI * c.A3 + std::conj(c.Am1)) / R, 0.0, 0.0};
    return out;
  }
  const double k = 2.0 / (m.kappa + 1.0);
  out.phi.power = {-1, 1, 0};
  out.phi.coef = {k * (-c.omega1 * c.Am1 + 3.0 * s.eta2 * std::conj(c.A3)) * R,
                  (f.s11 + f.s22) / 4.0, 0.0};
  out.psi.power = {-1, -3, 1};
  out.psi.coef = {k * (m.kappa - 1.0) * (c.omega0 * c.reA1 + p.surf.sigma0 / 2.0) * R,
                  k * (-(c.omega1 + m.kappa * s.eta2) * c.Am1 + c.omega2 * std::conj(c.A3)) *
                      (R * R * R),
                  cplx(f.s22 - f.s11, 2.0 * f.s12) / 2.0};
  return out;
}

inline std::pair<cplx, cplx> km_potentials(const Coeff2D& c, const DiskProblem& p, cplx z) {
  const Potentials2D pot = potentials_2d(c, p, side_of(std::abs(z), p.geom.R));
  return {pot.phi.value(z), pot.psi.value(z)};
}

// Displacement recovered from a potential pair of a phase with (mu, kappa).
inline PolarVec displacement_from_potentials(const Potentials2D& pot, double mu, double kappa,
                                             cplx z) {
  const double t = std::arg(z);
  const cplx w = std::polar(1.0, -t) *
                 (kappa * pot.phi.value(z) - z * std::conj(pot.phi.d1(z)) - std::conj(pot.psi.value(z))) /
                 (2.0 * mu);
  return {w.real(), w.imag()};
}

inline PolarStress stress_2d(const Coeff2D& c, const DiskProblem& p, double r, double t,
                             Side side) {
  const Potentials2D pot = potentials_2d(c, p, side);
  const cplx z = std::polar(r, t);
  const double sum = 4.0 * pot.phi.d1(z).real();
  const cplx dif = 2.0 * std::polar(1.0, 2.0 * t) * (std::conj(z) * pot.phi.d2(z) + pot.psi.d1(z));
  return {0.5 * (sum - dif.real()), 0.5 * (sum + dif.real()), 0.5 * dif.imag()};
}

inline PolarStress stress_2d(const Coeff2D& c, const DiskProblem& p, double r, double t) {
  return stress_2d(c, p, r, t, side_of(r, p.geom.R));
}

struct Cart2Stress {
  double xx = 0.0;
  double yy = 0.0;
  double xy = 0.0;
};

inline Cart2Stress polar_to_cartesian(const PolarStress& s, double t) {
  const double c = std::cos(t), n = std::sin(t);
  return {s.rr * c * c + s.tt * n * n - 2.0 * s.rt * n * c,
          s.rr * n * n + s.tt * c * c + 2.0 * s.rt * n * c,
          (s.rr - s.tt) * n * c + s.rt * (c * c - n * n)};
}

inline PolarStress cartesian_to_polar(const Cart2Stress& s, double t) {
  const double c = std::cos(t), n = std::sin(t);
  return {s.xx * c * c + s.yy * n * n + 2.0 * s.xy * n * c,
          s.xx * n * n + s.yy * c * c - 2.0 * s.xy * n * c,
          (s.yy - s.xx) * n * c + s.xy * (c * c - n * n)};
}

}  // namespace surfel
