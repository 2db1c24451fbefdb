#pragma once

// Independent checks of candidate fields against the governing interface
// equations. Nothing here calls the closed-form coefficient routines; fields
// come in as callables and surface derivatives are taken numerically.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "surfel/disk2d.hpp"
#include "surfel/linalg.hpp"
#include "surfel/sphere_gm.hpp"
#include "surfel/sphere_so.hpp"

namespace surfel {

// ---- small array arithmetic for finite differences of vector-valued maps ----

template <std::size_t N>
using Arr = std::array<double, N>;

template <std::size_t N>
Arr<N> lin(double a, const Arr<N>& x, double b, const Arr<N>& y) {
  Arr<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a * x[i] + b * y[i];
  return r;
}

template <std::size_t N>
Arr<N> lin(double a, const Arr<N>& x, double b, const Arr<N>& y, double c, const Arr<N>& z) {
  Arr<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a * x[i] + b * y[i] + c * z[i];
  return r;
}

template <class F>
auto fd_t(const F& f, double t, double p, double h) {
  return lin(0.5 / h, f(t + h, p), -0.5 / h, f(t - h, p));
}
template <class F>
auto fd_p(const F& f, double t, double p, double h) {
  return lin(0.5 / h, f(t, p + h), -0.5 / h, f(t, p - h));
}
template <class F>
auto fd_tt(const F& f, double t, double p, double h) {
  const double k = 1.0 / (h * h);
  return lin(k, f(t + h, p), -2.0 * k, f(t, p), k, f(t - h, p));
}
template <class F>
auto fd_pp(const F& f, double t, double p, double h) {
  const double k = 1.0 / (h * h);
  return lin(k, f(t, p + h), -2.0 * k, f(t, p), k, f(t, p - h));
}
template <class F>
auto fd_tp(const F& f, double t, double p, double h) {
  const double k = 0.25 / (h * h);
  return lin(k, lin(1.0, f(t + h, p + h), -1.0, f(t + h, p - h)), -k,
             lin(1.0, f(t - h, p + h), -1.0, f(t - h, p - h)));
}

// ---- surface tensors on a sphere of radius r ----

struct SurfaceStressTensor {
  double T_thetatheta = 0.0, T_phiphi = 0.0, T_phitheta = 0.0, T_thetaphi = 0.0;
  double T_thetar = 0.0, T_phir = 0.0;
};

// Surface displacement and its first angular derivatives at one point.
struct SurfaceDispJet {
  double ur = 0, ut = 0, up = 0;
  double ur_t = 0, ut_t = 0, up_t = 0;
  double ur_p = 0, ut_p = 0, up_p = 0;
};

// with_constant = false drops the bare sigma0 of the two normal components,
// leaving the part that is linear in the displacement.
inline SurfaceStressTensor surface_T(const SurfaceDispJet& d, const SurfaceParams& s, double r,
                                     double t, bool with_constant = true) {
  const double st = std::sin(t), ct = std::cos(t);
  const double hoop = (d.up_p + d.ut * ct + d.ur * st) / (r * st);
  const double merid = (d.ut_t + d.ur) / r;
  const double c0 = with_constant ? s.sigma0 : 0.0;
  SurfaceStressTensor T;
  T.T_thetatheta = c0 + (s.lambda0 + s.sigma0) * hoop + (s.lambda0 + 2.0 * s.mu0) * merid;
  T.T_phiphi = c0 + (s.lambda0 + 2.0 * s.mu0) * hoop + (s.lambda0 + s.sigma0) * merid;
  T.T_phitheta = (s.mu0 * (d.ut_p - d.up * ct) + (s.mu0 - s.sigma0) * d.up_t * st) / (r * st);
  T.T_thetaphi = ((s.mu0 - s.sigma0) * (d.ut_p - d.up * ct) + s.mu0 * d.up_t * st) / (r * st);
  T.T_thetar = s.sigma0 / r * (d.ur_t - d.ut);
  T.T_phir = s.sigma0 / (r * st) * (d.ur_p - d.up * st);
  return T;
}

// Surface displacement (u_r, u_theta, u_phi) as a function of (theta, phi).
using SurfaceDisp = std::function<Arr<3>(double, double)>;

inline SurfaceDispJet jet_fd(const SurfaceDisp& u, double t, double p, double h) {
  const Arr<3> v = u(t, p), vt = fd_t(u, t, p, h), vp = fd_p(u, t, p, h);
  return {v[0], v[1], v[2], vt[0], vt[1], vt[2], vp[0], vp[1], vp[2]};
}

inline SurfaceStressTensor surface_T_fd(const SurfaceDisp& u, const SurfaceParams& s, double r,
                                        double t, double p, double h, bool with_constant = true) {
  return surface_T(jet_fd(u, t, p, h), s, r, t, with_constant);
}

// Change of curvature with a consistent sign: kappa = -(Hessian-type form).
inline CurvatureChange curvature_fd(const SurfaceDisp& u, double r, double t, double p,
                                    double h) {
  const double st = std::sin(t), ct = std::cos(t);
  const Arr<3> v = u(t, p), vt = fd_t(u, t, p, h), vp = fd_p(u, t, p, h);
  const Arr<3> vtt = fd_tt(u, t, p, h), vpp = fd_pp(u, t, p, h), vtp = fd_tp(u, t, p, h);
  const double r2 = r * r;
  CurvatureChange k;
  k.k_phiphi = -(vpp[0] - vp[2] * st + (vt[0] - v[1]) * ct * st) / (r2 * st * st);
  // d/dt (u_r,p / sin t - u_p) expanded
  const double dpar = vtp[0] / st - vp[0] * ct / (st * st) - vt[2];
  k.k_phitheta = -((vtp[0] - vp[1]) * st - (vp[0] - v[2] * st) * ct + dpar * st * st) /
                 (2.0 * r2 * st * st);
  k.k_thetatheta = -(vtt[0] - vt[1]) / r2;
  return k;
}

inline SurfaceCoupleStress surface_M_fd(const SurfaceDisp& u, const SurfaceParams& s, double r,
                                        double t, double p, double h) {
  return couple_stress(curvature_fd(u, r, t, p, h), s);
}

// Right-hand sides of the sphere traction-jump conditions (inside minus matrix).
inline Arr<3> jump_rhs_sphere(const SurfaceDisp& u, const SurfaceParams& s, double r, double t,
                              double p, double h, bool with_bending, bool with_constant = true) {
  auto T = [&](double tt, double pp) {
    const SurfaceStressTensor x = surface_T_fd(u, s, r, tt, pp, h, with_constant);
    return Arr<6>{x.T_thetatheta, x.T_phiphi, x.T_phitheta, x.T_thetaphi, x.T_thetar, x.T_phir};
  };
  enum { TT, PP, PT, TP, TR, PR };
  const double st = std::sin(t), ct = std::cos(t);
  const Arr<6> T0 = T(t, p), Tt = fd_t(T, t, p, h), Tp = fd_p(T, t, p, h);
  Arr<3> out;
  out[0] = (Tp[PR] + T0[TR] * ct + (Tt[TR] - T0[PP] - T0[TT]) * st) / (r * st);
  out[1] = (Tp[PT] + (Tt[TT] + T0[TR]) * st + (T0[TT] - T0[PP]) * ct) / (r * st);
  out[2] = (Tp[PP] + (Tt[TP] + T0[PR]) * st + (T0[PT] + T0[TP]) * ct) / (r * st);
  if (!with_bending) return out;

  auto M = [&](double tt, double pp) {
    const SurfaceCoupleStress m = surface_M_fd(u, s, r, tt, pp, h);
    return Arr<3>{m.M_phiphi, m.M_phitheta, m.M_thetatheta};
  };
  enum { MPP, MPT, MTT };
  const Arr<3> M0 = M(t, p), Mt = fd_t(M, t, p, h), Mp = fd_p(M, t, p, h);
  const Arr<3> Mtt = fd_tt(M, t, p, h), Mpp = fd_pp(M, t, p, h), Mtp = fd_tp(M, t, p, h);
  const double r2 = r * r;
  out[0] += (Mpp[MPP] + 2.0 * Mtp[MPT] * st + Mtt[MTT] * st * st + 2.0 * Mp[MPT] * ct +
             (2.0 * Mt[MTT] - Mt[MPP]) * ct * st - (M0[MTT] - M0[MPP]) * st * st) /
            (r2 * st * st);
  out[1] += (Mp[MPT] + (M0[MTT] - M0[MPP]) * ct + Mt[MTT] * st) / (r2 * st);
  out[2] += (Mp[MPP] + 2.0 * M0[MPT] * ct + Mt[MPT] * st) / (r2 * st);
  return out;
}

// ---- candidate fields ----

struct PlaneField {
  double R = 1.0;
  std::function<PolarVec(double, double, Side)> u;
  std::function<PolarStress(double, double, Side)> s;
};

struct SpaceField {
  double R = 1.0;
  std::function<SphVec(double, double, double, Side)> u;
  std::function<SphStress(double, double, double, Side)> s;
};

inline PlaneField plane_field(const Coeff2D& c, const DiskProblem& p) {
  return {p.geom.R, [c, p](double r, double t, Side sd) { return displacement_2d(c, p, r, t, sd); },
          [c, p](double r, double t, Side sd) { return stress_2d(c, p, r, t, sd); }};
}

inline SpaceField space_field(const Coeff3D& c, const SphereProblem& p) {
  return {p.geom.R,
          [c, p](double r, double t, double ph, Side sd) { return displacement_3d(c, p, r, t, ph, sd); },
          [c, p](double r, double t, double ph, Side sd) { return stress_3d(c, p, r, t, ph, sd); }};
}

// ---- residual reports ----

struct JumpResidual {
  Arr<3> rel{};          // per component (rr, r-theta, r-phi); 2D uses the first two
  double raw_h = 0.0;    // worst relative residual with the coarse step alone
  double raw_h2 = 0.0;   // and with the halved step
  double step = 0.0;
  int n_theta = 0;
  int n_phi = 0;

  double worst() const { return std::max({rel[0], rel[1], rel[2]}); }
};

// Nested differences in theta and phi lose digits near the poles, where the
// surface operators divide by sin^2. The band starts band*h away from each pole.
struct JumpGrid3D {
  int n_theta = 96;
  int n_phi = 192;
  double h = std::numbers::pi / 384.0;
  double band = 16.0;
};

// Signed inside-minus-matrix traction jump minus the interface law, 2D.
// Angular derivatives of the surface displacement are spectral on n samples.
namespace detail {

inline std::vector<double> spectral_derivative(const std::vector<double>& f, int order) {
  const int n = static_cast<int>(f.size());
  std::vector<std::complex<double>> F(n);
  for (int k = 0; k < n; ++k) {
    std::complex<double> acc{};
    for (int j = 0; j < n; ++j) acc += f[j] * std::polar(1.0, -2.0 * std::numbers::pi * k * j / n);
    F[k] = acc / double(n);
  }
  // (i m)^order
  auto factor = [order](int m) {
    std::complex<double> z{1.0, 0.0};
    for (int o = 0; o < order; ++o) z *= std::complex<double>(0.0, m);
    return z;
  };
  std::vector<double> out(n, 0.0);
  for (int j = 0; j < n; ++j) {
    std::complex<double> acc{};
    for (int k = 0; k < n; ++k) {
      int m = k <= n / 2 ? k : k - n;
      if (2 * m == n && order % 2 == 1) continue;
      acc += F[k] * factor(m) *
             std::polar(1.0, 2.0 * std::numbers::pi * k * j / n);
    }
    out[j] = acc.real();
  }
  return out;
}

}  // namespace detail

struct JumpDefect2D {
  std::vector<double> theta;
  std::vector<double> lhs_rr, lhs_rt, rhs_rr, rhs_rt;
  std::vector<double> inh_rr, inh_rt, mat_rr, mat_rt;
};

// Disk fields carry only the 0 and 2 harmonics, so 16 samples resolve them
// exactly; more points only feed round-off into the fourth derivative (~n^4).
inline JumpDefect2D jump_defect_2d(const PlaneField& f, const SurfaceParams& s, int n = 16) {
  const double R = f.R;
  JumpDefect2D d;
  std::vector<double> ur(n), ut(n);
  for (int j = 0; j < n; ++j) {
    const double t = 2.0 * std::numbers::pi * j / n;
    d.theta.push_back(t);
    const PolarVec u = f.u(R, t, Side::matrix);
    ur[j] = u.ur;
    ut[j] = u.ut;
  }
  const auto ur1 = detail::spectral_derivative(ur, 1), ur2 = detail::spectral_derivative(ur, 2);
  const auto ur3 = detail::spectral_derivative(ur, 3), ur4 = detail::spectral_derivative(ur, 4);
  const auto ut1 = detail::spectral_derivative(ut, 1), ut2 = detail::spectral_derivative(ut, 2);
  const auto ut3 = detail::spectral_derivative(ut, 3);
  const double bend = 2.0 * s.chi0 + s.zeta0;
  const double m0 = s.lambda0 + 2.0 * s.mu0;
  const double R2 = R * R, R4 = R2 * R2;
  for (int j = 0; j < n; ++j) {
    const PolarStress si = f.s(R, d.theta[j], Side::inhomogeneity);
    const PolarStress sm = f.s(R, d.theta[j], Side::matrix);
    d.inh_rr.push_back(si.rr);
    d.inh_rt.push_back(si.rt);
    d.mat_rr.push_back(sm.rr);
    d.mat_rt.push_back(sm.rt);
    d.lhs_rr.push_back(si.rr - sm.rr);
    d.lhs_rt.push_back(si.rt - sm.rt);
    d.rhs_rr.push_back(-s.sigma0 / R + s.sigma0 / R2 * (ur2[j] - ut1[j]) - m0 / R2 * (ut1[j] + ur[j]) -
                       bend / R4 * (ur4[j] - ut3[j]));
    d.rhs_rt.push_back(s.sigma0 / R2 * (ur1[j] - ut[j]) + m0 / R2 * (ut2[j] + ur1[j]) -
                       bend / R4 * (ur3[j] - ut2[j]));
  }
  return d;
}

inline double scaled_max(const std::vector<double>& a, const std::vector<double>& b,
                         const std::vector<const std::vector<double>*>& scale_sources) {
  double err = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) err = std::max(err, std::abs(a[i] - b[i]));
  for (const auto* v : scale_sources)
    for (double x : *v) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return err;
  return err / scale;
}

inline JumpResidual jump_residual_2d(const PlaneField& f, const SurfaceParams& s, int n = 16) {
  const JumpDefect2D d = jump_defect_2d(f, s, n);
  JumpResidual r;
  r.rel[0] = scaled_max(d.lhs_rr, d.rhs_rr, {&d.inh_rr, &d.mat_rr, &d.rhs_rr});
  r.rel[1] = scaled_max(d.lhs_rt, d.rhs_rt, {&d.inh_rt, &d.mat_rt, &d.rhs_rt});
  r.raw_h = r.raw_h2 = r.worst();
  r.n_theta = n;
  r.n_phi = 0;
  return r;
}

// Sphere: LHS from the stress field on both sides of r = R, RHS from the
// surface tensors with nested central differences, one Richardson level.
// The theta band starts grid.band coarse steps off each pole so every
// stencil stays clear of sin(theta) = 0.
//
// The field may be passed as a superposition of parts (e.g. the uniform
// tension-driven contraction and the shear response). The conditions are
// affine in u, so the residual is assembled part by part and summed
// pointwise; this keeps a large uniform radial displacement from drowning
// the fourth-order differences of the bending terms in round-off.
struct JumpResidual3D : JumpResidual {
  std::vector<JumpResidual> per_part;
};

inline double stress_level(const SphStress& s) {
  return std::max({std::abs(s.rr), std::abs(s.tt), std::abs(s.pp), std::abs(s.rt), std::abs(s.rp),
                   std::abs(s.tp)});
}

inline JumpResidual3D jump_residual_3d(const std::vector<SpaceField>& parts,
                                       const SurfaceParams& s, bool bending,
                                       const JumpGrid3D& g = {}) {
  const double R = parts.at(0).R;
  const double pi = std::numbers::pi;
  const std::size_t np = parts.size();
  std::vector<SurfaceDisp> us;
  for (const SpaceField& f : parts)
    us.push_back([&f, R](double t, double p) {
      const SphVec v = f.u(R, t, p, Side::matrix);
      return Arr<3>{v.r, v.t, v.p};
    });
  const double h = g.h, tmin = g.band * h;
  Arr<3> err{}, err_h{}, err_h2{};
  double scale = 0.0, stress_scale = 0.0;
  std::vector<Arr<3>> perr(np);
  std::vector<double> pscale(np, 0.0);
  for (int i = 0; i < g.n_theta; ++i) {
    const double t = tmin + (pi - 2.0 * tmin) * i / (g.n_theta - 1);
    for (int j = 0; j < g.n_phi; ++j) {
      const double p = 2.0 * pi * j / g.n_phi;
      Arr<3> lhs{}, a{}, b{}, in{}, mat{};
      for (std::size_t q = 0; q < np; ++q) {
        const SphStress si = parts[q].s(R, t, p, Side::inhomogeneity);
        const SphStress sm = parts[q].s(R, t, p, Side::matrix);
        const Arr<3> l{si.rr - sm.rr, si.rt - sm.rt, si.rp - sm.rp};
        const Arr<3> aq = jump_rhs_sphere(us[q], s, R, t, p, h, bending, q == 0);
        const Arr<3> bq = jump_rhs_sphere(us[q], s, R, t, p, 0.5 * h, bending, q == 0);
        const Arr<3> rq = lin(4.0 / 3.0, bq, -1.0 / 3.0, aq);
        const Arr<3> iq{si.rr, si.rt, si.rp}, mq{sm.rr, sm.rt, sm.rp};
        const double lvl = std::max(stress_level(si), stress_level(sm));
        stress_scale = std::max(stress_scale, lvl);
        pscale[q] = std::max(pscale[q], lvl);
        for (int k = 0; k < 3; ++k) {
          lhs[k] += l[k];
          a[k] += aq[k];
          b[k] += bq[k];
          in[k] += iq[k];
          mat[k] += mq[k];
          perr[q][k] = std::max(perr[q][k], std::abs(l[k] - rq[k]));
          pscale[q] = std::max({pscale[q], std::abs(iq[k]), std::abs(mq[k]), std::abs(rq[k])});
        }
      }
      const Arr<3> rich = lin(4.0 / 3.0, b, -1.0 / 3.0, a);
      for (int k = 0; k < 3; ++k) {
        err[k] = std::max(err[k], std::abs(lhs[k] - rich[k]));
        err_h[k] = std::max(err_h[k], std::abs(lhs[k] - a[k]));
        err_h2[k] = std::max(err_h2[k], std::abs(lhs[k] - b[k]));
        scale = std::max({scale, std::abs(in[k]), std::abs(mat[k]), std::abs(rich[k])});
      }
    }
  }
  JumpResidual3D r;
  r.step = h;
  r.n_theta = g.n_theta;
  r.n_phi = g.n_phi;
  // One scale per field, the interface stress level: a component that vanishes
  // identically would otherwise be measured against its own round-off, and at a
  // cavity wall the net traction is much smaller than the stresses balancing it.
  scale = std::max(scale, stress_scale);
  const double sc = scale > 0.0 ? scale : 1.0;
  for (int k = 0; k < 3; ++k) {
    r.rel[k] = err[k] / sc;
    r.raw_h = std::max(r.raw_h, err_h[k] / sc);
    r.raw_h2 = std::max(r.raw_h2, err_h2[k] / sc);
  }
  for (std::size_t q = 0; q < np; ++q) {
    JumpResidual pr;
    pr.step = h;
    pr.n_theta = g.n_theta;
    pr.n_phi = g.n_phi;
    for (int k = 0; k < 3; ++k)
      pr.rel[k] = pscale[q] > 0.0 ? perr[q][k] / pscale[q] : perr[q][k];
    r.per_part.push_back(pr);
  }
  return r;
}

inline JumpResidual3D jump_residual_3d(const SpaceField& f, const SurfaceParams& s, bool bending,
                                       const JumpGrid3D& g = {}) {
  return jump_residual_3d(std::vector<SpaceField>{f}, s, bending, g);
}

// Residual of a sphere field given by its coefficients. The radial mode
// (A0, D0, E, which also carries the surface tension) and the shear mode are
// checked as separate parts; see the note above jump_residual_3d.
inline JumpResidual3D jump_residual_sphere(const Coeff3D& c, const SphereProblem& p, bool bending,
                                           const JumpGrid3D& g = {}) {
  Coeff3D radial, shear = c;
  radial.A0 = c.A0;
  radial.D0 = c.D0;
  radial.E = c.E;
  shear.A0 = shear.D0 = shear.E = 0.0;
  return jump_residual_3d({space_field(radial, p), space_field(shear, p)}, p.surf, bending, g);
}

// Worst distance between two jump-RHS evaluations over the same grid, relative
// to the larger of the two. Used to compare numerically assembled jumps with a
// candidate closed form.
inline double jump_rhs_agreement(const SurfaceDisp& u, const SurfaceParams& s, double R,
                                 bool bending,
                                 const std::function<Arr<3>(double, double)>& candidate,
                                 const JumpGrid3D& g = {}) {
  const double pi = std::numbers::pi;
  const double h = g.h, tmin = g.band * h;
  Arr<3> err{};
  double scale = 0.0;
  for (int i = 0; i < g.n_theta; ++i) {
    const double t = tmin + (pi - 2.0 * tmin) * i / (g.n_theta - 1);
    for (int j = 0; j < g.n_phi; ++j) {
      const double p = 2.0 * pi * j / g.n_phi;
      const Arr<3> a = jump_rhs_sphere(u, s, R, t, p, h, bending);
      const Arr<3> b = jump_rhs_sphere(u, s, R, t, p, 0.5 * h, bending);
      const Arr<3> rich = lin(4.0 / 3.0, b, -1.0 / 3.0, a);
      const Arr<3> c = candidate(t, p);
      for (int k = 0; k < 3; ++k) {
        err[k] = std::max(err[k], std::abs(rich[k] - c[k]));
        scale = std::max({scale, std::abs(rich[k]), std::abs(c[k])});
      }
    }
  }
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) worst = std::max(worst, scale > 0.0 ? err[k] / scale : err[k]);
  return worst;
}

// ---- equilibrium (div sigma = 0) by central differences in Cartesian axes ----

struct EquilibriumReport {
  double worst = 0.0;  // max |div sigma| R / local stress magnitude
  int samples = 0;
};

inline double sample_radius(std::mt19937_64& rng, double R, double margin) {
  std::uniform_real_distribution<double> pick(0.0, 1.0);
  if (pick(rng) < 0.5) return R * (0.05 + (1.0 - margin - 0.05) * pick(rng));
  return R * (1.0 + margin + (4.0 - margin) * pick(rng));
}

inline EquilibriumReport equilibrium_residual_2d(const PlaneField& f, int samples = 1000,
                                                 bool skip_inside = false,
                                                 unsigned long long seed = 12345) {
  const double R = f.R, h = 1e-5 * R;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
  auto cart = [&](double x, double y, Side sd) {
    const double r = std::hypot(x, y), t = std::atan2(y, x);
    return polar_to_cartesian(f.s(r, t, sd), t);
  };
  EquilibriumReport rep;
  for (int k = 0; k < samples; ++k) {
    double r = sample_radius(rng, R, 1e-2);
    if (skip_inside && r < R) r = 2.0 * R - r + 0.02 * R;
    const double t = ang(rng);
    const double x = r * std::cos(t), y = r * std::sin(t);
    const Side sd = side_of(r, R);
    const Cart2Stress xp = cart(x + h, y, sd), xm = cart(x - h, y, sd);
    const Cart2Stress yp = cart(x, y + h, sd), ym = cart(x, y - h, sd);
    const Cart2Stress c0 = cart(x, y, sd);
    const double fx = (xp.xx - xm.xx + yp.xy - ym.xy) / (2.0 * h);
    const double fy = (xp.xy - xm.xy + yp.yy - ym.yy) / (2.0 * h);
    const double mag = std::sqrt(c0.xx * c0.xx + c0.yy * c0.yy + 2.0 * c0.xy * c0.xy);
    const double res = std::hypot(fx, fy) * R;
    rep.worst = std::max(rep.worst, mag > 0.0 ? res / mag : res);
    ++rep.samples;
  }
  return rep;
}

inline EquilibriumReport equilibrium_residual_3d(const SpaceField& f, int samples = 1000,
                                                 bool skip_inside = false,
                                                 unsigned long long seed = 12345) {
  const double R = f.R, h = 1e-5 * R;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  auto cart = [&](double x, double y, double z, Side sd) {
    const double r = std::sqrt(x * x + y * y + z * z);
    const double t = std::acos(z / r), p = std::atan2(y, x);
    return spherical_to_cartesian_stress(f.s(r, t, p, sd), t, p);
  };
  EquilibriumReport rep;
  for (int k = 0; k < samples; ++k) {
    double r = sample_radius(rng, R, 1e-2);
    if (skip_inside && r < R) r = 2.0 * R - r + 0.02 * R;
    const double t = std::acos(1.0 - 2.0 * uni(rng)), p = 2.0 * std::numbers::pi * uni(rng);
    const double x = r * std::sin(t) * std::cos(p), y = r * std::sin(t) * std::sin(p),
                 z = r * std::cos(t);
    const Side sd = side_of(r, R);
    const CartStress xp = cart(x + h, y, z, sd), xm = cart(x - h, y, z, sd);
    const CartStress yp = cart(x, y + h, z, sd), ym = cart(x, y - h, z, sd);
    const CartStress zp = cart(x, y, z + h, sd), zm = cart(x, y, z - h, sd);
    const CartStress c0 = cart(x, y, z, sd);
    const double k2 = 0.5 / h;
    const double fx = k2 * (xp.xx - xm.xx + yp.xy - ym.xy + zp.xz - zm.xz);
    const double fy = k2 * (xp.xy - xm.xy + yp.yy - ym.yy + zp.yz - zm.yz);
    const double fz = k2 * (xp.xz - xm.xz + yp.yz - ym.yz + zp.zz - zm.zz);
    const double mag = std::sqrt(c0.xx * c0.xx + c0.yy * c0.yy + c0.zz * c0.zz +
                                 2.0 * (c0.xy * c0.xy + c0.xz * c0.xz + c0.yz * c0.yz));
    const double res = std::sqrt(fx * fx + fy * fy + fz * fz) * R;
    rep.worst = std::max(rep.worst, mag > 0.0 ? res / mag : res);
    ++rep.samples;
  }
  return rep;
}

// ---- direct numeric solves of the coefficient systems ----

// Interface + continuity equations of the membrane sphere; returns the full
// coefficient set with (A0, D0) and (A1, A2, D3, D4) from two numeric solves.
struct OracleSolve {
  Coeff3D c;
  double cond = 0.0;
  double residual = 0.0;
};

inline OracleSolve linear_solve_oracle_gm(const SphereProblem& p) {
  const auto shear = solve_checked<4>(gm_shear_system(p), "GM shear system");
  const auto radial = solve_checked<2>(gm_radial_system(p), "GM radial system");
  OracleSolve o;
  unpack_shear(o.c, shear.x, p.geom.R);
  o.c.D1 = p.sigma_d / (2.0 * p.matrix.mu);
  o.c.A0 = radial.x(0);
  o.c.D0 = radial.x(1) * std::pow(p.geom.R, 3);
  o.cond = std::max(shear.cond, radial.cond);
  o.residual = std::max(shear.residual, radial.residual);
  return o;
}

// Continuity + bending-interface system with given interface coefficients,
// unknowns (A1, A2 R^2, D3 / R^5, D4 / R^3); rows scaled by R and mu.
inline LinearSystem<4> so_shear_system(const SphereProblem& p, const SOCoefficientMatrix& C) {
  validate(p.matrix, "matrix");
  validate(p.inhom, "inhomogeneity");
  const DerivedBulk m = derive_bulk(p.matrix);
  const double mu = p.matrix.mu, la = m.lambda;
  const double rl = lame_ratio(p.inhom.nu);
  const double D1 = p.sigma_d / (2.0 * mu);
  LinearSystem<4> sys;
  sys.M << 1.0, -3.0 * rl, -3.0, -(3.0 * la + 5.0 * mu) / mu,
           1.0, -(5.0 * rl + 7.0), 2.0, -2.0,
           C.C31 / mu, C.C32 / mu, -24.0, -(18.0 * la + 20.0 * mu) / mu,
           C.C41 / mu, C.C42 / mu, 8.0, (3.0 * la + 2.0 * mu) / mu;
  sys.b << D1, D1, -2.0 * D1, -D1;
  return sys;
}

inline OracleSolve linear_solve_oracle_so(const SphereProblem& p, const SOCoefficientMatrix& C) {
  const auto sol = solve_checked<4>(so_shear_system(p, C), "SO shear system");
  OracleSolve o;
  unpack_shear(o.c, sol.x, p.geom.R);
  o.c.D1 = p.sigma_d / (2.0 * p.matrix.mu);
  o.cond = sol.cond;
  o.residual = sol.residual;
  return o;
}

// Largest coefficient difference in the scaled unknowns, relative to the
// largest of them (D1 and A0 included).
inline double coeff_distance(const Coeff3D& a, const Coeff3D& b, double R) {
  const Eigen::Vector4d x = pack_shear(a, R), y = pack_shear(b, R);
  const double ref = std::max({std::abs(a.D1), std::abs(b.D1), std::abs(a.A0), std::abs(b.A0),
                               x.cwiseAbs().maxCoeff(), y.cwiseAbs().maxCoeff()});
  double d = (x - y).cwiseAbs().maxCoeff();
  d = std::max(d, std::abs(a.A0 - b.A0));
  d = std::max(d, std::abs(a.D1 - b.D1));
  d = std::max(d, std::abs(a.D0 - b.D0) / (R * R * R));
  return ref > 0.0 ? d / ref : d;
}

}  // namespace surfel
