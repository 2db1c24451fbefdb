#pragma once

#include <cmath>
#include <string>

#include "surfel/sphere_so.hpp"

namespace surfel {

struct EquivalentInhomogeneity {
  double mu_eq_ratio = 1.0;   // mu_eq / mu
  double D4_so_ratio = 0.0;   // D4 / (R^3 sigma_d), units 1/stress
};

struct EffectiveEstimate {
  double c = 0.0;
  double mu_star_ratio = 0.0;
  double Lambda = 0.0;
  double mu_ef_ratio = 1.0;          // closed expression in Lambda
  double mu_ef_ratio_maxwell = 1.0;  // generic Maxwell formula with mu_eq
  EquivalentInhomogeneity eq;
};

inline double mu_star(const BulkMaterial& m) {
  const DerivedBulk d = derive_bulk(m);
  return (9.0 * d.K3 + 8.0 * m.mu) / (6.0 * (d.K3 + 2.0 * m.mu));
}

inline double mu_star_lame_form(const BulkMaterial& m) {
  const DerivedBulk d = derive_bulk(m);
  const double la = d.lambda, mu = m.mu;
  return 0.5 * (9.0 * la + 14.0 * mu) / (3.0 * la + 8.0 * mu);
}

// Dipole coefficient of a perfectly bonded sphere of shear modulus mu_eq.
inline double d4_equivalent(double mu_eq_ratio, const BulkMaterial& m, const Geometry& g,
                            double sigma_d) {
  const DerivedBulk d = derive_bulk(m);
  const double la = d.lambda, mu = m.mu;
  const double den = (9.0 * la + 14.0 * mu) + 2.0 * mu_eq_ratio * (8.0 * la + 3.0 * mu);
  if (den == 0.0) throw DegenerateSystem("d4_equivalent: vanishing denominator");
  return -2.5 * (mu_eq_ratio - 1.0) * sigma_d * g.R * g.R * g.R / den;
}

// Inverse of d4_equivalent; x = D4 / (R^3 sigma_d).
inline double mu_eq_from_d4(double x, const BulkMaterial& m) {
  const DerivedBulk d = derive_bulk(m);
  const double la = d.lambda, mu = m.mu;
  const double den = 1.0 + 4.0 * x * (3.0 * mu + 8.0 * la) / 5.0;
  if (den == 0.0) throw DegenerateSystem("equivalent modulus: vanishing denominator");
  return 1.0 - 2.0 * (4.0 * mu + 5.0 * la) / den * x;
}

inline double maxwell_shear(double mu_eq_ratio, double mu_star_ratio, double c) {
  const double m = mu_eq_ratio, s = mu_star_ratio;
  const double den = m + s - c * (m - 1.0);
  if (den == 0.0) throw DegenerateSystem("Maxwell estimate: vanishing denominator");
  return (m + s + c * s * (m - 1.0)) / den;
}

inline EquivalentInhomogeneity equivalent_inhomogeneity(const SphereProblem& p) {
  SphereProblem q = p;
  if (q.sigma_d == 0.0) q.sigma_d = 2.0 * q.matrix.mu;  // response is linear; any load works
  const Coeff3D d = residual_subtraction(q);
  EquivalentInhomogeneity e;
  e.D4_so_ratio = d.D4 / (q.geom.R * q.geom.R * q.geom.R * q.sigma_d);
  e.mu_eq_ratio = mu_eq_from_d4(e.D4_so_ratio, q.matrix);
  return e;
}

inline EffectiveEstimate effective_shear_from(const EquivalentInhomogeneity& e,
                                              const BulkMaterial& m, double c) {
  if (!(c >= 0.0 && c < 1.0)) throw InvalidInput("volume fraction c must lie in [0, 1)");
  const DerivedBulk d = derive_bulk(m);
  const double la = d.lambda, mu = m.mu;
  EffectiveEstimate out;
  out.c = c;
  out.eq = e;
  out.mu_star_ratio = mu_star(m);
  out.Lambda = 1.0 - e.mu_eq_ratio;
  const double L = out.Lambda;
  const double den = 2.0 * (3.0 * la + 8.0 * mu) * (1.0 - (1.0 - c) * L) + (9.0 * la + 14.0 * mu);
  if (den == 0.0) throw DegenerateSystem("effective shear: vanishing denominator");
  out.mu_ef_ratio = 1.0 - 15.0 * c * (la + 2.0 * mu) * L / den;
  out.mu_ef_ratio_maxwell = maxwell_shear(e.mu_eq_ratio, out.mu_star_ratio, c);
  const double gap = std::abs(out.mu_ef_ratio - out.mu_ef_ratio_maxwell);
  if (gap > 1e-10 * std::max(1.0, std::abs(out.mu_ef_ratio)))
    throw std::logic_error("effective shear: closed and Maxwell routes disagree by " +
                           std::to_string(gap));
  return out;
}

inline EffectiveEstimate effective_shear(const SphereProblem& p, double c) {
  return effective_shear_from(equivalent_inhomogeneity(p), p.matrix, c);
}

}  // namespace surfel
