#pragma once

#include <cmath>
#include <string>

#include "surfel/errors.hpp"

namespace surfel {

struct BulkMaterial {
  double mu = 1.0;
  double nu = 0.3;
};

struct DerivedBulk {
  double kappa = 0.0;   // plane-strain Kolosov constant
  double K2 = 0.0;      // 2D bulk modulus
  double K3 = 0.0;      // 3D bulk modulus
  double lambda = 0.0;  // first Lame parameter
};

struct SurfaceParams {
  double mu0 = 0.0;
  double lambda0 = 0.0;
  double sigma0 = 0.0;  // surface tension
  double chi0 = 0.0;    // bending stiffnesses
  double zeta0 = 0.0;

  bool membrane_only() const { return chi0 == 0.0 && zeta0 == 0.0; }
};

// eta1/eta2 carry the bending term of the circular interface, gamma_disk,
// which is (2 chi0 + zeta0)/R^3; the sphere uses gamma = (3 chi0 + 5 zeta0)/R^3.
struct DerivedSurface {
  double eta = 0.0;
  double eta1 = 0.0;
  double eta2 = 0.0;
  double eta0 = 0.0;
  double gamma = 0.0;
  double gamma_disk = 0.0;
};

struct Geometry {
  double R = 1.0;
};

inline void validate(const BulkMaterial& m, const std::string& what = "material") {
  if (!std::isfinite(m.mu) || m.mu < 0.0)
    throw InvalidInput(what + ".mu must be finite and >= 0");
  if (!std::isfinite(m.nu) || m.nu <= -1.0 || m.nu >= 0.5)
    throw InvalidInput(what + ".nu must lie in (-1, 0.5)");
}

inline void validate(const SurfaceParams& s) {
  for (double v : {s.mu0, s.lambda0, s.sigma0, s.chi0, s.zeta0})
    if (!std::isfinite(v)) throw InvalidInput("surface parameters must be finite");
}

inline void validate(const Geometry& g) {
  if (!std::isfinite(g.R) || g.R <= 0.0) throw InvalidInput("radius R must be > 0");
}

inline DerivedBulk derive_bulk(const BulkMaterial& m) {
  validate(m);
  DerivedBulk d;
  d.kappa = 3.0 - 4.0 * m.nu;
  d.K2 = 2.0 * m.mu / (d.kappa - 1.0);
  d.K3 = (2.0 / 3.0) * m.mu * (1.0 + m.nu) / (1.0 - 2.0 * m.nu);
  d.lambda = d.K3 - 2.0 * m.mu / 3.0;
  return d;
}

// lambda/mu written through nu so that mu = 0 stays regular.
inline double lame_ratio(double nu) { return 2.0 * nu / (1.0 - 2.0 * nu); }

inline DerivedSurface derive_surface(const SurfaceParams& s, const Geometry& g) {
  validate(s);
  validate(g);
  const double R = g.R;
  DerivedSurface d;
  d.eta = (2.0 * s.mu0 + s.lambda0) / (4.0 * R);
  d.gamma = (3.0 * s.chi0 + 5.0 * s.zeta0) / (R * R * R);
  d.gamma_disk = (2.0 * s.chi0 + s.zeta0) / (R * R * R);
  d.eta1 = d.eta + d.gamma_disk + s.sigma0 / (4.0 * R);
  d.eta2 = d.eta - d.gamma_disk - s.sigma0 / (4.0 * R);
  d.eta0 = (2.0 * s.mu0 + 2.0 * s.lambda0 + s.sigma0) / R;
  return d;
}

// Bending stiffnesses that realise a prescribed sphere gamma (all in zeta0).
inline SurfaceParams with_gamma(SurfaceParams s, double gamma, double R) {
  s.chi0 = 0.0;
  s.zeta0 = gamma * R * R * R / 5.0;
  return s;
}

}  // namespace surfel
