#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "surfel/materials.hpp"

using namespace surfel;

TEST(Materials, ZeroSurfaceHasZeroDerivedTerms) {
  const DerivedSurface d = derive_surface(SurfaceParams{}, Geometry{});
  EXPECT_EQ(d.eta, 0.0);
  EXPECT_EQ(d.eta1, 0.0);
  EXPECT_EQ(d.eta2, 0.0);
  EXPECT_EQ(d.eta0, 0.0);
  EXPECT_EQ(d.gamma, 0.0);
}

TEST(Materials, AluminaSurfaceEta) {
  SurfaceParams s;
  s.mu0 = 0.030156;
  s.lambda0 = 0.060312;
  const DerivedSurface d = derive_surface(s, Geometry{1.0});
  EXPECT_NEAR(d.eta, 0.030156, 1e-15);
  EXPECT_NEAR(d.eta0, 2 * 0.030156 + 2 * 0.060312, 1e-15);
}

TEST(Materials, GammaCombinations) {
  SurfaceParams s;
  s.chi0 = 0.2;
  s.zeta0 = 0.1;
  const DerivedSurface d = derive_surface(s, Geometry{2.0});
  EXPECT_NEAR(d.gamma, (3 * 0.2 + 5 * 0.1) / 8.0, 1e-15);
  EXPECT_NEAR(d.gamma_disk, (2 * 0.2 + 0.1) / 8.0, 1e-15);
  const SurfaceParams g = with_gamma(SurfaceParams{}, 0.00028382, 3.0);
  EXPECT_NEAR(derive_surface(g, Geometry{3.0}).gamma, 0.00028382, 1e-18);
}

TEST(Materials, BulkIdentitiesRandom) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lmu(-3.0, 3.0), nu(-0.99, 0.499);
  for (int k = 0; k < 10000; ++k) {
    const BulkMaterial m{std::pow(10.0, lmu(rng)), nu(rng)};
    const DerivedBulk d = derive_bulk(m);
    EXPECT_NEAR(d.kappa, 3 - 4 * m.nu, 1e-14);
    // lambda = 2 mu nu / (1 - 2 nu), K3 = lambda + 2 mu / 3, K2 = lambda + mu
    const double lam = 2 * m.mu * m.nu / (1 - 2 * m.nu);
    EXPECT_NEAR(d.lambda / m.mu, lam / m.mu, 1e-9 * (1 + std::abs(lam / m.mu)));
    EXPECT_NEAR(d.K2 / m.mu, (lam + m.mu) / m.mu, 1e-9 * (1 + std::abs(lam / m.mu)));
    EXPECT_NEAR(lame_ratio(m.nu), lam / m.mu, 1e-9 * (1 + std::abs(lam / m.mu)));
  }
}

TEST(Materials, EtaSplitSumsToTwiceEta) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 0.1);
  for (int k = 0; k < 1000; ++k) {
    const SurfaceParams s{u(rng), u(rng), u(rng), u(rng), u(rng)};
    const DerivedSurface d = derive_surface(s, Geometry{0.5 + u(rng) * 10});
    EXPECT_NEAR(d.eta1 + d.eta2, 2 * d.eta, 1e-14);
  }
}

TEST(Materials, SurfaceTermsScaleWithRadius) {
  const SurfaceParams s{0.03, 0.06, 0.01, 0.002, 0.001};
  const DerivedSurface a = derive_surface(s, Geometry{1.0});
  const DerivedSurface b = derive_surface(s, Geometry{2.0});
  EXPECT_NEAR(b.eta, a.eta / 2, 1e-15);
  EXPECT_NEAR(b.eta0, a.eta0 / 2, 1e-15);
  EXPECT_NEAR(b.gamma, a.gamma / 8, 1e-15);
}

TEST(Materials, RejectsBadInput) {
  EXPECT_THROW(derive_bulk({1.0, 0.5}), InvalidInput);
  EXPECT_THROW(derive_bulk({1.0, -1.0}), InvalidInput);
  EXPECT_THROW(derive_bulk({-1.0, 0.3}), InvalidInput);
  EXPECT_THROW(derive_bulk({NAN, 0.3}), InvalidInput);
  EXPECT_THROW(derive_surface(SurfaceParams{}, Geometry{0.0}), InvalidInput);
  EXPECT_THROW(derive_surface(SurfaceParams{INFINITY, 0, 0, 0, 0}, Geometry{}), InvalidInput);
  EXPECT_NO_THROW(derive_bulk({0.0, 0.3}));
}
