#include "hyperjet/hyperstress.hpp"
#include "hyperjet/random.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

using namespace hyperjet;

namespace {

CardinalityIndex c(std::vector<int> counts) { return CardinalityIndex(std::move(counts)); }

PolyField scalar_field(Polynomial p) { return PolyField(std::vector<Polynomial>{std::move(p)}); }

// Volume integral of d_j(sigma^{J j}_alpha w^alpha_{,J}); equals the outward
// flux by the divergence theorem.
Rational divergence_integral(const TractionStressField& sigma, const PolyField& w, const BoxRegion& box) {
  const int n = w.dim();
  Polynomial div(n);
  for (std::size_t l = 0; l < sigma.order(); ++l) {
    for (const auto& idx : enumerate_nondecreasing(n, l)) {
      for (int alpha = 1; alpha <= w.fiber_dim(); ++alpha) {
        for (int j = 1; j <= n; ++j) {
          div += (sigma(alpha, idx, j) * w[alpha].derive(idx)).derive(CardinalityIndex::unit(n, j));
        }
      }
    }
  }
  return integrate(div, box);
}

}  // namespace

TEST(PowerDensity, Examples) {
  const JetElement a = jet_of(scalar_field(Polynomial::monomial(c({1, 1}))), Point{0, 0}, 2);
  VariationalHyperStress s(2, 1, 2);
  s(1, c({1, 1})) = 1;
  EXPECT_EQ(power_density(s, a), 1);
  EXPECT_EQ(power_density(VariationalHyperStress(2, 1, 2), a), 0);
  EXPECT_THROW(power_density(VariationalHyperStress(2, 1, 1), a), std::invalid_argument);
}

TEST(PowerDensity, EqualsCovectorPairing) {
  RandomSource rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto sf = rng.variational_field(2, 2, 2, 0);
    const VariationalHyperStress s = evaluate_at(sf, Point{0, 0});
    const JetElement a = rng.jet(2, 2, 2);
    EXPECT_EQ(power_density(s, a), pair_jet(to_covector(s), a));
  }
}

TEST(TotalPower, Examples) {
  VariationalStressField s(2, 1, 0);
  s(1, CardinalityIndex::zero(2)) = Polynomial::constant(2, 5);
  EXPECT_EQ(total_power(s, scalar_field(Polynomial::constant(2, 1)), BoxRegion::unit(2)), 5);

  VariationalStressField slope(2, 1, 1);
  slope(1, c({1, 0})) = Polynomial::constant(2, 1);
  EXPECT_EQ(total_power(slope, scalar_field(Polynomial::variable(2, 1)), BoxRegion::unit(2)), 1);
}

TEST(TotalPower, ExactAgainstHandIntegral) {
  // S^0 = x^2, w = x^1 x^2 on [0,2] x [1,3]: integral of x (y^2) = 2 * 26/3.
  VariationalStressField s(2, 1, 0);
  s(1, CardinalityIndex::zero(2)) = Polynomial::variable(2, 2);
  const BoxRegion box{{0, 1}, {2, 3}, 1};
  EXPECT_EQ(total_power(s, scalar_field(Polynomial::monomial(c({1, 1}))), box), make_rational(52, 3));
}

TEST(TotalPower, MidpointConvergesQuadratically) {
  VariationalStressField s(2, 1, 0);
  s(1, CardinalityIndex::zero(2)) = Polynomial::monomial(c({2, 0}));
  const PolyField w = scalar_field(Polynomial::monomial(c({0, 2})) + Polynomial::constant(2, 1));
  BoxRegion box = BoxRegion::unit(2);
  const double exact = to_double(total_power(s, w, box));
  box.subdivisions = 8;
  const double e1 = std::abs(total_power_midpoint(s, w, box) - exact);
  box.subdivisions = 16;
  const double e2 = std::abs(total_power_midpoint(s, w, box) - exact);
  EXPECT_GT(e1, 0.0);
  EXPECT_NEAR(std::log2(e1 / e2), 2.0, 0.15);
}

TEST(TractionDensity, Examples) {
  TractionHyperStress sigma(3, 1, 1);
  sigma(1, CardinalityIndex::zero(3), 1) = 5;
  JetElement a(3, 1, 0, Point{0, 0, 0});
  a(1, CardinalityIndex::zero(3)) = 2;
  EXPECT_EQ(traction_density(sigma, a), CoDimOneForm({10, 0, 0}));
  EXPECT_EQ(traction_density(TractionHyperStress(3, 1, 1), a), CoDimOneForm(3));
  EXPECT_THROW(traction_density(sigma, JetElement(3, 1, 1, Point{0, 0, 0})), std::invalid_argument);
}

TEST(TractionDensity, FirstOrderCase) {
  RandomSource rng(2);
  const TractionHyperStress sigma = rng.traction(3, 2, 1);
  const JetElement a = rng.jet(3, 2, 0);
  const CoDimOneForm f = traction_density(sigma, a);
  for (int i = 1; i <= 3; ++i) {
    Rational expected = 0;
    for (int alpha = 1; alpha <= 2; ++alpha) expected += sigma(alpha, CardinalityIndex::zero(3), i) * a(alpha, CardinalityIndex::zero(3));
    EXPECT_EQ(f[i], expected);
  }
}

TEST(TractionDensity, MatchesDenseOracle) {
  RandomSource rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.uniform_int(1, 3);
    const int m = rng.uniform_int(1, 2);
    const auto k = static_cast<std::size_t>(rng.uniform_int(1, 3));
    std::vector<std::vector<DenseTensor>> dense(k);
    std::vector<std::vector<oracle::Dense>> d(k);
    for (std::size_t l = 0; l < k; ++l) {
      for (int alpha = 1; alpha <= m; ++alpha) {
        dense[l].push_back(rng.dense(n, l + 1, Variance::Contravariant));
        oracle::Dense od;
        for (std::size_t off = 0; off < dense[l].back().size(); ++off) {
          od[dense[l].back().index_at(off).entries()] = dense[l].back().at(off);
        }
        d[l].push_back(std::move(od));
      }
    }
    const JetElement a = rng.jet(n, m, k - 1);
    std::vector<std::vector<oracle::Classes>> jet(k);
    for (std::size_t l = 0; l < k; ++l) {
      for (int alpha = 1; alpha <= m; ++alpha) {
        oracle::Classes cl;
        for (const auto& idx : enumerate_nondecreasing(n, l)) cl[idx.canonical().entries()] = a(alpha, idx);
        jet[l].push_back(std::move(cl));
      }
    }
    const auto expected = oracle::traction_density(d, jet, n);
    const CoDimOneForm f = traction_density(traction_from_dense(n, m, k, dense), a);
    EXPECT_EQ(std::vector<Rational>(f.coeffs().begin(), f.coeffs().end()), expected);
  }
}

TEST(TractionDense, AlmostSymmetryRoundTrip) {
  RandomSource rng(4);
  const TractionHyperStress sigma = rng.traction(3, 2, 3);
  const auto dense = traction_to_dense(sigma);
  EXPECT_EQ(traction_from_dense(3, 2, 3, dense), sigma);
  EXPECT_EQ(traction_to_dense(traction_from_dense(3, 2, 3, dense)), dense);
  // j stays free: a dense block of degree 2 need not be symmetric.
  bool any_asymmetric = false;
  for (const auto& row : dense) {
    for (const auto& block : row) any_asymmetric = any_asymmetric || (block.degree() >= 2 && !block.is_symmetric());
  }
  EXPECT_TRUE(any_asymmetric);
}

TEST(Cauchy, Examples) {
  RandomSource rng(5);
  const TractionHyperStress sigma = rng.traction(3, 2, 2);
  const std::vector<Vector> frame{Vector::basis(3, 2), Vector::basis(3, 3)};
  const HyperTraction t = cauchy_traction(sigma, frame);
  EXPECT_EQ(t.order(), 2u);
  for (std::size_t l = 0; l < 2; ++l) {
    for (const auto& idx : enumerate_nondecreasing(3, l)) {
      for (int alpha = 1; alpha <= 2; ++alpha) EXPECT_EQ(t.slots(alpha, idx), sigma(alpha, idx, 1));
    }
  }
  EXPECT_EQ(cauchy_traction(TractionHyperStress(3, 2, 2), frame), HyperTraction{JetCovector(3, 2, 1)});
  const std::vector<Vector> flipped{Vector::basis(3, 3), Vector::basis(3, 2)};
  const HyperTraction tf = cauchy_traction(sigma, flipped);
  for (const auto& idx : enumerate_nondecreasing(3, 1)) EXPECT_EQ(tf.slots(1, idx), -t.slots(1, idx));
  EXPECT_THROW(cauchy_traction(sigma, std::vector<Vector>{Vector{1, 0, 0}, Vector{2, 0, 0}}), std::domain_error);
}

TEST(Cauchy, Commutation) {
  RandomSource rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.uniform_int(1, 4);
    const int m = rng.uniform_int(1, 2);
    const auto k = static_cast<std::size_t>(rng.uniform_int(1, 3));
    const TractionHyperStress sigma = rng.traction(n, m, k);
    const JetElement a = rng.jet(n, m, k - 1);
    const auto frame = rng.frame(n);
    EXPECT_EQ(apply(cauchy_traction(sigma, frame), a), restrict(traction_density(sigma, a), frame));
  }
}

TEST(BoxFaces, OutwardOrientation) {
  for (int n = 1; n <= 4; ++n) {
    const auto faces = box_faces(BoxRegion::unit(n));
    ASSERT_EQ(faces.size(), static_cast<std::size_t>(2 * n));
    for (const auto& face : faces) {
      for (int j = 1; j <= n; ++j) {
        const Rational expected = j == face.axis ? Rational(face.sign) : Rational(0);
        EXPECT_EQ(restrict_outward(CoDimOneForm::basis(n, j), face), expected) << "n=" << n << " axis=" << face.axis;
      }
    }
  }
}

TEST(Flux, Examples) {
  TractionStressField sigma(3, 1, 1);
  sigma(1, CardinalityIndex::zero(3), 1) = Polynomial::constant(3, 1);
  EXPECT_EQ(boundary_power_flux(sigma, scalar_field(Polynomial::constant(3, 1)), BoxRegion::unit(3)), 0);

  TractionStressField s2(2, 1, 1);
  s2(1, CardinalityIndex::zero(2), 1) = Polynomial::constant(2, 1);
  EXPECT_EQ(boundary_power_flux(s2, scalar_field(Polynomial::variable(2, 1)), BoxRegion::unit(2)), 1);

  EXPECT_EQ(boundary_power_flux(TractionStressField(2, 1, 2), scalar_field(Polynomial::variable(2, 1)), BoxRegion::unit(2)), 0);
}

TEST(Flux, DivergenceTheorem) {
  RandomSource rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.uniform_int(1, 3);
    const int m = rng.uniform_int(1, 2);
    const auto k = static_cast<std::size_t>(rng.uniform_int(1, 2));
    const auto sigma = rng.traction_field(n, m, k, 2);
    const PolyField w = rng.field(n, m, 3);
    BoxRegion box = BoxRegion::unit(n);
    for (int i = 0; i < n; ++i) {
      box.lower[static_cast<std::size_t>(i)] = make_rational(rng.uniform_int(-3, 0), 2);
      box.upper[static_cast<std::size_t>(i)] = box.lower[static_cast<std::size_t>(i)] + make_rational(rng.uniform_int(1, 4), 3);
    }
    EXPECT_EQ(boundary_power_flux(sigma, w, box), divergence_integral(sigma, w, box));
  }
}

TEST(Flux, AdditiveOverSplitBoxes) {
  RandomSource rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto sigma = rng.traction_field(2, 1, 2, 2);
    const PolyField w = rng.field(2, 1, 3);
    const BoxRegion whole{{0, 0}, {2, 1}, 1};
    const BoxRegion left{{0, 0}, {make_rational(2, 3), 1}, 1};
    const BoxRegion right{{make_rational(2, 3), 0}, {2, 1}, 1};
    EXPECT_EQ(boundary_power_flux(sigma, w, whole),
              boundary_power_flux(sigma, w, left) + boundary_power_flux(sigma, w, right));
  }
}

TEST(Flux, MidpointApproachesExact) {
  RandomSource rng(9);
  const auto sigma = rng.traction_field(2, 1, 2, 2, 1.0);
  const PolyField w = rng.field(2, 1, 3, 1.0);
  const BoxRegion box = BoxRegion::unit(2);
  const double exact = to_double(boundary_power_flux(sigma, w, box));
  const double coarse = std::abs(boundary_power_flux_midpoint(sigma, w, box, 4) - exact);
  const double fine = std::abs(boundary_power_flux_midpoint(sigma, w, box, 32) - exact);
  EXPECT_LT(fine, coarse);
  EXPECT_LT(fine, 1e-2 * (1.0 + std::abs(exact)));
}

TEST(Box, Validation) {
  EXPECT_THROW((BoxRegion{{0, 1}, {1, 1}, 1}).validate(), std::invalid_argument);
  EXPECT_THROW((BoxRegion{{0}, {1, 1}, 1}).validate(), std::invalid_argument);
  EXPECT_THROW((BoxRegion{{0}, {1}, 0}).validate(), std::invalid_argument);
  EXPECT_EQ(integrate(Polynomial::monomial(c({2})), BoxRegion{{-1}, {2}, 1}), 3);
}
