#include "hyperjet/altforms.hpp"
#include "hyperjet/random.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <utility>

using namespace hyperjet;

namespace {

Rational leibniz(const CoDimOneForm& w, const std::vector<Vector>& vs) {
  std::vector<std::vector<Rational>> columns(1, std::vector<Rational>(w.coeffs().begin(), w.coeffs().end()));
  for (const auto& v : vs) columns.emplace_back(v.components().begin(), v.components().end());
  return oracle::determinant(columns);
}

}  // namespace

TEST(Contract, Examples) {
  const CoDimOneForm f = contract(Vector::basis(2, 1), TopForm{2, 1});
  EXPECT_EQ(f, CoDimOneForm({1, 0}));
  const std::vector<Vector> arg{Vector::basis(2, 2)};
  EXPECT_EQ(evaluate(f, arg), 1);
  EXPECT_EQ(contract(Vector(3), TopForm{3, make_rational(5, 2)}), CoDimOneForm(3));
  EXPECT_EQ(contract(Rational(2) * Vector::basis(3, 3), TopForm{3, 1}), CoDimOneForm({0, 0, 2}));
  EXPECT_THROW(contract(Vector(2), TopForm{3, 1}), std::invalid_argument);
}

TEST(Contract, Bilinear) {
  RandomSource rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const Vector v = rng.vector(3);
    const Rational a = rng.rational();
    const Rational b = rng.rational();
    EXPECT_EQ(contract(v, TopForm{3, a + b}), contract(v, TopForm{3, a}) + contract(v, TopForm{3, b}));
    EXPECT_EQ(contract(a * v, TopForm{3, b}), a * contract(v, TopForm{3, b}));
  }
}

TEST(Contract, IsomorphismRank) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(rank(contraction_matrix(n)), static_cast<std::size_t>(n));
}

TEST(Evaluate, Examples) {
  const std::vector<Vector> d1{Vector::basis(2, 1)};
  EXPECT_EQ(evaluate(CoDimOneForm({0, 1}), d1), -1);
  const Vector v{1, 2, 3};
  const std::vector<Vector> repeated{v, v};
  EXPECT_EQ(evaluate(CoDimOneForm({4, 5, 6}), repeated), 0);
  const std::vector<Vector> d23{Vector::basis(3, 2), Vector::basis(3, 3)};
  EXPECT_EQ(evaluate(CoDimOneForm::basis(3, 1), d23), 1);
  EXPECT_THROW(evaluate(CoDimOneForm(3), d1), std::invalid_argument);
}

TEST(Evaluate, MatchesLeibnizAndAlternates) {
  RandomSource rng(2);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      CoDimOneForm w(n);
      for (int i = 1; i <= n; ++i) w[i] = rng.rational();
      std::vector<Vector> vs;
      for (int c = 0; c + 1 < n; ++c) vs.push_back(rng.vector(n));
      const Rational value = evaluate(w, vs);
      EXPECT_EQ(value, leibniz(w, vs));
      if (n >= 3) {
        std::swap(vs[0], vs[1]);
        EXPECT_EQ(evaluate(w, vs), -value);
      }
    }
  }
}

TEST(Evaluate, DimensionOneTakesNoVectors) {
  EXPECT_EQ(evaluate(CoDimOneForm({make_rational(3, 4)}), std::vector<Vector>{}), make_rational(3, 4));
}

TEST(Restrict, Examples) {
  const CoDimOneForm w({2, -3, 5});
  EXPECT_EQ(restrict(w, std::vector<Vector>{Vector::basis(3, 2), Vector::basis(3, 3)}), 2);
  EXPECT_EQ(restrict(w, std::vector<Vector>{Vector::basis(3, 3), Vector::basis(3, 2)}), -2);
  EXPECT_EQ(restrict(CoDimOneForm(3), std::vector<Vector>{Vector::basis(3, 2), Vector::basis(3, 3)}), 0);
}

TEST(Restrict, RejectsDegenerateFrame) {
  const CoDimOneForm w({1, 1, 1});
  EXPECT_THROW(restrict(w, std::vector<Vector>{Vector{1, 2, 3}, Vector{2, 4, 6}}), std::domain_error);
  EXPECT_THROW(restrict(w, std::vector<Vector>{Vector{1, 2, 3}}), std::invalid_argument);
}

TEST(Restrict, LinearInForm) {
  RandomSource rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto frame = rng.frame(3);
    CoDimOneForm a(3), b(3);
    for (int i = 1; i <= 3; ++i) {
      a[i] = rng.rational();
      b[i] = rng.rational();
    }
    const Rational s = rng.rational();
    EXPECT_EQ(restrict(a + s * b, frame), restrict(a, frame) + s * restrict(b, frame));
  }
}
