#pragma once

// Seeded generators of random exact data for property checks.

#include "hyperjet/altforms.hpp"
#include "hyperjet/hyperstress.hpp"
#include "hyperjet/jet.hpp"
#include "hyperjet/polyfield.hpp"
#include "hyperjet/rational.hpp"
#include "hyperjet/symtensor.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace hyperjet {

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed = 0) : engine_(seed) {}

  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }

  /// p/q with |p| <= 9 and 1 <= q <= 6.
  Rational rational() { return make_rational(uniform_int(-9, 9), uniform_int(1, 6)); }

  /// Nonzero with probability `density`, otherwise zero.
  Rational sparse_rational(double density) { return coin(density) ? rational() : Rational(0); }

  MultiIndex multi_index(int n, std::size_t l) {
    std::vector<int> entries(l);
    for (auto& e : entries) e = uniform_int(1, n);
    return MultiIndex(n, std::move(entries));
  }

  Permutation permutation(std::size_t l) {
    std::vector<int> map(l);
    for (std::size_t i = 0; i < l; ++i) map[i] = static_cast<int>(i + 1);
    std::shuffle(map.begin(), map.end(), engine_);
    return Permutation(std::move(map));
  }

  DenseTensor dense(int n, std::size_t l, Variance variance) {
    DenseTensor t(n, l, variance);
    for (std::size_t off = 0; off < t.size(); ++off) t.at(off) = rational();
    return t;
  }

  SymTensor symmetric(int n, std::size_t l, Variance variance, Convention convention = Convention::Plain) {
    SymTensor t(n, l, variance, convention);
    for (std::size_t r = 0; r < t.size(); ++r) t.at(r) = rational();
    return t;
  }

  Vector vector(int n) {
    Vector v(n);
    for (int i = 1; i <= n; ++i) v[i] = rational();
    return v;
  }

  /// Polynomial of total degree <= `degree` with the given term density.
  Polynomial polynomial(int n, std::size_t degree, double density = 0.6) {
    Polynomial p(n);
    for (std::size_t l = 0; l <= degree; ++l) {
      for (const auto& index : enumerate_nondecreasing(n, l)) p.add_term(index, sparse_rational(density));
    }
    return p;
  }

  PolyField field(int n, int m, std::size_t degree, double density = 0.6) {
    PolyField w(n, m);
    for (int a = 1; a <= m; ++a) w[a] = polynomial(n, degree, density);
    return w;
  }

  Point point(int n) {
    Point x(static_cast<std::size_t>(n));
    for (auto& c : x) c = rational();
    return x;
  }

  JetElement jet(int n, int m, std::size_t k) {
    JetElement a(n, m, k, point(n));
    for (std::size_t l = 0; l <= k; ++l) {
      for (int alpha = 1; alpha <= m; ++alpha) {
        SymTensor& block = a.block(l, alpha);
        for (std::size_t r = 0; r < block.size(); ++r) block.at(r) = rational();
      }
    }
    return a;
  }

  JetCovector covector(int n, int m, std::size_t k) {
    JetCovector phi(n, m, k);
    for (std::size_t l = 0; l <= k; ++l) {
      for (const auto& index : enumerate_nondecreasing(n, l)) {
        for (int alpha = 1; alpha <= m; ++alpha) phi(alpha, index) = rational();
      }
    }
    return phi;
  }

  TractionHyperStress traction(int n, int m, std::size_t k) {
    TractionHyperStress sigma(n, m, k);
    for (std::size_t l = 0; l < k; ++l) {
      for (const auto& index : enumerate_nondecreasing(n, l)) {
        for (int alpha = 1; alpha <= m; ++alpha) {
          for (int j = 1; j <= n; ++j) sigma(alpha, index, j) = rational();
        }
      }
    }
    return sigma;
  }

  TractionStressField traction_field(int n, int m, std::size_t k, std::size_t degree, double density = 0.5) {
    TractionStressField sigma(n, m, k);
    for (std::size_t l = 0; l < k; ++l) {
      for (const auto& index : enumerate_nondecreasing(n, l)) {
        for (int alpha = 1; alpha <= m; ++alpha) {
          for (int j = 1; j <= n; ++j) sigma(alpha, index, j) = polynomial(n, degree, density);
        }
      }
    }
    return sigma;
  }

  VariationalStressField variational_field(int n, int m, std::size_t k, std::size_t degree, double density = 0.5) {
    VariationalStressField s(n, m, k);
    for (std::size_t l = 0; l <= k; ++l) {
      for (const auto& index : enumerate_nondecreasing(n, l)) {
        for (int alpha = 1; alpha <= m; ++alpha) s(alpha, index) = polynomial(n, degree, density);
      }
    }
    return s;
  }

  /// n-1 vectors spanning a hyperplane (resampled until nondegenerate).
  std::vector<Vector> frame(int n) {
    while (true) {
      std::vector<Vector> f;
      for (int i = 0; i + 1 < n; ++i) f.push_back(vector(n));
      if (frame_rank(f, n) == static_cast<std::size_t>(n - 1)) return f;
    }
  }

  /// Affine chart with invertible B and a polynomial frame change of degree <= frame_degree.
  ChartMap chart(int n, int m, std::size_t frame_degree) {
    ChartMap c;
    while (true) {
      c.linear = RationalMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < c.linear.rows(); ++i) {
        for (std::size_t j = 0; j < c.linear.cols(); ++j) c.linear(i, j) = rational();
      }
      if (determinant(c.linear) != 0) break;
    }
    c.shift = point(n);
    c.frame.assign(static_cast<std::size_t>(m), std::vector<Polynomial>(static_cast<std::size_t>(m), Polynomial(n)));
    for (auto& row : c.frame) {
      for (auto& p : row) p = polynomial(n, frame_degree);
    }
    return c;
  }

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hyperjet
