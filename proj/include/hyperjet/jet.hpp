#pragma once

// k-jets of polynomial sections and their duals.
//
// A JetElement at x stores, for every order l <= k and fiber index alpha, the
// covariant symmetric block A^alpha_I (|I| = l) in the Plain convention. With
// the arrow basis <-dx^(I) these components are exactly the partial
// derivatives w^alpha_{,I}(x). A JetCovector stores phi^I_alpha against the
// dual basis d_(I) (x) e^alpha, so phi(A) = phi^I_alpha A^alpha_I is a plain
// sum of products.

#include "hyperjet/linalg.hpp"
#include "hyperjet/multiindex.hpp"
#include "hyperjet/polyfield.hpp"
#include "hyperjet/rational.hpp"
#include "hyperjet/symtensor.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperjet {

class JetElement {
 public:
  JetElement(int n, int m, std::size_t k, Point x) : n_(n), m_(m), k_(k), x_(std::move(x)) {
    if (n < 1 || m < 1) throw std::invalid_argument("jet needs n >= 1 and m >= 1");
    if (x_.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("jet source point has wrong dimension");
    blocks_.reserve(k + 1);
    for (std::size_t l = 0; l <= k; ++l) {
      blocks_.emplace_back(static_cast<std::size_t>(m), SymTensor(n, l, Variance::Covariant, Convention::Plain));
    }
  }

  int dim() const noexcept { return n_; }
  int fiber_dim() const noexcept { return m_; }
  std::size_t order() const noexcept { return k_; }
  const Point& point() const noexcept { return x_; }

  /// Block of order l for fiber index alpha (1-based).
  const SymTensor& block(std::size_t l, int alpha) const { return blocks_.at(l).at(fiber_slot(alpha)); }
  SymTensor& block(std::size_t l, int alpha) { return blocks_.at(l).at(fiber_slot(alpha)); }

  /// A^alpha_I.
  Rational& operator()(int alpha, const CardinalityIndex& index) { return block(checked_degree(index), alpha)[index]; }
  const Rational& operator()(int alpha, const CardinalityIndex& index) const {
    return block(checked_degree(index), alpha)[index];
  }

  friend bool operator==(const JetElement&, const JetElement&) = default;

 private:
  std::size_t fiber_slot(int alpha) const {
    if (alpha < 1 || alpha > m_) throw std::out_of_range("fiber index outside 1..m");
    return static_cast<std::size_t>(alpha - 1);
  }
  std::size_t checked_degree(const CardinalityIndex& index) const {
    if (index.degree() > k_) throw std::out_of_range("multi-index degree exceeds jet order");
    return index.degree();
  }

  int n_;
  int m_;
  std::size_t k_;
  Point x_;
  std::vector<std::vector<SymTensor>> blocks_;
};

/// Linear functional on J^k_x, phi = phi^I_alpha d_(I) (x) e^alpha.
class JetCovector {
 public:
  JetCovector(int n, int m, std::size_t k) : n_(n), m_(m), k_(k) {
    if (n < 1 || m < 1) throw std::invalid_argument("jet covector needs n >= 1 and m >= 1");
    blocks_.reserve(k + 1);
    for (std::size_t l = 0; l <= k; ++l) {
      blocks_.emplace_back(static_cast<std::size_t>(m), std::vector<Rational>(symmetric_dimension(n, l)));
    }
  }

  /// Dual basis element picking the slot (alpha, I).
  static JetCovector basis(int n, int m, std::size_t k, int alpha, const CardinalityIndex& index) {
    JetCovector phi(n, m, k);
    phi(alpha, index) = 1;
    return phi;
  }

  int dim() const noexcept { return n_; }
  int fiber_dim() const noexcept { return m_; }
  std::size_t order() const noexcept { return k_; }

  /// phi^I_alpha.
  Rational& operator()(int alpha, const CardinalityIndex& index) { return slot(alpha, index); }
  const Rational& operator()(int alpha, const CardinalityIndex& index) const {
    return const_cast<JetCovector*>(this)->slot(alpha, index);
  }

  /// Raw rank-ordered block for order l and fiber index alpha.
  const std::vector<Rational>& block(std::size_t l, int alpha) const {
    return blocks_.at(l).at(static_cast<std::size_t>(alpha - 1));
  }

  friend bool operator==(const JetCovector&, const JetCovector&) = default;

 private:
  Rational& slot(int alpha, const CardinalityIndex& index) {
    if (alpha < 1 || alpha > m_) throw std::out_of_range("fiber index outside 1..m");
    if (index.dim() != n_ || index.degree() > k_) throw std::out_of_range("multi-index does not fit covector shape");
    return blocks_[index.degree()][static_cast<std::size_t>(alpha - 1)][static_cast<std::size_t>(rank(index))];
  }

  int n_;
  int m_;
  std::size_t k_;
  std::vector<std::vector<std::vector<Rational>>> blocks_;
};

/// j^k_x w: block-l component (alpha, I) is w^alpha_{,I}(x).
inline JetElement jet_of(const PolyField& field, const Point& x, std::size_t k) {
  if (x.size() != static_cast<std::size_t>(field.dim())) throw std::invalid_argument("jet_of: point dimension mismatch");
  JetElement jet(field.dim(), field.fiber_dim(), k, x);
  for (int alpha = 1; alpha <= field.fiber_dim(); ++alpha) {
    for (std::size_t l = 0; l <= k; ++l) {
      SymTensor& block = jet.block(l, alpha);
      for (std::size_t r = 0; r < block.size(); ++r) {
        block.at(r) = field[alpha].derive(unrank(field.dim(), l, r)).eval(x);
      }
    }
  }
  return jet;
}

/// pi^k_l: keeps blocks 0..l.
inline JetElement truncate(const JetElement& jet, std::size_t l) {
  if (l > jet.order()) {
    throw std::invalid_argument("truncate: target order " + std::to_string(l) + " exceeds jet order " +
                                std::to_string(jet.order()));
  }
  JetElement out(jet.dim(), jet.fiber_dim(), l, jet.point());
  for (int alpha = 1; alpha <= jet.fiber_dim(); ++alpha) {
    for (std::size_t d = 0; d <= l; ++d) out.block(d, alpha) = jet.block(d, alpha);
  }
  return out;
}

inline const Point& source(const JetElement& jet) { return jet.point(); }

/// Taylor representative: w^alpha = sum_I A^alpha_I / I! (x - x0)^I.
inline PolyField realize(const JetElement& jet) {
  PolyField field(jet.dim(), jet.fiber_dim());
  Point minus_x0 = jet.point();
  for (auto& c : minus_x0) c = -c;
  for (int alpha = 1; alpha <= jet.fiber_dim(); ++alpha) {
    Polynomial in_h(jet.dim());
    for (std::size_t l = 0; l <= jet.order(); ++l) {
      const SymTensor& block = jet.block(l, alpha);
      for (std::size_t r = 0; r < block.size(); ++r) {
        const CardinalityIndex index = unrank(jet.dim(), l, r);
        in_h.add_term(index, block.at(r) / Rational(mi_factorial(index)));
      }
    }
    field[alpha] = in_h.shifted(minus_x0);
  }
  return field;
}

/// phi(A) = sum over alpha and 0 <= |I| <= k of phi^I_alpha A^alpha_I.
inline Rational pair_jet(const JetCovector& covector, const JetElement& jet) {
  if (covector.dim() != jet.dim() || covector.fiber_dim() != jet.fiber_dim() || covector.order() != jet.order()) {
    throw std::invalid_argument("pair_jet: shape mismatch");
  }
  Rational sum = 0;
  for (int alpha = 1; alpha <= jet.fiber_dim(); ++alpha) {
    for (std::size_t l = 0; l <= jet.order(); ++l) {
      const auto& phi = covector.block(l, alpha);
      const SymTensor& a = jet.block(l, alpha);
      for (std::size_t r = 0; r < phi.size(); ++r) sum += phi[r] * a.at(r);
    }
  }
  return sum;
}

/// Affine base chart x' = B x + c together with a fiber frame change
/// w^alpha' = A^alpha'_alpha(x) w^alpha, A given as polynomials in the old
/// coordinates x.
struct ChartMap {
  RationalMatrix linear;
  std::vector<Rational> shift;
  std::vector<std::vector<Polynomial>> frame;  // frame[alpha'-1][alpha-1]

  static ChartMap identity(int n, int m) {
    ChartMap chart{RationalMatrix::identity(static_cast<std::size_t>(n)), std::vector<Rational>(static_cast<std::size_t>(n)), {}};
    chart.frame.assign(static_cast<std::size_t>(m), std::vector<Polynomial>(static_cast<std::size_t>(m), Polynomial(n)));
    for (int a = 0; a < m; ++a) chart.frame[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = Polynomial::constant(n, 1);
    return chart;
  }

  int dim() const noexcept { return static_cast<int>(linear.rows()); }
  int fiber_dim() const noexcept { return static_cast<int>(frame.size()); }

  void validate() const {
    const auto n = linear.rows();
    if (n == 0 || linear.cols() != n || shift.size() != n) throw std::invalid_argument("chart: affine part has inconsistent shape");
    for (const auto& row : frame) {
      if (row.size() != frame.size()) throw std::invalid_argument("chart: frame change must be m x m");
      for (const auto& p : row) {
        if (p.dim() != static_cast<int>(n)) throw std::invalid_argument("chart: frame polynomial has wrong dimension");
      }
    }
    if (frame.empty()) throw std::invalid_argument("chart: empty frame change");
  }

  Point apply(const Point& x) const {
    Point y = linear.apply(x);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += shift[i];
    return y;
  }
};

/// second o first: x'' = B2 (B1 x + c1) + c2, frame A2(x'(x)) A1(x).
inline ChartMap compose(const ChartMap& second, const ChartMap& first) {
  first.validate();
  second.validate();
  if (first.dim() != second.dim() || first.fiber_dim() != second.fiber_dim()) {
    throw std::invalid_argument("compose: chart shapes differ");
  }
  ChartMap out;
  out.linear = second.linear * first.linear;
  out.shift = second.linear.apply(first.shift);
  for (std::size_t i = 0; i < out.shift.size(); ++i) out.shift[i] += second.shift[i];
  const int n = first.dim();
  const auto m = static_cast<std::size_t>(first.fiber_dim());
  out.frame.assign(m, std::vector<Polynomial>(m, Polynomial(n)));
  for (std::size_t a2 = 0; a2 < m; ++a2) {
    for (std::size_t a1 = 0; a1 < m; ++a1) {
      const Polynomial pulled = second.frame[a2][a1].compose_affine(first.linear, first.shift);
      for (std::size_t a0 = 0; a0 < m; ++a0) {
        out.frame[a2][a0] += pulled * first.frame[a1][a0];
      }
    }
  }
  return out;
}

/// Chart change of a 1-jet:
///   w'^a'      = A^a'_a w^a
///   w'^a'_{,i'} = A^a'_{a,j} x^j_{,i'} w^a + A^a'_a w^a_{,j} x^j_{,i'}
/// with x^j_{,i'} = (B^-1)^j_i' for the affine base chart.
inline JetElement transform_1jet(const JetElement& jet, const ChartMap& chart) {
  if (jet.order() != 1) throw std::invalid_argument("transform_1jet: jet order must be 1");
  chart.validate();
  if (chart.dim() != jet.dim() || chart.fiber_dim() != jet.fiber_dim()) {
    throw std::invalid_argument("transform_1jet: chart shape does not match jet");
  }
  const RationalMatrix inv = inverse(chart.linear);  // throws on singular B
  const int n = jet.dim();
  const int m = jet.fiber_dim();
  const Point& x = jet.point();

  JetElement out(n, m, 1, chart.apply(x));
  for (int ap = 1; ap <= m; ++ap) {
    Rational value = 0;
    std::vector<Rational> grad(static_cast<std::size_t>(n));
    for (int a = 1; a <= m; ++a) {
      const Polynomial& frame = chart.frame[static_cast<std::size_t>(ap - 1)][static_cast<std::size_t>(a - 1)];
      const Rational frame_at_x = frame.eval(x);
      const Rational w = jet(a, CardinalityIndex::zero(n));
      value += frame_at_x * w;
      for (int j = 1; j <= n; ++j) {
        const CardinalityIndex dj = CardinalityIndex::unit(n, j);
        const Rational coupled = frame.derive(dj).eval(x) * w + frame_at_x * jet(a, dj);
        for (int ip = 1; ip <= n; ++ip) {
          grad[static_cast<std::size_t>(ip - 1)] += coupled * inv(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(ip - 1));
        }
      }
    }
    out(ap, CardinalityIndex::zero(n)) = value;
    for (int ip = 1; ip <= n; ++ip) out(ap, CardinalityIndex::unit(n, ip)) = grad[static_cast<std::size_t>(ip - 1)];
  }
  return out;
}

}  // namespace hyperjet
