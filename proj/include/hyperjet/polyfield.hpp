#pragma once

// Sparse multivariate polynomials u = a_I x^I over Q, keyed by cardinality
// index, and polynomial sections w = w^alpha e_alpha of a trivial rank-m bundle.

#include "hyperjet/linalg.hpp"
#include "hyperjet/multiindex.hpp"
#include "hyperjet/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperjet {

using Point = std::vector<Rational>;

inline Rational ipow(const Rational& base, int exponent) {
  Rational result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

class Polynomial {
 public:
  using Terms = std::map<CardinalityIndex, Rational>;

  explicit Polynomial(int n = 1) : n_(n) {
    if (n < 1) throw std::invalid_argument("polynomial dimension must be positive");
  }

  static Polynomial constant(int n, const Rational& c) {
    Polynomial p(n);
    p.add_term(CardinalityIndex::zero(n), c);
    return p;
  }

  static Polynomial monomial(const CardinalityIndex& exponents, const Rational& c = 1) {
    Polynomial p(exponents.dim());
    p.add_term(exponents, c);
    return p;
  }

  /// The coordinate function x^axis (1-based).
  static Polynomial variable(int n, int axis) { return monomial(CardinalityIndex::unit(n, axis)); }

  int dim() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Highest |I| with a nonzero coefficient; 0 for the zero polynomial.
  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& [exponents, coeff] : terms_) d = std::max(d, exponents.degree());
    return d;
  }

  Rational coeff(const CardinalityIndex& exponents) const {
    check(exponents);
    const auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const CardinalityIndex& exponents, const Rational& c) {
    check(exponents);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponents, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational eval(std::span<const Rational> x) const {
    check_point(x.size());
    Rational sum = 0;
    for (const auto& [exponents, coeff] : terms_) {
      Rational term = coeff;
      for (int r = 0; r < n_; ++r) term *= ipow(x[static_cast<std::size_t>(r)], exponents.counts()[static_cast<std::size_t>(r)]);
      sum += term;
    }
    return sum;
  }

  double eval_double(std::span<const double> x) const {
    check_point(x.size());
    double sum = 0.0;
    for (const auto& [exponents, coeff] : terms_) {
      double term = to_double(coeff);
      for (int r = 0; r < n_; ++r) {
        for (int e = 0; e < exponents.counts()[static_cast<std::size_t>(r)]; ++e) term *= x[static_cast<std::size_t>(r)];
      }
      sum += term;
    }
    return sum;
  }

  /// d_J u = sum_I I!/(I-J)! a_I x^(I-J); terms with J not <= I vanish.
  Polynomial derive(const CardinalityIndex& j) const {
    check(j);
    Polynomial out(n_);
    for (const auto& [exponents, coeff] : terms_) {
      if (!j.is_le(exponents)) continue;
      Integer falling = 1;
      for (int r = 0; r < n_; ++r) {
        const int top = exponents.counts()[static_cast<std::size_t>(r)];
        for (int k = 0; k < j.counts()[static_cast<std::size_t>(r)]; ++k) falling *= top - k;
      }
      out.add_term(exponents - j, coeff * Rational(falling));
    }
    return out;
  }

  /// x -> u(x + offset), re-expanded in x.
  Polynomial shifted(std::span<const Rational> offset) const {
    check_point(offset.size());
    Polynomial out(n_);
    for (const auto& [exponents, coeff] : terms_) {
      Polynomial term = constant(n_, coeff);
      for (int r = 0; r < n_; ++r) {
        Polynomial factor = variable(n_, r + 1) + constant(n_, offset[static_cast<std::size_t>(r)]);
        for (int e = 0; e < exponents.counts()[static_cast<std::size_t>(r)]; ++e) term = term * factor;
      }
      out += term;
    }
    return out;
  }

  /// Fixes x^axis = value. The result keeps dimension n with no x^axis terms.
  Polynomial substitute(int axis, const Rational& value) const {
    if (axis < 1 || axis > n_) throw std::out_of_range("substitute: axis outside 1..n");
    Polynomial out(n_);
    for (const auto& [exponents, coeff] : terms_) {
      auto counts = exponents.counts();
      const int e = counts[static_cast<std::size_t>(axis - 1)];
      counts[static_cast<std::size_t>(axis - 1)] = 0;
      out.add_term(CardinalityIndex(std::move(counts)), coeff * ipow(value, e));
    }
    return out;
  }

  /// x -> u(B x + c) for an affine change of variables of the same dimension.
  Polynomial compose_affine(const RationalMatrix& linear, std::span<const Rational> shift) const {
    if (linear.rows() != static_cast<std::size_t>(n_) || linear.cols() != static_cast<std::size_t>(n_)) {
      throw std::invalid_argument("compose_affine: matrix shape mismatch");
    }
    check_point(shift.size());
    std::vector<Polynomial> images;
    images.reserve(static_cast<std::size_t>(n_));
    for (int r = 0; r < n_; ++r) {
      Polynomial image = constant(n_, shift[static_cast<std::size_t>(r)]);
      for (int c = 0; c < n_; ++c) {
        image.add_term(CardinalityIndex::unit(n_, c + 1), linear(static_cast<std::size_t>(r), static_cast<std::size_t>(c)));
      }
      images.push_back(std::move(image));
    }
    Polynomial out(n_);
    for (const auto& [exponents, coeff] : terms_) {
      Polynomial term = constant(n_, coeff);
      for (int r = 0; r < n_; ++r) {
        for (int e = 0; e < exponents.counts()[static_cast<std::size_t>(r)]; ++e) term = term * images[static_cast<std::size_t>(r)];
      }
      out += term;
    }
    return out;
  }

  Polynomial& operator+=(const Polynomial& other) {
    check_same(other);
    for (const auto& [exponents, coeff] : other.terms_) add_term(exponents, coeff);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& other) {
    check_same(other);
    for (const auto& [exponents, coeff] : other.terms_) add_term(exponents, -coeff);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    Polynomial out(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    Polynomial out(p.n_);
    for (const auto& [exponents, coeff] : p.terms_) out.add_term(exponents, s * coeff);
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void check(const CardinalityIndex& exponents) const {
    if (exponents.dim() != n_) throw std::invalid_argument("exponent dimension does not match polynomial");
  }
  void check_point(std::size_t size) const {
    if (size != static_cast<std::size_t>(n_)) {
      throw std::invalid_argument("point has " + std::to_string(size) + " coordinates, polynomial expects " +
                                  std::to_string(n_));
    }
  }
  void check_same(const Polynomial& other) const {
    if (other.n_ != n_) throw std::invalid_argument("polynomials of different dimension");
  }

  int n_;
  Terms terms_;
};

inline Rational eval(const Polynomial& u, std::span<const Rational> x) { return u.eval(x); }
inline Polynomial derive(const Polynomial& u, const CardinalityIndex& j) { return u.derive(j); }

/// Taylor polynomial of order l at x0 in the displacement h:
/// g_I h^I with g_I = u_{,I}(x0) / I!, 0 <= |I| <= l.
inline Polynomial taylor(const Polynomial& u, std::span<const Rational> x0, std::size_t order) {
  Polynomial out(u.dim());
  for (std::size_t l = 0; l <= order; ++l) {
    for (const auto& index : enumerate_nondecreasing(u.dim(), l)) {
      const Rational value = u.derive(index).eval(x0);
      out.add_term(index, value / Rational(mi_factorial(index)));
    }
  }
  return out;
}

/// Polynomial section w = w^alpha e_alpha over R^n with fiber dimension m.
class PolyField {
 public:
  PolyField(int n, int m) : n_(n), components_(checked_fiber(m), Polynomial(n)) {}

  explicit PolyField(std::vector<Polynomial> components) : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("field needs m >= 1 components");
    n_ = components_.front().dim();
    for (const auto& c : components_) {
      if (c.dim() != n_) throw std::invalid_argument("field components of different dimension");
    }
  }

  int dim() const noexcept { return n_; }
  int fiber_dim() const noexcept { return static_cast<int>(components_.size()); }

  /// w^alpha for 1-based alpha.
  Polynomial& operator[](int alpha) { return components_.at(static_cast<std::size_t>(alpha - 1)); }
  const Polynomial& operator[](int alpha) const { return components_.at(static_cast<std::size_t>(alpha - 1)); }
  const std::vector<Polynomial>& components() const noexcept { return components_; }

  friend bool operator==(const PolyField&, const PolyField&) = default;

 private:
  static std::size_t checked_fiber(int m) {
    if (m < 1) throw std::invalid_argument("fiber dimension must be positive");
    return static_cast<std::size_t>(m);
  }

  int n_;
  std::vector<Polynomial> components_;
};

}  // namespace hyperjet
