#pragma once

// Top-degree and codimension-one alternating forms on an n-dimensional space.
//
// Lambda^n is spanned by dx = dx^1 ^ ... ^ dx^n. Codimension-one forms are
// kept in the basis {d_i _| dx}, i = 1..n, so omega = omega^i (d_i _| dx).
// Since omega(v_2, ..., v_n) is linear in the coefficient vector,
//   omega(v_2, ..., v_n) = dx(w, v_2, ..., v_n) = det[w | v_2 | ... | v_n]
// with w = omega^i d_i.

#include "hyperjet/linalg.hpp"
#include "hyperjet/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperjet {

/// Tangent vector v = v^i d_i.
class Vector {
 public:
  explicit Vector(int n) : components_(checked(n)) {}
  explicit Vector(std::vector<Rational> components) : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("vector needs n >= 1 components");
  }
  Vector(std::initializer_list<Rational> components) : Vector(std::vector<Rational>(components)) {}

  static Vector basis(int n, int axis) {
    Vector v(n);
    v[axis] = 1;
    return v;
  }

  int dim() const noexcept { return static_cast<int>(components_.size()); }
  /// v^i for 1-based i.
  Rational& operator[](int axis) { return components_.at(static_cast<std::size_t>(axis - 1)); }
  const Rational& operator[](int axis) const { return components_.at(static_cast<std::size_t>(axis - 1)); }
  std::span<const Rational> components() const noexcept { return components_; }

  friend Vector operator*(const Rational& s, Vector v) {
    for (auto& c : v.components_) c *= s;
    return v;
  }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  static std::size_t checked(int n) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
    return static_cast<std::size_t>(n);
  }
  std::vector<Rational> components_;
};

/// theta = coeff * dx.
struct TopForm {
  int n = 1;
  Rational coeff;

  friend bool operator==(const TopForm&, const TopForm&) = default;
};

/// omega = omega^i (d_i _| dx).
class CoDimOneForm {
 public:
  explicit CoDimOneForm(int n) : coeffs_(n >= 1 ? static_cast<std::size_t>(n) : 0) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
  }
  explicit CoDimOneForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("form needs n >= 1 coefficients");
  }

  /// The basis element d_i _| dx.
  static CoDimOneForm basis(int n, int axis) {
    CoDimOneForm f(n);
    f[axis] = 1;
    return f;
  }

  int dim() const noexcept { return static_cast<int>(coeffs_.size()); }
  Rational& operator[](int axis) { return coeffs_.at(static_cast<std::size_t>(axis - 1)); }
  const Rational& operator[](int axis) const { return coeffs_.at(static_cast<std::size_t>(axis - 1)); }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  friend CoDimOneForm operator+(CoDimOneForm a, const CoDimOneForm& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("adding forms of different dimension");
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
  }
  friend CoDimOneForm operator*(const Rational& s, CoDimOneForm f) {
    for (auto& c : f.coeffs_) c *= s;
    return f;
  }
  friend bool operator==(const CoDimOneForm&, const CoDimOneForm&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// v _| theta. Bilinear; (v _| theta)^i = v^i * coeff(theta).
inline CoDimOneForm contract(const Vector& v, const TopForm& theta) {
  if (v.dim() != theta.n) throw std::invalid_argument("contract: dimension mismatch");
  CoDimOneForm out(v.dim());
  for (int i = 1; i <= v.dim(); ++i) out[i] = v[i] * theta.coeff;
  return out;
}

/// Matrix of the linear map V (x) Lambda^n -> Lambda^{n-1} induced by
/// contract, in the bases {d_i (x) dx} and {d_i _| dx}.
inline RationalMatrix contraction_matrix(int n) {
  RationalMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  const TopForm dx{n, 1};
  for (int col = 1; col <= n; ++col) {
    const CoDimOneForm image = contract(Vector::basis(n, col), dx);
    for (int row = 1; row <= n; ++row) {
      m(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(col - 1)) = image[row];
    }
  }
  return m;
}

namespace detail {

inline RationalMatrix form_matrix(const CoDimOneForm& form, std::span<const Vector> vectors) {
  const int n = form.dim();
  if (static_cast<int>(vectors.size()) != n - 1) {
    throw std::invalid_argument("a codimension-one form on R^" + std::to_string(n) + " takes " +
                                std::to_string(n - 1) + " vectors, got " + std::to_string(vectors.size()));
  }
  RationalMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) m(static_cast<std::size_t>(i - 1), 0) = form[i];
  for (std::size_t c = 0; c < vectors.size(); ++c) {
    if (vectors[c].dim() != n) throw std::invalid_argument("vector dimension does not match form");
    for (int i = 1; i <= n; ++i) m(static_cast<std::size_t>(i - 1), c + 1) = vectors[c][i];
  }
  return m;
}

}  // namespace detail

/// omega(v_2, ..., v_n), alternating and multilinear in the arguments.
inline Rational evaluate(const CoDimOneForm& form, std::span<const Vector> vectors) {
  return determinant(detail::form_matrix(form, vectors));
}

/// Rank of the frame as an n x (n-1) matrix.
inline std::size_t frame_rank(std::span<const Vector> frame, int n) {
  RationalMatrix m(static_cast<std::size_t>(n), frame.size());
  for (std::size_t c = 0; c < frame.size(); ++c) {
    if (frame[c].dim() != n) throw std::invalid_argument("frame vector dimension mismatch");
    for (int i = 1; i <= n; ++i) m(static_cast<std::size_t>(i - 1), c) = frame[c][i];
  }
  return rank(std::move(m));
}

/// Restriction to the hyperplane spanned by `frame`, reported as the single
/// coefficient of the restricted form against that ordered frame.
inline Rational restrict(const CoDimOneForm& form, std::span<const Vector> frame) {
  const int n = form.dim();
  if (static_cast<int>(frame.size()) != n - 1) {
    throw std::invalid_argument("restrict: frame must have n-1 = " + std::to_string(n - 1) + " vectors");
  }
  if (frame_rank(frame, n) != static_cast<std::size_t>(n - 1)) {
    throw std::domain_error("restrict: frame does not span a hyperplane");
  }
  return evaluate(form, frame);
}

}  // namespace hyperjet
