#pragma once

// Variational and traction hyper-stresses, hyper-tractions, and exact power
// and flux integrals over coordinate boxes.
//
// Box-face orientation: on the face x^i = upper_i the frame is
// (d_1, ..., ^d_i, ..., d_n) with its first vector scaled by (-1)^(i-1), so
// that d_i _| dx restricts to +1. On x^i = lower_i the frame is negated.
// Opposite faces therefore cancel for constant forms. For n = 1 the frame is
// empty and the face sign multiplies the restricted value instead.

#include "hyperjet/altforms.hpp"
#include "hyperjet/jet.hpp"
#include "hyperjet/multiindex.hpp"
#include "hyperjet/polyfield.hpp"
#include "hyperjet/rational.hpp"
#include "hyperjet/symtensor.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace hyperjet {

/// S = S^I_alpha d_(I) (x) e^alpha (x) dx, 0 <= |I| <= k. `T` is Rational
/// for a value at a point and Polynomial for a field over x.
template <class T>
class BasicVariationalHyperStress {
 public:
  BasicVariationalHyperStress(int n, int m, std::size_t k) : n_(n), m_(m), k_(k) {
    if (n < 1 || m < 1) throw std::invalid_argument("hyper-stress needs n >= 1 and m >= 1");
    for (std::size_t l = 0; l <= k; ++l) {
      blocks_.emplace_back(static_cast<std::size_t>(m), std::vector<T>(symmetric_dimension(n, l), zero()));
    }
  }

  int dim() const noexcept { return n_; }
  int fiber_dim() const noexcept { return m_; }
  std::size_t order() const noexcept { return k_; }

  T& operator()(int alpha, const CardinalityIndex& index) { return slot(alpha, index); }
  const T& operator()(int alpha, const CardinalityIndex& index) const {
    return const_cast<BasicVariationalHyperStress*>(this)->slot(alpha, index);
  }

  friend bool operator==(const BasicVariationalHyperStress&, const BasicVariationalHyperStress&) = default;

 private:
  T zero() const {
    if constexpr (std::is_same_v<T, Polynomial>) {
      return Polynomial(n_);
    } else {
      return T(0);
    }
  }

  T& slot(int alpha, const CardinalityIndex& index) {
    if (alpha < 1 || alpha > m_) throw std::out_of_range("fiber index outside 1..m");
    if (index.dim() != n_ || index.degree() > k_) throw std::out_of_range("multi-index does not fit hyper-stress shape");
    return blocks_[index.degree()][static_cast<std::size_t>(alpha - 1)][static_cast<std::size_t>(rank(index))];
  }

  int n_;
  int m_;
  std::size_t k_;
  std::vector<std::vector<std::vector<T>>> blocks_;
};

using VariationalHyperStress = BasicVariationalHyperStress<Rational>;
using VariationalStressField = BasicVariationalHyperStress<Polynomial>;

/// sigma = sigma^{J j}_alpha d_(J) (x) e^alpha (x) (d_j _| dx), 0 <= |J| <= k-1.
/// Symmetric in J, unconstrained in j. Components are coefficients against
/// the symmetrized basis d_(J), so the action on a (k-1)-jet is
/// sigma^{J j}_alpha w^alpha_{,J}.
template <class T>
class BasicTractionHyperStress {
 public:
  BasicTractionHyperStress(int n, int m, std::size_t k) : n_(n), m_(m), k_(k) {
    if (n < 1 || m < 1) throw std::invalid_argument("traction hyper-stress needs n >= 1 and m >= 1");
    if (k < 1) throw std::invalid_argument("traction hyper-stress needs k >= 1");
    for (std::size_t l = 0; l < k; ++l) {
      blocks_.emplace_back(static_cast<std::size_t>(m),
                           std::vector<std::vector<T>>(symmetric_dimension(n, l),
                                                       std::vector<T>(static_cast<std::size_t>(n), zero())));
    }
  }

  int dim() const noexcept { return n_; }
  int fiber_dim() const noexcept { return m_; }
  /// k: the stress acts on (k-1)-jets.
  std::size_t order() const noexcept { return k_; }

  /// sigma^{J j}_alpha with 1-based alpha and j.
  T& operator()(int alpha, const CardinalityIndex& index, int j) { return slot(alpha, index, j); }
  const T& operator()(int alpha, const CardinalityIndex& index, int j) const {
    return const_cast<BasicTractionHyperStress*>(this)->slot(alpha, index, j);
  }

  friend bool operator==(const BasicTractionHyperStress&, const BasicTractionHyperStress&) = default;

 private:
  T zero() const {
    if constexpr (std::is_same_v<T, Polynomial>) {
      return Polynomial(n_);
    } else {
      return T(0);
    }
  }

  T& slot(int alpha, const CardinalityIndex& index, int j) {
    if (alpha < 1 || alpha > m_) throw std::out_of_range("fiber index outside 1..m");
    if (j < 1 || j > n_) throw std::out_of_range("contraction axis outside 1..n");
    if (index.dim() != n_ || index.degree() >= k_) throw std::out_of_range("multi-index does not fit traction shape");
    return blocks_[index.degree()][static_cast<std::size_t>(alpha - 1)][static_cast<std::size_t>(rank(index))]
                  [static_cast<std::size_t>(j - 1)];
  }

  int n_;
  int m_;
  std::size_t k_;
  std::vector<std::vector<std::vector<std::vector<T>>>> blocks_;
};

using TractionHyperStress = BasicTractionHyperStress<Rational>;
using TractionStressField = BasicTractionHyperStress<Polynomial>;

/// Builds a traction hyper-stress from dense almost-symmetric arrays.
/// dense[l][alpha-1] has degree l+1 over ordered (J, j) with j the last
/// position. Only J is symmetrized; j is left untouched.
inline TractionHyperStress traction_from_dense(int n, int m, std::size_t k,
                                               const std::vector<std::vector<DenseTensor>>& dense) {
  TractionHyperStress sigma(n, m, k);
  if (dense.size() != k) throw std::invalid_argument("traction_from_dense: need one block per order 0..k-1");
  for (std::size_t l = 0; l < k; ++l) {
    if (dense[l].size() != static_cast<std::size_t>(m)) throw std::invalid_argument("traction_from_dense: need m arrays per order");
    for (int alpha = 1; alpha <= m; ++alpha) {
      const DenseTensor& block = dense[l][static_cast<std::size_t>(alpha - 1)];
      if (block.dim() != n || block.degree() != l + 1) {
        throw std::invalid_argument("traction_from_dense: block has wrong shape");
      }
      // coefficient against d_(J) = sum of the dense entries over orderings of J
      for (std::size_t off = 0; off < block.size(); ++off) {
        const MultiIndex full = block.index_at(off);
        std::vector<int> head(full.entries().begin(), full.entries().end() - 1);
        const int j = full.entries().back();
        sigma(alpha, cardinality(MultiIndex(n, std::move(head))), j) += block.at(off);
      }
    }
  }
  return sigma;
}

/// Dense almost-symmetric arrays of sigma: entry (J, j) = sigma^{<J> j} / (|J|!/J!).
inline std::vector<std::vector<DenseTensor>> traction_to_dense(const TractionHyperStress& sigma) {
  const int n = sigma.dim();
  std::vector<std::vector<DenseTensor>> out;
  for (std::size_t l = 0; l < sigma.order(); ++l) {
    std::vector<DenseTensor> row;
    for (int alpha = 1; alpha <= sigma.fiber_dim(); ++alpha) {
      DenseTensor block(n, l + 1, Variance::Contravariant);
      for (std::size_t off = 0; off < block.size(); ++off) {
        const MultiIndex full = block.index_at(off);
        std::vector<int> head(full.entries().begin(), full.entries().end() - 1);
        const CardinalityIndex j_class = cardinality(MultiIndex(n, std::move(head)));
        block.at(off) = sigma(alpha, j_class, full.entries().back()) / Rational(multiplicity(j_class));
      }
      row.push_back(std::move(block));
    }
    out.push_back(std::move(row));
  }
  return out;
}

/// t in L(J^{k-1}W, Lambda^{n-1}T*dR), one scalar per slot (alpha, J) against
/// a fixed boundary frame.
struct HyperTraction {
  JetCovector slots;

  int dim() const noexcept { return slots.dim(); }
  int fiber_dim() const noexcept { return slots.fiber_dim(); }
  /// k of the originating traction hyper-stress; slots have order k-1.
  std::size_t order() const noexcept { return slots.order() + 1; }

  friend bool operator==(const HyperTraction&, const HyperTraction&) = default;
};

inline Rational apply(const HyperTraction& traction, const JetElement& jet) { return pair_jet(traction.slots, jet); }

inline JetCovector to_covector(const VariationalHyperStress& stress) {
  JetCovector phi(stress.dim(), stress.fiber_dim(), stress.order());
  for (std::size_t l = 0; l <= stress.order(); ++l) {
    for (const auto& index : enumerate_nondecreasing(stress.dim(), l)) {
      for (int alpha = 1; alpha <= stress.fiber_dim(); ++alpha) phi(alpha, index) = stress(alpha, index);
    }
  }
  return phi;
}

/// S(j^k w) / dx = S^I_alpha A^alpha_I.
inline Rational power_density(const VariationalHyperStress& stress, const JetElement& jet) {
  if (stress.dim() != jet.dim() || stress.fiber_dim() != jet.fiber_dim() || stress.order() != jet.order()) {
    throw std::invalid_argument("power_density: shape mismatch");
  }
  Rational sum = 0;
  for (std::size_t l = 0; l <= jet.order(); ++l) {
    for (int alpha = 1; alpha <= jet.fiber_dim(); ++alpha) {
      const SymTensor& block = jet.block(l, alpha);
      for (std::size_t r = 0; r < block.size(); ++r) {
        sum += stress(alpha, unrank(jet.dim(), l, r)) * block.at(r);
      }
    }
  }
  return sum;
}

inline VariationalHyperStress evaluate_at(const VariationalStressField& field, std::span<const Rational> x) {
  VariationalHyperStress out(field.dim(), field.fiber_dim(), field.order());
  for (std::size_t l = 0; l <= field.order(); ++l) {
    for (const auto& index : enumerate_nondecreasing(field.dim(), l)) {
      for (int alpha = 1; alpha <= field.fiber_dim(); ++alpha) out(alpha, index) = field(alpha, index).eval(x);
    }
  }
  return out;
}

inline TractionHyperStress evaluate_at(const TractionStressField& field, std::span<const Rational> x) {
  TractionHyperStress out(field.dim(), field.fiber_dim(), field.order());
  for (std::size_t l = 0; l < field.order(); ++l) {
    for (const auto& index : enumerate_nondecreasing(field.dim(), l)) {
      for (int alpha = 1; alpha <= field.fiber_dim(); ++alpha) {
        for (int j = 1; j <= field.dim(); ++j) out(alpha, index, j) = field(alpha, index, j).eval(x);
      }
    }
  }
  return out;
}

/// sigma . j^{k-1}w = sigma^{J i}_alpha w^alpha_{,J} (d_i _| dx).
inline CoDimOneForm traction_density(const TractionHyperStress& sigma, const JetElement& jet) {
  if (sigma.dim() != jet.dim() || sigma.fiber_dim() != jet.fiber_dim()) {
    throw std::invalid_argument("traction_density: shape mismatch");
  }
  if (jet.order() + 1 != sigma.order()) {
    throw std::invalid_argument("traction_density: jet order must be k-1 = " + std::to_string(sigma.order() - 1));
  }
  CoDimOneForm out(sigma.dim());
  for (std::size_t l = 0; l <= jet.order(); ++l) {
    for (int alpha = 1; alpha <= jet.fiber_dim(); ++alpha) {
      const SymTensor& block = jet.block(l, alpha);
      for (std::size_t r = 0; r < block.size(); ++r) {
        if (block.at(r) == 0) continue;
        const CardinalityIndex index = unrank(jet.dim(), l, r);
        for (int i = 1; i <= sigma.dim(); ++i) out[i] += sigma(alpha, index, i) * block.at(r);
      }
    }
  }
  return out;
}

/// Generalized Cauchy formula t = rho_dR o sigma: each slot (alpha, J) is the
/// restriction of the form sigma^{J .}_alpha to the frame.
inline HyperTraction cauchy_traction(const TractionHyperStress& sigma, std::span<const Vector> frame) {
  const int n = sigma.dim();
  if (frame.size() + 1 != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("cauchy_traction: frame must have n-1 vectors");
  }
  if (frame_rank(frame, n) != static_cast<std::size_t>(n - 1)) {
    throw std::domain_error("cauchy_traction: degenerate frame");
  }
  HyperTraction t{JetCovector(n, sigma.fiber_dim(), sigma.order() - 1)};
  for (std::size_t l = 0; l < sigma.order(); ++l) {
    for (const auto& index : enumerate_nondecreasing(n, l)) {
      for (int alpha = 1; alpha <= sigma.fiber_dim(); ++alpha) {
        CoDimOneForm form(n);
        for (int j = 1; j <= n; ++j) form[j] = sigma(alpha, index, j);
        t.slots(alpha, index) = restrict(form, frame);
      }
    }
  }
  return t;
}

/// Axis-aligned box [lower, upper] with a midpoint-quadrature resolution.
struct BoxRegion {
  std::vector<Rational> lower;
  std::vector<Rational> upper;
  int subdivisions = 1;

  static BoxRegion unit(int n, int subdivisions = 1) {
    return BoxRegion{std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)),
                     std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)), subdivisions};
  }

  int dim() const noexcept { return static_cast<int>(lower.size()); }

  void validate() const {
    if (lower.empty() || lower.size() != upper.size()) throw std::invalid_argument("box: corner dimensions differ");
    for (std::size_t i = 0; i < lower.size(); ++i) {
      if (!(lower[i] < upper[i])) throw std::invalid_argument("box: lower corner must be below upper corner");
    }
    if (subdivisions < 1) throw std::invalid_argument("box: subdivisions must be positive");
  }
};

/// One face of a box with its outward orientation.
struct BoxFace {
  int axis;     // 1-based normal axis
  bool upper;   // x^axis = upper_axis (true) or lower_axis
  Rational value;
  std::vector<Vector> frame;  // outward-oriented tangent frame (empty when n = 1)
  int sign;                   // +1 on upper faces, -1 on lower faces
};

inline std::vector<BoxFace> box_faces(const BoxRegion& box) {
  box.validate();
  const int n = box.dim();
  std::vector<BoxFace> faces;
  for (int axis = 1; axis <= n; ++axis) {
    for (bool upper : {false, true}) {
      BoxFace face{axis, upper, upper ? box.upper[static_cast<std::size_t>(axis - 1)] : box.lower[static_cast<std::size_t>(axis - 1)], {}, upper ? 1 : -1};
      for (int r = 1; r <= n; ++r) {
        if (r != axis) face.frame.push_back(Vector::basis(n, r));
      }
      if (!face.frame.empty()) {
        const int parity = (axis - 1) % 2 == 0 ? 1 : -1;
        face.frame.front() = Rational(parity * face.sign) * face.frame.front();
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

/// Restriction of `form` to a face with the outward orientation.
inline Rational restrict_outward(const CoDimOneForm& form, const BoxFace& face) {
  if (face.frame.empty()) return Rational(face.sign) * restrict(form, face.frame);
  return restrict(form, face.frame);
}

/// Exact integral over the box, skipping axis `skip` (1-based) if nonzero.
inline Rational integrate(const Polynomial& p, const BoxRegion& box, int skip = 0) {
  box.validate();
  if (p.dim() != box.dim()) throw std::invalid_argument("integrate: dimension mismatch");
  Rational total = 0;
  for (const auto& [exponents, coeff] : p.terms()) {
    Rational term = coeff;
    for (int r = 1; r <= p.dim(); ++r) {
      if (r == skip) continue;
      const int e = exponents.count(r);
      const auto i = static_cast<std::size_t>(r - 1);
      term *= (ipow(box.upper[i], e + 1) - ipow(box.lower[i], e + 1)) / Rational(e + 1);
    }
    total += term;
  }
  return total;
}

namespace detail {

// Midpoint rule over the box (skipping one axis when `skip` != 0).
inline double midpoint(const Polynomial& p, const BoxRegion& box, int subdivisions, int skip = 0, double fixed = 0.0) {
  box.validate();
  const int n = box.dim();
  std::vector<double> lo(static_cast<std::size_t>(n));
  std::vector<double> h(static_cast<std::size_t>(n));
  double cell = 1.0;
  std::vector<int> axes;
  for (int r = 1; r <= n; ++r) {
    const auto i = static_cast<std::size_t>(r - 1);
    lo[i] = to_double(box.lower[i]);
    h[i] = (to_double(box.upper[i]) - lo[i]) / subdivisions;
    if (r != skip) {
      cell *= h[i];
      axes.push_back(r);
    }
  }
  std::vector<double> x(static_cast<std::size_t>(n), fixed);
  std::vector<int> cellidx(axes.size(), 0);
  double sum = 0.0;
  while (true) {
    for (std::size_t a = 0; a < axes.size(); ++a) {
      const auto i = static_cast<std::size_t>(axes[a] - 1);
      x[i] = lo[i] + (cellidx[a] + 0.5) * h[i];
    }
    sum += p.eval_double(x);
    std::size_t a = 0;
    for (; a < axes.size(); ++a) {
      if (++cellidx[a] < subdivisions) break;
      cellidx[a] = 0;
    }
    if (a == axes.size()) break;
  }
  return sum * cell;
}

}  // namespace detail

/// Polynomial power density x -> S(x)(j^k w(x)) / dx.
inline Polynomial power_integrand(const VariationalStressField& stress, const PolyField& field) {
  if (stress.dim() != field.dim() || stress.fiber_dim() != field.fiber_dim()) {
    throw std::invalid_argument("power: stress and field shapes differ");
  }
  Polynomial integrand(field.dim());
  for (std::size_t l = 0; l <= stress.order(); ++l) {
    for (const auto& index : enumerate_nondecreasing(field.dim(), l)) {
      for (int alpha = 1; alpha <= field.fiber_dim(); ++alpha) {
        const Polynomial& s = stress(alpha, index);
        if (s.is_zero()) continue;
        integrand += s * field[alpha].derive(index);
      }
    }
  }
  return integrand;
}

/// P = integral over R of S . j^k w, exact.
inline Rational total_power(const VariationalStressField& stress, const PolyField& field, const BoxRegion& box) {
  return integrate(power_integrand(stress, field), box);
}

/// Midpoint-rule estimate of total_power using box.subdivisions cells per axis.
inline double total_power_midpoint(const VariationalStressField& stress, const PolyField& field, const BoxRegion& box) {
  return detail::midpoint(power_integrand(stress, field), box, box.subdivisions);
}

/// Hyper-traction of a traction stress field on one face, as polynomial
/// slot coefficients t_{alpha J}(x); linear combination of the sigma^{J j}
/// with weights rho_face(d_j _| dx).
inline std::vector<std::vector<Polynomial>> face_traction(const TractionStressField& sigma, const BoxFace& face) {
  const int n = sigma.dim();
  std::vector<Rational> weights(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) weights[static_cast<std::size_t>(j - 1)] = restrict_outward(CoDimOneForm::basis(n, j), face);
  std::vector<std::vector<Polynomial>> slots;  // [alpha-1][global slot]
  for (int alpha = 1; alpha <= sigma.fiber_dim(); ++alpha) {
    std::vector<Polynomial> row;
    for (std::size_t l = 0; l < sigma.order(); ++l) {
      for (const auto& index : enumerate_nondecreasing(n, l)) {
        Polynomial t(n);
        for (int j = 1; j <= n; ++j) {
          const Rational& w = weights[static_cast<std::size_t>(j - 1)];
          if (w != 0) t += w * sigma(alpha, index, j);
        }
        row.push_back(std::move(t));
      }
    }
    slots.push_back(std::move(row));
  }
  return slots;
}

/// Flux integrand on one face (before fixing x^axis): t . j^{k-1}w.
inline Polynomial face_flux_integrand(const TractionStressField& sigma, const PolyField& field, const BoxFace& face) {
  if (sigma.dim() != field.dim() || sigma.fiber_dim() != field.fiber_dim()) {
    throw std::invalid_argument("flux: stress and field shapes differ");
  }
  const auto slots = face_traction(sigma, face);
  Polynomial integrand(field.dim());
  for (int alpha = 1; alpha <= field.fiber_dim(); ++alpha) {
    std::size_t s = 0;
    for (std::size_t l = 0; l < sigma.order(); ++l) {
      for (const auto& index : enumerate_nondecreasing(field.dim(), l)) {
        const Polynomial& t = slots[static_cast<std::size_t>(alpha - 1)][s++];
        if (!t.is_zero()) integrand += t * field[alpha].derive(index);
      }
    }
  }
  return integrand.substitute(face.axis, face.value);
}

/// Total power flux through the boundary of the box, exact.
inline Rational boundary_power_flux(const TractionStressField& sigma, const PolyField& field, const BoxRegion& box) {
  Rational total = 0;
  for (const auto& face : box_faces(box)) total += integrate(face_flux_integrand(sigma, field, face), box, face.axis);
  return total;
}

/// Midpoint-rule estimate of boundary_power_flux with `subdivisions` cells
/// per face axis.
inline double boundary_power_flux_midpoint(const TractionStressField& sigma, const PolyField& field, const BoxRegion& box,
                                           int subdivisions) {
  double total = 0.0;
  for (const auto& face : box_faces(box)) {
    total += detail::midpoint(face_flux_integrand(sigma, field, face), box, subdivisions, face.axis, to_double(face.value));
  }
  return total;
}

}  // namespace hyperjet
