#pragma once

// Dense and symmetric tensors with exact components.
//
// A SymTensor stores one component per non-decreasing multi-index, addressed
// by rank(). Two component conventions are kept explicit:
//
//   Plain  T^I        coefficients against the arrow basis  <-e_(I) = (|I|!/I!) e_(I);
//                     equal to the dense component T^J at any ordering J of I.
//   Arrow  <-T^I      coefficients against the symmetrized basis e_(I);
//                     <-T^I = (|I|!/I!) T^I.
//
// Binary operations normalize their operands, so callers never have to.

#include "hyperjet/linalg.hpp"
#include "hyperjet/multiindex.hpp"
#include "hyperjet/rational.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperjet {

enum class Variance { Covariant, Contravariant };
enum class Convention { Plain, Arrow };

inline const char* to_string(Variance v) { return v == Variance::Covariant ? "co" : "contra"; }
inline const char* to_string(Convention c) { return c == Convention::Plain ? "plain" : "arrow"; }

/// General degree-l tensor with n^l components, row-major over ordered
/// multi-indices (position 1 varies slowest).
class DenseTensor {
 public:
  DenseTensor(int n, std::size_t degree, Variance variance)
      : n_(n), degree_(degree), variance_(variance), components_(dense_dimension(n, degree)) {}

  DenseTensor(int n, std::size_t degree, Variance variance, std::vector<Rational> components)
      : n_(n), degree_(degree), variance_(variance), components_(std::move(components)) {
    if (components_.size() != dense_dimension(n, degree)) {
      throw std::invalid_argument("dense tensor needs n^l = " + std::to_string(dense_dimension(n, degree)) +
                                  " components, got " + std::to_string(components_.size()));
    }
  }

  int dim() const noexcept { return n_; }
  std::size_t degree() const noexcept { return degree_; }
  Variance variance() const noexcept { return variance_; }
  std::size_t size() const noexcept { return components_.size(); }

  std::size_t offset(const MultiIndex& index) const {
    check_index(index);
    std::size_t off = 0;
    for (int e : index.entries()) off = off * static_cast<std::size_t>(n_) + static_cast<std::size_t>(e - 1);
    return off;
  }

  MultiIndex index_at(std::size_t offset) const {
    if (offset >= components_.size()) throw std::out_of_range("dense offset out of range");
    std::vector<int> entries(degree_);
    for (std::size_t pos = degree_; pos-- > 0;) {
      entries[pos] = static_cast<int>(offset % static_cast<std::size_t>(n_)) + 1;
      offset /= static_cast<std::size_t>(n_);
    }
    return MultiIndex(n_, std::move(entries));
  }

  Rational& operator[](const MultiIndex& index) { return components_[offset(index)]; }
  const Rational& operator[](const MultiIndex& index) const { return components_[offset(index)]; }

  Rational& at(std::size_t offset) { return components_.at(offset); }
  const Rational& at(std::size_t offset) const { return components_.at(offset); }

  std::span<const Rational> components() const noexcept { return components_; }

  /// Exact check that every component equals the one at its sorted index.
  /// Refuses degrees above `cap`.
  bool is_symmetric(std::size_t cap = kDefaultPermutationCap) const {
    if (degree_ > cap) {
      throw std::length_error("symmetry check of degree " + std::to_string(degree_) + " exceeds cap " +
                              std::to_string(cap));
    }
    for (std::size_t off = 0; off < components_.size(); ++off) {
      const MultiIndex index = index_at(off);
      if (components_[off] != components_[offset(index.sorted())]) return false;
    }
    return true;
  }

  friend bool operator==(const DenseTensor&, const DenseTensor&) = default;

 private:
  void check_index(const MultiIndex& index) const {
    if (index.dim() != n_ || index.size() != degree_) {
      throw std::invalid_argument("multi-index shape does not match tensor (n=" + std::to_string(n_) +
                                  ", l=" + std::to_string(degree_) + ")");
    }
  }

  int n_;
  std::size_t degree_;
  Variance variance_;
  std::vector<Rational> components_;
};

/// Symmetric degree-l tensor stored as C(n+l-1, l) components in rank order.
class SymTensor {
 public:
  SymTensor(int n, std::size_t degree, Variance variance, Convention convention = Convention::Plain)
      : n_(n),
        degree_(degree),
        variance_(variance),
        convention_(convention),
        components_(symmetric_dimension(n, degree)) {}

  SymTensor(int n, std::size_t degree, Variance variance, Convention convention, std::vector<Rational> components)
      : n_(n), degree_(degree), variance_(variance), convention_(convention), components_(std::move(components)) {
    if (components_.size() != symmetric_dimension(n, degree)) {
      throw std::invalid_argument("symmetric tensor needs C(n+l-1,l) = " +
                                  std::to_string(symmetric_dimension(n, degree)) + " components, got " +
                                  std::to_string(components_.size()));
    }
  }

  /// The symmetrized basis element e_(I) (or e^(I) for covariant).
  static SymTensor basis(int n, Variance variance, const CardinalityIndex& index) {
    SymTensor t(n, index.degree(), variance, Convention::Arrow);
    t[index] = 1;
    return t;
  }

  /// The arrow basis element <-e_(I) = (|I|!/I!) e_(I).
  static SymTensor arrow_basis(int n, Variance variance, const CardinalityIndex& index) {
    SymTensor t(n, index.degree(), variance, Convention::Plain);
    t[index] = 1;
    return t;
  }

  int dim() const noexcept { return n_; }
  std::size_t degree() const noexcept { return degree_; }
  Variance variance() const noexcept { return variance_; }
  Convention convention() const noexcept { return convention_; }
  std::size_t size() const noexcept { return components_.size(); }

  Rational& operator[](const CardinalityIndex& index) { return components_[slot(index)]; }
  const Rational& operator[](const CardinalityIndex& index) const { return components_[slot(index)]; }

  /// Component at an arbitrarily ordered multi-index (read at its sorted form).
  const Rational& component(const MultiIndex& index) const { return (*this)[cardinality(index)]; }

  Rational& at(std::size_t rank) { return components_.at(rank); }
  const Rational& at(std::size_t rank) const { return components_.at(rank); }

  std::span<const Rational> components() const noexcept { return components_; }

  /// Same tensor with components rescaled to `target` convention.
  SymTensor converted(Convention target) const {
    if (target == convention_) return *this;
    SymTensor out = *this;
    out.convention_ = target;
    for (std::size_t r = 0; r < components_.size(); ++r) {
      const Rational mult(multiplicity(unrank(n_, degree_, r)));
      if (target == Convention::Arrow) {
        out.components_[r] *= mult;
      } else {
        out.components_[r] /= mult;
      }
    }
    return out;
  }

  /// Structural equality: same shape, convention and components.
  friend bool operator==(const SymTensor&, const SymTensor&) = default;

 private:
  std::size_t slot(const CardinalityIndex& index) const {
    if (index.dim() != n_ || index.degree() != degree_) {
      throw std::invalid_argument("cardinality index shape does not match symmetric tensor");
    }
    return static_cast<std::size_t>(rank(index));
  }

  int n_;
  std::size_t degree_;
  Variance variance_;
  Convention convention_;
  std::vector<Rational> components_;
};

/// Equality as tensors, independent of the stored convention.
inline bool same_tensor(const SymTensor& a, const SymTensor& b) {
  return a.dim() == b.dim() && a.degree() == b.degree() && a.variance() == b.variance() &&
         a.converted(Convention::Plain) == b.converted(Convention::Plain);
}

inline SymTensor convert_convention(const SymTensor& tensor, Convention target) { return tensor.converted(target); }

namespace detail {

inline void check_cap(std::size_t degree, std::size_t cap) {
  if (degree > cap) {
    throw std::length_error("degree " + std::to_string(degree) + " exceeds permutation cap " + std::to_string(cap));
  }
}

}  // namespace detail

/// Symmetrization straight into compressed storage (Plain convention).
/// Each class sum over the orderings of I is divided by their number, which
/// equals (1/l!) sum_p T_{p(I)}.
inline SymTensor symmetrize(const DenseTensor& tensor, std::size_t cap = kDefaultPermutationCap) {
  detail::check_cap(tensor.degree(), cap);
  SymTensor out(tensor.dim(), tensor.degree(), tensor.variance(), Convention::Plain);
  for (std::size_t off = 0; off < tensor.size(); ++off) {
    out[cardinality(tensor.index_at(off))] += tensor.at(off);
  }
  for (std::size_t r = 0; r < out.size(); ++r) {
    out.at(r) /= Rational(multiplicity(unrank(tensor.dim(), tensor.degree(), r)));
  }
  return out;
}

/// Inclusion into the dense space: T^J = |eps|^J_I T^I.
inline DenseTensor include(const SymTensor& tensor) {
  const SymTensor plain = tensor.converted(Convention::Plain);
  DenseTensor out(plain.dim(), plain.degree(), plain.variance());
  for (std::size_t off = 0; off < out.size(); ++off) {
    out.at(off) = plain.component(out.index_at(off));
  }
  return out;
}

inline DenseTensor symmetrize_dense(const DenseTensor& tensor, std::size_t cap = kDefaultPermutationCap) {
  return include(symmetrize(tensor, cap));
}

/// Reads the canonical slots of a symmetric dense tensor; throws
/// std::domain_error if the input is not exactly symmetric.
inline SymTensor compress(const DenseTensor& tensor, std::size_t cap = kDefaultPermutationCap) {
  if (!tensor.is_symmetric(cap)) {
    throw std::domain_error("compress: input tensor is not symmetric");
  }
  SymTensor out(tensor.dim(), tensor.degree(), tensor.variance(), Convention::Plain);
  for (std::size_t r = 0; r < out.size(); ++r) {
    out.at(r) = tensor[unrank(tensor.dim(), tensor.degree(), r).canonical()];
  }
  return out;
}

/// Dual pairing psi(T) = psi_I T^I of a symmetric co-tensor with a symmetric
/// tensor. Equals the dense pairing of the two inclusions.
inline Rational pair(const SymTensor& covector, const SymTensor& tensor) {
  if (covector.variance() != Variance::Covariant || tensor.variance() != Variance::Contravariant) {
    throw std::invalid_argument("pair expects (covariant, contravariant) operands");
  }
  if (covector.dim() != tensor.dim() || covector.degree() != tensor.degree()) {
    throw std::invalid_argument("pair: shape mismatch");
  }
  // psi_I is the coefficient of e^(I) (Arrow); T^I of <-e_(I) (Plain).
  const SymTensor psi = covector.converted(Convention::Arrow);
  const SymTensor t = tensor.converted(Convention::Plain);
  Rational sum = 0;
  for (std::size_t r = 0; r < psi.size(); ++r) sum += psi.at(r) * t.at(r);
  return sum;
}

/// sum_J phi_J T^J over ordered J.
inline Rational dense_pair(const DenseTensor& covector, const DenseTensor& tensor) {
  if (covector.variance() != Variance::Covariant || tensor.variance() != Variance::Contravariant) {
    throw std::invalid_argument("dense_pair expects (covariant, contravariant) operands");
  }
  if (covector.dim() != tensor.dim() || covector.degree() != tensor.degree()) {
    throw std::invalid_argument("dense_pair: shape mismatch");
  }
  Rational sum = 0;
  for (std::size_t off = 0; off < tensor.size(); ++off) sum += covector.at(off) * tensor.at(off);
  return sum;
}

/// i*_S: sums the components of phi over all orderings of each I (no
/// averaging). The result is the coefficient array against e^(I), i.e. the
/// Arrow convention.
inline SymTensor cosymmetrize_project(const DenseTensor& covector) {
  if (covector.variance() != Variance::Covariant) {
    throw std::invalid_argument("cosymmetrize_project expects a covariant tensor");
  }
  SymTensor out(covector.dim(), covector.degree(), Variance::Covariant, Convention::Arrow);
  for (std::size_t off = 0; off < covector.size(); ++off) {
    out[cardinality(covector.index_at(off))] += covector.at(off);
  }
  return out;
}

/// S*: distributes psi_<J> over the orderings J with weight J!/|J|!.
inline DenseTensor cosymmetrize_extend(const SymTensor& covector) {
  if (covector.variance() != Variance::Covariant) {
    throw std::invalid_argument("cosymmetrize_extend expects a covariant tensor");
  }
  const SymTensor psi = covector.converted(Convention::Arrow);
  DenseTensor out(psi.dim(), psi.degree(), Variance::Covariant);
  for (std::size_t off = 0; off < out.size(); ++off) {
    const CardinalityIndex sorted = cardinality(out.index_at(off));
    out.at(off) = psi[sorted] / Rational(multiplicity(sorted));
  }
  return out;
}

/// Matrix of S from the dense basis e_J to the arrow basis <-e_(I):
/// S^I_J = (I!/|I|!) |eps|^I_J. Shape C(n+l-1,l) x n^l.
inline RationalMatrix symmetrization_matrix(int n, std::size_t l) {
  const auto classes = enumerate_nondecreasing(n, l);
  const auto ordered = enumerate_ordered(n, l);
  RationalMatrix m(classes.size(), ordered.size());
  for (std::size_t r = 0; r < classes.size(); ++r) {
    const MultiIndex canonical = classes[r].canonical();
    const Rational weight = Rational(1) / Rational(multiplicity(classes[r]));
    for (std::size_t c = 0; c < ordered.size(); ++c) {
      if (epsilon_abs(canonical, ordered[c])) m(r, c) = weight;
    }
  }
  return m;
}

/// Matrix of the inclusion from the arrow basis to the dense basis:
/// (i_S)^J_I = |eps|^J_I. Shape n^l x C(n+l-1,l).
inline RationalMatrix inclusion_matrix(int n, std::size_t l) {
  const auto classes = enumerate_nondecreasing(n, l);
  const auto ordered = enumerate_ordered(n, l);
  RationalMatrix m(ordered.size(), classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const MultiIndex canonical = classes[c].canonical();
    for (std::size_t r = 0; r < ordered.size(); ++r) {
      if (epsilon_abs(canonical, ordered[r])) m(r, c) = 1;
    }
  }
  return m;
}

}  // namespace hyperjet
