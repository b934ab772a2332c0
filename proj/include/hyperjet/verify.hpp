#pragma once

// Identity suites backing the `verify` subcommand. Each suite checks a family
// of exact identities by comparing two independent routes through the
// library, over exhaustive or seeded-random inputs.

#include "hyperjet/altforms.hpp"
#include "hyperjet/hyperstress.hpp"
#include "hyperjet/jet.hpp"
#include "hyperjet/multiindex.hpp"
#include "hyperjet/random.hpp"
#include "hyperjet/symtensor.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperjet::verify {

struct Bounds {
  int n = 3;
  std::size_t l = 3;
  int m = 2;
  std::size_t k = 2;
  std::uint64_t seed = 0;
  int trials = 100;
};

struct Report {
  explicit Report(std::string name) : suite(std::move(name)) {}

  std::string suite;
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few messages only

  bool passed() const { return failed == 0; }

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failed;
    if (failures.size() < 20) failures.push_back(what);
  }
};

/// cardinalities, multiplicity sum, rank/unrank, delta/epsilon identities.
inline Report epsilon_suite(const Bounds& b) {
  Report rep{"epsilon"};
  RandomSource rng(b.seed);
  for (int n = 1; n <= b.n; ++n) {
    for (std::size_t l = 0; l <= b.l; ++l) {
      const auto classes = enumerate_nondecreasing(n, l);
      rep.expect(classes.size() == symmetric_dimension(n, l), "dimension C(n+l-1,l)");
      std::uint64_t mult_sum = 0;
      for (std::size_t r = 0; r < classes.size(); ++r) {
        mult_sum += multiplicity(classes[r]);
        rep.expect(rank(classes[r]) == r && unrank(n, l, r) == classes[r], "rank/unrank inverse");
      }
      rep.expect(mult_sum == dense_dimension(n, l), "multiplicity sum n^l");

      const auto perms = permutations_of(l);
      for (int t = 0; t < b.trials / 10 + 1; ++t) {
        const MultiIndex i = rng.multi_index(n, l);
        // half the time J is a rearrangement of I
        const MultiIndex j = rng.coin() ? apply_permutation(rng.permutation(l), i) : rng.multi_index(n, l);
        std::uint64_t delta_sum = 0;
        for (const auto& p : perms) delta_sum += static_cast<std::uint64_t>(kron_delta(i, apply_permutation(p, j)));
        rep.expect(delta_sum == mi_factorial(cardinality(i)) * static_cast<std::uint64_t>(epsilon_abs(i, j)),
                   "sum_p delta^I_p(J) = I! |eps|^I_J at I=" + i.to_string() + " J=" + j.to_string());
        for (const auto& p : perms) {
          rep.expect(epsilon_abs(apply_permutation(p, i), j) == epsilon_abs(i, j), "|eps| ignores permutation of I");
        }
      }

      // sum over distinct orderings J of I of T_J = (|I|!/I!) T_I for symmetric T
      const DenseTensor sym = symmetrize_dense(rng.dense(n, l, Variance::Contravariant));
      for (const auto& cls : classes) {
        const MultiIndex canonical = cls.canonical();
        Rational sum = 0;
        for (const auto& ordered : enumerate_ordered(n, l)) {
          if (epsilon_abs(canonical, ordered)) sum += sym[ordered];
        }
        rep.expect(sum == Rational(multiplicity(cls)) * sym[canonical], "epsilon substitution at " + canonical.to_string());
      }
    }
  }
  return rep;
}

/// pair(e^(I), <-e_(J)) = delta and the arrow-modified pairing identities.
inline Report duality_suite(const Bounds& b) {
  Report rep{"duality"};
  RandomSource rng(b.seed);
  for (int n = 1; n <= b.n; ++n) {
    for (std::size_t l = 0; l <= b.l; ++l) {
      const auto classes = enumerate_nondecreasing(n, l);
      for (const auto& i : classes) {
        const SymTensor co = SymTensor::basis(n, Variance::Covariant, i);
        for (const auto& j : classes) {
          const SymTensor contra = SymTensor::arrow_basis(n, Variance::Contravariant, j);
          rep.expect(pair(co, contra) == (i == j ? 1 : 0), "dual basis at I=" + i.to_string() + " J=" + j.to_string());
        }
      }
      for (int t = 0; t < b.trials / 10 + 1; ++t) {
        const SymTensor psi = rng.symmetric(n, l, Variance::Covariant, Convention::Arrow);
        const DenseTensor sym = symmetrize_dense(rng.dense(n, l, Variance::Contravariant));
        Rational lhs = 0;
        Rational lhs_plain = 0;
        for (const auto& ordered : enumerate_ordered(n, l)) {
          const CardinalityIndex cls = cardinality(ordered);
          const Rational weight = Rational(1) / Rational(multiplicity(cls));
          lhs += psi[cls] * weight * sym[ordered];
          lhs_plain += psi[cls] * sym[ordered];
        }
        Rational rhs = 0;
        Rational rhs_arrow = 0;
        for (const auto& cls : classes) {
          rhs += psi[cls] * sym[cls.canonical()];
          rhs_arrow += psi[cls] * Rational(multiplicity(cls)) * sym[cls.canonical()];
        }
        rep.expect(lhs == rhs, "psi_<J> =>T^J = psi_I T^I");
        rep.expect(lhs_plain == rhs_arrow, "psi_<J> T^J = psi_I <=T^I");
        rep.expect(pair(psi, compress(sym)) == rhs, "pair = psi_I T^I");
      }
    }
  }
  return rep;
}

/// S o S = S, S o i_S = Id, matrices.
inline Report projection_suite(const Bounds& b) {
  Report rep{"projection"};
  RandomSource rng(b.seed);
  for (int n = 1; n <= b.n; ++n) {
    for (std::size_t l = 0; l <= b.l; ++l) {
      const RationalMatrix s = symmetrization_matrix(n, l);
      const RationalMatrix i = inclusion_matrix(n, l);
      rep.expect(s * i == RationalMatrix::identity(symmetric_dimension(n, l)), "S i_S = Id (matrices)");
      for (int t = 0; t < b.trials / 10 + 1; ++t) {
        const DenseTensor d = rng.dense(n, l, Variance::Contravariant);
        const DenseTensor once = symmetrize_dense(d);
        rep.expect(symmetrize_dense(once) == once, "S o S = S");
        const SymTensor sym = rng.symmetric(n, l, Variance::Contravariant);
        rep.expect(compress(symmetrize_dense(include(sym))) == sym, "S o i_S = Id");
        const auto dense_vec = std::vector<Rational>(d.components().begin(), d.components().end());
        const auto via_matrix = s.apply(dense_vec);
        const SymTensor direct = symmetrize(d);
        rep.expect(via_matrix == std::vector<Rational>(direct.components().begin(), direct.components().end()),
                   "S matrix agrees with symmetrize");
      }
    }
  }
  return rep;
}

/// i*_S and S* are the adjoints of inclusion and symmetrization.
inline Report adjoint_suite(const Bounds& b) {
  Report rep{"adjoint"};
  RandomSource rng(b.seed);
  for (int n = 1; n <= b.n; ++n) {
    for (std::size_t l = 0; l <= b.l; ++l) {
      for (int t = 0; t < b.trials / 10 + 1; ++t) {
        const DenseTensor phi = rng.dense(n, l, Variance::Covariant);
        const SymTensor sym = rng.symmetric(n, l, Variance::Contravariant);
        rep.expect(dense_pair(phi, include(sym)) == pair(cosymmetrize_project(phi), sym), "phi(i(T)) = i*(phi)(T)");
        const SymTensor psi = rng.symmetric(n, l, Variance::Covariant, rng.coin() ? Convention::Plain : Convention::Arrow);
        const DenseTensor dense = rng.dense(n, l, Variance::Contravariant);
        rep.expect(dense_pair(cosymmetrize_extend(psi), dense) == pair(psi, compress(symmetrize_dense(dense))),
                   "S*(psi)(T) = psi(S(T))");
      }
    }
  }
  return rep;
}

/// realize / jet_of / truncate and the jet pairing.
inline Report jets_suite(const Bounds& b) {
  Report rep{"jets"};
  RandomSource rng(b.seed);
  for (int t = 0; t < b.trials; ++t) {
    const int n = rng.uniform_int(1, b.n);
    const int m = rng.uniform_int(1, b.m);
    const auto k = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(b.k)));
    const JetElement a = rng.jet(n, m, k);
    rep.expect(jet_of(realize(a), a.point(), k) == a, "jet_of o realize = Id");
    const PolyField w = rng.field(n, m, k + 1);
    const Point x = rng.point(n);
    const auto low = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(k)));
    rep.expect(truncate(jet_of(w, x, k), low) == jet_of(w, x, low), "truncate(jet_of(w,k), l) = jet_of(w,l)");
    const JetCovector phi = rng.covector(n, m, k);
    const JetElement a2 = rng.jet(n, m, k);
    JetElement combo(n, m, k, a.point());
    const Rational s = rng.rational();
    for (std::size_t l = 0; l <= k; ++l) {
      for (int alpha = 1; alpha <= m; ++alpha) {
        for (std::size_t r = 0; r < combo.block(l, alpha).size(); ++r) {
          combo.block(l, alpha).at(r) = a.block(l, alpha).at(r) + s * a2.block(l, alpha).at(r);
        }
      }
    }
    rep.expect(pair_jet(phi, combo) == pair_jet(phi, a) + s * pair_jet(phi, a2), "pair_jet is linear");
  }
  return rep;
}

/// transform_1jet(transform_1jet(A, c1), c2) = transform_1jet(A, c2 o c1).
inline Report transform_suite(const Bounds& b) {
  Report rep{"transform"};
  RandomSource rng(b.seed);
  for (int t = 0; t < b.trials; ++t) {
    const int n = rng.uniform_int(1, b.n);
    const int m = rng.uniform_int(1, b.m);
    const JetElement a = rng.jet(n, m, 1);
    const ChartMap c1 = rng.chart(n, m, 2);
    const ChartMap c2 = rng.chart(n, m, 2);
    rep.expect(transform_1jet(transform_1jet(a, c1), c2) == transform_1jet(a, compose(c2, c1)), "1-jet functoriality");
    // the transformed jet is the jet of the transformed Taylor representative
    const PolyField w = realize(a);
    const RationalMatrix inv = inverse(c1.linear);
    Point back_shift = inv.apply(c1.shift);
    for (auto& v : back_shift) v = -v;
    PolyField moved(n, m);
    for (int ap = 1; ap <= m; ++ap) {
      Polynomial sum(n);
      for (int al = 1; al <= m; ++al) sum += c1.frame[static_cast<std::size_t>(ap - 1)][static_cast<std::size_t>(al - 1)] * w[al];
      moved[ap] = sum.compose_affine(inv, back_shift);  // as a function of x' = B x + c
    }
    rep.expect(transform_1jet(a, c1) == jet_of(moved, c1.apply(a.point()), 1), "1-jet rule matches chain rule");
  }
  return rep;
}

/// Cauchy commutation, contraction isomorphism, alternation of restriction.
inline Report cauchy_suite(const Bounds& b) {
  Report rep{"cauchy"};
  RandomSource rng(b.seed);
  for (int n = 1; n <= std::max(b.n, 6); ++n) {
    rep.expect(rank(contraction_matrix(n)) == static_cast<std::size_t>(n), "contraction is an isomorphism");
  }
  for (int t = 0; t < b.trials; ++t) {
    const int n = b.n;
    const int m = b.m;
    const std::size_t k = std::max<std::size_t>(b.k, 1);
    const TractionHyperStress sigma = rng.traction(n, m, k);
    const JetElement a = rng.jet(n, m, k - 1);
    const auto frame = rng.frame(n);
    const HyperTraction traction = cauchy_traction(sigma, frame);
    rep.expect(apply(traction, a) == restrict(traction_density(sigma, a), frame), "t(A) = rho(sigma(A))");
    if (n >= 3) {
      auto swapped = frame;
      std::swap(swapped[0], swapped[1]);
      rep.expect(restrict(traction_density(sigma, a), swapped) == -restrict(traction_density(sigma, a), frame),
                 "restriction alternates under frame swap");
    }
  }
  return rep;
}

inline const std::map<std::string, std::function<Report(const Bounds&)>>& suites() {
  static const std::map<std::string, std::function<Report(const Bounds&)>> table{
      {"epsilon", epsilon_suite},     {"duality", duality_suite},     {"projection", projection_suite},
      {"adjoint", adjoint_suite},     {"jets", jets_suite},           {"transform", transform_suite},
      {"cauchy", cauchy_suite},
  };
  return table;
}

}  // namespace hyperjet::verify
