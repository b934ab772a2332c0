#pragma once

// Brute-force reference implementations. These deliberately avoid the
// library's ranking, multiplicity and conversion helpers: everything is
// computed on plain ordered index tuples.

#include "hyperjet/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using hyperjet::Rational;
using Tuple = std::vector<int>;  // 1-based axis entries

// All n^l ordered tuples, first position slowest.
inline std::vector<Tuple> tuples(int n, std::size_t l) {
  std::vector<Tuple> out;
  Tuple t(l, 1);
  while (true) {
    out.push_back(t);
    std::size_t pos = l;
    while (pos > 0) {
      --pos;
      if (t[pos] < n) {
        ++t[pos];
        std::fill(t.begin() + static_cast<long>(pos) + 1, t.end(), 1);
        break;
      }
      if (pos == 0) return out;
    }
    if (l == 0) return out;
  }
}

inline Tuple sorted(Tuple t) {
  std::sort(t.begin(), t.end());
  return t;
}

inline std::vector<std::vector<int>> all_permutations(std::size_t l) {
  std::vector<int> p(l);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Dense arrays keyed by ordered tuples.
using Dense = std::map<Tuple, Rational>;
// Symmetric data keyed by sorted tuples (one entry per class).
using Classes = std::map<Tuple, Rational>;

inline Rational get(const std::map<Tuple, Rational>& m, const Tuple& t) {
  const auto it = m.find(t);
  return it == m.end() ? Rational(0) : it->second;
}

/// (1/l!) sum over all permutations of T at permuted positions.
inline Dense symmetrize(const Dense& t, int n, std::size_t l) {
  const auto perms = all_permutations(l);
  Dense out;
  for (const auto& idx : tuples(n, l)) {
    Rational sum = 0;
    for (const auto& p : perms) {
      Tuple q(l);
      for (std::size_t r = 0; r < l; ++r) q[r] = idx[static_cast<std::size_t>(p[r])];
      sum += get(t, q);
    }
    out[idx] = sum / static_cast<long>(perms.size());
  }
  return out;
}

/// Dense expansion: each ordered index receives its class value.
inline Dense expand(const Classes& c, int n, std::size_t l) {
  Dense out;
  for (const auto& idx : tuples(n, l)) out[idx] = get(c, sorted(idx));
  return out;
}

/// Sum of dense entries in each class.
inline Classes class_sums(const Dense& t, int n, std::size_t l) {
  Classes out;
  for (const auto& idx : tuples(n, l)) out[sorted(idx)] += get(t, idx);
  return out;
}

/// Number of ordered tuples in the class of a sorted tuple.
inline long class_size(const Tuple& s, int n) {
  long count = 0;
  for (const auto& idx : tuples(n, s.size())) count += (sorted(idx) == s);
  return count;
}

inline Rational dense_pair(const Dense& a, const Dense& b, int n, std::size_t l) {
  Rational sum = 0;
  for (const auto& idx : tuples(n, l)) sum += get(a, idx) * get(b, idx);
  return sum;
}

/// Leibniz-formula determinant of a square matrix given by columns.
inline Rational determinant(const std::vector<std::vector<Rational>>& columns) {
  const std::size_t n = columns.size();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) inversions += p[a] > p[b];
    }
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t c = 0; c < n; ++c) term *= columns[c][static_cast<std::size_t>(p[c])];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Traction density from dense almost-symmetric arrays D[l][alpha] (keyed by
/// ordered J followed by j) and jet blocks keyed by sorted tuples.
inline std::vector<Rational> traction_density(const std::vector<std::vector<Dense>>& d,
                                              const std::vector<std::vector<Classes>>& jet, int n) {
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (std::size_t l = 0; l < d.size(); ++l) {
    for (std::size_t a = 0; a < d[l].size(); ++a) {
      for (const auto& idx : tuples(n, l + 1)) {
        const Tuple head(idx.begin(), idx.end() - 1);
        out[static_cast<std::size_t>(idx.back() - 1)] += get(d[l][a], idx) * get(jet[l][a], sorted(head));
      }
    }
  }
  return out;
}

}  // namespace oracle
