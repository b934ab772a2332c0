#pragma once

// Multi-index combinatorics.
//
// Axis indices are 1-based everywhere in this API: a MultiIndex over an
// n-dimensional space holds entries in 1..n, and a CardinalityIndex is read
// with count(r) for r in 1..n. Permutations of {1..l} are 1-based as well.
//
// Non-decreasing multi-indices of a fixed degree are ordered colexicographically
// on their canonical sequence. That order is ranked in closed form through the
// combinatorial number system: a non-decreasing a_1 <= ... <= a_l maps to the
// strictly increasing c_i = (a_i - 1) + (i - 1), whose colex rank is
// sum_i C(c_i, i).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperjet {

inline constexpr std::size_t kDefaultPermutationCap = 8;

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // exact at every step: result * (n - k + i) is divisible by i
    result = result * (n - k + i) / i;
  }
  return result;
}

inline std::uint64_t factorial(std::uint64_t k) {
  if (k > 20) {
    throw std::overflow_error("factorial(" + std::to_string(k) + ") exceeds 64 bits");
  }
  std::uint64_t result = 1;
  for (std::uint64_t i = 2; i <= k; ++i) result *= i;
  return result;
}

/// Number of independent components of a symmetric degree-l tensor, C(n+l-1, l).
inline std::uint64_t symmetric_dimension(int n, std::size_t l) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  return binomial(static_cast<std::uint64_t>(n) + l - 1, l);
}

/// n^l.
inline std::uint64_t dense_dimension(int n, std::size_t l) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < l; ++i) result *= static_cast<std::uint64_t>(n);
  return result;
}

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? text.size() - start
                                                                          : comma - start);
    if (token.empty()) {
      throw std::invalid_argument("malformed index list: \"" + std::string(text) + "\"");
    }
    int value = 0;
    for (char c : token) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("malformed index list: \"" + std::string(text) + "\"");
      }
      value = value * 10 + (c - '0');
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace detail

/// Ordered tuple of axis indices i_1 ... i_k over an n-dimensional space.
/// The empty multi-index (degree 0) is a valid value.
class MultiIndex {
 public:
  MultiIndex() = default;

  MultiIndex(int dim, std::vector<int> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim_ < 1) throw std::invalid_argument("multi-index dimension must be positive");
    for (int e : entries_) {
      if (e < 1 || e > dim_) {
        throw std::out_of_range("multi-index entry " + std::to_string(e) + " outside 1.." +
                                std::to_string(dim_));
      }
    }
  }

  /// Parses the textual form "1,2,2"; the empty string is the degree-0 index.
  static MultiIndex parse(int dim, std::string_view text) {
    return MultiIndex(dim, detail::parse_int_list(text));
  }

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Axis at 0-based position `pos`; the returned axis is 1-based.
  int operator[](std::size_t pos) const { return entries_.at(pos); }
  const std::vector<int>& entries() const noexcept { return entries_; }

  bool is_nondecreasing() const { return std::is_sorted(entries_.begin(), entries_.end()); }

  MultiIndex sorted() const {
    MultiIndex out = *this;
    std::sort(out.entries_.begin(), out.entries_.end());
    return out;
  }

  std::string to_string() const { return detail::join_ints(entries_); }

  friend MultiIndex concat(const MultiIndex& a, const MultiIndex& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("concatenating multi-indices of different dimension");
    std::vector<int> entries = a.entries_;
    entries.insert(entries.end(), b.entries_.begin(), b.entries_.end());
    return MultiIndex(a.dim_, std::move(entries));
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  int dim_ = 1;
  std::vector<int> entries_;
};

/// Occurrence counts (I_1, ..., I_n) of a multi-index; equivalently the
/// non-decreasing multi-index that has r repeated I_r times.
class CardinalityIndex {
 public:
  CardinalityIndex() : counts_(1, 0) {}

  explicit CardinalityIndex(std::vector<int> counts) : counts_(std::move(counts)) {
    if (counts_.empty()) throw std::invalid_argument("cardinality index needs n >= 1 counts");
    for (int c : counts_) {
      if (c < 0) throw std::invalid_argument("cardinality counts must be non-negative");
    }
  }

  static CardinalityIndex zero(int dim) { return CardinalityIndex(std::vector<int>(checked_dim(dim), 0)); }

  /// The simple multi-index made of one axis (1-based).
  static CardinalityIndex unit(int dim, int axis) {
    std::vector<int> counts(checked_dim(dim), 0);
    if (axis < 1 || axis > dim) throw std::out_of_range("axis outside 1..n");
    counts[axis - 1] = 1;
    return CardinalityIndex(std::move(counts));
  }

  /// Parses the counts form "I1,I2,...,In" (not an axis list).
  static CardinalityIndex parse(int dim, std::string_view text) {
    auto counts = detail::parse_int_list(text);
    if (static_cast<int>(counts.size()) != dim) {
      throw std::invalid_argument("cardinality index \"" + std::string(text) + "\" does not have " +
                                  std::to_string(dim) + " counts");
    }
    return CardinalityIndex(std::move(counts));
  }

  int dim() const noexcept { return static_cast<int>(counts_.size()); }

  std::size_t degree() const {
    return static_cast<std::size_t>(std::accumulate(counts_.begin(), counts_.end(), 0));
  }

  /// I_r for 1-based axis r.
  int count(int axis) const { return counts_.at(static_cast<std::size_t>(axis - 1)); }
  const std::vector<int>& counts() const noexcept { return counts_; }

  MultiIndex canonical() const {
    std::vector<int> entries;
    entries.reserve(degree());
    for (int r = 0; r < dim(); ++r) {
      entries.insert(entries.end(), static_cast<std::size_t>(counts_[r]), r + 1);
    }
    return MultiIndex(dim(), std::move(entries));
  }

  std::string to_string() const { return detail::join_ints(counts_); }

  /// Partial order: J <= I iff J_r <= I_r for every r.
  bool is_le(const CardinalityIndex& other) const {
    require_same_dim(other);
    for (std::size_t r = 0; r < counts_.size(); ++r) {
      if (counts_[r] > other.counts_[r]) return false;
    }
    return true;
  }

  friend CardinalityIndex operator+(const CardinalityIndex& a, const CardinalityIndex& b) {
    a.require_same_dim(b);
    std::vector<int> counts = a.counts_;
    for (std::size_t r = 0; r < counts.size(); ++r) counts[r] += b.counts_[r];
    return CardinalityIndex(std::move(counts));
  }

  /// I - J, defined only when J <= I.
  friend CardinalityIndex operator-(const CardinalityIndex& a, const CardinalityIndex& b) {
    if (!b.is_le(a)) {
      throw std::domain_error("cardinality subtraction requires J <= I");
    }
    std::vector<int> counts = a.counts_;
    for (std::size_t r = 0; r < counts.size(); ++r) counts[r] -= b.counts_[r];
    return CardinalityIndex(std::move(counts));
  }

  friend bool operator==(const CardinalityIndex&, const CardinalityIndex&) = default;
  friend auto operator<=>(const CardinalityIndex&, const CardinalityIndex&) = default;

 private:
  static std::size_t checked_dim(int dim) {
    if (dim < 1) throw std::invalid_argument("dimension must be positive");
    return static_cast<std::size_t>(dim);
  }

  void require_same_dim(const CardinalityIndex& other) const {
    if (other.dim() != dim()) throw std::invalid_argument("cardinality indices of different dimension");
  }

  std::vector<int> counts_;
};

inline CardinalityIndex cardinality(const MultiIndex& index) {
  std::vector<int> counts(static_cast<std::size_t>(index.dim()), 0);
  for (int e : index.entries()) ++counts[static_cast<std::size_t>(e - 1)];
  return CardinalityIndex(std::move(counts));
}

/// I! = I_1! ... I_n!
inline std::uint64_t mi_factorial(const CardinalityIndex& index) {
  std::uint64_t result = 1;
  for (int c : index.counts()) result *= factorial(static_cast<std::uint64_t>(c));
  return result;
}

/// |I|!/I!, the number of distinct orderings of I. Computed as a product of
/// binomials so it does not overflow before the result does.
inline std::uint64_t multiplicity(const CardinalityIndex& index) {
  std::uint64_t result = 1;
  std::uint64_t placed = 0;
  for (int c : index.counts()) {
    placed += static_cast<std::uint64_t>(c);
    result *= binomial(placed, static_cast<std::uint64_t>(c));
  }
  return result;
}

/// A bijection of {1..l}, stored as the sequence (p(1), ..., p(l)).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> map) : map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (int v : map_) {
      if (v < 1 || v > static_cast<int>(map_.size()) || seen[static_cast<std::size_t>(v - 1)]) {
        throw std::invalid_argument("not a permutation of 1..l");
      }
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
  }

  static Permutation identity(std::size_t l) {
    std::vector<int> map(l);
    std::iota(map.begin(), map.end(), 1);
    return Permutation(std::move(map));
  }

  std::size_t size() const noexcept { return map_.size(); }
  /// p(r) for 1-based r.
  int operator()(int r) const { return map_.at(static_cast<std::size_t>(r - 1)); }
  const std::vector<int>& map() const noexcept { return map_; }

  Permutation inverse() const {
    std::vector<int> inv(map_.size());
    for (std::size_t r = 0; r < map_.size(); ++r) inv[static_cast<std::size_t>(map_[r] - 1)] = static_cast<int>(r + 1);
    return Permutation(std::move(inv));
  }

  /// (a * b)(r) = a(b(r)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different length");
    std::vector<int> map(a.size());
    for (std::size_t r = 0; r < map.size(); ++r) map[r] = a.map_[static_cast<std::size_t>(b.map_[r] - 1)];
    return Permutation(std::move(map));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> map_;
};

/// p(I) := I o p, i.e. result[r] = I[p(r)]. Applying p1 and then p2 equals
/// applying the composite p1 * p2.
inline MultiIndex apply_permutation(const Permutation& p, const MultiIndex& index) {
  if (p.size() != index.size()) {
    throw std::invalid_argument("permutation length " + std::to_string(p.size()) +
                                " does not match multi-index length " + std::to_string(index.size()));
  }
  std::vector<int> entries(index.size());
  for (std::size_t r = 0; r < entries.size(); ++r) {
    entries[r] = index.entries()[static_cast<std::size_t>(p.map()[r] - 1)];
  }
  return MultiIndex(index.dim(), std::move(entries));
}

/// All l! permutations of {1..l} in lexicographic order. Refuses l > cap.
inline std::vector<Permutation> permutations_of(std::size_t l, std::size_t cap = kDefaultPermutationCap) {
  if (l > cap) {
    throw std::length_error("permutation enumeration of degree " + std::to_string(l) +
                            " exceeds cap " + std::to_string(cap));
  }
  std::vector<int> map(l);
  std::iota(map.begin(), map.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(l));
  do {
    out.emplace_back(map);
  } while (std::next_permutation(map.begin(), map.end()));
  return out;
}

/// |eps|^I_J: 1 iff J is a rearrangement of I.
inline int epsilon_abs(const MultiIndex& i, const MultiIndex& j) {
  if (i.size() != j.size()) return 0;
  auto a = i.entries();
  auto b = j.entries();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b ? 1 : 0;
}

/// Generalised Kronecker delta: 1 iff I = J entrywise.
inline int kron_delta(const MultiIndex& i, const MultiIndex& j) {
  if (i.size() != j.size()) {
    throw std::invalid_argument("kron_delta of multi-indices with different lengths");
  }
  return i.entries() == j.entries() ? 1 : 0;
}

/// Position of a non-decreasing index in the colex enumeration of its degree.
inline std::uint64_t rank(const CardinalityIndex& index) {
  std::uint64_t result = 0;
  std::uint64_t position = 0;  // 0-based position i-1 in the canonical sequence
  for (int axis0 = 0; axis0 < index.dim(); ++axis0) {
    for (int rep = 0; rep < index.counts()[static_cast<std::size_t>(axis0)]; ++rep) {
      const std::uint64_t c = static_cast<std::uint64_t>(axis0) + position;
      result += binomial(c, position + 1);
      ++position;
    }
  }
  return result;
}

inline CardinalityIndex unrank(int n, std::size_t l, std::uint64_t r) {
  const std::uint64_t total = symmetric_dimension(n, l);
  if (r >= total) {
    throw std::out_of_range("rank " + std::to_string(r) + " out of range for n=" + std::to_string(n) +
                            ", l=" + std::to_string(l));
  }
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  std::uint64_t c = static_cast<std::uint64_t>(n) + l - 1;  // strict upper bound for c_l
  for (std::size_t i = l; i >= 1; --i) {
    // largest c_i < previous with C(c_i, i) <= r
    std::uint64_t ci = c - 1;
    while (binomial(ci, i) > r) --ci;
    r -= binomial(ci, i);
    ++counts[static_cast<std::size_t>(ci - (i - 1))];
    c = ci;
  }
  return CardinalityIndex(std::move(counts));
}

/// Every non-decreasing multi-index of degree l, in rank order.
inline std::vector<CardinalityIndex> enumerate_nondecreasing(int n, std::size_t l) {
  const std::uint64_t total = symmetric_dimension(n, l);
  std::vector<CardinalityIndex> out;
  out.reserve(total);
  for (std::uint64_t r = 0; r < total; ++r) out.push_back(unrank(n, l, r));
  return out;
}

/// Every ordered multi-index of degree l, row-major with position 1 slowest.
inline std::vector<MultiIndex> enumerate_ordered(int n, std::size_t l) {
  const std::uint64_t total = dense_dimension(n, l);
  std::vector<MultiIndex> out;
  out.reserve(total);
  std::vector<int> entries(l, 1);
  for (std::uint64_t k = 0; k < total; ++k) {
    out.emplace_back(n, entries);
    for (std::size_t pos = l; pos-- > 0;) {
      if (++entries[pos] <= n) break;
      entries[pos] = 1;
    }
  }
  return out;
}

}  // namespace hyperjet
