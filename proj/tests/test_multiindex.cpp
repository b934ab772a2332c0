#include "hyperjet/multiindex.hpp"
#include "hyperjet/random.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

using namespace hyperjet;

namespace {

CardinalityIndex counts(std::vector<int> c) { return CardinalityIndex(std::move(c)); }

}  // namespace

TEST(MultiIndex, ParseAndValidate) {
  const auto i = MultiIndex::parse(3, "1,2,2");
  EXPECT_EQ(i.size(), 3u);
  EXPECT_EQ(i[0], 1);
  EXPECT_EQ(i[2], 2);
  EXPECT_EQ(i.to_string(), "1,2,2");
  EXPECT_EQ(MultiIndex::parse(3, "").size(), 0u);
  EXPECT_THROW(MultiIndex::parse(2, "1,3"), std::out_of_range);
  EXPECT_THROW(MultiIndex::parse(2, "0"), std::out_of_range);
  EXPECT_THROW(MultiIndex::parse(2, "1,,2"), std::invalid_argument);
  EXPECT_THROW(MultiIndex::parse(2, "x"), std::invalid_argument);
}

TEST(Cardinality, Counts) {
  EXPECT_EQ(cardinality(MultiIndex::parse(3, "1,2,2")), counts({1, 2, 0}));
  EXPECT_EQ(cardinality(MultiIndex::parse(2, "")), counts({0, 0}));
  EXPECT_EQ(cardinality(MultiIndex::parse(3, "3,1,3,1")), counts({2, 0, 2}));
}

TEST(Cardinality, InvariantUnderPermutation) {
  RandomSource rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto i = rng.multi_index(4, 5);
    EXPECT_EQ(cardinality(apply_permutation(rng.permutation(5), i)), cardinality(i));
  }
}

TEST(Cardinality, ParseUsesCounts) {
  const auto c = CardinalityIndex::parse(3, "2,0,1");
  EXPECT_EQ(c.degree(), 3u);
  EXPECT_EQ(c.canonical().to_string(), "1,1,3");
  EXPECT_EQ(c.to_string(), "2,0,1");
  EXPECT_THROW(CardinalityIndex::parse(3, "1,1"), std::invalid_argument);
  EXPECT_THROW(CardinalityIndex::parse(2, "-1,1"), std::invalid_argument);
}

TEST(Cardinality, Arithmetic) {
  const auto a = counts({2, 1});
  const auto b = counts({1, 0});
  EXPECT_EQ(a + b, counts({3, 1}));
  EXPECT_EQ(a - b, counts({1, 1}));
  EXPECT_TRUE(b.is_le(a));
  EXPECT_FALSE(a.is_le(b));
  EXPECT_THROW(b - a, std::domain_error);
}

TEST(MiFactorial, Examples) {
  EXPECT_EQ(mi_factorial(counts({1, 2, 0})), 2u);
  EXPECT_EQ(mi_factorial(counts({0, 0, 0, 0})), 1u);
  EXPECT_EQ(mi_factorial(counts({3, 1})), 6u);
}

TEST(Permutation, Apply) {
  EXPECT_EQ(apply_permutation(Permutation({2, 1}), MultiIndex::parse(3, "1,3")), MultiIndex::parse(3, "3,1"));
  const auto i = MultiIndex::parse(4, "4,1,3");
  EXPECT_EQ(apply_permutation(Permutation::identity(3), i), i);
  EXPECT_EQ(apply_permutation(Permutation({3, 1, 2}), MultiIndex::parse(3, "1,2,2")), MultiIndex::parse(3, "2,1,2"));
  EXPECT_THROW(apply_permutation(Permutation({2, 1}), i), std::invalid_argument);
  EXPECT_THROW(Permutation({1, 1}), std::invalid_argument);
}

TEST(Permutation, CompositionLaw) {
  // p2(p1(I)) = I o p1 o p2
  RandomSource rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto i = rng.multi_index(3, 4);
    const auto p1 = rng.permutation(4);
    const auto p2 = rng.permutation(4);
    EXPECT_EQ(apply_permutation(p2, apply_permutation(p1, i)), apply_permutation(p1 * p2, i));
    EXPECT_EQ(apply_permutation(p1.inverse(), apply_permutation(p1, i)), i);
  }
}

TEST(Permutation, Enumeration) {
  EXPECT_EQ(permutations_of(3).size(), 6u);
  EXPECT_EQ(permutations_of(0).size(), 1u);
  EXPECT_EQ(permutations_of(4).size(), 24u);
  const auto all = permutations_of(5);
  std::set<std::vector<int>> distinct;
  for (const auto& p : all) distinct.insert(p.map());
  EXPECT_EQ(distinct.size(), 120u);
  EXPECT_THROW(permutations_of(9), std::length_error);
  EXPECT_EQ(permutations_of(3, 3).size(), 6u);
  EXPECT_THROW(permutations_of(4, 3), std::length_error);
}

TEST(Epsilon, Examples) {
  EXPECT_EQ(epsilon_abs(MultiIndex::parse(2, "1,2"), MultiIndex::parse(2, "2,1")), 1);
  EXPECT_EQ(epsilon_abs(MultiIndex::parse(2, "1,1"), MultiIndex::parse(2, "1,2")), 0);
  EXPECT_EQ(epsilon_abs(MultiIndex::parse(2, "1,2,2"), MultiIndex::parse(2, "2,2,1")), 1);
  EXPECT_EQ(epsilon_abs(MultiIndex::parse(2, "1,2"), MultiIndex::parse(2, "1,2,2")), 0);
}

TEST(KronDelta, Examples) {
  EXPECT_EQ(kron_delta(MultiIndex::parse(2, "1,2"), MultiIndex::parse(2, "1,2")), 1);
  EXPECT_EQ(kron_delta(MultiIndex::parse(2, "1,2"), MultiIndex::parse(2, "2,1")), 0);
  EXPECT_EQ(kron_delta(MultiIndex::parse(3, "2,2,3"), MultiIndex::parse(3, "2,2,3")), 1);
  EXPECT_THROW(kron_delta(MultiIndex::parse(2, "1"), MultiIndex::parse(2, "1,2")), std::invalid_argument);
}

TEST(Epsilon, DeltaSumIdentity) {
  RandomSource rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t l = static_cast<std::size_t>(rng.uniform_int(0, 5));
    const auto i = rng.multi_index(3, l);
    const auto j = rng.coin() ? apply_permutation(rng.permutation(l), i) : rng.multi_index(3, l);
    std::uint64_t sum = 0;
    for (const auto& p : permutations_of(l)) sum += static_cast<std::uint64_t>(kron_delta(i, apply_permutation(p, j)));
    EXPECT_EQ(sum, mi_factorial(cardinality(i)) * static_cast<std::uint64_t>(epsilon_abs(i, j)));
  }
}

TEST(Enumeration, SmallCases) {
  const auto two = enumerate_nondecreasing(2, 2);
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(two[0].canonical().to_string(), "1,1");
  EXPECT_EQ(two[1].canonical().to_string(), "1,2");
  EXPECT_EQ(two[2].canonical().to_string(), "2,2");
  EXPECT_EQ(enumerate_nondecreasing(3, 2).size(), 6u);
  for (std::size_t l = 0; l <= 5; ++l) {
    const auto one = enumerate_nondecreasing(1, l);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], counts({static_cast<int>(l)}));
  }
}

TEST(Enumeration, MatchesSortedTupleOracle) {
  for (int n = 1; n <= 4; ++n) {
    for (std::size_t l = 0; l <= 4; ++l) {
      std::set<oracle::Tuple> classes;
      for (const auto& t : oracle::tuples(n, l)) classes.insert(oracle::sorted(t));
      const auto listed = enumerate_nondecreasing(n, l);
      ASSERT_EQ(listed.size(), classes.size());
      for (const auto& c : listed) EXPECT_TRUE(classes.count(c.canonical().entries()));
      for (const auto& c : listed) {
        EXPECT_EQ(multiplicity(c), static_cast<std::uint64_t>(oracle::class_size(c.canonical().entries(), n)));
      }
    }
  }
}

TEST(Enumeration, OrderedRowMajor) {
  const auto all = enumerate_ordered(2, 2);
  ASSERT_EQ(all.size(), 4u);
  EXPECT_EQ(all[0].to_string(), "1,1");
  EXPECT_EQ(all[1].to_string(), "1,2");
  EXPECT_EQ(all[2].to_string(), "2,1");
  EXPECT_EQ(all[3].to_string(), "2,2");
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(counts({2, 0})), 0u);
  EXPECT_EQ(rank(counts({1, 1})), 1u);
  EXPECT_EQ(rank(counts({0, 2})), 2u);
  EXPECT_EQ(rank(CardinalityIndex::zero(4)), 0u);
  EXPECT_EQ(unrank(4, 0, 0), CardinalityIndex::zero(4));
  for (int axis = 1; axis <= 3; ++axis) EXPECT_EQ(rank(CardinalityIndex::unit(3, axis)), static_cast<std::uint64_t>(axis - 1));
  EXPECT_THROW(unrank(2, 2, 3), std::out_of_range);
}

TEST(Rank, InverseOfUnrankAndAgreesWithEnumeration) {
  for (int n = 1; n <= 5; ++n) {
    for (std::size_t l = 0; l <= 6; ++l) {
      const auto listed = enumerate_nondecreasing(n, l);
      ASSERT_EQ(listed.size(), symmetric_dimension(n, l));
      for (std::size_t r = 0; r < listed.size(); ++r) {
        EXPECT_EQ(rank(listed[r]), r);
        EXPECT_EQ(unrank(n, l, r), listed[r]);
      }
    }
  }
}

TEST(Multiplicity, Examples) {
  EXPECT_EQ(multiplicity(counts({1, 1})), 2u);
  EXPECT_EQ(multiplicity(counts({2, 0})), 1u);
  std::uint64_t sum = 0;
  for (const auto& c : enumerate_nondecreasing(2, 3)) sum += multiplicity(c);
  EXPECT_EQ(sum, 8u);
}

TEST(Dimensions, Formulae) {
  EXPECT_EQ(symmetric_dimension(3, 2), 6u);
  EXPECT_EQ(dense_dimension(3, 2), 9u);
  EXPECT_EQ(symmetric_dimension(2, 3), 4u);
  EXPECT_EQ(dense_dimension(2, 3), 8u);
  EXPECT_EQ(symmetric_dimension(5, 0), 1u);
  EXPECT_EQ(factorial(0), 1u);
  EXPECT_EQ(factorial(20), 2432902008176640000ull);
  EXPECT_THROW(factorial(21), std::overflow_error);
}
