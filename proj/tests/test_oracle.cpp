#include <bit>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "polycount/oracle.hpp"

using namespace polycount;
using oracle::Group;
using oracle::TupleSet;

TEST(Oracle, PackRoundTripAndOrder) {
  const auto a = CircularTuple::parse("0110100");
  EXPECT_EQ(oracle::unpack(oracle::pack(a), 7), a);
  // numeric order on packed words is lexicographic order on tuples
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto x = oracle::unpack(static_cast<std::uint32_t>(rng() & 0xFFF), 12);
    const auto y = oracle::unpack(static_cast<std::uint32_t>(rng() & 0xFFF), 12);
    ASSERT_EQ(x.str() < y.str(), oracle::pack(x) < oracle::pack(y));
  }
  EXPECT_THROW(oracle::pack(CircularTuple(25)), oracle::OracleBoundError);
}

TEST(Oracle, PackedActionMatchesModel) {
  for (std::uint32_t n = 3; n <= 10; ++n) {
    for (const auto& sigma : GroupElement::dihedral(n)) {
      for (std::uint32_t word = 0; word < (1U << n); ++word) {
        const auto a = oracle::unpack(word, n);
        ASSERT_EQ(oracle::unpack(oracle::act(sigma, word), n), apply(sigma, a));
      }
    }
  }
}

TEST(Oracle, SideGoodnessMatchesBlockGoodness) {
  for (std::uint32_t n = 3; n <= 16; ++n) {
    for (std::uint32_t word = 0; word < (1U << n); ++word) {
      ASSERT_EQ(oracle::is_good_by_sides(word, n), is_good(oracle::unpack(word, n)))
          << oracle::unpack(word, n).str();
    }
  }
}

TEST(CanonicalForm, Examples) {
  const CircularTuple ones(std::vector<std::uint8_t>(7, 1));
  EXPECT_EQ(oracle::canonical_form(ones, Group::Dihedral), ones);
  EXPECT_EQ(oracle::canonical_form(ones, Group::Cyclic), ones);
  EXPECT_EQ(oracle::canonical_form(CircularTuple::parse("0101"), Group::Dihedral),
            CircularTuple::parse("0101"));
  EXPECT_EQ(oracle::canonical_form(CircularTuple::parse("11010"), Group::Cyclic),
            CircularTuple::parse("01011"));
  EXPECT_THROW(oracle::canonical_form(CircularTuple(25), Group::Cyclic), oracle::OracleBoundError);
}

TEST(CanonicalForm, EqualsMinimumOverExplicitOrbit) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = static_cast<std::uint32_t>(3 + rng() % 14);
    CircularTuple a(n);
    for (std::uint32_t i = 0; i < n; ++i) a.set(i, rng() & 1U);
    for (auto group : {Group::Dihedral, Group::Cyclic}) {
      const auto elements =
          group == Group::Dihedral ? GroupElement::dihedral(n) : GroupElement::cyclic(n);
      std::set<CircularTuple> orbit;
      for (const auto& s : elements) orbit.insert(apply(s, a));
      const auto canon = oracle::canonical_form(a, group);
      ASSERT_EQ(canon, *orbit.begin());
      ASSERT_EQ(oracle::canonical_form(canon, group), canon);
      for (const auto& b : orbit) ASSERT_EQ(oracle::canonical_form(b, group), canon);
    }
  }
}

TEST(OrbitCount, Examples) {
  EXPECT_EQ(oracle::orbit_count(12, Group::Dihedral, 4), 16);
  EXPECT_EQ(oracle::orbit_count(9, Group::Dihedral), 32);
  EXPECT_EQ(oracle::orbit_count(5, Group::Cyclic, 5), 1);
  EXPECT_THROW(oracle::orbit_count(25, Group::Cyclic), oracle::OracleBoundError);
  EXPECT_THROW(oracle::orbit_count(2, Group::Cyclic), oracle::OracleBoundError);
  EXPECT_THROW(oracle::orbit_count(6, Group::Cyclic, 7), std::invalid_argument);
}

TEST(FixCountDirect, Examples) {
  EXPECT_EQ(oracle::fix_count_direct(4, GroupElement::identity(4), TupleSet::All), 16);
  EXPECT_EQ(oracle::fix_count_direct(4, GroupElement::identity(4), TupleSet::Good), 1);
  EXPECT_EQ(oracle::fix_count_direct(6, GroupElement::rotation(6, 3), TupleSet::Good), 4);
  EXPECT_EQ(oracle::fix_count_direct(6, GroupElement::rotation(6, 3), TupleSet::Good, 4), 3);
  EXPECT_THROW(oracle::fix_count_direct(6, GroupElement::rotation(5, 1), TupleSet::Good),
               std::invalid_argument);
}

TEST(FixCountDirect, GoodPlusBadIsAll) {
  for (std::uint32_t n = 3; n <= 14; ++n) {
    for (const auto& sigma : GroupElement::dihedral(n)) {
      const Count good = oracle::fix_count_direct(n, sigma, TupleSet::Good);
      const Count bad = oracle::fix_count_direct(n, sigma, TupleSet::Bad);
      const Count all = oracle::fix_count_direct(n, sigma, TupleSet::All);
      ASSERT_EQ(good + bad, all);
    }
  }
}

// Counting orbits directly and averaging fixed points over the group must agree.
TEST(OrbitCount, EqualsAverageOfFixedPoints) {
  for (std::uint32_t n = 3; n <= 14; ++n) {
    for (auto group : {Group::Dihedral, Group::Cyclic}) {
      const auto elements =
          group == Group::Dihedral ? GroupElement::dihedral(n) : GroupElement::cyclic(n);
      std::vector<Count> sums(n + 1, 0);
      for (const auto& s : elements) {
        const auto fixed = oracle::fix_counts_by_weight(n, s, TupleSet::Good);
        for (std::uint32_t k = 0; k <= n; ++k) sums[k] += fixed[k];
      }
      const auto orbits = oracle::orbit_counts_by_weight(n, group);
      for (std::uint32_t k = 0; k <= n; ++k) {
        ASSERT_EQ(sums[k], orbits[k] * static_cast<unsigned long>(elements.size()))
            << "n=" << n << " weight=" << k;
      }
    }
  }
}

// Good tuples of weight m number C(n, m) minus the bad ones; a bad tuple is
// recognised here as a corner followed by a run of bad-length zeros.
TEST(FixCountDirect, GoodCountByWeightMatchesBlockPlacement) {
  for (std::uint32_t n = 3; n <= 14; ++n) {
    const auto good = oracle::fix_counts_by_weight(n, GroupElement::identity(n), TupleSet::Good);
    const std::uint32_t k = n / 2;
    const std::uint32_t bad_length = n % 2 == 0 ? k - 1 : k;
    for (std::uint32_t m = 3; m <= n; ++m) {
      std::set<std::uint32_t> bad_words;
      for (std::uint32_t word = 0; word < (1U << n); ++word) {
        if (static_cast<std::uint32_t>(std::popcount(word)) != m) continue;
        const auto a = oracle::unpack(word, n);
        for (std::uint32_t start = 0; start < n; ++start) {
          bool run = a[start] == 1;
          for (std::uint32_t j = 1; j <= bad_length && run; ++j) run = a[(start + j) % n] == 0;
          if (run) bad_words.insert(word);
        }
      }
      Count binom_nm;
      mpz_bin_uiui(binom_nm.get_mpz_t(), n, m);
      ASSERT_EQ(good[m], binom_nm - static_cast<unsigned long>(bad_words.size()))
          << "n=" << n << " m=" << m;
    }
  }
}
