#include <gtest/gtest.h>

#include <algorithm>
#include <array>

#include "mfkron/characters.hpp"
#include "mfkron/error.hpp"
#include "oracles.hpp"

using namespace mfkron;

TEST(CharacterValue, Examples) {
  for (auto const& rho : enumerate_partitions(6)) {
    EXPECT_EQ(character_value({6}, {rho}), 1);
  }
  EXPECT_EQ(character_value({2, 1}, {{3}}), -1);
  for (auto const& lam : enumerate_partitions(7)) {
    EXPECT_EQ(character_value(lam, {{1, 1, 1, 1, 1, 1, 1}}), dimension(lam));
  }
  EXPECT_THROW(character_value({2, 1}, {{2}}), DomainError);
}

TEST(CharacterValue, SignCharacterTwistsByConjugation) {
  for (int n = 1; n <= 8; ++n) {
    for (auto const& lam : enumerate_partitions(n)) {
      for (auto const& rho : enumerate_partitions(n)) {
        int const sign = (n - rho.length()) % 2 == 0 ? 1 : -1;
        ASSERT_EQ(character_value(conjugate(lam), {rho}), sign * character_value(lam, {rho}));
      }
    }
  }
}

TEST(CharacterValue, TranspositionsAndThreeCyclesFromContents) {
  for (int n = 3; n <= 12; ++n) {
    std::vector<int> transposition(n - 2, 1);
    transposition.insert(transposition.begin(), 2);
    std::vector<int> three_cycle(n - 3, 1);
    three_cycle.insert(three_cycle.begin(), 3);
    BigInt const pairs   = n * (n - 1) / 2;
    BigInt const triples = BigInt(n) * (n - 1) * (n - 2) / 3;
    for (auto const& lam : enumerate_partitions(n)) {
      BigInt const dim = dimension(lam);
      ASSERT_EQ(character_value(lam, {Partition(transposition)}) * pairs,
                dim * oracle::content_sum(lam));
      ASSERT_EQ(character_value(lam, {Partition(three_cycle)}) * triples,
                dim * (oracle::content_sum(lam, 2) - n * (n - 1) / 2))
          << lam.to_string();
    }
  }
}

TEST(ClassSize, Examples) {
  EXPECT_EQ(class_size({{1, 1, 1, 1}}), 1);
  EXPECT_EQ(class_size({{6}}), factorial(5));
  EXPECT_EQ(class_size({{2, 2, 1}}), 15);
}

TEST(ClassSize, MatchesPermutationCensus) {
  for (int n = 1; n <= 8; ++n) {
    auto const census = oracle::cycle_type_census(n);
    ASSERT_EQ(census.size(), enumerate_partitions(n).size());
    for (auto const& [rho, count] : census) {
      ASSERT_EQ(class_size({rho}), count) << rho.to_string();
    }
  }
}

TEST(CharacterTable, SmallTables) {
  auto const t2 = character_table(2);
  ASSERT_EQ(t2->order(), 2u);
  Partition const id2{1, 1};
  Partition const swap{2};
  EXPECT_EQ(t2->value(Partition{2}, id2), 1);
  EXPECT_EQ(t2->value(Partition{2}, swap), 1);
  EXPECT_EQ(t2->value(Partition{1, 1}, id2), 1);
  EXPECT_EQ(t2->value(Partition{1, 1}, swap), -1);
  EXPECT_EQ(t2->class_sizes(), (std::vector<BigInt>{1, 1}));

  auto const t3 = character_table(3);
  Partition const id3{1, 1, 1};
  EXPECT_EQ(t3->value(Partition{3}, id3), 1);
  EXPECT_EQ(t3->value(Partition{2, 1}, id3), 2);
  EXPECT_EQ(t3->value(Partition{1, 1, 1}, id3), 1);
}

TEST(CharacterTable, WeightedRowSumsVanishExceptForTheTrivialCharacter) {
  auto const t = character_table(5);
  for (auto const& lam : t->labels()) {
    BigInt weighted = 0;
    BigInt regular  = 0;
    for (std::size_t j = 0; j < t->order(); ++j) {
      weighted += t->class_sizes()[j] * t->value(t->index_of(lam), j);
      if (t->labels()[j] == Partition{1, 1, 1, 1, 1}) {
        regular += t->value(t->index_of(lam), j) * factorial(5);
      }
    }
    EXPECT_EQ(weighted, lam == Partition{5} ? factorial(5) : 0) << lam.to_string();
    EXPECT_EQ(regular / factorial(5), dimension(lam));
  }
}

TEST(CharacterTable, OrthogonalityRelations) {
  for (int n = 0; n <= 10; ++n) {
    auto const t = character_table(n);
    EXPECT_FALSE(t->orthogonality_failure().has_value()) << n;
    std::size_t const k = t->order();
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a; b < k; ++b) {
        BigInt rows = 0;
        BigInt cols = 0;
        for (std::size_t j = 0; j < k; ++j) {
          rows += t->class_sizes()[j] * t->value(a, j) * t->value(b, j);
          cols += t->value(j, a) * t->value(j, b);
        }
        ASSERT_EQ(rows, a == b ? factorial(n) : 0);
        ASSERT_EQ(cols * t->class_sizes()[a], a == b ? factorial(n) : 0);
      }
    }
  }
}

TEST(CharacterTable, RendersCsv) {
  auto const csv = character_table(2)->to_csv();
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_NE(csv.find("-1"), std::string::npos);
}

TEST(CharacterTable, CeilingIsEnforced) {
  int const saved = table_ceiling();
  set_table_ceiling(5);
  EXPECT_THROW(character_table(6), ResourceError);
  EXPECT_NO_THROW(character_table(5));
  set_table_ceiling(saved);
}

TEST(KronOracle, Examples) {
  for (auto const& lam : enumerate_partitions(5)) {
    for (auto const& nu : enumerate_partitions(5)) {
      EXPECT_EQ(kron_oracle(lam, {5}, nu), lam == nu ? 1 : 0);
    }
  }
  EXPECT_EQ(kron_oracle({3, 3, 3}, {3, 3, 3}, {5, 2, 2}), 2);
  EXPECT_EQ(kron_oracle({4, 2}, {4, 2}, {3, 2, 1}), 2);
  EXPECT_THROW(kron_oracle({2, 1}, {2, 1}, {2}), DomainError);
}

TEST(KronOracle, FullSymmetryAndConjugation) {
  for (int n = 1; n <= 6; ++n) {
    auto const ps = enumerate_partitions(n);
    for (auto const& a : ps) {
      for (auto const& b : ps) {
        for (auto const& c : ps) {
          std::int64_t const g = kron_oracle(a, b, c);
          ASSERT_GE(g, 0);
          std::array<Partition, 3> perm{a, b, c};
          std::sort(perm.begin(), perm.end());
          do {
            ASSERT_EQ(kron_oracle(perm[0], perm[1], perm[2]), g);
          } while (std::next_permutation(perm.begin(), perm.end()));
          ASSERT_EQ(kron_oracle(conjugate(a), conjugate(b), c), g);
          ASSERT_EQ(kron_oracle(conjugate(a), b, conjugate(c)), g);
        }
      }
    }
  }
}

TEST(KronProductOracle, DimensionSumRule) {
  for (int n = 1; n <= 8; ++n) {
    for (auto const& a : enumerate_partitions(n)) {
      for (auto const& b : enumerate_partitions(n)) {
        auto const product = kron_product_oracle(a, b);
        ASSERT_TRUE(product.is_genuine());
        ASSERT_EQ(product.dimension(), dimension(a) * dimension(b));
      }
    }
  }
}
