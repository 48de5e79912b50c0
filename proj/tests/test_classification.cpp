#include <gtest/gtest.h>

#include <map>

#include "mfkron/characters.hpp"
#include "mfkron/classification.hpp"
#include "mfkron/error.hpp"
#include "mfkron/kronecker.hpp"
#include "mfkron/littlewood_richardson.hpp"

using namespace mfkron;

namespace {

  CharacterExpansion expansion(std::initializer_list<Partition> labels) {
    int const n = labels.size() ? labels.begin()->size() : 0;
    CharacterExpansion e(n);
    for (auto const& p : labels) {
      e.add(p);
    }
    return e;
  }

  CharacterExpansion all_with_at_most_four_parts(int n) {
    CharacterExpansion e(n);
    for (auto const& p : enumerate_partitions(n, {.max_length = 4, .max_width = std::nullopt})) {
      e.add(p);
    }
    return e;
  }

  //! Products of irreducibles of one degree, computed once.
  class ProductTable {
   public:
    explicit ProductTable(int n) {
      for (auto const& a : enumerate_partitions(n)) {
        for (auto const& b : enumerate_partitions(n)) {
          if (a >= b) {
            _products.emplace(std::pair{a, b}, kron_product_oracle(a, b));
          }
        }
      }
    }

    CharacterExpansion operator()(CharacterExpansion const& x,
                                  CharacterExpansion const& y) const {
      CharacterExpansion out(x.degree());
      for (auto const& [p, m] : x.terms()) {
        for (auto const& [q, k] : y.terms()) {
          CharacterExpansion term = _products.at(p >= q ? std::pair{p, q} : std::pair{q, p});
          term *= m * k;
          out += term;
        }
      }
      return out;
    }

   private:
    std::map<std::pair<Partition, Partition>, CharacterExpansion> _products;
  };

}  // namespace

TEST(IsMfPair, Examples) {
  auto const linear = is_mf_pair({6, 3, 3}, {12});
  EXPECT_TRUE(linear);
  EXPECT_EQ(linear.clause, "T1.1-case-1");
  auto const sign = is_mf_pair({6, 3, 3}, Partition(std::vector<int>(12, 1)));
  EXPECT_TRUE(sign);
  EXPECT_EQ(sign.clause, "T1.1-case-1");

  auto const square = is_mf_pair({4, 2}, {4, 2});
  EXPECT_FALSE(square);
  EXPECT_FALSE(square.clause.has_value());

  auto const hook = is_mf_pair({3, 3}, {4, 1, 1});
  EXPECT_TRUE(hook);
  EXPECT_EQ(hook.clause, "T1.1-case-4");
  EXPECT_EQ(hook.normalization, Normalization{});

  EXPECT_EQ(is_mf_pair({4, 1}, {3, 1, 1}).clause, "T1.1-case-2");
  EXPECT_EQ(is_mf_pair({3, 2}, {3, 2}).clause, "T1.1-case-3");
  EXPECT_EQ(is_mf_pair({3, 3}, {4, 2}).clause, "T1.1-case-4");
  EXPECT_EQ(is_mf_pair({2, 2, 2}, {4, 2}).clause, "T1.1-case-4");
  EXPECT_EQ(is_mf_pair({2, 2, 2, 2}, {6, 2}).clause, "T1.1-case-5");
  EXPECT_EQ(is_mf_pair({3, 3, 3}, {6, 3}).clause, "T1.1-case-6");
  EXPECT_EQ(is_mf_pair({6, 6}, {4, 4, 4}).clause, "T1.1-case-6");

  EXPECT_THROW(is_mf_pair({2, 1}, {2}), DomainError);
  EXPECT_THROW(is_mf_pair({}, {}), DomainError);
}

TEST(IsMfPair, ReportsTheNormalizationUsed) {
  auto const v = is_mf_pair({2, 2, 1, 1}, {3, 3});
  ASSERT_TRUE(v);
  EXPECT_EQ(v.clause, "T1.1-case-4");
  EXPECT_TRUE(v.normalization.swapped);
  auto const w = is_mf_pair({2, 2, 2}, {2, 2, 2});
  ASSERT_TRUE(w);
  EXPECT_EQ(w.clause, "T1.1-case-3");
  EXPECT_TRUE(w.normalization.conjugate_first);
  EXPECT_TRUE(w.normalization.conjugate_second);
}

TEST(IsMfPair, AgreesWithTheComputedProductUpToNine) {
  for (int n = 1; n <= 9; ++n) {
    auto const ps = enumerate_partitions(n);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = i; j < ps.size(); ++j) {
        bool const computed = g_max(ps[i], ps[j]) == 1;
        auto const v        = is_mf_pair(ps[i], ps[j]);
        ASSERT_EQ(static_cast<bool>(v), computed) << ps[i].to_string() << " . " << ps[j].to_string();
        ASSERT_EQ(v.clause.has_value(), computed);
      }
    }
  }
}

TEST(IsMfPair, IsCoherentUnderConjugation) {
  for (int n = 1; n <= 9; ++n) {
    auto const ps = enumerate_partitions(n);
    for (auto const& lam : ps) {
      for (auto const& mu : ps) {
        bool const v = static_cast<bool>(is_mf_pair(lam, mu));
        ASSERT_EQ(v, static_cast<bool>(is_mf_pair(conjugate(lam), mu)));
        ASSERT_EQ(v, static_cast<bool>(is_mf_pair(lam, conjugate(mu))));
        ASSERT_EQ(v, static_cast<bool>(is_mf_pair(conjugate(lam), conjugate(mu))));
        ASSERT_EQ(v, static_cast<bool>(is_mf_pair(mu, lam)));
      }
    }
  }
}

TEST(IsMfTriple, Examples) {
  EXPECT_FALSE(is_mf_triple({3, 1}, {2, 2}, {2, 1, 1}));
  Partition const mu{3, 3};
  Partition const nu{4, 1, 1};
  auto const trivial = is_mf_triple({6}, mu, nu);
  EXPECT_EQ(static_cast<bool>(trivial), static_cast<bool>(is_mf_pair(mu, nu)));
  EXPECT_EQ(trivial.clause, is_mf_pair(mu, nu).clause);
  auto const sign = is_mf_triple({1, 1, 1, 1, 1, 1}, {4, 2}, {4, 2});
  EXPECT_EQ(static_cast<bool>(sign), static_cast<bool>(is_mf_pair({2, 2, 1, 1}, {4, 2})));
  EXPECT_THROW(is_mf_triple({2, 1}, {2, 1}, {2, 2}), DomainError);
}

TEST(IsMfTriple, AllNonLinearTriplesHaveMultiplicities) {
  for (int n = 2; n <= 7; ++n) {
    auto const ps = enumerate_partitions(n);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = i; j < ps.size(); ++j) {
        auto const pair = kron_product(ps[i], ps[j]);
        for (std::size_t k = j; k < ps.size(); ++k) {
          auto const triple = kron_product(pair, irreducible(ps[k]));
          bool const computed = triple.is_multiplicity_free();
          ASSERT_EQ(static_cast<bool>(is_mf_triple(ps[i], ps[j], ps[k])), computed)
              << ps[i].to_string() << ' ' << ps[j].to_string() << ' ' << ps[k].to_string();
          if (!is_linear(ps[i]) && !is_linear(ps[j]) && !is_linear(ps[k])) {
            ASSERT_GT(triple.max_multiplicity(), 1);
          }
        }
      }
    }
  }
}

TEST(IsMfSkewTimesIrr, Examples) {
  SkewShape const s({3, 2}, {1});
  auto const v = is_mf_skew_times_irr(s, {2, 2});
  ASSERT_TRUE(v);
  EXPECT_EQ(v.clause, "T1.3-case-3");
  EXPECT_EQ(kron_product(SkewShape(s), SkewShape(Partition{2, 2})),
            expansion({{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));

  SkewShape const t({4, 1}, {1});
  auto const w = is_mf_skew_times_irr(t, {2, 2});
  ASSERT_TRUE(w);
  EXPECT_EQ(w.clause, "T1.3-case-2");
  EXPECT_EQ(kron_product(t, SkewShape(Partition{2, 2})),
            expansion({{3, 1}, {2, 2}, {2, 1, 1}}));

  auto const linear = is_mf_skew_times_irr(s, {1, 1, 1, 1});
  ASSERT_TRUE(linear);
  EXPECT_EQ(linear.clause, "T1.3-case-1");

  EXPECT_FALSE(is_mf_skew_times_irr(s, {3, 1}));
  EXPECT_THROW(is_mf_skew_times_irr(s, {2, 1}), DomainError);
}

TEST(IsMfSkewTimesIrr, DefersToPairsForPartitionShapes) {
  SkewShape const rotated({3, 3}, {1});
  auto const v = is_mf_skew_times_irr(rotated, {3, 2});
  EXPECT_EQ(static_cast<bool>(v), static_cast<bool>(is_mf_pair({3, 2}, {3, 2})));
  EXPECT_EQ(v.clause, "T1.1-case-3");
  EXPECT_FALSE(v.note.empty());
}

TEST(IsMfSkewTimesIrr, AgreesWithTheProductOnAllBasicShapes) {
  for (int n = 1; n <= 7; ++n) {
    auto const       alphas = enumerate_partitions(n);
    ProductTable const table(n);
    for (auto const& s : enumerate_basic_skew_shapes(n)) {
      auto const chi = skew_expand(s);
      for (auto const& alpha : alphas) {
        bool const computed = table(chi, irreducible(alpha)).is_multiplicity_free();
        ASSERT_EQ(static_cast<bool>(is_mf_skew_times_irr(s, alpha)), computed)
            << s.to_string() << " . " << alpha.to_string();
      }
    }
  }
}

TEST(IsMfSkewTimesSkew, ProperPairsAreNeverMultiplicityFree) {
  for (int n = 1; n <= 6; ++n) {
    ProductTable const              table(n);
    std::vector<SkewShape>          proper;
    std::vector<CharacterExpansion> chis;
    for (auto const& s : enumerate_basic_skew_shapes(n)) {
      if (is_proper_skew(s)) {
        proper.push_back(s);
        chis.push_back(skew_expand(s));
      }
    }
    for (std::size_t i = 0; i < proper.size(); ++i) {
      for (std::size_t j = i; j < proper.size(); ++j) {
        ASSERT_FALSE(table(chis[i], chis[j]).is_multiplicity_free())
            << proper[i].to_string() << " . " << proper[j].to_string();
        ASSERT_FALSE(is_mf_skew_times_skew(proper[i], proper[j]));
      }
    }
  }
}

TEST(IsMfSkewTimesSkew, ReducesWhenOneShapeIsAPartition) {
  SkewShape const s({3, 2}, {1});
  auto const v = is_mf_skew_times_skew(SkewShape(Partition{2, 2}), s);
  ASSERT_TRUE(v);
  EXPECT_EQ(v.clause, "T1.3-case-3");
  EXPECT_TRUE(v.normalization.swapped);
}

TEST(ProductWithNatural, Examples) {
  EXPECT_EQ(product_with_natural({3, 1}), expansion({{4}, {3, 1}, {2, 2}, {2, 1, 1}}));
  for (int n = 3; n <= 7; ++n) {
    EXPECT_EQ(product_with_natural({n}), irreducible({n - 1, 1}));
  }
  EXPECT_EQ(product_with_natural({2, 2}), expansion({{3, 1}, {2, 1, 1}}));
  EXPECT_THROW(product_with_natural({2}), DomainError);
}

TEST(ProductWithNatural, MatchesOracleUpToNine) {
  for (int n = 3; n <= 9; ++n) {
    std::vector<int> natural{n - 1, 1};
    for (auto const& mu : enumerate_partitions(n)) {
      auto const formula = product_with_natural(mu);
      ASSERT_EQ(formula, kron_product_oracle(mu, Partition(natural))) << mu.to_string();
      ASSERT_EQ(formula[mu], static_cast<std::int64_t>(removable_nodes(mu).size()) - 1);
    }
  }
}

TEST(TwoRowSquares, Examples) {
  auto const stair = staircase_square(2);
  EXPECT_EQ(stair.size(), 6u);
  EXPECT_EQ(stair.multiplicity({1, 1, 1, 1, 1}), 0);
  EXPECT_EQ(kk_square(2), expansion({{4}, {2, 2}, {1, 1, 1, 1}}));
  EXPECT_EQ(kk_times_near(2), expansion({{3, 1}, {2, 1, 1}}));
}

TEST(TwoRowSquares, MatchOracleAndAreComplementary) {
  for (int k = 1; k <= 6; ++k) {
    EXPECT_EQ(staircase_square(k), kron_product_oracle({k + 1, k}, {k + 1, k})) << k;
    EXPECT_EQ(kk_square(k), kron_product_oracle({k, k}, {k, k})) << k;
    if (k >= 2) {
      EXPECT_EQ(kk_times_near(k), kron_product_oracle({k, k}, {k + 1, k - 1})) << k;
    }
    EXPECT_EQ(kk_square(k) + kk_times_near(k), all_with_at_most_four_parts(2 * k)) << k;
  }
}

TEST(KkTimesHook, Examples) {
  EXPECT_EQ(kk_times_hook_mult(3, 2, {2, 2, 2}), kron_oracle({3, 3}, {4, 1, 1}, {2, 2, 2}));
  EXPECT_EQ(kk_times_hook_mult(6, 5, {4, 4, 3, 1}), 0);
  EXPECT_EQ(kk_times_hook_mult(5, 3, {4, 3, 3}), 0);
  EXPECT_EQ(kk_times_hook_mult(2, 2, {2, 2}), kron_oracle({2, 2}, {2, 1, 1}, {2, 2}));
}

TEST(KkTimesHook, MatchesOracleAndIsAtMostOne) {
  for (int k = 1; 2 * k <= 12; ++k) {
    int const n = 2 * k;
    for (int b = 0; b < n; ++b) {
      std::vector<int> hook(b + 1, 1);
      hook[0] = n - b;
      Partition const mu(hook);
      for (auto const& nu : enumerate_partitions(n)) {
        int const value = kk_times_hook_mult(k, b, nu);
        ASSERT_EQ(value, kron_oracle({k, k}, mu, nu))
            << "k=" << k << " b=" << b << " nu=" << nu.to_string();
        ASSERT_LE(value, 1);
        if (durfee_length(nu) >= 3) {
          ASSERT_EQ(value, 0);
        }
      }
    }
  }
}

TEST(SmallDepthProducts, RectangleTimesTwoRowExample) {
  auto const p = small_depth_products(SmallDepthKind::rectangle_two_row, 3, 3);
  EXPECT_TRUE(p.closed_form);
  EXPECT_EQ(p.product, expansion({{3, 3, 3},
                                  {3, 3, 2, 1},
                                  {3, 2, 2, 1, 1},
                                  {4, 3, 2},
                                  {4, 2, 2, 1},
                                  {5, 3, 1},
                                  {4, 3, 1, 1}}));
  EXPECT_THROW(small_depth_products(SmallDepthKind::rectangle_two_row, 1, 6), DomainError);
  EXPECT_THROW(small_depth_products(SmallDepthKind::rectangle_hook, 2, 3), DomainError);
}

TEST(SmallDepthProducts, MatchOracleUpToTwelve) {
  for (int a = 2; a <= 6; ++a) {
    for (int b = 2; a * b <= 12; ++b) {
      int const n = a * b;
      Partition const rect(std::vector<int>(b, a));
      if (n >= 6) {
        auto const p = small_depth_products(SmallDepthKind::rectangle_two_row, a, b);
        EXPECT_EQ(p.product, kron_product_oracle({n - 2, 2}, rect)) << a << '^' << b;
      }
      if (a >= b) {
        auto const p = small_depth_products(SmallDepthKind::rectangle_hook, a, b);
        EXPECT_EQ(p.product, kron_product_oracle({n - 2, 1, 1}, rect)) << a << '^' << b;
      }
    }
  }
}

TEST(SmallDepthProducts, ThreeRowTimesTwoRowSmallCases) {
  for (int k = 3; k <= 6; ++k) {
    int const n = 2 * k;
    auto const p = small_depth_products(SmallDepthKind::kk_three_row, k);
    EXPECT_FALSE(p.closed_form);
    EXPECT_EQ(p.product, kron_product_oracle({n - 3, 3}, {k, k}));
    EXPECT_EQ(p.small_exceptions,
              (std::vector<Partition>{{4, 2}, {4, 1, 1}, {4, 3}, {3, 3, 3}}));
  }
  EXPECT_THROW(small_depth_products(SmallDepthKind::kk_three_row, 2), DomainError);
}

TEST(SquareLowDepth, Examples) {
  auto const c = square_low_depth({2, 1});
  EXPECT_EQ(c.a1, 1);
  EXPECT_FALSE(c.a2.has_value());
  EXPECT_EQ(kron_product_oracle({2, 1}, {2, 1}).multiplicity({2, 1}), 1);
  EXPECT_EQ(square_low_depth({2, 2}).b2, 0);
  EXPECT_EQ(kron_product_oracle({2, 2}, {2, 2}).multiplicity({2, 1, 1}), 0);
  EXPECT_THROW(square_low_depth({4}), DomainError);
}

TEST(SquareLowDepth, MatchesOracleFromFourToTen) {
  for (int n = 4; n <= 10; ++n) {
    for (auto const& lam : enumerate_partitions(n)) {
      if (is_linear(lam)) {
        continue;
      }
      auto const sq = kron_product_oracle(lam, lam);
      auto const c  = square_low_depth(lam);
      auto at = [&](std::vector<int> parts) { return sq[Partition(std::move(parts))]; };
      ASSERT_EQ(c.a1, at({n - 1, 1})) << lam.to_string();
      ASSERT_EQ(c.a2, at({n - 2, 2})) << lam.to_string();
      ASSERT_GT(*c.a2, 0);
      ASSERT_EQ(c.b2, at({n - 2, 1, 1})) << lam.to_string();
      ASSERT_EQ(c.b3, at({n - 3, 1, 1, 1})) << lam.to_string();
      if (n >= 5) {
        ASSERT_EQ(c.c3, at({n - 3, 2, 1})) << lam.to_string();
      }
      if (n >= 6) {
        ASSERT_EQ(c.a3, at({n - 3, 3})) << lam.to_string();
      }
    }
  }
}
