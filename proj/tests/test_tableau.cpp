#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "generators.hpp"
#include "oracle.hpp"
#include "tamari/enumerate.hpp"
#include "tamari/tableau.hpp"

using namespace tamari;

namespace {

Tableau tab(int n, std::vector<std::vector<int>> rows) { return Tableau(n, std::move(rows)); }

MaximalChain chain(int n, std::vector<std::vector<int>> rows) {
  return MaximalChain(Tableau(n, std::move(rows)));
}

}  // namespace

TEST(Tableau, ShapeChecks) {
  EXPECT_THROW(tab(3, {{1}, {1, 2}}), ValidationError);
  EXPECT_THROW(tab(3, {{1, 2, 3}}), ContainmentError);
  EXPECT_THROW(tab(3, {{0}}), ValidationError);
  EXPECT_EQ(tab(3, {{1, 2}, {3}, {}}).num_rows(), 2);
  EXPECT_EQ(tab(3, {{1, 2}, {3}}).shape(), Partition({2, 1}));
  EXPECT_EQ(tab(3, {{1, 2}, {3}}).at(2, 1), 3);
  EXPECT_EQ(tab(3, {{1, 2}, {3}}).at(2, 2), 0);
}

TEST(ValidateTableau, Examples) {
  EXPECT_TRUE(validate_tableau(tab(3, {{1, 2}, {1}})));
  EXPECT_FALSE(validate_tableau(tab(3, {{3, 2}})));
  EXPECT_FALSE(validate_tableau(tab(3, {{1, 3}})));
  EXPECT_FALSE(validate_tableau(tab(3, {{1, 1}})));
  EXPECT_FALSE(validate_tableau(tab(3, {{2, 3}, {1}})));
  EXPECT_TRUE(validate_tableau(tab(1, {})));
}

TEST(Psi, Examples) {
  EXPECT_EQ(psi({Partition(), Partition({1, 1}), Partition({2, 1})}, 3), tab(3, {{1, 2}, {1}}));
  EXPECT_EQ(psi({Partition(), Partition({1}), Partition({2}), Partition({2, 1})}, 3),
            tab(3, {{1, 2}, {3}}));
  const Tableau empty = psi({Partition()}, 4);
  EXPECT_TRUE(empty.empty());
  EXPECT_EQ(empty.length(), 0);
}

TEST(Psi, RejectsNonCoverSteps) {
  EXPECT_THROW(psi({Partition(), Partition({2, 1})}, 3), ChainError);
  EXPECT_THROW(psi({Partition({1})}, 3), ChainError);
  EXPECT_THROW(psi({Partition(), Partition({2})}, 3), ChainError);
}

TEST(Psi, AgreesWithOracleLabelling) {
  for (int n = 1; n <= 6; ++n) {
    std::set<oracle::Rows> want;
    for (const auto& t : oracle::all_chain_tableaux(n)) want.insert(t);
    std::set<oracle::Rows> got;
    for (const auto& c : enumerate_maximal_chains(n)) got.insert(c.tableau().rows());
    ASSERT_EQ(got, want) << "n=" << n;
  }
}

TEST(PsiInverse, Examples) {
  EXPECT_EQ(psi_inverse(tab(3, {{1, 2}, {3}})),
            (std::vector<Partition>{Partition(), Partition({1}), Partition({2}), Partition({2, 1})}));
  EXPECT_EQ(psi_inverse(tab(3, {})), (std::vector<Partition>{Partition()}));
  EXPECT_THROW(psi_inverse(tab(3, {{1, 2}, {2}})), EncodingError);
}

TEST(PsiInverse, RoundTripExhaustive) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& c : enumerate_maximal_chains(n)) {
      const auto ys = psi_inverse(c.tableau());
      ASSERT_EQ(psi(ys, n), c.tableau());
    }
  }
}

TEST(PsiInverse, RoundTripRandomSaturatedChains) {
  auto r = gen::rng(3);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto walk = gen::walk_up(r, gen::dyck_path(r, 7));
    std::vector<Partition> chain;
    for (auto it = walk.rbegin(); it != walk.rend(); ++it) chain.push_back(Partition(oracle::diagram_of(*it)));
    const Tableau t = psi(chain, 7);
    ASSERT_TRUE(is_psi_tableau(t));
    ASSERT_EQ(psi_inverse(t), chain);
  }
}

TEST(Truncate, Examples) {
  const Tableau t = tab(3, {{1, 2}, {3}});
  EXPECT_EQ(truncate(t, 2), tab(3, {{1, 2}}));
  EXPECT_TRUE(truncate(t, 0).empty());
  EXPECT_EQ(truncate(t, 3), t);
  EXPECT_THROW(truncate(t, 4), RangeError);
  EXPECT_THROW(truncate(t, -1), RangeError);
}

TEST(Truncate, ShapesFormSaturatedChain) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& c : enumerate_maximal_chains(n)) {
      Partition prev;
      for (int r = 1; r <= c.length(); ++r) {
        const Tableau tr = truncate(c.tableau(), r);
        ASSERT_TRUE(is_psi_tableau(tr));
        ASSERT_EQ(tr.length(), r);
        const auto up = upper_covers(tr.shape(), n);
        ASSERT_NE(std::find(up.begin(), up.end(), prev), up.end());
        prev = tr.shape();
      }
    }
  }
}

TEST(IsPsiTableau, StripMismatchAndMatch) {
  // The 4-set {(2,2),(3,2)} ends at (3,2), but the (3,2)-strip of the
  // shape (3,2,2) is a different set of boxes.
  const Tableau bad = tab(5, {{1, 2, 3}, {1, 4}, {1, 4}});
  EXPECT_TRUE(validate_tableau(bad));
  EXPECT_FALSE(is_psi_tableau(bad));
  EXPECT_NE(strip_of_box(Partition({3, 2, 2}), 5, {3, 2}), bad.label_set(4));
  EXPECT_FALSE(oracle::is_psi(bad.rows(), 5));

  const Tableau good = tab(5, {{1, 2, 3}, {1, 3}, {1, 3}});
  EXPECT_TRUE(is_psi_tableau(good));
  EXPECT_TRUE(oracle::is_psi(good.rows(), 5));
  EXPECT_TRUE(is_psi_tableau(tab(3, {{1, 2}, {1}})));
}

TEST(IsPsiTableau, CharacterizationEquivalence) {
  const auto candidates = gen::all_fillings(5, 6);
  ASSERT_GT(candidates.size(), 1000u);
  int psi_count = 0;
  for (const auto& rows : candidates) {
    const Tableau t(5, rows);
    ASSERT_TRUE(validate_tableau(t));
    const bool claimed = is_psi_tableau(t);
    ASSERT_EQ(claimed, oracle::is_psi(rows, 5)) << to_text(t);
    bool inverts = true;
    try {
      psi_inverse(t);
    } catch (const EncodingError&) {
      inverts = false;
    }
    ASSERT_EQ(claimed, inverts);
    psi_count += claimed;
  }
  EXPECT_GT(psi_count, 0);
}

TEST(OuterDiagonal, Examples) {
  EXPECT_EQ(outer_diagonal(tab(3, {{1, 2}, {3}})), (std::vector<Box>{{1, 2}, {2, 1}}));
  EXPECT_TRUE(outer_diagonal(tab(3, {})).empty());
  EXPECT_EQ(outer_diagonal(tab(4, {{1, 2, 3}, {1, 4}, {1}})), (std::vector<Box>{{1, 3}, {2, 2}, {3, 1}}));
}

TEST(OuterDiagonal, LabelsDistinct) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& c : enumerate_maximal_chains(n)) {
      std::set<int> labels;
      for (const Box& b : outer_diagonal(c.tableau())) labels.insert(c.tableau().at(b));
      ASSERT_EQ(static_cast<int>(labels.size()), n - 1);
    }
  }
}

TEST(MaximalChain, Invariants) {
  EXPECT_THROW(chain(4, {{1, 2}, {1}}), EncodingError);
  EXPECT_THROW(chain(3, {{1, 2}, {2}}), EncodingError);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& c : enumerate_maximal_chains(n)) {
      ASSERT_GE(c.length(), n - 1);
      ASSERT_LE(c.length(), n * (n - 1) / 2);
      ASSERT_EQ(c.i(), c.length() - n);
    }
  }
  EXPECT_EQ(chain(1, {}).length(), 0);
}

TEST(ClassifyRSet, Examples) {
  const MaximalChain c = chain(3, {{1, 2}, {3}});
  EXPECT_EQ(classify_r_set(c, 2), RSetClass::Full);
  EXPECT_EQ(classify_r_set(c, 1), RSetClass::NotFull);
  EXPECT_EQ(classify_r_set(c, 3), RSetClass::NotFull);
  EXPECT_EQ(classify_r_set(chain(4, {{1, 2, 3}, {1, 4}, {1}}), 1), RSetClass::PlusFull);
  EXPECT_THROW(classify_r_set(c, 0), RangeError);
  EXPECT_THROW(classify_r_set(c, 4), RangeError);
  EXPECT_STREQ(to_string(RSetClass::PlusFull), "plus-full");
}

TEST(ClassifyRSet, MatchesOracle) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& c : enumerate_maximal_chains(n)) {
      for (int r = 1; r <= c.length(); ++r) {
        ASSERT_EQ(static_cast<int>(classify_r_set(c, r)), oracle::classify(c.tableau().rows(), n, r));
      }
    }
  }
}

TEST(PlusFullSetLabels, Examples) {
  EXPECT_TRUE(plus_full_set_labels(chain(3, {{1, 2}, {3}})).empty());
  EXPECT_EQ(plus_full_set_labels(chain(4, {{1, 2, 4}, {1, 2}, {3}})), (std::vector<int>{4}));

  std::multiset<std::vector<int>> seen;
  for (const auto& c : enumerate_maximal_chains(4, 4)) seen.insert(plus_full_set_labels(c));
  EXPECT_EQ(seen, (std::multiset<std::vector<int>>{{1}, {2}, {3}, {4}}));
}

TEST(PlusFullSetLabels, AtMostNMinusOne) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& c : enumerate_maximal_chains(n)) {
      const auto labels = plus_full_set_labels(c);
      ASSERT_LE(static_cast<int>(labels.size()), std::max(n - 1, 0));
      const auto want = oracle::plus_full(c.tableau().rows(), n);
      ASSERT_EQ(std::set<int>(labels.begin(), labels.end()), want);
    }
  }
}

TEST(EqualRows, RowsOfEqualLengthAreIdentical) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& c : enumerate_maximal_chains(n)) {
      for (int r = 0; r <= c.length(); ++r) {
        const Tableau t = truncate(c.tableau(), r);
        for (int d = 1; d < t.num_rows(); ++d) {
          if (t.row_length(d) == t.row_length(d + 1)) {
            ASSERT_EQ(t.rows()[static_cast<std::size_t>(d - 1)], t.rows()[static_cast<std::size_t>(d)]);
          }
        }
      }
    }
  }
}

TEST(TextFormat, RoundTrip) {
  const Tableau t = tab(5, {{1, 2, 3, 10}, {1, 2, 5}, {1, 2}, {6}});
  const std::string text = to_text(t);
  EXPECT_EQ(text, "n=5 l=6\n 1  2  3 10\n 1  2  5\n 1  2\n 6\n");
  EXPECT_EQ(parse_tableau(text), t);
  EXPECT_EQ(to_text(tab(1, {})), "n=1 l=0\n");
  EXPECT_EQ(parse_tableau("n=1 l=0\n"), tab(1, {}));
  std::istringstream two("n=3 l=3\n1 2\n3\n\nn=3 l=2\n1 2\n1\n");
  const auto many = parse_tableaux(two);
  ASSERT_EQ(many.size(), 2u);
  EXPECT_EQ(many[1], tab(3, {{1, 2}, {1}}));
  EXPECT_THROW(parse_tableau("n=3 l=5\n1 2\n3\n"), ValidationError);
  EXPECT_THROW(parse_tableau("1 2\n"), ValidationError);
}
