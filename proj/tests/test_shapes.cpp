#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "generators.hpp"
#include "oracle.hpp"
#include "tamari/shapes.hpp"

using namespace tamari;

namespace {

std::vector<int> parts_of(const Partition& y) { return y.parts(); }

// The strip predicted from oracle heights: last boxes of the h rows ending
// at B's row.
std::vector<Box> oracle_strip(const std::vector<int>& rows, int n, Box b) {
  const std::string p = oracle::path_of(rows, n);
  const int h = oracle::heights(p)[static_cast<std::size_t>(n - b.row)];
  std::vector<Box> out;
  for (int x = b.row - h + 1; x <= b.row; ++x) out.push_back({x, rows[static_cast<std::size_t>(x - 1)]});
  return out;
}

}  // namespace

TEST(Partition, ValidatesAndStripsZeros) {
  EXPECT_EQ(Partition({2, 1, 0, 0}).parts(), (std::vector<int>{2, 1}));
  EXPECT_THROW(Partition({1, 2}), ValidationError);
  EXPECT_THROW(Partition({2, -1}), ValidationError);
  EXPECT_TRUE(Partition().empty());
  EXPECT_EQ(Partition({3, 2, 2}).size(), 7);
  EXPECT_EQ(Partition({3, 2}).row(5), 0);
}

TEST(Partition, StaircaseContainment) {
  EXPECT_TRUE(Partition({2, 1}).contained_in_staircase(3));
  EXPECT_FALSE(Partition({2, 2}).contained_in_staircase(3));
  EXPECT_FALSE(Partition({3}).contained_in_staircase(3));
  EXPECT_TRUE(Partition().contained_in_staircase(1));
  EXPECT_EQ(Partition::staircase(3).parts(), (std::vector<int>{3, 2, 1}));
}

TEST(Partition, TextForm) {
  EXPECT_EQ(to_string(Partition()), "-");
  EXPECT_EQ(to_string(Partition({3, 1, 1})), "3,1,1");
  EXPECT_EQ(parse_partition("-"), Partition());
  EXPECT_EQ(parse_partition("2,2,1"), Partition({2, 2, 1}));
  EXPECT_THROW(parse_partition("2,x"), ValidationError);
  EXPECT_THROW(parse_partition("1,2"), ValidationError);
}

TEST(DyckPath, RejectsMalformed) {
  EXPECT_THROW(DyckPath("NNE"), ValidationError);
  EXPECT_THROW(DyckPath("ENNE"), ValidationError);
  EXPECT_THROW(DyckPath("NXEE"), ValidationError);
  EXPECT_THROW(DyckPath(""), ValidationError);
}

TEST(ToDyckPath, Examples) {
  EXPECT_EQ(to_dyck_path(Partition(), 3).str(), "NNNEEE");
  EXPECT_EQ(to_dyck_path(Partition({2, 1}), 3).str(), "NENENE");
  EXPECT_EQ(from_dyck_path(to_dyck_path(Partition({1, 1}), 3)), Partition({1, 1}));
  EXPECT_EQ(to_dyck_path(Partition({1, 1}), 3).str(), oracle::path_of({1, 1}, 3));
  EXPECT_THROW(to_dyck_path(Partition({3}), 3), ContainmentError);
  EXPECT_THROW(to_dyck_path(Partition({1, 1, 1}), 3), ContainmentError);
}

TEST(FromDyckPath, Examples) {
  EXPECT_EQ(from_dyck_path(DyckPath("NNNEEE")), Partition());
  EXPECT_EQ(from_dyck_path(DyckPath("NENENE")), Partition({2, 1}));
}

TEST(FromDyckPath, FourteenPathsGiveFourteenDiagrams) {
  std::set<std::vector<int>> seen;
  for (const auto& p : oracle::all_paths(4)) {
    const Partition y = from_dyck_path(DyckPath(p));
    EXPECT_TRUE(y.contained_in_staircase(4));
    EXPECT_EQ(parts_of(y), oracle::diagram_of(p));
    seen.insert(y.parts());
  }
  EXPECT_EQ(seen.size(), 14u);
  EXPECT_EQ(tamari_vertices(4).size(), 14u);
}

TEST(RoundTrip, ExhaustiveUpToEight) {
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 8; ++n) {
    const auto vs = tamari_vertices(n);
    ASSERT_EQ(vs.size(), catalan[n]);
    for (const Partition& y : vs) {
      const DyckPath p = to_dyck_path(y, n);
      ASSERT_EQ(from_dyck_path(p), y);
      ASSERT_EQ(p.str(), oracle::path_of(y.parts(), n));
    }
  }
}

TEST(PrimeSubpathHeights, FigureChainOfLengthFour) {
  // Each path covers the next; per path the heights at N steps k = 1..4.
  const std::vector<std::string> chain{"NNNNEEEE", "NNENNEEE", "NNEENNEE", "NENENNEE", "NENENENE"};
  std::vector<std::vector<int>> per_path;
  for (const auto& p : chain) per_path.push_back(prime_subpath_heights(DyckPath(p)));
  const std::vector<std::vector<int>> by_k{{4, 4, 2, 1, 1}, {3, 1, 1, 1, 1}, {2, 2, 2, 2, 1}, {1, 1, 1, 1, 1}};
  for (std::size_t k = 0; k < 4; ++k) {
    std::vector<int> seq;
    for (const auto& h : per_path) seq.push_back(h[k]);
    EXPECT_EQ(seq, by_k[k]) << "k=" << k + 1;
  }
  for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
    const auto up = upper_covers_dyck(DyckPath(chain[j + 1]));
    EXPECT_NE(std::find(up.begin(), up.end(), DyckPath(chain[j])), up.end());
  }
}

TEST(PrimeSubpathHeights, DirectScan) {
  EXPECT_EQ(prime_subpath_heights(DyckPath("NNNEEE")), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(prime_subpath_heights(DyckPath("NENENENE")), (std::vector<int>(4, 1)));
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : oracle::all_paths(n)) {
      ASSERT_EQ(prime_subpath_heights(DyckPath(p)), oracle::heights(p)) << p;
    }
  }
}

TEST(PrimePathOfRow, Examples) {
  const auto third = prime_path_of_row(Partition({1}), 3, 3);
  EXPECT_EQ(third.height, oracle::heights("NNENEE")[0]);
  EXPECT_EQ(third.steps, "NNENEE");
  EXPECT_EQ(prime_path_of_row(Partition({1, 1}), 3, 2).height, 2);
  for (int n = 2; n <= 6; ++n) {
    for (int d = 1; d <= n; ++d) {
      EXPECT_EQ(prime_path_of_row(Partition::staircase(n - 1), n, d).height, 1);
    }
  }
  EXPECT_THROW(prime_path_of_row(Partition({1}), 3, 0), IndexError);
  EXPECT_THROW(prime_path_of_row(Partition({1}), 3, 4), IndexError);
}

TEST(PrimePathOfRow, FastHeightMatchesPath) {
  for (int n = 1; n <= 7; ++n) {
    for (const Partition& y : tamari_vertices(n)) {
      for (int d = 1; d <= n; ++d) {
        const auto info = prime_path_of_row(y, n, d);
        ASSERT_EQ(detail::prime_height_of_row(y, n, d), info.height);
        ASSERT_EQ(info.height, static_cast<int>(std::count(info.steps.begin(), info.steps.end(), 'N')));
      }
    }
  }
}

TEST(StripOfBox, Examples) {
  EXPECT_EQ(strip_of_box(Partition({2, 1}), 3, {2, 1}), (std::vector<Box>{{2, 1}}));
  EXPECT_EQ(strip_of_box(Partition({1, 1}), 3, {2, 1}), (std::vector<Box>{{1, 1}, {2, 1}}));
  EXPECT_EQ(strip_of_box(Partition({2, 1, 1}), 4, {3, 1}), oracle_strip({2, 1, 1}, 4, {3, 1}));
  EXPECT_THROW(strip_of_box(Partition({2, 1}), 3, {1, 1}), ArgumentError);
  EXPECT_THROW(strip_of_box(Partition({2, 1}), 3, {3, 1}), ArgumentError);
}

TEST(StripOfBox, IsLastBoxesOfConsecutiveRows) {
  for (int n = 1; n <= 7; ++n) {
    for (const Partition& y : tamari_vertices(n)) {
      for (int x = 1; x <= y.num_rows(); ++x) {
        const Box b{x, y.row(x)};
        ASSERT_EQ(strip_of_box(y, n, b), oracle_strip(y.parts(), n, b)) << to_string(y);
      }
    }
  }
}

TEST(CornerBoxes, Examples) {
  EXPECT_TRUE(corner_boxes(Partition()).empty());
  EXPECT_EQ(corner_boxes(Partition::staircase(3)), (std::vector<Box>{{1, 3}, {2, 2}, {3, 1}}));
  EXPECT_EQ(corner_boxes(Partition({2, 2, 1})), (std::vector<Box>{{2, 2}, {3, 1}}));
}

TEST(UpperCovers, Examples) {
  EXPECT_EQ(upper_covers(Partition::staircase(3), 4),
            (std::vector<Partition>{{2, 2, 1}, {3, 1, 1}, {3, 2}}));
  EXPECT_EQ(upper_covers(Partition({1, 1}), 3), (std::vector<Partition>{Partition()}));
  EXPECT_TRUE(upper_covers(Partition(), 5).empty());
  EXPECT_THROW(upper_covers(Partition({3}), 3), ContainmentError);
}

TEST(UpperCovers, PentagonT3) {
  // T_3: (2,1) < (1,1) < null and (2,1) < (2) < (1) < null.
  EXPECT_EQ(upper_covers(Partition({2, 1}), 3), (std::vector<Partition>{{1, 1}, {2}}));
  EXPECT_EQ(upper_covers(Partition({2}), 3), (std::vector<Partition>{{1}}));
  EXPECT_EQ(upper_covers(Partition({1}), 3), (std::vector<Partition>{Partition()}));
}

TEST(UpperCoversDyck, Examples) {
  EXPECT_TRUE(upper_covers_dyck(DyckPath("NNNEEE")).empty());
  std::vector<Partition> via;
  for (const auto& q : upper_covers_dyck(DyckPath("NENENENE"))) via.push_back(from_dyck_path(q));
  std::sort(via.begin(), via.end());
  auto direct = upper_covers(Partition::staircase(3), 4);
  std::sort(direct.begin(), direct.end());
  EXPECT_EQ(via, direct);
}

TEST(UpperCoversDyck, MatchesRotationOracle) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : oracle::all_paths(n)) {
      std::vector<std::string> got;
      for (const auto& q : upper_covers_dyck(DyckPath(p))) got.push_back(q.str());
      ASSERT_EQ(got, oracle::covers(p)) << p;
    }
  }
}

TEST(CoverEquivalence, BothRepresentationsAgree) {
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& y : tamari_vertices(n)) {
      std::vector<Partition> via;
      for (const auto& q : upper_covers_dyck(to_dyck_path(y, n))) via.push_back(from_dyck_path(q));
      auto direct = upper_covers(y, n);
      std::sort(via.begin(), via.end());
      std::sort(direct.begin(), direct.end());
      ASSERT_EQ(via, direct) << to_string(y);
    }
  }
}

TEST(CoverEquivalence, OrderedByCornerRow) {
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& y : tamari_vertices(n)) {
      const auto moves = upper_cover_moves(y, n);
      for (std::size_t k = 1; k < moves.size(); ++k) ASSERT_LT(moves[k - 1].last_row, moves[k].last_row);
    }
  }
}

TEST(PrimeSubpaths, Trichotomy) {
  // Vertex intervals [begin, end] of two prime subpaths are disjoint, meet
  // in one point, are nested properly, or are equal; they never cross.
  for (int n = 1; n <= 8; ++n) {
    for (const auto& s : oracle::all_paths(n)) {
      const DyckPath p(s);
      std::vector<Subpath> subs;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 'N') subs.push_back(prime_subpath_at(p, i));
      }
      ASSERT_EQ(static_cast<int>(subs.size()), n);
      for (const auto& q : subs) {
        for (const auto& r : subs) {
          const bool disjoint = q.end < r.begin || r.end < q.begin;
          const bool point = q.end == r.begin || r.end == q.begin;
          const bool equal = q == r;
          const bool nested = !equal && ((q.begin <= r.begin && r.end <= q.end) ||
                                         (r.begin <= q.begin && q.end <= r.end));
          ASSERT_EQ(disjoint + point + equal + nested, 1) << s;
        }
      }
    }
  }
}

TEST(MonotoneHeights, RandomSaturatedChains) {
  auto r = gen::rng();
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = gen::uniform(r, 1, 7);
    const auto walk = gen::walk_up(r, gen::dyck_path(r, n));
    for (std::size_t j = 0; j + 1 < walk.size(); ++j) {
      const auto lower = prime_subpath_heights(DyckPath(walk[j]));
      const auto upper = prime_subpath_heights(DyckPath(walk[j + 1]));
      for (std::size_t k = 0; k < lower.size(); ++k) ASSERT_GE(upper[k], lower[k]) << walk[j];
    }
  }
}

TEST(Enclosure, Examples) {
  const Enclosure e = enclosure(Partition({3, 2, 1, 1}), 5, {4, 1});
  EXPECT_EQ(e.height, 4);
  EXPECT_EQ(e.shape, Partition({5, 3, 2, 1, 1}));
  EXPECT_EQ(std::count_if(e.boxes.begin(), e.boxes.end(), [](Box b) { return b.row == 0; }), 5);

  const Enclosure d = enclosure(Partition::staircase(4), 5, {2, 3});
  EXPECT_EQ(d.height, 1);
  EXPECT_EQ(d.shape, Partition({2, 1}));
  EXPECT_EQ(d.boxes, (std::vector<Box>{{1, 3}, {1, 4}, {2, 3}}));

  const Enclosure p = enclosure(Partition({1, 1}), 3, {2, 1});
  EXPECT_EQ(p.height, 2);
  EXPECT_EQ(p.top_row, 0);
  EXPECT_EQ(p.shape, Partition({3, 1, 1}));
  EXPECT_THROW(enclosure(Partition({2, 1}), 3, {1, 1}), ArgumentError);
}

TEST(Translation, FourConditionsAgree) {
  struct Site {
    Partition y;
    Box b;
    Enclosure enc;
    std::vector<Box> strip;
    std::string path;
  };
  std::vector<Site> sites;
  for (int n = 2; n <= 6; ++n) {
    for (const Partition& y : tamari_vertices(n)) {
      for (int x = 1; x <= y.num_rows(); ++x) {
        const Box b{x, y.row(x)};
        sites.push_back({y, b, enclosure(y, n, b), strip_of_box(y, n, b), prime_path_of_row(y, n, x).steps});
      }
    }
  }
  auto r = gen::rng(7);
  int agreeing_true = 0;
  for (int trial = 0; trial < 200000; ++trial) {
    const auto& s = sites[static_cast<std::size_t>(gen::uniform(r, 0, static_cast<int>(sites.size()) - 1))];
    const auto& t = sites[static_cast<std::size_t>(gen::uniform(r, 0, static_cast<int>(sites.size()) - 1))];
    const bool same_shape = s.enc.shape == t.enc.shape;
    const auto enc_shift = translation_between(s.enc.boxes, t.enc.boxes);
    const auto strip_shift = translation_between(s.strip, t.strip);
    const bool same_path = s.path == t.path;
    ASSERT_EQ(same_shape, enc_shift.has_value());
    ASSERT_EQ(same_shape, strip_shift.has_value());
    ASSERT_EQ(same_shape, same_path);
    if (same_shape) {
      const std::pair<int, int> shift{t.b.row - s.b.row, t.b.col - s.b.col};
      ASSERT_EQ(*enc_shift, shift);
      ASSERT_EQ(*strip_shift, shift);
      ++agreeing_true;
    }
  }
  EXPECT_GT(agreeing_true, 0);
}

TEST(PosetExtremes, StaircaseHasNMinusOneCovers) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(static_cast<int>(upper_covers(Partition::staircase(n - 1), n).size()), n - 1);
  }
}
