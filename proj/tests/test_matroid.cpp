#include <gtest/gtest.h>

#include "support.hpp"

using namespace paving;
using namespace paving::testing;

namespace {

// Realizable built-ins paired with a sampler; the sampled vectors are the oracle.
const std::vector<std::string> kRealizable = {"qs", "concurrent3", "pascal", "fig2c", "fig2r", "grid3x4"};

}  // namespace

TEST(PointSet, SetAlgebraAndPrinting) {
  PointSet a{1, 3, 5}, b{3, 4};
  EXPECT_EQ((a | b), (PointSet{1, 3, 4, 5}));
  EXPECT_EQ((a & b), PointSet{3});
  EXPECT_EQ((a - b), (PointSet{1, 5}));
  EXPECT_EQ(a.to_string(), "{1,3,5}");
  EXPECT_EQ(a.index_of(5), 2);
  EXPECT_EQ(a.index_of(4), -1);
  EXPECT_EQ(PointSet::range(2, 4).elements(), (std::vector<int>{2, 3, 4}));
  EXPECT_THROW(PointSet{65}, UnknownPoint);
  EXPECT_THROW(PointSet{0}, UnknownPoint);
}

TEST(PointSet, SubsetEnumerationCountsBinomials) {
  int count = 0;
  for_each_subset(PointSet::range(1, 9), 4, [&](PointSet s) {
    EXPECT_EQ(s.size(), 4);
    ++count;
  });
  EXPECT_EQ(count, 126);
  EXPECT_EQ(combinations(7, 3).size(), 35u);
}

TEST(Validation, QuadrilateralSetIsValid) {
  auto m = PavingMatroid::validate(3, 6, {{1, 2, 3}, {1, 5, 6}, {3, 4, 5}, {2, 4, 6}});
  EXPECT_EQ(m.rank(), 3);
  EXPECT_EQ(m.size(), 6);
  EXPECT_EQ(m.circuits_n().size(), 4u);
  EXPECT_EQ(m.max_degree(), 2);
}

TEST(Validation, OverlappingLinesNameThePair) {
  try {
    PavingMatroid::validate(3, 5, {{1, 2, 3}, {1, 2, 4}});
    FAIL() << "expected IntersectionTooLarge";
  } catch (const IntersectionTooLarge& e) {
    EXPECT_EQ(e.pair(), (std::pair<std::size_t, std::size_t>{0, 1}));
  }
}

TEST(Validation, StructuralErrors) {
  EXPECT_THROW(PavingMatroid::validate(3, 5, {{1, 2, 3}, {4, 5}}), HyperplaneTooSmall);
  EXPECT_THROW(PavingMatroid::validate(3, 3, {}), GroundSetTooSmall);
  EXPECT_THROW(PavingMatroid::validate(3, 5, {{1, 2, 9}}), UnknownPoint);
  EXPECT_THROW(PavingMatroid::validate(4, 8, {{1, 2, 3, 4}, {2, 3, 4, 5}}), IntersectionTooLarge);
  EXPECT_NO_THROW(PavingMatroid::validate(4, 8, {{1, 2, 3, 4}, {3, 4, 5, 6}}));
}

TEST(Matroid, RankAndClosureMatchSampledVectors) {
  for (const auto& name : kRealizable) {
    auto m = builtin::by_name(name);
    auto g = sample_family(name, 3);
    ASSERT_TRUE(in_realization_space(g, m)) << name;
    for (int k = 1; k <= m.rank() + 1; ++k)
      for_each_subset(m.ground(), k, [&](PointSet s) {
        ASSERT_EQ(static_cast<std::size_t>(m.rank_of(s)), g.rank(s)) << name << " " << s.to_string();
        // closure oracle: points not raising the rank
        PointSet cl;
        for (int p : m.ground())
          if (g.rank(s | PointSet{p}) == g.rank(s)) cl.insert(p);
        ASSERT_EQ(m.closure(s), cl) << name << " " << s.to_string();
      });
  }
}

TEST(Matroid, CircuitsMatchSampledVectors) {
  for (const auto& name : kRealizable) {
    auto m = builtin::by_name(name);
    auto g = sample_family(name, 11);
    const int n = m.rank();
    std::vector<PointSet> dependent, minimal_n1;
    for_each_subset(m.ground(), n, [&](PointSet s) {
      if (g.rank(s) < static_cast<std::size_t>(n)) dependent.push_back(s);
    });
    for_each_subset(m.ground(), n + 1, [&](PointSet s) {
      bool minimal = true;
      for (int p : s) minimal = minimal && g.rank(s - PointSet{p}) == static_cast<std::size_t>(n);
      if (minimal) minimal_n1.push_back(s);
    });
    EXPECT_EQ(m.circuits_n(), dependent) << name;
    EXPECT_EQ(m.circuits_n1(), minimal_n1) << name;
  }
}

TEST(Matroid, DegreesOfBuiltins) {
  EXPECT_EQ(builtin::qs().max_degree(), 2);
  EXPECT_EQ(builtin::concurrent3().point_degree(7), 3);
  EXPECT_EQ(builtin::pascal().max_degree(), 3);  // 7 is on 127, 457 and 789
  EXPECT_EQ(builtin::grid3x4().max_degree(), 2);
  EXPECT_THROW(builtin::qs().point_degree(9), UnknownPoint);
}

TEST(Matroid, GridLayout) {
  auto m = builtin::grid3x4();
  EXPECT_EQ(m.size(), 12);
  EXPECT_EQ(m.hyperplanes().size(), 7u);  // 3 rows, 4 columns
  EXPECT_EQ(builtin::grid_id(2, 3, 4), 7);
  auto g4 = builtin::grid(4, 5);
  EXPECT_EQ(g4.rank(), 4);
  // last n-2 columns merge into one hyperplane
  EXPECT_TRUE(g4.in_hyperplane(PointSet{4, 5, 9, 10, 14, 15, 19, 20}));
  EXPECT_THROW(builtin::grid(3, 2), ValidationError);
}

TEST(Matroid, LookupByName) {
  for (const auto& n : builtin::names()) EXPECT_EQ(builtin::by_name(n).name(), n);
  EXPECT_EQ(builtin::by_name("uniform(3,5)").circuits_n().size(), 0u);
  EXPECT_EQ(builtin::by_name("coplanar(3,5)").circuits_n().size(), 10u);
  EXPECT_EQ(builtin::by_name("grid(3,5)").size(), 15);
  EXPECT_THROW(builtin::by_name("nonsense"), UnknownFamily);
  EXPECT_THROW(builtin::by_name("uniform(3,x)"), UnknownFamily);
}

TEST(Submatroid, UnionOfTwoLinesInTheFirstFigure) {
  // lines 127 and 347 of the concurrent configuration
  auto m = builtin::concurrent3();
  auto sub = m.submatroid_of_hyperplanes({0, 1});
  EXPECT_EQ(sub.points, (PointSet{1, 2, 3, 4, 7}));
  EXPECT_TRUE(sub.full_rank());
  EXPECT_EQ(sub.circuits_n().size(), 2u);
  EXPECT_EQ(sub.matroid().size(), 5);
  EXPECT_THROW(m.submatroid_of_hyperplanes({1}), TooFewHyperplanes);
  EXPECT_THROW(m.submatroid_of_hyperplanes({0, 9}), TooFewHyperplanes);
}

TEST(Submatroid, RestrictionKeepsLongTraces) {
  auto m = builtin::qs();
  auto sub = m.restrict_to(PointSet{1, 2, 3, 4, 5});
  EXPECT_EQ(sub.hyperplanes, (std::vector<PointSet>{{1, 2, 3}, {3, 4, 5}}));
  auto low = m.restrict_to(PointSet{1, 2, 3});
  EXPECT_FALSE(low.full_rank());
  EXPECT_THROW(low.matroid(), NotFullRank);
  EXPECT_THROW(m.restrict_to(PointSet{1, 7}), UnknownPoint);
}

TEST(Submatroid, EnumerationModesAgreeOnFullRank) {
  auto m = builtin::qs();
  auto unions = full_rank_submatroids(m);
  auto all = full_rank_submatroids(m, SubmatroidMode::all_subsets);
  for (const auto& s : unions) {
    EXPECT_TRUE(s.full_rank());
    EXPECT_GT(s.points.size(), 3);
  }
  EXPECT_EQ(unions.back().points, m.ground());
  // 4- and 5-subsets of rank 3 plus the ground set; every 4-set has rank 3
  EXPECT_EQ(all.size(), 15u + 6u + 1u);
  EXPECT_THROW(full_rank_submatroids(builtin::grid(3, 5), SubmatroidMode::all_subsets), TooLarge);
}

TEST(Liftability, SufficientCondition) {
  auto grid = liftable_sufficient(builtin::grid3x3());
  EXPECT_TRUE(grid.certified);
  EXPECT_EQ(grid.points, 9);
  EXPECT_EQ(grid.circuits + grid.rank, 9);
  auto qs = liftable_sufficient(builtin::qs());
  EXPECT_FALSE(qs.certified);
  EXPECT_EQ(qs.circuits + qs.rank, 7);
}
