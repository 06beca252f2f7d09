#include <gtest/gtest.h>

#include "support.hpp"

using namespace paving;
using namespace paving::testing;

namespace {

using E = Extensor<Scalar>;

E vec(const Vector& v) { return E::vector(v); }

bool proportional(const Vector& a, const Vector& b) { return rank_of_vectors({a, b}, a.size()) < 2; }

}  // namespace

TEST(Extensor, JoinOfNVectorsIsTheDeterminant) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RationalSource r(seed);
    int d = 2 + static_cast<int>(seed % 4);
    std::vector<Vector> vs;
    for (int i = 0; i < d; ++i) vs.push_back(r.vector(d));
    E top = extensor_from_vectors(vs, d);
    EXPECT_EQ(top.grade(), d);
    EXPECT_EQ(top.bracket(), leibniz_det(matrix_from_columns(vs, d)));
  }
}

TEST(Extensor, JoinIsAlternating) {
  RationalSource r(4);
  Vector a = r.vector(4), b = r.vector(4);
  EXPECT_EQ(join(vec(a), vec(b)), Scalar(-1) * join(vec(b), vec(a)));
  EXPECT_TRUE(join(vec(a), vec(a)).is_zero());
  EXPECT_TRUE(join(join(vec(a), vec(b)), vec(a)).is_zero());
}

TEST(Extensor, MeetOfTwoLinesIsTheCrossPoint) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RationalSource r(seed);
    Vector a = r.vector(3), b = r.vector(3), c = r.vector(3), d = r.vector(3);
    E x = meet(join(vec(a), vec(b)), join(vec(c), vec(d)));
    ASSERT_EQ(x.grade(), 1);
    Vector oracle = cross(cross(a, b), cross(c, d));
    if (oracle == Vector(3, Scalar(0))) {
      EXPECT_TRUE(x.is_zero());
      continue;
    }
    EXPECT_TRUE(proportional(x.coordinates(), oracle));
  }
}

TEST(Extensor, MeetOfPlanesInFourSpaceLiesInBoth) {
  RationalSource r(8);
  std::vector<Vector> p(6);
  for (auto& v : p) v = r.vector(4);
  E plane1 = extensor_from_vectors<Scalar>({p[0], p[1], p[2]}, 4);
  E plane2 = extensor_from_vectors<Scalar>({p[3], p[4], p[5]}, 4);
  E line = meet(plane1, plane2);
  EXPECT_EQ(line.grade(), 2);
  EXPECT_TRUE(join(line, plane1).is_zero());
  EXPECT_TRUE(join(line, plane2).is_zero());
  EXPECT_FALSE(line.is_zero());
}

TEST(Extensor, GradeAndDimensionErrors) {
  E a = E::vector({1, 2, 3});
  EXPECT_THROW(a.bracket(), DimensionMismatch);
  EXPECT_THROW(join(a, E::vector({1, 2})), DimensionMismatch);
  EXPECT_TRUE(meet(a, a).is_zero());  // grades 1 + 1 < 3
  EXPECT_THROW(E::basis(3, {1, 2}).coordinates(), DimensionMismatch);
}

TEST(Formal, ConcurrencyConditionAgreesWithNumericMeetAndJoin) {
  Polynomial p = expand_brackets(concurrent_lines_brackets(), 3);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RationalSource r(seed);
    Realization g;
    g.dim = 3;
    for (int i = 1; i <= 6; ++i) g.points[i] = r.vector(3);
    E x = join(meet(join(vec(g.at(3)), vec(g.at(4))), join(vec(g.at(1)), vec(g.at(2)))), join(vec(g.at(5)), vec(g.at(6))));
    EXPECT_EQ(p.evaluate(assignment_for(g)), x.bracket());
  }
}

TEST(Formal, ConcurrencyConditionVanishesOnConcurrentLines) {
  Polynomial p = expand_brackets(concurrent_lines_brackets(), 3);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Realization g = sample_concurrent_lines(seed);
    EXPECT_TRUE(is_zero(p.evaluate(assignment_for(g))));
  }
  EXPECT_EQ(concurrent_lines_brackets().size(), 2u);
}

TEST(Formal, PascalQuarticVanishesOnSixConicPoints) {
  Polynomial p = pascal_gc_quartic();
  EXPECT_EQ(pascal_gc_quartic_brackets().degree(), 4u);
  int nonzero = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Realization g = sample_pascal(seed);
    Realization six = g;
    for (int p9 = 7; p9 <= 9; ++p9) six.points.erase(p9);
    EXPECT_TRUE(is_zero(p.evaluate(assignment_for(six))));
    RationalSource r(seed);
    Realization generic;
    generic.dim = 3;
    for (int i = 1; i <= 6; ++i) generic.points[i] = r.vector(3);
    nonzero += !is_zero(p.evaluate(assignment_for(generic)));
  }
  EXPECT_GT(nonzero, 0);
}

TEST(Formal, ShuffleSignsMatchNumericMeetInFourSpace) {
  // (123 meet 456) join 78 as a bracket polynomial against numeric extensors
  auto w = [](std::vector<int> l) { return FormalExtensor::word(4, std::move(l)); };
  Polynomial p = expand_brackets(join(meet(w({1, 2, 3}), w({4, 5, 6})), w({7, 8})).brackets(), 4);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    RationalSource r(seed);
    Realization g;
    g.dim = 4;
    for (int i = 1; i <= 8; ++i) g.points[i] = r.vector(4);
    auto ext = [&](std::vector<int> ids) {
      std::vector<Vector> vs;
      for (int i : ids) vs.push_back(g.at(i));
      return extensor_from_vectors(vs, 4);
    };
    E x = join(meet(ext({1, 2, 3}), ext({4, 5, 6})), ext({7, 8}));
    EXPECT_EQ(p.evaluate(assignment_for(g)), x.bracket());
  }
}

TEST(Formal, PrintsBracketProducts) {
  auto x = meet(FormalExtensor::word(3, {3, 4}), FormalExtensor::word(3, {1, 2}));
  EXPECT_EQ(x.grade(), 1);
  std::string s = join(x, FormalExtensor::word(3, {5, 6})).to_string();
  EXPECT_NE(s.find("⟨356⟩"), std::string::npos) << s;
  EXPECT_THROW(x.brackets(), DimensionMismatch);
  EXPECT_THROW(join(x, FormalExtensor::word(4, {1})), DimensionMismatch);
}
