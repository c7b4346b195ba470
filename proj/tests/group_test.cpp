#include <gtest/gtest.h>

#include <numeric>

#include "bent/error.hpp"
#include "bent/group.hpp"

using namespace bent;

namespace {

std::vector<int> sizes_of(const Group& g) { return g.class_sizes(); }

// Independent conjugacy oracle: x ~ y iff some h has h x h^-1 = y, computed
// with a brute-force inverse search instead of the stored inverse table.
bool conjugate(const Group& g, int x, int y) {
  for (int h = 0; h < g.order(); ++h) {
    int hinv = -1;
    for (int k = 0; k < g.order(); ++k)
      if (g.mul(h, k) == g.identity()) hinv = k;
    if (g.mul(g.mul(h, x), hinv) == y) return true;
  }
  return false;
}

void expect_group_axioms(const Group& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    EXPECT_EQ(g.mul(g.identity(), a), a);
    EXPECT_EQ(g.mul(a, g.identity()), a);
    EXPECT_EQ(g.mul(a, g.inverse(a)), g.identity());
    EXPECT_EQ(g.mul(g.inverse(a), a), g.identity());
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
  }
}

void expect_classes_are_orbits(const Group& g) {
  EXPECT_EQ(std::accumulate(g.class_sizes().begin(), g.class_sizes().end(), 0), g.order());
  EXPECT_EQ(g.classes()[0], std::vector<int>{g.identity()});
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      EXPECT_EQ(g.class_of(x) == g.class_of(y), conjugate(g, x, y)) << x << " " << y;
}

}  // namespace

TEST(MakeCyclic, OrderThree) {
  const Group g = make_cyclic(3);
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.identity(), 0);
  EXPECT_EQ(g.num_classes(), 3);
  EXPECT_TRUE(g.is_abelian());
}

TEST(MakeCyclic, TrivialGroup) {
  const Group g = make_cyclic(1);
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.num_classes(), 1);
}

TEST(MakeCyclic, AdditionModFour) {
  const Group g = make_cyclic(4);
  EXPECT_EQ(g.multiply(2, 3), 1);
}

TEST(MakeCyclic, RejectsZero) { EXPECT_THROW(make_cyclic(0), InvalidInput); }

TEST(MakeCyclic, RejectsHugeOrders) { EXPECT_THROW(make_cyclic(kMaxGroupOrder + 1), Error); }

TEST(MakeAbelian, KleinFourGroup) {
  const Group g = make_abelian({2, 2});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.num_classes(), 4);
  for (int x = 0; x < 4; ++x) EXPECT_EQ(g.mul(x, x), g.identity());
}

TEST(MakeAbelian, SingleFactorMatchesCyclic) {
  EXPECT_TRUE(make_abelian({3}).same_table(make_cyclic(3)));
}

TEST(MakeAbelian, TwoByThreeHasAnElementOfOrderSix) {
  const Group g = make_abelian({2, 3});
  EXPECT_EQ(g.num_classes(), 6);
  int max_order = 0;
  for (int x = 0; x < 6; ++x) max_order = std::max(max_order, g.element_order(x));
  EXPECT_EQ(max_order, 6);
}

TEST(MakeAbelian, RejectsEmpty) { EXPECT_THROW(make_abelian({}), InvalidInput); }

TEST(MakeNamed, S3ClassSizes) {
  const Group g = make_named("S3");
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(sizes_of(g), (std::vector<int>{1, 3, 2}));
  EXPECT_FALSE(g.is_abelian());
}

TEST(MakeNamed, Q8ClassSizesAndReps) {
  const Group g = make_named("Q8");
  EXPECT_EQ(g.order(), 8);
  EXPECT_EQ(sizes_of(g), (std::vector<int>{1, 1, 2, 2, 2}));
  std::vector<std::string> reps;
  for (int r : g.class_reps()) reps.push_back(g.label(r));
  EXPECT_EQ(reps, (std::vector<std::string>{"1", "-1", "i", "j", "k"}));
}

TEST(MakeNamed, V4AllSingletons) {
  const Group g = make_named("V4");
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.num_classes(), 4);
}

TEST(MakeNamed, D4HasFiveClassesAndIsExploratory) {
  const Group g = make_named("D4");
  EXPECT_EQ(g.num_classes(), 5);
  EXPECT_TRUE(g.exploratory());
}

TEST(MakeNamed, UnknownName) { EXPECT_THROW(make_named("A5"), CatalogError); }

TEST(Multiply, OutOfRange) {
  const Group g = make_cyclic(4);
  EXPECT_THROW(g.multiply(4, 0), IndexError);
  EXPECT_THROW(g.multiply(0, -1), IndexError);
}

TEST(Multiply, IdentityAndInverseLaws) {
  for (const char* name : {"S3", "Q8", "V4", "D4"}) {
    SCOPED_TRACE(name);
    expect_group_axioms(make_named(name));
  }
}

TEST(ConjugacyClasses, MatchBruteForceOrbits) {
  for (const char* name : {"S3", "Q8", "V4", "D4"}) {
    SCOPED_TRACE(name);
    expect_classes_are_orbits(make_named(name));
  }
  expect_classes_are_orbits(make_cyclic(5));
  expect_classes_are_orbits(make_abelian({2, 4}));
}

TEST(ConjugacyClasses, OrderedBySmallestMember) {
  const Group g = make_named("S3");
  const auto classes = conjugacy_classes(g);
  ASSERT_EQ(classes.size(), 3u);
  for (size_t c = 2; c < classes.size(); ++c) EXPECT_LT(classes[c - 1][0], classes[c][0]);
}

TEST(FromCayley, RejectsNonAssociativeTable) {
  // Latin square with identity 0 that is not associative.
  const std::vector<int> t = {0, 1, 2, 3, 4,  //
                              1, 0, 3, 4, 2,  //
                              2, 4, 0, 1, 3,  //
                              3, 2, 4, 0, 1,  //
                              4, 3, 1, 2, 0};
  EXPECT_THROW(Group::FromCayley("bad", 5, t, 0), InvalidInput);
}

TEST(FromCayley, RejectsMissingIdentity) {
  EXPECT_THROW(Group::FromCayley("bad", 2, {1, 0, 0, 1}, 0), InvalidInput);
}

TEST(FromCayley, RecomputesClassesOfS3) {
  const Group s3 = make_named("S3");
  const std::vector<int> t(s3.cayley().begin(), s3.cayley().end());
  const Group g = Group::FromCayley("copy", 6, t, s3.identity());
  EXPECT_EQ(g.class_sizes(), s3.class_sizes());
  EXPECT_TRUE(g.same_table(s3));
}

TEST(GroupFromLabel, ParsesProductsAndCatalog) {
  EXPECT_EQ(group_from_label("Z7").order(), 7);
  EXPECT_EQ(group_from_label("Z2xZ3").order(), 6);
  EXPECT_EQ(group_from_label("Q8").num_classes(), 5);
  EXPECT_THROW(group_from_label("G12"), CatalogError);
}
