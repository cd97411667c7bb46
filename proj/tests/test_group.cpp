#include <gtest/gtest.h>

#include <random>

#include "neumaier/errors.hpp"
#include "neumaier/group.hpp"
#include "neumaier/group_ring.hpp"
#include "oracle.hpp"

using namespace neumaier;

TEST(Group, CyclicMatchesOracle) {
  for (std::uint32_t n : {1u, 2u, 5u, 8u, 12u}) {
    EXPECT_EQ(oracle::table_of(make_group("C" + std::to_string(n))), oracle::cyclic(n)) << n;
  }
}

TEST(Group, DihedralMatchesOracle) {
  for (std::uint32_t n : {4u, 6u, 8u, 16u}) {
    const auto g = make_group("D" + std::to_string(n));
    EXPECT_EQ(oracle::table_of(g), oracle::dihedral(n)) << n;
    EXPECT_EQ(g.is_abelian(), n == 4);
  }
}

TEST(Group, ProductsAreRowMajor) {
  EXPECT_EQ(oracle::table_of(make_group("C2xC8")), oracle::product(oracle::cyclic(2), oracle::cyclic(8)));
  EXPECT_EQ(oracle::table_of(make_group("C2xD8")), oracle::product(oracle::cyclic(2), oracle::dihedral(8)));
  EXPECT_EQ(oracle::table_of(make_group("C4xC2^2")),
            oracle::product(oracle::product(oracle::cyclic(4), oracle::cyclic(2)), oracle::cyclic(2)));
  const auto a = make_group("C4xC2"), b = make_group("C2^2");
  EXPECT_TRUE(direct_product(a, b).same_table(make_group("C4xC2^3")));
  EXPECT_EQ(direct_product(a, b).descriptor(), "C4xC2^3");
  EXPECT_EQ(product_index(b, 3, 2), 14u);
}

TEST(Group, IdentityInversesAndOrders) {
  for (const char* d : {"C2xC8", "D16", "C2xD8", "C3xD6", "C2^4"}) {
    const auto g = make_group(d);
    EXPECT_TRUE(g.check_associativity()) << d;
    for (Element x = 0; x < g.order(); ++x) {
      EXPECT_EQ(g.mul(kIdentity, x), x);
      EXPECT_EQ(g.mul(x, g.inv(x)), kIdentity);
      Element p = x;
      std::uint32_t k = 1;
      while (p != kIdentity) p = g.mul(p, x), ++k;
      EXPECT_EQ(g.element_order(x), k);
    }
  }
  EXPECT_EQ(make_group("C2xC8").exponent(), 8u);
  EXPECT_EQ(make_group("D16").exponent(), 8u);
}

TEST(Group, Descriptors) {
  EXPECT_EQ(normalize_descriptor("C2xC2^2"), "C2^3");
  EXPECT_EQ(normalize_descriptor("C1xC4"), "C4");
  EXPECT_EQ(normalize_descriptor("C1"), "C1");
  EXPECT_EQ(make_group("C2xC2xC2").descriptor(), "C2^3");
  EXPECT_EQ(make_group("C1").order(), 1u);
}

TEST(Group, BadDescriptorsThrow) {
  for (const char* d : {"", "C0", "D5", "D2", "X3", "C2x", "C2^0", "C2^", "c4"}) {
    EXPECT_THROW(make_group(d), InvalidInput) << d;
  }
  EXPECT_THROW(make_group("C2^11"), InvalidInput);
  try {
    make_group("C2^11");
  } catch (const InvalidInput& e) {
    EXPECT_EQ(e.code(), "Overflow");
  }
}

TEST(Group, ExplicitTableValidation) {
  EXPECT_NO_THROW(FiniteGroup("x", 2, {0, 1, 1, 0}, {}));
  EXPECT_THROW(FiniteGroup("x", 2, {1, 0, 0, 1}, {}), InvalidInput);  // identity not at 0
  EXPECT_THROW(FiniteGroup("x", 2, {0, 1, 1, 1}, {}), InvalidInput);
  EXPECT_THROW(FiniteGroup("x", 2, {0, 1, 0}, {}), InvalidInput);
}

TEST(Subgroup, ClosureAndCosets) {
  const auto g = make_group("C2xC8");
  EXPECT_THROW(Subgroup(g, {0, 1, 2}), InvalidInput);
  const Subgroup h(g, {0, 4});
  const auto cd = right_cosets(h);
  ASSERT_EQ(cd.cosets.size(), 8u);
  EXPECT_EQ(cd.reps[0], kIdentity);
  std::vector<int> seen(g.order(), 0);
  for (std::size_t i = 0; i < cd.cosets.size(); ++i) {
    EXPECT_EQ(cd.cosets[i].size(), 2u);
    EXPECT_EQ(cd.cosets[i].front(), cd.reps[i]);
    if (i > 0) EXPECT_LT(cd.reps[i - 1], cd.reps[i]);
    for (Element x : cd.cosets[i]) {
      ++seen[x];
      EXPECT_EQ(cd.coset_of[x], i);
    }
  }
  for (int c : seen) EXPECT_EQ(c, 1);
}

TEST(Subgroup, RightCosetsInNonAbelianGroup) {
  const auto g = make_group("D8");
  const Subgroup h(g, {0, 4});  // {e, s}
  for (const auto& c : right_cosets(h).cosets) {
    // Hg = {g, s g}
    EXPECT_EQ(c.size(), 2u);
    EXPECT_EQ(c[1], std::max(g.mul(4, c[0]), c[0]));
  }
  EXPECT_FALSE(is_normal(h));
  EXPECT_TRUE(is_normal(Subgroup(g, {0, 1, 2, 3})));
  EXPECT_EQ(center(g).members(), (ElementSet{0, 2}));
}

TEST(Subgroup, CountsByOrder) {
  // Known subgroup counts.
  EXPECT_EQ(subgroups_of_order(make_group("C2xC8"), 4).size(), 3u);
  EXPECT_EQ(subgroups_of_order(make_group("D16"), 4).size(), 5u);
  EXPECT_EQ(subgroups_of_order(make_group("C2^4"), 4).size(), 35u);
  EXPECT_EQ(subgroups_of_order(make_group("C2^4"), 2).size(), 15u);
  EXPECT_EQ(subgroups_of_order(make_group("D6"), 2).size(), 3u);
  EXPECT_EQ(subgroups_of_order(make_group("C12"), 5).size(), 0u);
  for (const auto& h : subgroups_of_order(make_group("C2xD8"), 4)) {
    EXPECT_EQ(subgroup_generated(h.parent(), h.members()), h);
  }
}

TEST(Subgroup, GeneratedAndInduced) {
  const auto g = make_group("C2xC8");
  const std::vector<Element> gens{2};
  const auto h = subgroup_generated(g, gens);
  EXPECT_EQ(h.order(), 4u);
  const auto ind = induced_group(h, "C4");
  EXPECT_EQ(oracle::table_of(ind.group), oracle::cyclic(4));
  for (Element i = 0; i < 4; ++i)
    for (Element j = 0; j < 4; ++j)
      EXPECT_EQ(ind.to_parent[ind.group.mul(i, j)], g.mul(ind.to_parent[i], ind.to_parent[j]));
  const auto seq = generating_sequence(g);
  EXPECT_EQ(subgroup_generated(g, seq).order(), g.order());
}

TEST(ElementSets, InverseClosure) {
  const auto g = make_group("C8");
  EXPECT_TRUE(is_inverse_closed(g, std::vector<Element>{1, 7, 4}));
  EXPECT_FALSE(is_inverse_closed(g, std::vector<Element>{1, 4}));
  EXPECT_EQ(inverse_set(g, std::vector<Element>{1, 2}), (ElementSet{6, 7}));
  EXPECT_EQ(make_element_set(g, {3, 1, 3}), (ElementSet{1, 3}));
  EXPECT_THROW(make_element_set(g, {8}), InvalidInput);
  EXPECT_EQ(right_translate(g, std::vector<Element>{0, 1}, 7), (ElementSet{0, 7}));
}

TEST(GroupRing, ConvolutionMatchesDifferenceCount) {
  const auto g = make_group("D8");
  const std::vector<Element> t{1, 4, 6};
  const auto prod = convolve(indicator(g, t), indicator(g, inverse_set(g, t)), g);
  const auto diffs = oracle::differences(oracle::table_of(g), t);
  for (Element x = 1; x < g.order(); ++x) EXPECT_EQ(prod[x], diffs[x]);
  EXPECT_EQ(prod[kIdentity], 3);
  EXPECT_EQ(delta(g, 2) + delta(g, 2), 2 * delta(g, 2));
  EXPECT_EQ(delta(g, 2) - delta(g, 2), zero_vector(g));
}

TEST(GroupRing, ConvolutionIsAssociative) {
  std::mt19937 rng(7);
  const auto g = make_group("C2xD6");
  std::uniform_int_distribution<int> c(-3, 3);
  auto rnd = [&] {
    GroupRingVector v = zero_vector(g);
    for (auto& x : v.coeffs) x = c(rng);
    return v;
  };
  for (int i = 0; i < 5; ++i) {
    const auto a = rnd(), b = rnd(), d = rnd();
    EXPECT_EQ(convolve(convolve(a, b, g), d, g), convolve(a, convolve(b, d, g), g));
  }
}
