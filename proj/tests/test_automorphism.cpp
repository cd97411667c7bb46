#include <gtest/gtest.h>

#include <map>
#include <set>

#include "neumaier/automorphism.hpp"
#include "oracle.hpp"

using namespace neumaier;

namespace {

// Orbits of the permutation group generated by `perms` on m-subsets of
// `coset`, by brute-force closure. Returns the minimum of each orbit.
std::set<ElementSet> orbit_minima(const std::vector<Automorphism>& perms, const ElementSet& coset, std::size_t m) {
  std::vector<ElementSet> all;
  std::vector<std::size_t> idx(m);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == m) {
      ElementSet s;
      for (auto i : idx) s.push_back(coset[i]);
      all.push_back(s);
      return;
    }
    for (std::size_t i = start; i < coset.size(); ++i) idx[depth] = i, rec(i + 1, depth + 1);
  };
  rec(0, 0);
  std::set<ElementSet> minima;
  std::set<ElementSet> seen;
  for (const auto& s : all) {
    if (seen.count(s)) continue;
    std::set<ElementSet> orbit{s};
    std::vector<ElementSet> stack{s};
    while (!stack.empty()) {
      auto cur = stack.back();
      stack.pop_back();
      for (const auto& p : perms) {
        auto img = neumaier::apply(p, cur);
        if (orbit.insert(img).second) stack.push_back(img);
      }
    }
    seen.insert(orbit.begin(), orbit.end());
    minima.insert(*orbit.begin());
  }
  return minima;
}

}  // namespace

TEST(Automorphism, GroupOrders) {
  const std::map<std::string, std::size_t> known{
      {"C8", 4}, {"C2xC4", 8}, {"D8", 8}, {"C2^3", 168}, {"D6", 6}, {"C2xC8", 16}, {"C12", 4}, {"C1", 1}};
  for (const auto& [d, n] : known) {
    const auto g = make_group(d);
    const auto auts = automorphism_group(g);
    EXPECT_EQ(auts.size(), n) << d;
    EXPECT_TRUE(std::is_sorted(auts.begin(), auts.end()));
    for (const auto& f : auts) EXPECT_TRUE(is_automorphism(g, f.perm));
  }
}

TEST(Automorphism, ComposeAndInverse) {
  const auto g = make_group("C2xC4");
  const auto auts = automorphism_group(g);
  const std::set<Automorphism> all(auts.begin(), auts.end());
  for (const auto& f : auts) {
    EXPECT_EQ(compose(f, inverse(f)), identity_automorphism(g));
    for (const auto& h : auts) EXPECT_TRUE(all.count(compose(f, h)));
  }
}

TEST(Automorphism, RejectsNonAutomorphisms) {
  const auto g = make_group("C4");
  EXPECT_FALSE(is_automorphism(g, std::vector<Element>{0, 2, 1, 3}));
  EXPECT_FALSE(is_automorphism(g, std::vector<Element>{1, 0, 2, 3}));
  EXPECT_TRUE(is_automorphism(g, std::vector<Element>{0, 3, 2, 1}));
}

TEST(Automorphism, LimitsThrow) {
  AutomorphismLimits tiny;
  tiny.node_budget = 3;
  EXPECT_THROW(automorphism_group(make_group("C2^4"), tiny), BudgetExceeded);
  AutomorphismLimits small;
  small.max_order = 8;
  EXPECT_THROW(automorphism_group(make_group("C16"), small), InvalidInput);
}

TEST(Automorphism, SetwiseStabilizer) {
  const auto g = make_group("C8");
  const auto auts = automorphism_group(g);
  EXPECT_EQ(setwise_stabilizer(auts, std::vector<Element>{1, 7}).size(), 2u);
  EXPECT_EQ(setwise_stabilizer(auts, std::vector<Element>{4}).size(), 4u);
}

TEST(Automorphism, CosetStabilizerMatchesFullGroup) {
  for (const char* d : {"C2xC8", "D16", "C2xD8", "C4xC4"}) {
    const auto g = make_group(d);
    const auto auts = automorphism_group(g);
    for (const auto& h : subgroups_of_order(g, 4)) {
      const auto cd = right_cosets(h);
      const Element g2 = cd.reps[1];
      const auto& coset = cd.cosets[1];
      // Oracle: restrict the full Aut(G) stabilizer of H and Hg2 to Hg2.
      std::set<std::vector<Element>> expected;
      for (const auto& f : auts) {
        if (neumaier::apply(f, h.members()) != h.members() || neumaier::apply(f, coset) != coset) continue;
        std::vector<Element> action;
        for (Element x : coset) action.push_back(f(x));
        expected.insert(action);
      }
      std::set<std::vector<Element>> got;
      for (const auto& f : coset_stabilizer_action(h, g2)) {
        EXPECT_TRUE(is_automorphism(g, f.perm));
        EXPECT_EQ(neumaier::apply(f, h.members()), h.members());
        std::vector<Element> action;
        for (Element x : coset) action.push_back(f(x));
        got.insert(action);
      }
      EXPECT_EQ(got, expected) << d;
    }
  }
}

TEST(Automorphism, OrbitRepsMatchBruteForce) {
  for (const char* d : {"C2xC8", "C2^4", "D16"}) {
    const auto g = make_group(d);
    for (const auto& h : subgroups_of_order(g, 4)) {
      const auto cd = right_cosets(h);
      const auto stab = coset_stabilizer_action(h, cd.reps[1]);
      for (std::size_t m = 1; m <= 3; ++m) {
        const auto reps = msubset_orbit_reps(stab, cd.cosets[1], m);
        const auto minima = orbit_minima(stab, cd.cosets[1], m);
        EXPECT_EQ(std::set<ElementSet>(reps.begin(), reps.end()), minima) << d << " m=" << m;
        EXPECT_TRUE(std::is_sorted(reps.begin(), reps.end()));
      }
    }
  }
}

TEST(Automorphism, OrbitRepsCap) {
  const auto g = make_group("C16");
  std::vector<Element> all;
  for (Element x = 0; x < 16; ++x) all.push_back(x);
  EXPECT_THROW(msubset_orbit_reps({}, all, 8, 100), SearchSpaceTooLarge);
}

TEST(Automorphism, MappingBetweenSubgroups) {
  const auto g = make_group("C2xC8");
  const auto subs = subgroups_of_order(g, 4);
  // <(0,2)> and <(1,2)> are not Aut-conjugate: (0,2) is a square of an
  // element of order 8 and (1,2) is not. C2 x C2 is not cyclic.
  int cyclic_pairs = 0;
  for (const auto& a : subs)
    for (const auto& b : subs) {
      const auto f = find_automorphism_mapping(a, b);
      bool a_cyc = false, b_cyc = false;
      for (Element x : a.members()) a_cyc |= g.element_order(x) == 4;
      for (Element x : b.members()) b_cyc |= g.element_order(x) == 4;
      if (a_cyc != b_cyc) EXPECT_FALSE(f.has_value());
      if (f) {
        EXPECT_EQ(neumaier::apply(*f, a.members()), b.members());
        cyclic_pairs += a_cyc;
      }
    }
  EXPECT_EQ(cyclic_pairs, 2);
}

TEST(Automorphism, Binomial) {
  EXPECT_EQ(binomial(10, 3), 120u);
  EXPECT_EQ(binomial(5, 7), 0u);
  EXPECT_EQ(binomial(64, 32), 1832624140942590534ULL);
}
