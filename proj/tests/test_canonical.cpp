#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "neumaier/canonical.hpp"
#include "neumaier/enumeration.hpp"
#include "oracle.hpp"

using namespace neumaier;

namespace {

DenseGraph random_graph(std::size_t n, std::mt19937& rng, int density = 2) {
  DenseGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng() % density == 0) g.add_edge(u, v);
  return g;
}

std::vector<Vertex> random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

oracle::Matrix matrix(const DenseGraph& g) {
  oracle::Matrix a(g.size(), std::vector<int>(g.size(), 0));
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = 0; v < g.size(); ++v) a[u][v] = g.adjacent(u, v);
  return a;
}

}  // namespace

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937 rng(12);
  for (std::size_t n : {1u, 5u, 10u, 17u, 40u}) {
    for (int i = 0; i < 10; ++i) {
      const auto g = random_graph(n, rng);
      const auto cert = canonical_form(g);
      EXPECT_EQ(canonical_form(g.relabeled(random_perm(n, rng))), cert);
    }
  }
}

TEST(Canonical, LabelingRealizesCertificate) {
  std::mt19937 rng(13);
  const auto g = random_graph(12, rng);
  const auto r = canonical_labeling(g);
  const auto r2 = canonical_labeling(g.relabeled(r.labeling));
  EXPECT_EQ(r.certificate, r2.certificate);
  std::vector<Vertex> identity(12);
  std::iota(identity.begin(), identity.end(), 0);
  EXPECT_EQ(r2.labeling, identity);
}

TEST(Canonical, SeparatesExactlyTheIsomorphismClasses) {
  // Every graph on 6 vertices with 7 edges: the certificate partition must
  // equal the brute-force isomorphism partition.
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v) pairs.emplace_back(u, v);
  std::mt19937 rng(14);
  std::vector<DenseGraph> graphs;
  for (int i = 0; i < 60; ++i) {
    std::vector<int> pick(pairs.size(), 0);
    std::fill(pick.begin(), pick.begin() + 7, 1);
    std::shuffle(pick.begin(), pick.end(), rng);
    DenseGraph g(6);
    for (std::size_t j = 0; j < pairs.size(); ++j)
      if (pick[j]) g.add_edge(pairs[j].first, pairs[j].second);
    graphs.push_back(g);
  }
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
      const bool iso = oracle::isomorphic(matrix(graphs[i]), matrix(graphs[j]));
      EXPECT_EQ(canonical_form(graphs[i]) == canonical_form(graphs[j]), iso);
    }
}

TEST(Canonical, RegularGraphsAreHandled) {
  // Strongly regular graphs defeat colour refinement alone.
  const auto g = make_group("C2xC8");
  const auto c = materialize(make_cayley_graph(g, {1, 2, 4, 6, 7, 9, 10, 14, 15}));
  std::mt19937 rng(15);
  const auto cert = canonical_form(c);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(canonical_form(c.relabeled(random_perm(16, rng))), cert);
  // The 4x4 rook graph and the Shrikhande graph are both SRG(16,6,2,2).
  const auto c44 = make_group("C4xC4");
  const auto rook = materialize(make_cayley_graph(c44, {1, 2, 3, 4, 8, 12}));
  const auto shrikhande = materialize(make_cayley_graph(c44, {1, 3, 4, 12, 5, 15}));
  EXPECT_NE(canonical_form(rook), canonical_form(shrikhande));
  EXPECT_FALSE(find_isomorphism(rook, shrikhande).has_value());
}

TEST(Canonical, KnownAutomorphismsAreVerified) {
  const auto g = make_group("C8");
  const auto c = materialize(make_cayley_graph(g, {1, 7}));
  CanonicalOptions o;
  o.automorphisms = right_translations(g);
  EXPECT_EQ(canonical_form(c, o), canonical_form(c));
  o.automorphisms.push_back({1, 0, 2, 3, 4, 5, 6, 7});
  EXPECT_THROW(canonical_form(c, o), InvalidInput);
}

TEST(Canonical, ColoursAreRespected) {
  const auto p = cycle_graph(4);
  CanonicalOptions a, b;
  a.colours = {0, 0, 1, 1};
  b.colours = {0, 1, 0, 1};
  EXPECT_NE(canonical_form(p, a), canonical_form(p, b));
  CanonicalOptions c;
  c.colours = {1, 1, 0, 0};
  EXPECT_EQ(canonical_form(p, a), canonical_form(p.relabeled(std::vector<Vertex>{2, 3, 0, 1}), a));
  (void)c;
}

TEST(Canonical, BudgetExceeded) {
  const auto g = make_group("C2^6");
  std::vector<Element> s;
  for (Element x = 1; x < 64; ++x)
    if (__builtin_popcount(x) <= 2) s.push_back(x);
  CanonicalOptions o;
  o.node_budget = 2;
  EXPECT_THROW(canonical_form(materialize(make_cayley_graph(g, s)), o), BudgetExceeded);
}

TEST(Canonical, FindIsomorphism) {
  std::mt19937 rng(16);
  for (int i = 0; i < 10; ++i) {
    const auto a = random_graph(20, rng);
    const auto p = random_perm(20, rng);
    const auto b = a.relabeled(p);
    const auto iso = find_isomorphism(a, b);
    ASSERT_TRUE(iso);
    EXPECT_EQ(a.relabeled(*iso), b);
  }
  EXPECT_FALSE(find_isomorphism(cycle_graph(6), complete_graph(6)).has_value());
}

TEST(Canonical, CertificateFormat) {
  const auto cert = canonical_form(complete_graph(3));
  EXPECT_EQ(cert.substr(0, 4), "0003");
  for (char ch : cert) EXPECT_TRUE(std::isxdigit(ch) && !std::isupper(ch));
}

TEST(Canonical, CensusGroupsShareCertificate) {
  // The same graph as a Cayley graph over three groups.
  const auto a = make_group("C2xC8");
  const std::string ca = graph_certificate(a, {1, 2, 4, 6, 7, 9, 10, 14, 15}, 1'000'000);
  for (const char* d : {"D16", "C2xD8"}) {
    const auto g = make_group(d);
    bool found = false;
    for (const auto& h : subgroups_of_order(g, 4)) {
      EnumerationOptions o;
      o.collect_sets = true;
      const auto r = enumerate(make_task(g, h, {16, 9, 4, 2, 4}, o));
      for (const auto& c : r.classes) found |= c.certificate == ca && c.strict;
    }
    EXPECT_TRUE(found) << d;
  }
}
