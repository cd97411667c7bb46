#include <gtest/gtest.h>

#include <random>

#include "neumaier/graph.hpp"
#include "neumaier/graph_io.hpp"
#include "neumaier/rds.hpp"
#include "oracle.hpp"

using namespace neumaier;

namespace {

DenseGraph from_matrix(const oracle::Matrix& a) {
  DenseGraph g(a.size());
  for (Vertex u = 0; u < a.size(); ++u)
    for (Vertex v = u + 1; v < a.size(); ++v)
      if (a[u][v]) g.add_edge(u, v);
  return g;
}

DenseGraph petersen() {
  DenseGraph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

DenseGraph cube() {
  DenseGraph g(8);
  for (Vertex u = 0; u < 8; ++u)
    for (Vertex v = u + 1; v < 8; ++v)
      if (__builtin_popcount(u ^ v) == 1) g.add_edge(u, v);
  return g;
}

DenseGraph k33() {
  DenseGraph g(6);
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = 3; v < 6; ++v) g.add_edge(u, v);
  return g;
}

ElementSet random_inverse_closed(const FiniteGroup& g, std::mt19937& rng) {
  ElementSet s;
  for (Element x = 1; x < g.order(); ++x) {
    const Element y = g.inv(x);
    if (y < x) continue;
    if (rng() % 2) {
      s.push_back(x);
      if (y != x) s.push_back(y);
    }
  }
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST(DenseGraph, Basics) {
  DenseGraph g(70);
  g.add_edge(0, 69);
  g.add_edge(3, 64);
  EXPECT_TRUE(g.adjacent(69, 0));
  EXPECT_EQ(g.degree(0), 1u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_THROW(g.add_edge(4, 4), InvalidInput);
  EXPECT_THROW(g.add_edge(4, 70), InvalidInput);
  std::vector<Vertex> perm(70);
  for (Vertex i = 0; i < 70; ++i) perm[i] = 69 - i;
  const auto r = g.relabeled(perm);
  EXPECT_TRUE(r.adjacent(69, 0));
  EXPECT_TRUE(r.adjacent(66, 5));
  EXPECT_EQ(complete_graph(5).edge_count(), 10u);
  EXPECT_EQ(cycle_graph(5).edge_count(), 5u);
}

TEST(Cayley, MaterializeMatchesOracle) {
  std::mt19937 rng(1);
  for (const char* d : {"C2xC8", "D16", "C3xD6", "C2^4"}) {
    const auto g = make_group(d);
    for (int i = 0; i < 5; ++i) {
      const auto s = random_inverse_closed(g, rng);
      const auto c = make_cayley_graph(g, s);
      EXPECT_EQ(materialize(c), from_matrix(oracle::cayley(oracle::table_of(g), s))) << d;
    }
  }
}

TEST(Cayley, ConnectionSetErrors) {
  const auto g = make_group("C8");
  try {
    make_cayley_graph(g, {0, 1, 7});
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_EQ(e.code(), "IdentityInConnectionSet");
  }
  try {
    make_cayley_graph(g, {1, 2, 7});
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_EQ(e.code(), "NotInverseClosed");
    EXPECT_NE(std::string(e.what()).find('2'), std::string::npos);
  }
  EXPECT_THROW(make_cayley_graph(g, {9}), InvalidInput);
}

TEST(Regularity, KnownGraphs) {
  EXPECT_EQ(*strongly_regular(cycle_graph(5)), (SrgParams{5, 2, 0, 1}));
  EXPECT_EQ(*strongly_regular(k33()), (SrgParams{6, 3, 0, 3}));
  EXPECT_EQ(*strongly_regular(petersen()), (SrgParams{10, 3, 0, 1}));
  EXPECT_EQ(*strongly_regular(complete_graph(4)), (SrgParams{4, 3, 2, 0}));
  EXPECT_EQ(*edge_regular(cube()), (EdgeRegularParams{8, 3, 0}));
  const auto notsrg = strongly_regular(cube());
  ASSERT_FALSE(notsrg);
  EXPECT_EQ(notsrg.failure().code, "NotSrg");
  const auto c6 = cycle_graph(6);
  EXPECT_EQ(strongly_regular(c6).failure().code, "NotSrg");

  DenseGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  EXPECT_EQ(edge_regular(path).failure().code, "NotRegular");
  DenseGraph tri_plus(6);  // two disjoint triangles
  for (Vertex i = 0; i < 3; ++i) tri_plus.add_edge(i, (i + 1) % 3), tri_plus.add_edge(3 + i, 3 + (i + 1) % 3);
  EXPECT_EQ(*edge_regular(tri_plus), (EdgeRegularParams{6, 2, 1}));
  // The prism is 3-regular but not edge-regular.
  DenseGraph prism(6);
  for (Vertex i = 0; i < 3; ++i) {
    prism.add_edge(i, (i + 1) % 3);
    prism.add_edge(3 + i, 3 + (i + 1) % 3);
    prism.add_edge(i, i + 3);
  }
  EXPECT_EQ(edge_regular(prism).failure().code, "NotEdgeRegular");
}

TEST(Regularity, RandomCayleyMatchesOracle) {
  std::mt19937 rng(4);
  for (const char* d : {"C12", "D12", "C2xC6", "C4xC4", "C2^4", "D16"}) {
    const auto g = make_group(d);
    for (int i = 0; i < 30; ++i) {
      const auto s = random_inverse_closed(g, rng);
      const auto a = oracle::cayley(oracle::table_of(g), s);
      const auto dg = materialize(make_cayley_graph(g, s));
      const auto er = edge_regular(dg);
      const auto o = oracle::edge_regular(a);
      ASSERT_EQ(er.ok(), o.has_value());
      EXPECT_EQ(edge_regular_cayley(make_cayley_graph(g, s)).ok(), er.ok());
      if (er) {
        EXPECT_EQ(er->k, static_cast<std::uint64_t>(o->k));
        EXPECT_EQ(er->lambda, static_cast<std::uint64_t>(o->lambda));
      }
      const auto sr = strongly_regular(dg);
      const auto mu = oracle::srg_mu(a);
      EXPECT_EQ(sr.ok(), mu.has_value());
      if (sr) EXPECT_EQ(sr->mu, static_cast<std::uint64_t>(*mu));
    }
  }
}

TEST(Nexus, CliqueExamples) {
  const auto k4 = complete_graph(4);
  EXPECT_EQ(*clique_nexus(k4, std::vector<Vertex>{0, 1}), 2u);
  const auto c6 = cycle_graph(6);
  EXPECT_FALSE(clique_nexus(c6, std::vector<Vertex>{0, 1}));
  EXPECT_EQ(clique_nexus(c6, std::vector<Vertex>{0, 2}).failure().code, "NotAClique");
  EXPECT_EQ(clique_nexus(k4, std::vector<Vertex>{0, 1, 2, 3}).failure().code, "NoOutsideVertex");
  // Nexus 0 is rejected.
  DenseGraph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  EXPECT_EQ(clique_nexus(two, std::vector<Vertex>{0, 1}).failure().code, "NotRegularClique");
}

TEST(Nexus, CosetSpread) {
  const auto g = make_group("C2xC8");
  const Subgroup h(g, {0, 2, 4, 6});
  const auto c = make_cayley_graph(g, {1, 2, 4, 6, 7, 9, 10, 14, 15});
  EXPECT_EQ(*coset_spread_nexus(c, h), 2u);
  EXPECT_EQ(coset_spread_nexus(c, whole_group(g)).failure().code, "SubgroupIsWhole");
  const auto c2 = make_cayley_graph(g, {1, 7, 9, 15});
  EXPECT_EQ(coset_spread_nexus(c2, h).failure().code, "HNotClique");
}

TEST(Neumaier, CensusGraph) {
  const auto g = make_group("C2xC8");
  const Subgroup h(g, {0, 2, 4, 6});
  const auto c = make_cayley_graph(g, {1, 2, 4, 6, 7, 9, 10, 14, 15});
  const auto r = strictly_neumaier_check(c, h);
  ASSERT_TRUE(r) << r.failure().detail;
  EXPECT_EQ(r->params, (NeumaierParams{16, 9, 4, 2, 4}));
  EXPECT_TRUE(r->strict);
  EXPECT_FALSE(r->srg.has_value());
  const auto o = oracle::neumaier(oracle::table_of(g), h.members(), c.connection);
  ASSERT_TRUE(o);
  EXPECT_TRUE(o->strict);
}

TEST(Neumaier, CompleteGraphRejected) {
  const auto g = make_group("C4");
  const auto c = make_cayley_graph(g, {1, 2, 3});
  EXPECT_EQ(strictly_neumaier_check(c, Subgroup(g, {0, 2})).failure().code, "NonComplete");
  const auto c2 = make_group("C2");
  EXPECT_EQ(strictly_neumaier_check(make_cayley_graph(c2, {1}), whole_group(c2)).failure().code, "NonComplete");
}

TEST(Neumaier, RandomAgreesWithOracle) {
  std::mt19937 rng(8);
  int positives = 0;
  for (const char* d : {"C2xC4", "D8", "C2^3", "C3xC3", "C12", "D12"}) {
    const auto g = make_group(d);
    const auto t = oracle::table_of(g);
    for (std::size_t ord = 2; ord < g.order(); ++ord) {
      if (g.order() % ord) continue;
      for (const auto& h : subgroups_of_order(g, ord)) {
        for (int i = 0; i < 20; ++i) {
          auto s = random_inverse_closed(g, rng);
          for (Element x : h.members())
            if (x != kIdentity) s.push_back(x);
          s = make_element_set(g, s);
          const auto r = strictly_neumaier_check(make_cayley_graph(g, s), h);
          const auto o = oracle::neumaier(t, h.members(), s);
          ASSERT_EQ(r.ok(), o.has_value()) << d;
          if (r) {
            ++positives;
            EXPECT_EQ(r->params.lambda, static_cast<std::uint64_t>(o->lambda));
            EXPECT_EQ(r->params.m, static_cast<std::uint64_t>(o->m));
            EXPECT_EQ(r->strict, o->strict);
          }
        }
      }
    }
  }
  EXPECT_GT(positives, 0);
}

TEST(DistanceRegular, CubeAndPetersen) {
  const auto q = distance_regular(cube());
  ASSERT_TRUE(q);
  EXPECT_EQ(q->b, (std::vector<std::uint64_t>{3, 2, 1}));
  EXPECT_EQ(q->c, (std::vector<std::uint64_t>{1, 2, 3}));
  EXPECT_TRUE(q->antipodal);
  EXPECT_EQ(q->antipodal_class_size, 2u);
  const auto p = distance_regular(petersen());
  ASSERT_TRUE(p);
  EXPECT_EQ(p->b, (std::vector<std::uint64_t>{3, 2}));
  EXPECT_EQ(p->c, (std::vector<std::uint64_t>{1, 1}));
  DenseGraph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  EXPECT_EQ(distance_regular(two).failure().code, "NotConnected");
  DenseGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  EXPECT_EQ(distance_regular(path).failure().code, "NotDistanceRegular");
}

TEST(DistanceRegular, BentRdsCover) {
  const auto r = bent_rds(gf2::maiorana_mcfarland(2));
  ElementSet tsharp;
  for (Element x : r.members)
    if (x != kIdentity) tsharp.push_back(x);
  const auto c = make_cayley_graph(r.group(), tsharp);
  const auto dr = distance_regular(materialize(c));
  ASSERT_TRUE(dr);
  EXPECT_EQ(dr->b, (std::vector<std::uint64_t>{15, 8, 1}));
  EXPECT_EQ(dr->c, (std::vector<std::uint64_t>{1, 8, 15}));
  EXPECT_TRUE(dr->antipodal);
  EXPECT_TRUE(distance_classes_are_cosets(c, r.forbidden, 3));
  EXPECT_FALSE(distance_classes_are_cosets(c, r.forbidden, 2));
}

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(to_graph6(cycle_graph(5)), "Dhc");
  EXPECT_EQ(to_graph6(petersen()), "IheA@GUAo");
  EXPECT_EQ(to_graph6(cube()), "Gr`HOk");
  EXPECT_EQ(to_graph6(DenseGraph(1)), "@");
  DenseGraph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  EXPECT_EQ(to_graph6(p3), "Bg");
  const auto c70 = cycle_graph(70);
  const auto s = to_graph6(c70);
  EXPECT_EQ(s.substr(0, 8), "~?@EhCGG");
  EXPECT_EQ(s.substr(s.size() - 4), "???G");
}

TEST(Graph6, RoundTripAndErrors) {
  std::mt19937 rng(6);
  for (std::size_t n : {0u, 1u, 2u, 7u, 62u, 63u, 64u, 130u}) {
    DenseGraph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    EXPECT_EQ(from_graph6(to_graph6(g)), g) << n;
    EXPECT_EQ(from_graph6(">>graph6<<" + to_graph6(g)), g);
    EXPECT_EQ(from_edge_list(to_edge_list(g)), g);
    EXPECT_EQ(from_adjacency_json(nlohmann::json::parse(to_adjacency_json(g).dump())), g);
  }
  EXPECT_THROW(from_graph6(""), ParseError);
  EXPECT_THROW(from_graph6("C"), ParseError);
  EXPECT_THROW(from_graph6("C~~"), ParseError);
  EXPECT_THROW(from_graph6("C\x7f"), ParseError);
  EXPECT_THROW(from_graph6("Bh"), ParseError);  // padding bit set
  EXPECT_THROW(from_edge_list("3 1\n0 5\n"), ParseError);
  EXPECT_THROW(from_edge_list("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(from_adjacency_json(nlohmann::json::parse(R"({"vertices":2,"adjacency":[[1],[]]})")), ParseError);
}
