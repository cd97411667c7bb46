#include "neumaier/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace neumaier {

DenseGraph::DenseGraph(std::size_t vcount) : n_(vcount), words_((vcount + 63) / 64) {
  if (vcount > kMaxGraphOrder) throw InvalidInput("Overflow", "graph order above " + std::to_string(kMaxGraphOrder));
  bits_.assign(n_ * words_, 0);
}

void DenseGraph::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) throw InvalidInput("vertex out of range");
  if (u == v) throw InvalidInput("loops are not allowed");
  bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

std::size_t DenseGraph::degree(Vertex u) const noexcept {
  std::size_t d = 0;
  for (auto w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t DenseGraph::common_neighbours(Vertex u, Vertex v) const noexcept {
  const std::uint64_t* a = bits_.data() + u * words_;
  const std::uint64_t* b = bits_.data() + v * words_;
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

std::vector<Vertex> DenseGraph::neighbours(Vertex u) const {
  std::vector<Vertex> out;
  const auto r = row(u);
  for (std::size_t i = 0; i < words_; ++i) {
    for (std::uint64_t w = r[i]; w; w &= w - 1) {
      out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
    }
  }
  return out;
}

std::size_t DenseGraph::edge_count() const noexcept {
  std::size_t d = 0;
  for (Vertex u = 0; u < n_; ++u) d += degree(u);
  return d / 2;
}

DenseGraph DenseGraph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != n_) throw InvalidInput("permutation has wrong length");
  DenseGraph out(n_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbours(u)) {
      if (u < v) out.add_edge(perm[u], perm[v]);
    }
  }
  return out;
}

DenseGraph complete_graph(std::size_t n) {
  DenseGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

DenseGraph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  DenseGraph g(n);
  for (Vertex u = 0; u < n; ++u) g.add_edge(u, static_cast<Vertex>((u + 1) % n));
  return g;
}

CayleyGraph make_cayley_graph(const FiniteGroup& g, std::vector<Element> s) {
  ElementSet conn = make_element_set(g, std::move(s));
  if (!conn.empty() && conn.front() == kIdentity) {
    throw InvalidInput("IdentityInConnectionSet", "connection set contains the identity");
  }
  for (Element x : conn) {
    if (!std::binary_search(conn.begin(), conn.end(), g.inv(x))) {
      throw InvalidInput("NotInverseClosed",
                         "connection set is not inverse-closed: " + std::to_string(x) + " has inverse " +
                             std::to_string(g.inv(x)) + " outside");
    }
  }
  return CayleyGraph{g, std::move(conn)};
}

DenseGraph materialize(const CayleyGraph& c) {
  const FiniteGroup& g = c.group;
  // Revalidate: CayleyGraph is a plain struct and may have been assembled by hand.
  make_cayley_graph(g, c.connection);
  DenseGraph out(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    for (Element s : c.connection) {
      const Element y = g.mul(s, x);
      if (x < y) out.add_edge(x, y);
    }
  }
  return out;
}

namespace {

Verdict<std::uint64_t> regular_degree(const DenseGraph& g) {
  if (g.size() == 0) return make_failure("NotRegular", "empty graph");
  const std::uint64_t k = g.degree(0);
  for (Vertex u = 1; u < g.size(); ++u) {
    const auto d = g.degree(u);
    if (d != k) {
      return make_failure("NotRegular", "vertex " + std::to_string(u) + " has degree " + std::to_string(d),
                          {u, static_cast<std::int64_t>(d)});
    }
  }
  return k;
}

}  // namespace

Verdict<EdgeRegularParams> edge_regular(const DenseGraph& g) {
  auto k = regular_degree(g);
  if (!k) return k.failure();
  std::optional<std::uint64_t> lambda;
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v : g.neighbours(u)) {
      if (v <= u) continue;
      const std::uint64_t c = g.common_neighbours(u, v);
      if (!lambda) lambda = c;
      else if (c != *lambda) {
        return make_failure("NotEdgeRegular",
                            "edge {" + std::to_string(u) + "," + std::to_string(v) + "} lies in " +
                                std::to_string(c) + " triangles, expected " + std::to_string(*lambda),
                            {u, v, static_cast<std::int64_t>(c)});
      }
    }
  }
  return EdgeRegularParams{g.size(), *k, lambda.value_or(0)};
}

Verdict<EdgeRegularParams> edge_regular_cayley(const CayleyGraph& c) {
  const FiniteGroup& g = c.group;
  std::vector<std::uint8_t> in(g.order(), 0);
  for (Element s : c.connection) in[s] = 1;
  std::optional<std::uint64_t> lambda;
  for (Element s : c.connection) {
    // Common neighbours of e and s: S ∩ S s.
    std::uint64_t n = 0;
    for (Element t : c.connection) n += in[g.mul(t, s)];
    if (!lambda) lambda = n;
    else if (n != *lambda) {
      return make_failure("NotEdgeRegular", "edge {e," + std::to_string(s) + "} lies in " + std::to_string(n) +
                                                " triangles, expected " + std::to_string(*lambda),
                          {kIdentity, s, static_cast<std::int64_t>(n)});
    }
  }
  return EdgeRegularParams{g.order(), c.connection.size(), lambda.value_or(0)};
}

Verdict<SrgParams> strongly_regular(const DenseGraph& g) {
  auto er = edge_regular(g);
  if (!er) return er.failure();
  std::optional<std::uint64_t> mu;
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = u + 1; v < g.size(); ++v) {
      if (g.adjacent(u, v)) continue;
      const std::uint64_t c = g.common_neighbours(u, v);
      if (!mu) mu = c;
      else if (c != *mu) {
        return make_failure("NotSrg",
                            "non-adjacent pair {" + std::to_string(u) + "," + std::to_string(v) + "} has " +
                                std::to_string(c) + " common neighbours, expected " + std::to_string(*mu),
                            {u, v, static_cast<std::int64_t>(c)});
      }
    }
  }
  return SrgParams{er->v, er->k, er->lambda, mu.value_or(0)};
}

Verdict<std::uint64_t> clique_nexus(const DenseGraph& g, std::span<const Vertex> clique) {
  std::vector<std::uint8_t> in(g.size(), 0);
  for (Vertex u : clique) {
    if (u >= g.size()) throw InvalidInput("clique vertex out of range");
    in[u] = 1;
  }
  for (std::size_t i = 0; i < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) {
      if (clique[i] != clique[j] && !g.adjacent(clique[i], clique[j])) {
        return make_failure("NotAClique", "vertices " + std::to_string(clique[i]) + " and " +
                                              std::to_string(clique[j]) + " are not adjacent",
                            {clique[i], clique[j]});
      }
    }
  }
  std::optional<std::uint64_t> m;
  for (Vertex u = 0; u < g.size(); ++u) {
    if (in[u]) continue;
    std::uint64_t c = 0;
    for (Vertex w : clique) c += g.adjacent(u, w);
    if (!m) m = c;
    if (c != *m || c == 0) {
      return make_failure("NotRegularClique",
                          "vertex " + std::to_string(u) + " has " + std::to_string(c) + " neighbours in the clique",
                          {u, static_cast<std::int64_t>(c)});
    }
  }
  if (!m) return make_failure("NoOutsideVertex", "the clique contains every vertex");
  return *m;
}

Verdict<std::uint64_t> coset_spread_nexus(const CayleyGraph& c, const Subgroup& h) {
  const FiniteGroup& g = c.group;
  if (!h.parent().same_table(g)) throw InvalidInput("subgroup belongs to a different group");
  if (h.order() == g.order()) return make_failure("SubgroupIsWhole", "H = G leaves no coset outside H");
  std::vector<std::uint8_t> in(g.order(), 0);
  for (Element s : c.connection) in[s] = 1;
  for (Element x : h.members()) {
    if (x != kIdentity && !in[x]) {
      return make_failure("HNotClique", "element " + std::to_string(x) + " of H is not in S", {x});
    }
  }

  // Route 1: |S ∩ Hg| over the cosets Hg != H, read off the connection set.
  const auto cd = right_cosets(h);
  std::optional<std::uint64_t> m;
  for (std::size_t i = 1; i < cd.cosets.size(); ++i) {
    std::uint64_t cnt = 0;
    for (Element x : cd.cosets[i]) cnt += in[x];
    if (!m) m = cnt;
    if (cnt != *m || cnt == 0) {
      // g^-1 has |S ∩ Hg| neighbours in H.
      const Element w = g.inv(cd.reps[i]);
      return make_failure("NotRegularClique",
                          "vertex " + std::to_string(w) + " has " + std::to_string(cnt) + " neighbours in H",
                          {w, static_cast<std::int64_t>(cnt)});
    }
  }

  // Route 2: every coset on the materialized graph.
  const DenseGraph dg = materialize(c);
  for (const auto& coset : cd.cosets) {
    auto r = clique_nexus(dg, coset);
    if (!r || *r != *m) throw Error("Internal", "coset nexus routes disagree");
  }
  return *m;
}

namespace {

std::vector<std::int32_t> bfs(const DenseGraph& g, Vertex root) {
  std::vector<std::int32_t> dist(g.size(), -1);
  std::vector<Vertex> queue{root};
  dist[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbours(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

Verdict<DistanceRegularInfo> distance_regular(const DenseGraph& g) {
  const std::size_t v = g.size();
  if (v == 0) return make_failure("NotConnected", "empty graph");
  std::vector<std::vector<Vertex>> adj(v);
  for (Vertex u = 0; u < v; ++u) adj[u] = g.neighbours(u);

  DistanceRegularInfo info;
  std::vector<std::vector<std::int32_t>> dists(v);
  for (Vertex root = 0; root < v; ++root) {
    auto dist = bfs(g, root);
    std::int32_t diam = 0;
    for (Vertex u = 0; u < v; ++u) {
      if (dist[u] < 0) return make_failure("NotConnected", "vertex " + std::to_string(u) + " is unreachable", {root, u});
      diam = std::max(diam, dist[u]);
    }
    std::vector<std::int64_t> b(static_cast<std::size_t>(diam) + 1, -1), c(static_cast<std::size_t>(diam) + 1, -1);
    for (Vertex u = 0; u < v; ++u) {
      const std::int32_t d = dist[u];
      std::int64_t up = 0, down = 0;
      for (Vertex w : adj[u]) {
        up += dist[w] == d - 1;
        down += dist[w] == d + 1;
      }
      auto& bi = b[static_cast<std::size_t>(d)];
      auto& ci = c[static_cast<std::size_t>(d)];
      if (bi < 0) bi = down, ci = up;
      if (bi != down || ci != up) {
        return make_failure("NotDistanceRegular",
                            "vertex " + std::to_string(u) + " at distance " + std::to_string(d) + " from " +
                                std::to_string(root) + " breaks the intersection numbers",
                            {root, u, d});
      }
    }
    std::vector<std::uint64_t> bs(b.begin(), b.end() - 1), cs(c.begin() + 1, c.end());
    if (root == 0) {
      info.b = bs;
      info.c = cs;
      info.diameter = static_cast<std::size_t>(diam);
    } else if (bs != info.b || cs != info.c) {
      return make_failure("NotDistanceRegular", "intersection numbers depend on the root " + std::to_string(root),
                          {root, root, 0});
    }
    dists[root] = std::move(dist);
  }

  // Antipodal: the sets {u} ∪ {w : d(u,w) = D} partition the vertices.
  const auto d = static_cast<std::int32_t>(info.diameter);
  info.antipodal = info.diameter >= 2;
  std::size_t cls = 0;
  for (Vertex u = 0; u < v && info.antipodal; ++u) {
    std::size_t size = 1;
    for (Vertex w = 0; w < v; ++w) {
      if (dists[u][w] != d) continue;
      ++size;
      for (Vertex x = 0; x < v; ++x) {
        if (x == w) continue;
        const bool ux = x == u || dists[u][x] == d;
        const bool wx = dists[w][x] == d;
        if (ux != wx) {
          info.antipodal = false;
          break;
        }
      }
      if (!info.antipodal) break;
    }
    if (u == 0) cls = size;
    else if (size != cls) info.antipodal = false;
  }
  info.antipodal_class_size = info.antipodal ? cls : 0;
  return info;
}

bool distance_classes_are_cosets(const CayleyGraph& c, const Subgroup& n, std::size_t distance) {
  const FiniteGroup& g = c.group;
  const DenseGraph dg = materialize(c);
  for (Element g1 = 0; g1 < g.order(); ++g1) {
    const auto dist = bfs(dg, g1);
    std::vector<std::uint8_t> coset(g.order(), 0);
    for (Element x : n.members()) coset[g.mul(x, g1)] = 1;
    for (Element g2 = 0; g2 < g.order(); ++g2) {
      if (g2 == g1) continue;
      const bool far = dist[g2] == static_cast<std::int32_t>(distance);
      if (far != static_cast<bool>(coset[g2])) return false;
    }
  }
  return true;
}

Verdict<NeumaierReport> strictly_neumaier_check(const CayleyGraph& c, const Subgroup& h) {
  auto stage = [](const char* name, const Failure& f) {
    return Failure{f.code, std::string(name) + ": " + f.detail, f.witness};
  };
  const std::size_t v = c.group.order();
  if (c.connection.size() + 1 == v) return make_failure("NonComplete", "non-completeness: the graph is complete");
  const DenseGraph dg = materialize(c);
  auto er = edge_regular(dg);
  if (!er) return stage("edge_regular", er.failure());
  auto m = coset_spread_nexus(c, h);
  if (!m) return stage("coset_spread_nexus", m.failure());

  NeumaierReport rep;
  rep.params = NeumaierParams{er->v, er->k, er->lambda, *m, h.order()};
  auto srg = strongly_regular(dg);
  if (srg) rep.srg = *srg;
  rep.strict = !srg.ok();
  return rep;
}

}  // namespace neumaier
