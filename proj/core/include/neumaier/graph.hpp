#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "neumaier/errors.hpp"
#include "neumaier/group.hpp"

namespace neumaier {

using Vertex = std::uint32_t;

inline constexpr std::size_t kMaxGraphOrder = 1024;

// Simple undirected graph with one bitset row per vertex.
class DenseGraph {
 public:
  DenseGraph() = default;
  explicit DenseGraph(std::size_t vcount);

  std::size_t size() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  std::span<const std::uint64_t> row(Vertex u) const noexcept { return {bits_.data() + u * words_, words_}; }

  // Throws InvalidInput on loops or out-of-range vertices.
  void add_edge(Vertex u, Vertex v);

  std::size_t degree(Vertex u) const noexcept;
  std::size_t common_neighbours(Vertex u, Vertex v) const noexcept;
  std::vector<Vertex> neighbours(Vertex u) const;
  std::size_t edge_count() const noexcept;

  // Graph with vertex u renamed to perm[u].
  DenseGraph relabeled(std::span<const Vertex> perm) const;

  bool operator==(const DenseGraph&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

DenseGraph complete_graph(std::size_t n);
DenseGraph cycle_graph(std::size_t n);

// Cay(G, S): g ~ h iff h g^-1 in S.
struct CayleyGraph {
  FiniteGroup group;
  ElementSet connection;
};

// Validates S; throws InvalidInput with code IdentityInConnectionSet or
// NotInverseClosed (the message names the witness).
CayleyGraph make_cayley_graph(const FiniteGroup& g, std::vector<Element> s);

// Vertex g has neighbourhood S g.
DenseGraph materialize(const CayleyGraph& c);

struct EdgeRegularParams {
  std::uint64_t v = 0, k = 0, lambda = 0;
  bool operator==(const EdgeRegularParams&) const = default;
};

struct SrgParams {
  std::uint64_t v = 0, k = 0, lambda = 0, mu = 0;
  bool operator==(const SrgParams&) const = default;
};

// (v, k, lambda, m, s).
struct NeumaierParams {
  std::uint64_t v = 0, k = 0, lambda = 0, m = 0, s = 0;
  bool operator==(const NeumaierParams&) const = default;
};

// Exhaustive over all edges. Failures: NotRegular (vertex, degree),
// NotEdgeRegular (u, v, count).
Verdict<EdgeRegularParams> edge_regular(const DenseGraph& g);

// Fast path for Cayley graphs: only the edges at the identity are counted.
Verdict<EdgeRegularParams> edge_regular_cayley(const CayleyGraph& c);

// Failures as edge_regular, plus NotSrg (u, v, count) for a non-adjacent
// pair whose count differs. A complete graph reports mu = 0.
Verdict<SrgParams> strongly_regular(const DenseGraph& g);

// Failures: NotAClique (u, v), NoOutsideVertex, NotRegularClique (vertex,
// count), including the case of a common count of zero.
Verdict<std::uint64_t> clique_nexus(const DenseGraph& g, std::span<const Vertex> clique);

// Nexus of the spread of right cosets of h. The group-ring count at H and
// the exhaustive check of every coset on the materialized graph are both
// run; they must agree. Failures: SubgroupIsWhole, HNotClique,
// NotRegularClique.
Verdict<std::uint64_t> coset_spread_nexus(const CayleyGraph& c, const Subgroup& h);

struct DistanceRegularInfo {
  // b = {b_0, ..., b_{d-1}}, c = {c_1, ..., c_d}.
  std::vector<std::uint64_t> b;
  std::vector<std::uint64_t> c;
  std::size_t diameter = 0;
  // "at distance 0 or d" is an equivalence relation.
  bool antipodal = false;
  std::size_t antipodal_class_size = 0;
};

// BFS distance partition from every vertex. Failures: NotConnected,
// NotDistanceRegular (root vertex, vertex, distance).
Verdict<DistanceRegularInfo> distance_regular(const DenseGraph& g);

// dist(g1, g2) == distance iff g2 in N g1 \ {g1}, checked from every vertex.
bool distance_classes_are_cosets(const CayleyGraph& c, const Subgroup& n, std::size_t distance);

struct NeumaierReport {
  NeumaierParams params;
  std::optional<SrgParams> srg;
  // Neumaier and not strongly regular.
  bool strict = false;
};

// Edge-regularity, the coset spread of h, non-completeness and strong
// regularity combined. Component failures keep their code; the detail is
// prefixed with the failing stage. Non-completeness failure: NonComplete.
Verdict<NeumaierReport> strictly_neumaier_check(const CayleyGraph& c, const Subgroup& h);

}  // namespace neumaier
