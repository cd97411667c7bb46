#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "neumaier/errors.hpp"
#include "neumaier/graph.hpp"

namespace neumaier {

inline constexpr std::size_t kMaxCanonicalOrder = 256;

struct CanonicalOptions {
  std::uint64_t node_budget = default_node_budget(5'000'000);
  // Vertex colours; the canonical form respects them (vertices are only
  // ever mapped to vertices of the same colour). Empty means uniform.
  std::vector<std::uint32_t> colours;
  // Automorphisms known in advance (perm[u] = image of u), for instance the
  // right translations of a Cayley graph. Each is checked before use.
  std::vector<std::vector<Vertex>> automorphisms;
};

struct CanonicalResult {
  // Vertex u gets canonical position labeling[u].
  std::vector<Vertex> labeling;
  std::string certificate;
  std::uint64_t nodes = 0;
  // Automorphism generators found during the search (known ones included).
  std::vector<std::vector<Vertex>> automorphisms;
};

// Colour refinement plus individualization-refinement; the certificate is
// the smallest permuted adjacency matrix over the explored leaves, as
// lowercase hex (vertex count, colour class sizes, upper triangle bits).
// Throws BudgetExceeded when the node budget runs out.
CanonicalResult canonical_labeling(const DenseGraph& g, const CanonicalOptions& options = {});
std::string canonical_form(const DenseGraph& g, const CanonicalOptions& options = {});

// Right translations x -> x g of Cay(G, S), as vertex permutations.
std::vector<std::vector<Vertex>> right_translations(const FiniteGroup& g);

// An isomorphism a -> b (iso[u] is the image of u), found without computing
// a full canonical form. Throws BudgetExceeded.
std::optional<std::vector<Vertex>> find_isomorphism(const DenseGraph& a, const DenseGraph& b,
                                                    std::uint64_t node_budget = default_node_budget(50'000'000));

}  // namespace neumaier
