#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "neumaier/errors.hpp"
#include "neumaier/group.hpp"

namespace neumaier {

// A group automorphism as a permutation of element indices.
struct Automorphism {
  std::vector<Element> perm;

  Element operator()(Element x) const { return perm[x]; }
  auto operator<=>(const Automorphism&) const = default;
};

struct AutomorphismLimits {
  std::uint64_t node_budget = default_node_budget();
  std::size_t max_order = 128;
};

bool is_automorphism(const FiniteGroup& g, std::span<const Element> perm);
Automorphism identity_automorphism(const FiniteGroup& g);
// (f * g)(x) = f(g(x))
Automorphism compose(const Automorphism& f, const Automorphism& g);
Automorphism inverse(const Automorphism& f);
ElementSet apply(const Automorphism& f, std::span<const Element> xs);

// All automorphisms of g, sorted lexicographically by permutation.
//
// Backtracks over images of a greedy generating sequence; candidate images
// must match the generator's element order and centralizer size. Throws
// BudgetExceeded when the node budget runs out and InvalidInput when the
// group is larger than limits.max_order.
std::vector<Automorphism> automorphism_group(const FiniteGroup& g, const AutomorphismLimits& limits = {});

// {f in auts : f(s) = s}.
std::vector<Automorphism> setwise_stabilizer(std::span<const Automorphism> auts,
                                             std::span<const Element> s);

// One representative per orbit of `stab` on the m-subsets of `coset`; each
// representative is the lexicographic minimum of its orbit and the list is
// in lexicographic order. Every element of `stab` must fix `coset` setwise.
// Throws SearchSpaceTooLarge if C(|coset|, m) exceeds `cap`.
std::vector<ElementSet> msubset_orbit_reps(std::span<const Automorphism> stab,
                                           std::span<const Element> coset, std::size_t m,
                                           std::uint64_t cap = 20'000'000);

// Automorphisms stabilizing the coset H*g2 setwise, one for each distinct
// permutation they induce on H*g2. Computed without listing Aut(G): the
// search fixes images of generators of <H, g2> first (inside H and H*g2)
// and only asks whether each such prefix extends to an automorphism.
std::vector<Automorphism> coset_stabilizer_action(const Subgroup& h, Element g2,
                                                  const AutomorphismLimits& limits = {});

// Some automorphism mapping `from` onto `to`, if one exists.
std::optional<Automorphism> find_automorphism_mapping(const Subgroup& from, const Subgroup& to,
                                                      const AutomorphismLimits& limits = {});

// Greedy generating set of a subgroup (highest element order first).
std::vector<Element> subgroup_generators(const Subgroup& h);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace neumaier
