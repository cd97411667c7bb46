#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "neumaier/automorphism.hpp"
#include "neumaier/errors.hpp"
#include "neumaier/graph.hpp"
#include "neumaier/group.hpp"

namespace neumaier {

enum class DedupeMode { none, certificate };

struct EnumerationOptions {
  DedupeMode dedupe = DedupeMode::certificate;
  unsigned jobs = 1;
  std::uint64_t node_budget = default_node_budget();
  bool collect_sets = true;
  // Mid-tree upper bounds on |Tg ∩ T| (off by default, as in the paper).
  bool strong_prune = false;
  // JSON-lines checkpoint; completed T2 seeds are skipped on restart.
  std::string checkpoint;
  std::uint64_t canonical_budget = default_node_budget(5'000'000);
  // Cap on the number of candidate sets brute_enumerate may test.
  std::uint64_t brute_cap = 20'000'000;
  AutomorphismLimits automorphism_limits{};
};

struct EnumerationTask {
  FiniteGroup group;
  Subgroup subgroup;
  NeumaierParams target;
  EnumerationOptions options;
};

// Checks v = |G|, s = |H| < v and that (k, lambda) follow from (n, s, m)
// by the Corollary to Theorem 1; throws InvalidInput("InfeasibleParameters")
// otherwise. m = s (complete graph) is accepted and enumerates nothing.
EnumerationTask make_task(const FiniteGroup& g, const Subgroup& h, const NeumaierParams& target,
                          EnumerationOptions options = {});

struct GraphClass {
  std::string certificate;
  // Representative connection set S = H^# ∪ T and its subgroup H.
  ElementSet connection;
  ElementSet subgroup;
  std::string group;
  std::uint64_t multiplicity = 0;
  // Distinct (graph, spread) certificates seen in this class.
  std::vector<std::string> pair_certificates;
  std::optional<SrgParams> srg;
  bool strict = false;
};

struct EnumerationStats {
  std::uint64_t nodes = 0;
  std::uint64_t seeds = 0;
  std::uint64_t seeds_resumed = 0;
  std::uint64_t seeds_skipped_inverse = 0;
  std::uint64_t prune_inverse = 0;
  std::uint64_t prune_cardinality = 0;
  std::uint64_t prune_strong = 0;
  std::uint64_t leaves = 0;
  std::uint64_t leaf_rejects = 0;
  double wall_seconds = 0;
};

struct EnumerationResult {
  NeumaierParams target;
  // T sets (connection set minus H^#) in search order.
  std::vector<ElementSet> connection_sets;
  std::uint64_t raw_count = 0;
  // Sorted by certificate; empty with DedupeMode::none.
  std::vector<GraphClass> classes;
  std::uint64_t pair_class_count = 0;
  std::uint64_t strict_count = 0;
  bool exhaustive = true;
  std::string note;
  EnumerationStats stats;
};

// Algorithm 1 with orbit seeding on the coset Hg2, forced sets, inverse
// consistency and cardinality pruning, and the Theorem 1 leaf filter.
// A node-budget overrun returns the completed seeds with exhaustive = false.
EnumerationResult enumerate(const EnumerationTask& task);

// Every (n-1)m-subset T of G \ H, accepted by graph-level checks only.
// Throws SearchSpaceTooLarge above options.brute_cap.
EnumerationResult brute_enumerate(const EnumerationTask& task);

// Certificate dedupe and strictness for a list of T sets over (G, H).
void classify_sets(const FiniteGroup& g, const Subgroup& h, EnumerationResult& result,
                   const EnumerationOptions& options);

// Canonical certificate of Cay(G, S), and of the pair (Cay(G, S), H-cosets).
std::string graph_certificate(const FiniteGroup& g, const ElementSet& s, std::uint64_t budget);
std::string pair_certificate(const FiniteGroup& g, const Subgroup& h, const ElementSet& s, std::uint64_t budget);

// Subgroups of the given order, one per Aut(G)-class.
std::vector<Subgroup> subgroups_up_to_automorphism(const FiniteGroup& g, std::size_t order,
                                                   const AutomorphismLimits& limits = {});

struct SweepResult {
  std::vector<Subgroup> subgroups;
  std::vector<EnumerationResult> per_subgroup;
  // Classes merged by certificate across subgroups.
  std::vector<GraphClass> classes;
  std::uint64_t pair_class_count = 0;
  std::uint64_t strict_count = 0;
  bool exhaustive = true;
};

// Runs `run` (enumerate or brute_enumerate) over every subgroup of order s
// up to Aut(G)-conjugacy, or over `only` when given, and merges classes.
SweepResult enumerate_sweep(const FiniteGroup& g, const NeumaierParams& target, const EnumerationOptions& options,
                            const std::function<EnumerationResult(const EnumerationTask&)>& run = enumerate,
                            std::optional<std::vector<Subgroup>> only = std::nullopt);

}  // namespace neumaier
