#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "neumaier/errors.hpp"
#include "neumaier/gf2.hpp"
#include "neumaier/group.hpp"

namespace neumaier {

// (m, n, k, lambda) with m = |G:N|, n = |N|, k = |T|.
struct RdsParams {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t lambda = 0;

  bool operator==(const RdsParams&) const = default;
};

struct RdsFlags {
  bool reversible = false;
  bool semiregular = false;
  bool transversal = false;

  bool operator==(const RdsFlags&) const = default;
};

struct RelativeDifferenceSet {
  Subgroup forbidden;
  ElementSet members;
  RdsParams params;
  RdsFlags flags;

  const FiniteGroup& group() const noexcept { return forbidden.parent(); }
};

// Checks T T^(-1) = k e + lambda (G - N) by convolution in ZG.
// Failure codes: NotNormal, NoElementOutsideN, NotRds (witness: element,
// coefficient).
Verdict<RdsParams> verify_rds(const Subgroup& n, std::span<const Element> t);

// Flags by definition. Semiregular sets are also checked against k = m =
// lambda n and the transversal property; a mismatch throws Error("Internal").
RdsFlags classify_rds(const RelativeDifferenceSet& r);

// Verifies and classifies; throws InvalidInput with the failure code.
RelativeDifferenceSet make_rds(const Subgroup& n, std::vector<Element> t);

// T = {(x, f(x) + f(0))} in C2^(arity+1), forbidden subgroup the last
// coordinate. Element (x, b) has index 2x + b. Adding f(0) puts the
// identity in T. Throws InvalidInput("NotBent").
RelativeDifferenceSet bent_rds(const gf2::BooleanFunction& f);

struct RdsSearchOptions {
  bool reversible = false;
  // Restricts the search to transversals of N (one element per coset).
  bool semiregular = false;
  bool first_only = false;
  std::uint64_t cap = 50'000'000;
  std::uint64_t node_budget = default_node_budget();
};

// All k-subsets T with verify_rds(n, T) == (.., .., k, lambda), sorted
// lexicographically. Throws SearchSpaceTooLarge when the unrestricted
// (or transversal) search space exceeds options.cap.
std::vector<ElementSet> search_rds(const Subgroup& n, std::size_t k, std::uint64_t lambda,
                                   const RdsSearchOptions& options = {});

// Known RSRDS families. Only the elementary abelian bent route is
// constructible here; the rest are accepted for verification only.
struct RdsFamily {
  std::string group;
  std::string params;
  std::string comment;
  bool construct = false;
};
const std::vector<RdsFamily>& rds_families();

}  // namespace neumaier
