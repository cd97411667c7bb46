#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "neumaier/errors.hpp"
#include "neumaier/gf2.hpp"
#include "neumaier/graph.hpp"
#include "neumaier/group.hpp"
#include "neumaier/rds.hpp"

namespace neumaier {

// Thrown by theorem1_check when S fails one of the theorem's hypotheses.
// which() is one of "identity", "inverse", "subgroup", "proper".
class PreconditionViolated : public InvalidInput {
 public:
  PreconditionViolated(std::string which, const std::string& message)
      : InvalidInput("PreconditionViolated", message), which_(std::move(which)) {}
  const std::string& which() const noexcept { return which_; }

 private:
  std::string which_;
};

struct CorollaryParams {
  bool feasible = false;
  std::uint64_t v = 0, k = 0, lambda = 0;
  std::string reason;
};

// v = ns, k = s-1+(n-1)m, lambda = s-2+(n-1)m(m-1)/(s-1). Infeasible when the
// division is inexact or lambda >= k-1 (complete graph). Throws
// InvalidInput unless n >= 2, s >= 2 and 1 <= m <= s.
CorollaryParams params_from_corollary(std::uint64_t n, std::uint64_t s, std::uint64_t m);

struct ConditionCheck {
  bool holds = false;
  // On failure: the offending element and its observed count.
  std::optional<Element> witness;
  std::optional<std::int64_t> observed;
};

struct Theorem1Report {
  ElementSet t;
  // Condition (1); m is set when every coset outside H meets T equally.
  ConditionCheck cond1;
  std::optional<std::uint64_t> m;
  // lambda solved from the first witness of (2), or of (3) when H is trivial.
  std::optional<std::int64_t> lambda;
  ConditionCheck cond2;
  ConditionCheck cond3;
  bool nexus_positive = false;
  bool non_complete = false;
  // Present iff all of the above hold.
  std::optional<NeumaierParams> derived;

  // "cond1", "cond2", "cond3", "nexus", "complete" or "" when derived is set.
  std::string first_failure() const;
};

Theorem1Report theorem1_check(const Subgroup& h, std::span<const Element> s);

// --- Construction 1 -------------------------------------------------------

struct Construction1Result {
  CayleyGraph graph;
  Subgroup h;
  NeumaierParams expected;
  bool expect_srg = false;
  Verdict<NeumaierReport> check;
  // S^2 has coefficient |S| at e and lambda-2 on S.
  bool ssquare_pattern = false;
  std::vector<std::string> problems;
  bool verified() const { return problems.empty(); }
};

// Gamma = Cay(G x U, T^# ∪ H^#) with H = N x U. t must be an RSRDS with
// parameters (n lambda, n, n lambda, lambda), n | lambda, |U| = lambda / n.
// Throws InvalidInput with code BadRdsParams or WrongUOrder.
Construction1Result construction1(const RelativeDifferenceSet& t, const FiniteGroup& u);

// --- Partial spread SRG -----------------------------------------------------

struct PartialSpreadResult {
  gf2::SpreadFamily spread;
  CayleyGraph graph;
  SrgParams expected;
  Verdict<SrgParams> srg;
  std::vector<std::optional<std::uint64_t>> line_nexus;
  bool avoids_baseline = false;
  // v0 = 4(k0 - lambda0 - 1)
  bool criterion = false;
  std::vector<std::string> problems;
  bool verified() const { return problems.empty(); }
};

// n even, n >= 2; uses 2^(n-1) + 1 spread lines.
PartialSpreadResult partial_spread_srg(unsigned n);
PartialSpreadResult partial_spread_srg(const gf2::SpreadFamily& spread);

// --- Construction 2 ---------------------------------------------------------

// Group layout: G0 = A0 x H0 lives inside A x H0 (= direct_product(a, h0)),
// and G = A x H with H = H0 x C2 has index 2 * x + c for x in A x H0 and
// c in C2. So H is the first 2|H0| indices and c has index 1.
struct Construction2Input {
  FiniteGroup a;
  Subgroup a0;           // index-2 subgroup of a
  FiniteGroup h0;
  ElementSet s0;         // indices of direct_product(a, h0), inside A0 x H0
  RelativeDifferenceSet t;  // RSRDS in direct_product(h0, C2), forbidden {0, 1}
};

struct Construction2Result {
  CayleyGraph graph;
  Subgroup h;
  Element c = 1;
  // Gamma0 = Cay(A0 x H0, S0).
  Verdict<EdgeRegularParams> gamma0;
  std::optional<SrgParams> gamma0_srg;
  std::optional<std::uint64_t> h0_nexus;
  bool criterion = false;
  Verdict<EdgeRegularParams> edge_regular;
  std::optional<std::uint64_t> h_nexus;
  Verdict<NeumaierReport> check;
  std::optional<NeumaierParams> expected;
  std::vector<std::string> problems;
  bool verified() const { return problems.empty(); }
};

// S = (A \ A0) T ∪ S0 C ∪ {c}. Throws InvalidInput naming the violated
// input condition. Lemma mismatches land in problems.
Construction2Result construction2(const Construction2Input& in);

// --- Theorem 2 --------------------------------------------------------------

struct Theorem2Options {
  // Spread lines; empty means the default first 2^(n-1)+1 slopes. The first
  // line becomes H0.
  std::vector<std::optional<std::uint32_t>> slopes;
  // Bent function on n variables; empty means Maiorana-McFarland.
  std::optional<gf2::BooleanFunction> bent;
};

struct Theorem2Result {
  unsigned n = 0;
  Construction2Input input;
  Construction2Result construction;
  NeumaierParams expected;
  std::vector<std::string> problems;
  bool verified() const { return problems.empty() && construction.verified(); }
};

NeumaierParams theorem2_params(unsigned n);

// A0 of index 2 in an abelian group: Omega_1(A) when it has index 2,
// otherwise a hyperplane of an elementary abelian A. Throws InvalidInput.
Subgroup elementary_index2_subgroup(const FiniteGroup& a);

Theorem2Result theorem2_graph(unsigned n, const std::string& a_spec, const Theorem2Options& options = {});

}  // namespace neumaier
