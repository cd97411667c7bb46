#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "neumaier/constructions.hpp"
#include "neumaier/enumeration.hpp"
#include "neumaier/graph.hpp"
#include "neumaier/group.hpp"
#include "neumaier/rds.hpp"

namespace neumaier {

using Json = nlohmann::ordered_json;

// {descriptor, order, mul (row-major), labels}.
Json group_to_json(const FiniteGroup& g);
// Accepts the object form or a bare descriptor string. Throws ParseError.
FiniteGroup group_from_json(const nlohmann::json& j);
// The descriptor alone when make_group rebuilds the same table, else the
// full object.
Json group_ref(const FiniteGroup& g);

Json params_to_json(const NeumaierParams& p);
// {v, k, lambda, m, s} or [v, k, lambda, m, s].
NeumaierParams params_from_json(const nlohmann::json& j);
// "v,k,lambda,m,s"
NeumaierParams parse_params(const std::string& text);

Json srg_to_json(const SrgParams& p);
Json edge_regular_to_json(const EdgeRegularParams& p);
Json failure_to_json(const Failure& f);
Json neumaier_verdict_to_json(const Verdict<NeumaierReport>& v);
Json theorem1_to_json(const Theorem1Report& r);

// {group, forbidden, members, params {m, n, k, lambda}, flags}.
Json rds_to_json(const RelativeDifferenceSet& r);

// An RDS file as read, before verification.
struct RdsInput {
  Subgroup forbidden;
  ElementSet members;
  std::optional<RdsParams> params;
  std::optional<RdsFlags> flags;
};
RdsInput rds_from_json(const nlohmann::json& j);

// A Cayley graph Cay(G, S) with an optional coset spread subgroup H.
struct CayleyInstance {
  FiniteGroup group;
  std::optional<Subgroup> subgroup;
  ElementSet connection;
  std::optional<NeumaierParams> params;
  std::string provenance;
};
// {group, subgroup, connection_set, params, provenance}; absent optionals
// are omitted.
Json instance_to_json(const CayleyInstance& c);
CayleyInstance instance_from_json(const nlohmann::json& j);

// Construction reports. Each carries the instance fields at top level so a
// report can be fed to `verify` or `catalog add` unchanged.
Json construction1_to_json(const Construction1Result& r);
Json partial_spread_to_json(const PartialSpreadResult& r);
Json construction2_to_json(const Construction2Result& r);
Json theorem2_to_json(const Theorem2Result& r);

// One census line per class, plus a trailing summary line.
Json census_record(const GraphClass& c, const NeumaierParams& params);
Json census_summary(const EnumerationResult& r);
Json sweep_summary(const SweepResult& r, const NeumaierParams& params);

}  // namespace neumaier
