#include "neumaier/serialize.hpp"

#include <charconv>
#include <sstream>

namespace neumaier {

namespace {

template <typename T>
T field(const nlohmann::json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string(what) + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": bad field '" + key + "': " + e.what());
  }
}

std::vector<Element> element_list(const nlohmann::json& j, const char* key, const char* what) {
  return field<std::vector<Element>>(j, key, what);
}

Json witness_json(const ConditionCheck& c) {
  Json out{{"holds", c.holds}};
  if (c.witness) out["witness"] = *c.witness;
  if (c.observed) out["observed"] = *c.observed;
  return out;
}

Json optional_nexus(const std::optional<std::uint64_t>& x) { return x ? Json(*x) : Json(nullptr); }

Json instance_fields(const CayleyGraph& g, const Subgroup& h, const std::string& provenance) {
  return Json{{"group", group_ref(g.group)},
              {"subgroup", h.members()},
              {"connection_set", g.connection},
              {"provenance", provenance}};
}

}  // namespace

Json group_to_json(const FiniteGroup& g) {
  return Json{{"descriptor", g.descriptor()},
              {"order", g.order()},
              {"mul", std::vector<Element>(g.table().begin(), g.table().end())},
              {"labels", g.labels()}};
}

FiniteGroup group_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    return make_group(j.get<std::string>());
  }
  const auto desc = field<std::string>(j, "descriptor", "group");
  if (!j.contains("mul")) return make_group(desc);
  const auto order = field<std::size_t>(j, "order", "group");
  auto mul = element_list(j, "mul", "group");
  if (order == 0 || order > kDefaultMaxOrder || mul.size() != order * order) {
    throw ParseError("group: mul must have order^2 entries");
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = field<std::vector<std::string>>(j, "labels", "group");
  for (Element x : mul) {
    if (x >= order) throw ParseError("group: table entry out of range");
  }
  FiniteGroup g(desc, order, std::move(mul), std::move(labels));
  if (!g.check_associativity()) throw ParseError("group: table is not associative");
  return g;
}

Json group_ref(const FiniteGroup& g) {
  try {
    if (make_group(g.descriptor()).same_table(g)) return Json(g.descriptor());
  } catch (const Error&) {
  }
  return group_to_json(g);
}

Json params_to_json(const NeumaierParams& p) {
  return Json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"m", p.m}, {"s", p.s}};
}

NeumaierParams params_from_json(const nlohmann::json& j) {
  if (j.is_array()) {
    if (j.size() != 5) throw ParseError("params: expected [v, k, lambda, m, s]");
    try {
      return NeumaierParams{j[0].get<std::uint64_t>(), j[1].get<std::uint64_t>(), j[2].get<std::uint64_t>(),
                            j[3].get<std::uint64_t>(), j[4].get<std::uint64_t>()};
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("params: ") + e.what());
    }
  }
  return NeumaierParams{field<std::uint64_t>(j, "v", "params"), field<std::uint64_t>(j, "k", "params"),
                        field<std::uint64_t>(j, "lambda", "params"), field<std::uint64_t>(j, "m", "params"),
                        field<std::uint64_t>(j, "s", "params")};
}

NeumaierParams parse_params(const std::string& text) {
  std::vector<std::uint64_t> xs;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::uint64_t x = 0;
    const auto* end = tok.data() + tok.size();
    auto [p, ec] = std::from_chars(tok.data(), end, x);
    if (tok.empty() || ec != std::errc() || p != end) throw ParseError("params: bad number '" + tok + "'");
    xs.push_back(x);
  }
  if (xs.size() != 5) throw ParseError("params: expected v,k,lambda,m,s");
  return NeumaierParams{xs[0], xs[1], xs[2], xs[3], xs[4]};
}

Json srg_to_json(const SrgParams& p) {
  return Json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

Json edge_regular_to_json(const EdgeRegularParams& p) {
  return Json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}};
}

Json failure_to_json(const Failure& f) {
  return Json{{"code", f.code}, {"detail", f.detail}, {"witness", f.witness}};
}

Json neumaier_verdict_to_json(const Verdict<NeumaierReport>& v) {
  if (!v) return Json{{"neumaier", false}, {"failure", failure_to_json(v.failure())}};
  Json out{{"neumaier", true}, {"params", params_to_json(v->params)}};
  out["srg"] = v->srg ? srg_to_json(*v->srg) : Json(nullptr);
  out["strict"] = v->strict;
  return out;
}

Json theorem1_to_json(const Theorem1Report& r) {
  Json out{{"t", r.t}, {"cond1", witness_json(r.cond1)}};
  out["m"] = optional_nexus(r.m);
  out["lambda"] = r.lambda ? Json(*r.lambda) : Json(nullptr);
  out["cond2"] = witness_json(r.cond2);
  out["cond3"] = witness_json(r.cond3);
  out["nexus_positive"] = r.nexus_positive;
  out["non_complete"] = r.non_complete;
  out["derived"] = r.derived ? params_to_json(*r.derived) : Json(nullptr);
  out["first_failure"] = r.first_failure();
  return out;
}

Json rds_to_json(const RelativeDifferenceSet& r) {
  return Json{{"group", group_ref(r.group())},
              {"forbidden", r.forbidden.members()},
              {"members", r.members},
              {"params", Json{{"m", r.params.m}, {"n", r.params.n}, {"k", r.params.k}, {"lambda", r.params.lambda}}},
              {"flags", Json{{"reversible", r.flags.reversible},
                             {"semiregular", r.flags.semiregular},
                             {"transversal", r.flags.transversal}}}};
}

RdsInput rds_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("group")) throw ParseError("rds: missing field 'group'");
  const FiniteGroup g = group_from_json(j.at("group"));
  const ElementSet forbidden = make_element_set(g, element_list(j, "forbidden", "rds"));
  RdsInput out{Subgroup(g, forbidden), make_element_set(g, element_list(j, "members", "rds")), {}, {}};
  if (j.contains("params")) {
    const auto& p = j.at("params");
    out.params = RdsParams{field<std::uint64_t>(p, "m", "rds params"), field<std::uint64_t>(p, "n", "rds params"),
                           field<std::uint64_t>(p, "k", "rds params"),
                           field<std::uint64_t>(p, "lambda", "rds params")};
  }
  if (j.contains("flags")) {
    const auto& f = j.at("flags");
    out.flags = RdsFlags{field<bool>(f, "reversible", "rds flags"), field<bool>(f, "semiregular", "rds flags"),
                         field<bool>(f, "transversal", "rds flags")};
  }
  return out;
}

Json instance_to_json(const CayleyInstance& c) {
  Json out{{"group", group_ref(c.group)}};
  if (c.subgroup) out["subgroup"] = c.subgroup->members();
  out["connection_set"] = c.connection;
  if (c.params) out["params"] = params_to_json(*c.params);
  if (!c.provenance.empty()) out["provenance"] = c.provenance;
  return out;
}

CayleyInstance instance_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("group")) throw ParseError("instance: missing field 'group'");
  FiniteGroup g = group_from_json(j.at("group"));
  CayleyInstance out{g, std::nullopt, {}, std::nullopt, ""};
  // Duplicates are kept so that verification can report them.
  out.connection = element_list(j, "connection_set", "instance");
  for (Element x : out.connection) {
    if (x >= g.order()) throw ParseError("instance: connection element " + std::to_string(x) + " out of range");
  }
  if (j.contains("subgroup")) out.subgroup = Subgroup(g, make_element_set(g, element_list(j, "subgroup", "instance")));
  if (j.contains("params") && !j.at("params").is_null()) out.params = params_from_json(j.at("params"));
  if (j.contains("provenance")) {
    const auto& p = j.at("provenance");
    if (p.is_string()) out.provenance = p.get<std::string>();
    else if (p.is_array() && !p.empty() && p[0].is_string()) out.provenance = p[0].get<std::string>();
  }
  return out;
}

Json construction1_to_json(const Construction1Result& r) {
  Json out{{"construction", "construction1"}};
  out.update(instance_fields(r.graph, r.h, "construction1"));
  out["params"] = params_to_json(r.expected);
  out["expect_srg"] = r.expect_srg;
  out["check"] = neumaier_verdict_to_json(r.check);
  out["ssquare_pattern"] = r.ssquare_pattern;
  out["problems"] = r.problems;
  out["verified"] = r.verified();
  return out;
}

Json partial_spread_to_json(const PartialSpreadResult& r) {
  Json out{{"construction", "partial-spread-srg"}};
  out["group"] = group_ref(r.graph.group);
  out["connection_set"] = r.graph.connection;
  out["provenance"] = "partial-spread-srg";
  Json slopes = Json::array();
  for (const auto& s : r.spread.slopes) slopes.push_back(s ? Json(*s) : Json("vertical"));
  out["spread"] = Json{{"n", r.spread.n}, {"field_poly", r.spread.field.poly()}, {"slopes", slopes},
                       {"lines", r.spread.lines}};
  out["expected"] = srg_to_json(r.expected);
  out["srg"] = r.srg ? srg_to_json(*r.srg) : Json{{"failure", failure_to_json(r.srg.failure())}};
  Json nexus = Json::array();
  for (const auto& x : r.line_nexus) nexus.push_back(optional_nexus(x));
  out["line_nexus"] = nexus;
  out["avoids_baseline"] = r.avoids_baseline;
  out["criterion"] = r.criterion;
  out["problems"] = r.problems;
  out["verified"] = r.verified();
  return out;
}

Json construction2_to_json(const Construction2Result& r) {
  Json out{{"construction", "construction2"}};
  out.update(instance_fields(r.graph, r.h, "construction2"));
  out["params"] = r.expected ? params_to_json(*r.expected) : Json(nullptr);
  out["c"] = r.c;
  out["gamma0"] = r.gamma0 ? edge_regular_to_json(*r.gamma0) : Json{{"failure", failure_to_json(r.gamma0.failure())}};
  out["gamma0_srg"] = r.gamma0_srg ? srg_to_json(*r.gamma0_srg) : Json(nullptr);
  out["h0_nexus"] = optional_nexus(r.h0_nexus);
  out["criterion"] = r.criterion;
  out["edge_regular"] =
      r.edge_regular ? edge_regular_to_json(*r.edge_regular) : Json{{"failure", failure_to_json(r.edge_regular.failure())}};
  out["h_nexus"] = optional_nexus(r.h_nexus);
  out["check"] = neumaier_verdict_to_json(r.check);
  out["problems"] = r.problems;
  out["verified"] = r.verified();
  return out;
}

Json theorem2_to_json(const Theorem2Result& r) {
  Json out{{"construction", "theorem2"}, {"n", r.n}};
  out.update(instance_fields(r.construction.graph, r.construction.h, "theorem2"));
  out["params"] = params_to_json(r.expected);
  out["a"] = r.input.a.descriptor();
  out["a0"] = r.input.a0.members();
  out["h0"] = r.input.h0.descriptor();
  out["s0"] = r.input.s0;
  out["rds"] = rds_to_json(r.input.t);
  out["construction2"] = construction2_to_json(r.construction);
  out["construction2"].erase("group");
  out["construction2"].erase("subgroup");
  out["construction2"].erase("connection_set");
  out["construction2"].erase("provenance");
  out["strict"] = r.construction.check && r.construction.check->strict;
  out["problems"] = r.problems;
  out["verified"] = r.verified();
  return out;
}

Json census_record(const GraphClass& c, const NeumaierParams& params) {
  return Json{{"params", params_to_json(params)},
              {"certificate", c.certificate},
              {"group", c.group},
              {"subgroup", c.subgroup},
              {"connection_set", c.connection},
              {"multiplicity", c.multiplicity},
              {"pair_classes", c.pair_certificates.size()},
              {"srg", c.srg ? srg_to_json(*c.srg) : Json(nullptr)},
              {"strict", c.strict},
              {"provenance", "enumerated"}};
}

namespace {

Json stats_to_json(const EnumerationStats& s) {
  return Json{{"nodes", s.nodes},
              {"seeds", s.seeds},
              {"seeds_resumed", s.seeds_resumed},
              {"seeds_skipped_inverse", s.seeds_skipped_inverse},
              {"prune_inverse", s.prune_inverse},
              {"prune_cardinality", s.prune_cardinality},
              {"prune_strong", s.prune_strong},
              {"leaves", s.leaves},
              {"leaf_rejects", s.leaf_rejects},
              {"wall_seconds", s.wall_seconds}};
}

}  // namespace

Json census_summary(const EnumerationResult& r) {
  Json out{{"summary", true},
           {"params", params_to_json(r.target)},
           {"raw_count", r.raw_count},
           {"classes", r.classes.size()},
           {"pair_classes", r.pair_class_count},
           {"strict", r.strict_count},
           {"exhaustive", r.exhaustive}};
  if (!r.note.empty()) out["note"] = r.note;
  out["stats"] = stats_to_json(r.stats);
  return out;
}

Json sweep_summary(const SweepResult& r, const NeumaierParams& params) {
  Json subs = Json::array();
  for (std::size_t i = 0; i < r.subgroups.size(); ++i) {
    Json one = census_summary(r.per_subgroup.at(i));
    one.erase("summary");
    one.erase("params");
    one["subgroup"] = r.subgroups[i].members();
    subs.push_back(std::move(one));
  }
  return Json{{"summary", true},
              {"params", params_to_json(params)},
              {"subgroups", r.subgroups.size()},
              {"classes", r.classes.size()},
              {"pair_classes", r.pair_class_count},
              {"strict", r.strict_count},
              {"exhaustive", r.exhaustive},
              {"per_subgroup", subs}};
}

}  // namespace neumaier
