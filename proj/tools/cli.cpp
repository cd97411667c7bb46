#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "neumaier/canonical.hpp"
#include "neumaier/catalog.hpp"
#include "neumaier/constructions.hpp"
#include "neumaier/enumeration.hpp"
#include "neumaier/gf2.hpp"
#include "neumaier/graph_io.hpp"
#include "neumaier/rds.hpp"
#include "neumaier/serialize.hpp"

namespace neumaier::cli {

namespace {

std::uint32_t parse_number(const std::string& tok, const char* what) {
  std::uint32_t x = 0;
  const auto* end = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(tok.data(), end, x);
  if (tok.empty() || ec != std::errc() || p != end) throw ParseError(std::string(what) + ": bad number '" + tok + "'");
  return x;
}

std::vector<Element> parse_elements(const std::string& text) {
  std::vector<Element> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(parse_number(tok, "element list"));
  return out;
}

// "1,2,3,v": field-element slopes, "v" for the vertical line.
std::vector<std::optional<std::uint32_t>> parse_slopes(const std::string& text) {
  std::vector<std::optional<std::uint32_t>> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok == "v" || tok == "vertical") out.push_back(std::nullopt);
    else out.push_back(parse_number(tok, "slopes"));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json parse_json(const std::string& text, const std::string& where) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
}

// A single JSON document, or JSON lines.
std::vector<nlohmann::json> read_records(const std::string& path) {
  const std::string text = read_file(path);
  if (nlohmann::json::accept(text)) return {nlohmann::json::parse(text)};
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_json(line, path + ":" + std::to_string(n)));
  }
  return out;
}

void write_to(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw InvalidInput("cannot write " + path);
  f << text;
}

// bent:N (Maiorana-McFarland on N variables), hex:N:HEX, or an RDS file.
RelativeDifferenceSet rds_arg(const std::string& spec) {
  if (spec.rfind("bent:", 0) == 0) {
    const std::uint32_t n = parse_number(spec.substr(5), "--rds");
    if (n == 0 || n % 2 != 0) throw InvalidInput("bent:N needs an even number of variables N");
    return bent_rds(gf2::maiorana_mcfarland(n / 2));
  }
  if (spec.rfind("hex:", 0) == 0) return bent_rds(gf2::from_hex(spec.substr(4)));
  const RdsInput in = rds_from_json(parse_json(read_file(spec), spec));
  return make_rds(in.forbidden, in.members);
}

struct OutputOptions {
  std::string out;
  std::string graph6;
  bool certificate = false;
};

int finish_construct(Json report, const CayleyGraph& graph, bool lemmas_ok, bool neumaier, const OutputOptions& o,
                     std::ostream& out, std::ostream& err) {
  if (o.certificate) report["certificate"] = graph_certificate(graph.group, graph.connection, default_node_budget(5'000'000));
  write_to(o.out, report.dump(2) + "\n", out);
  if (!o.graph6.empty()) write_to(o.graph6, to_graph6(materialize(graph)) + "\n", out);
  if (!lemmas_ok) {
    err << "verification mismatch (please report):\n";
    for (const auto& p : report["problems"]) err << "  " << p.get<std::string>() << "\n";
    return kInternal;
  }
  if (!neumaier) {
    err << "the constructed graph is not Neumaier (consistent with the lemmas)\n";
    return kVerifiedFalse;
  }
  return kOk;
}

void add_output_flags(CLI::App* c, OutputOptions& o) {
  c->add_option("--out", o.out, "Report file (default stdout)");
  c->add_option("--graph6", o.graph6, "Also write the graph in graph6 format");
  c->add_flag("--certificate", o.certificate, "Include the canonical certificate");
}

std::string clock_now() {
  if (const char* s = std::getenv("SOURCE_DATE_EPOCH")) {
    const std::time_t t = static_cast<std::time_t>(std::strtoll(s, nullptr, 10));
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
  }
  return utc_now();
}

// --- verify -------------------------------------------------------------

int verify_rds_file(const nlohmann::json& j, std::ostream& out) {
  const RdsInput in = rds_from_json(j);
  const auto v = verify_rds(in.forbidden, in.members);
  Json report{{"kind", "rds"}};
  int code = kOk;
  if (!v) {
    report["verdict"] = "not-rds";
    report["failure"] = failure_to_json(v.failure());
    code = kVerifiedFalse;
  } else {
    const RelativeDifferenceSet r{in.forbidden, in.members, *v, {}};
    const RdsFlags flags = classify_rds(r);
    report["verdict"] = "rds";
    report["params"] = Json{{"m", v->m}, {"n", v->n}, {"k", v->k}, {"lambda", v->lambda}};
    report["flags"] = Json{{"reversible", flags.reversible},
                           {"semiregular", flags.semiregular},
                           {"transversal", flags.transversal}};
    if (in.params && !(*in.params == *v)) {
      report["verdict"] = "params-mismatch";
      code = kVerifiedFalse;
    }
    if (in.flags && !(*in.flags == flags)) {
      report["verdict"] = "flags-mismatch";
      code = kVerifiedFalse;
    }
  }
  out << report.dump(2) << "\n";
  return code;
}

int verify_instance(const nlohmann::json& j, std::ostream& out, std::ostream& err) {
  const CayleyInstance inst = instance_from_json(j);
  Json report{{"kind", "cayley"}};
  if (!inst.subgroup) {
    const DenseGraph d = materialize(make_cayley_graph(inst.group, inst.connection));
    const auto er = edge_regular(d);
    report["edge_regular"] = er ? edge_regular_to_json(*er) : Json{{"failure", failure_to_json(er.failure())}};
    const auto srg = strongly_regular(d);
    report["srg"] = srg ? srg_to_json(*srg) : Json(nullptr);
    report["verdict"] = er ? "edge-regular" : "not-edge-regular";
    out << report.dump(2) << "\n";
    return er ? kOk : kVerifiedFalse;
  }
  Theorem1Report t1;
  try {
    t1 = theorem1_check(*inst.subgroup, inst.connection);
  } catch (const PreconditionViolated& p) {
    report["verdict"] = "not-neumaier";
    report["first_failure"] = "precondition:" + p.which();
    report["detail"] = p.what();
    out << report.dump(2) << "\n";
    return kVerifiedFalse;
  }
  report["theorem1"] = theorem1_to_json(t1);
  const auto graph = strictly_neumaier_check(make_cayley_graph(inst.group, inst.connection), *inst.subgroup);
  report["graph"] = neumaier_verdict_to_json(graph);
  const bool agree = t1.derived.has_value() == graph.ok() && (!graph || *t1.derived == graph->params);
  report["agree"] = agree;
  int code = graph ? kOk : kVerifiedFalse;
  report["verdict"] = graph ? (graph->strict ? "strictly-neumaier" : "neumaier") : "not-neumaier";
  report["first_failure"] = t1.first_failure();
  if (graph && inst.params && !(*inst.params == graph->params)) {
    report["verdict"] = "params-mismatch";
    report["first_failure"] = "params";
    code = kVerifiedFalse;
  }
  if (!agree) {
    err << "theorem 1 and the graph-level check disagree (please report)\n";
    code = kInternal;
  }
  out << report.dump(2) << "\n";
  return code;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  const auto j = parse_json(read_file(path), path);
  if (j.is_object() && j.contains("forbidden") && j.contains("members")) return verify_rds_file(j, out);
  if (j.is_object() && j.contains("connection_set")) return verify_instance(j, out, err);
  throw ParseError(path + ": neither an RDS nor a Cayley graph instance");
}

// --- enumerate ------------------------------------------------------------

struct EnumerateArgs {
  std::string group;
  std::string params;
  std::optional<std::uint64_t> subgroup_order;
  std::string subgroup;
  unsigned jobs = 1;
  std::optional<std::uint64_t> budget;
  std::string checkpoint;
  bool oracle = false;
  bool strong = false;
  bool no_dedupe = false;
  std::string out;
};

std::set<std::string> certificates(const SweepResult& r) {
  std::set<std::string> out;
  for (const auto& c : r.classes) out.insert(c.certificate);
  return out;
}

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
  const FiniteGroup g = make_group(a.group);
  const NeumaierParams target = parse_params(a.params);
  if (a.subgroup_order && *a.subgroup_order != target.s) {
    throw InvalidInput("InfeasibleParameters", "--subgroup-order must equal s");
  }
  EnumerationOptions opt;
  opt.jobs = a.jobs;
  if (a.budget) opt.node_budget = *a.budget;
  opt.strong_prune = a.strong;
  opt.dedupe = a.no_dedupe ? DedupeMode::none : DedupeMode::certificate;
  opt.collect_sets = a.no_dedupe;

  std::optional<std::vector<Subgroup>> only;
  if (!a.subgroup.empty()) only = std::vector<Subgroup>{Subgroup(g, make_element_set(g, parse_elements(a.subgroup)))};
  else only = subgroups_up_to_automorphism(g, static_cast<std::size_t>(target.s), opt.automorphism_limits);
  if (only->empty()) throw InvalidInput("InfeasibleParameters", a.group + " has no subgroup of order " + std::to_string(target.s));
  const std::size_t nsub = only->size();

  std::size_t index = 0;
  auto run = [&](const EnumerationTask& task) {
    EnumerationTask t = task;
    if (!a.checkpoint.empty()) t.options.checkpoint = nsub == 1 ? a.checkpoint : a.checkpoint + ".h" + std::to_string(index);
    ++index;
    return enumerate(t);
  };
  const auto subs = *only;
  const SweepResult sweep = enumerate_sweep(g, target, opt, run, std::move(only));

  std::string text;
  if (opt.dedupe == DedupeMode::certificate) {
    for (const auto& c : sweep.classes) text += census_record(c, target).dump() + "\n";
  } else {
    for (std::size_t i = 0; i < sweep.per_subgroup.size(); ++i) {
      for (const auto& t : sweep.per_subgroup[i].connection_sets) {
        Json rec{{"params", params_to_json(target)}, {"group", g.descriptor()},
                 {"subgroup", sweep.subgroups[i].members()}, {"t", t}};
        text += rec.dump() + "\n";
      }
    }
  }
  Json summary = sweep_summary(sweep, target);
  int code = sweep.exhaustive ? kOk : kBudget;

  if (a.oracle) {
    EnumerationOptions bopt = opt;
    bopt.dedupe = DedupeMode::certificate;
    try {
      const SweepResult brute = enumerate_sweep(g, target, bopt, brute_enumerate, subs);
      const bool agree = certificates(brute) == certificates(sweep);
      summary["oracle"] = agree ? "agree" : "disagree";
      err << "oracle: " << (agree ? "agree" : "DISAGREE") << " (" << brute.classes.size() << " classes)\n";
      if (!agree) code = kInternal;
    } catch (const SearchSpaceTooLarge& e) {
      summary["oracle"] = "infeasible";
      err << "oracle: infeasible: " << e.what() << "\n";
      if (code == kOk) code = kBudget;
    }
  }
  text += summary.dump() + "\n";
  write_to(a.out, text, out);
  err << sweep.classes.size() << " classes (" << sweep.strict_count << " strictly Neumaier, " << sweep.pair_class_count
      << " graph-spread pairs) over " << sweep.subgroups.size() << " subgroup(s)"
      << (sweep.exhaustive ? "" : "; NOT exhaustive: node budget exhausted") << "\n";
  return code;
}

// --- catalog --------------------------------------------------------------

struct CatalogArgs {
  std::string dir;
  std::vector<std::string> files;
  std::string provenance;
  bool lenient = false;
  std::string format = "jsonl";
  std::string out;
  std::string input;
};

int catalog_add(Catalog& cat, const CatalogArgs& a, std::ostream& out) {
  std::size_t added = 0;
  for (const auto& f : a.files) {
    for (const auto& rec : read_records(f)) {
      if (rec.is_object() && rec.value("summary", false)) continue;
      CayleyInstance inst = instance_from_json(rec);
      if (!a.provenance.empty()) inst.provenance = a.provenance;
      const auto e = cat.add(inst);
      out << e.id.substr(0, 16) << "... multiplicity " << e.multiplicity << "\n";
      ++added;
    }
  }
  out << added << " record(s) added\n";
  return kOk;
}

int catalog_list(Catalog& cat, const CatalogArgs& a, std::ostream& out) {
  for (const auto& e : cat.load(a.lenient ? LoadMode::lenient : LoadMode::strict)) {
    const auto& p = e.params;
    out << cat.path_for(e.id).stem().string() << "  (" << p.v << "," << p.k << "," << p.lambda << "," << p.m << ","
        << p.s << ")  " << (e.group.is_string() ? e.group.get<std::string>() : std::string("custom")) << "  x"
        << e.multiplicity << "  ";
    for (std::size_t i = 0; i < e.provenance.size(); ++i) out << (i ? "," : "") << e.provenance[i];
    if (e.flagged) out << "  FLAGGED: " << *e.flagged;
    out << "\n";
  }
  return kOk;
}

int cmd_catalog(const std::string& sub, const CatalogArgs& a, std::ostream& out) {
  Catalog cat(a.dir);
  cat.set_clock(clock_now);
  if (sub == "add") return catalog_add(cat, a, out);
  if (sub == "list") return catalog_list(cat, a, out);
  if (sub == "dedupe") {
    out << cat.dedupe() << " entries merged\n";
    return kOk;
  }
  if (sub == "export") {
    if (a.format == "jsonl") write_to(a.out, cat.export_jsonl(), out);
    else if (a.format == "graph6") write_to(a.out, cat.export_graph6(), out);
    else throw InvalidInput("--format must be jsonl or graph6");
    return kOk;
  }
  if (sub == "import") {
    out << cat.import_jsonl(read_file(a.input)) << " entries imported\n";
    return kOk;
  }
  throw InvalidInput("unknown catalog subcommand");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Neumaier Cayley graph constructions, verification and enumeration", "neumaier"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "Build and verify a known construction");
  construct->require_subcommand(1);
  OutputOptions oo;

  std::string c1_rds, c1_u = "C1";
  auto* c1 = construct->add_subcommand("construction1", "Cay(G x U, T^# u H^#) from a reversible semiregular RDS");
  c1->add_option("--rds", c1_rds, "bent:N, hex:N:HEX or an RDS JSON file")->required();
  c1->add_option("--U", c1_u, "Group U of order lambda/n");
  add_output_flags(c1, oo);

  std::string c2_a, c2_a0, c2_h0, c2_s0, c2_rds;
  auto* c2 = construct->add_subcommand("construction2", "Cay(A x H, (A\\A0)T u S0 C u {c})");
  c2->add_option("--A", c2_a, "Abelian group A")->required();
  c2->add_option("--A0", c2_a0, "Index-2 subgroup of A as element list (default: elementary index-2 subgroup)");
  c2->add_option("--H0", c2_h0, "Abelian group H0")->required();
  c2->add_option("--S0", c2_s0, "Connection set of Gamma0, indices of A x H0")->required();
  c2->add_option("--rds", c2_rds, "RSRDS in H0 x C2: bent:N, hex:N:HEX or a file")->required();
  add_output_flags(c2, oo);

  unsigned t2_n = 0;
  std::string t2_a, t2_slopes, t2_bent;
  auto* t2 = construct->add_subcommand("theorem2", "The strictly Neumaier graphs of Theorem 2");
  t2->add_option("--n", t2_n, "Even n")->required();
  t2->add_option("--A", t2_a, "Abelian group of order 2^(n+1) (default C2^(n+1))");
  t2->add_option("--slopes", t2_slopes, "Spread slopes, e.g. 1,2,v");
  t2->add_option("--bent", t2_bent, "Bent function N:HEX on n variables");
  add_output_flags(t2, oo);

  unsigned ps_n = 0;
  std::string ps_slopes;
  auto* ps = construct->add_subcommand("partial-spread-srg", "SRG from 2^(n-1)+1 lines of a spread of GF(2^n)^2");
  ps->add_option("--n", ps_n, "Even n")->required();
  ps->add_option("--slopes", ps_slopes, "Spread slopes, e.g. 1,2,v");
  add_output_flags(ps, oo);

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "Census of Neumaier Cayley graphs with a coset spread");
  en->add_option("--group", ea.group, "Group descriptor, e.g. C2xC8")->required();
  en->add_option("--params", ea.params, "v,k,lambda,m,s")->required();
  en->add_option("--subgroup-order", ea.subgroup_order, "Must equal s");
  en->add_option("--subgroup", ea.subgroup, "Only this subgroup (element list)");
  en->add_option("--jobs", ea.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  en->add_option("--budget", ea.budget, "Search node budget (default NEUMAIER_BUDGET)");
  en->add_option("--checkpoint", ea.checkpoint, "Resumable checkpoint file");
  en->add_flag("--oracle", ea.oracle, "Cross-check against brute force");
  en->add_flag("--strong-prune", ea.strong, "Prune on partial overlap counts");
  en->add_flag("--no-dedupe", ea.no_dedupe, "Print every connection set instead of classes");
  en->add_option("--out", ea.out, "Census file (default stdout)");

  std::string verify_path;
  auto* ve = app.add_subcommand("verify", "Verify a Cayley graph instance, report, catalog entry or RDS file");
  ve->add_option("file", verify_path, "JSON file")->required();

  CatalogArgs ca;
  auto* cat = app.add_subcommand("catalog", "Directory-backed catalog of verified graphs");
  cat->add_option("--dir", ca.dir, "Catalog directory")->required();
  cat->require_subcommand(1);
  auto* cadd = cat->add_subcommand("add", "Add instances, reports or census files");
  cadd->add_option("files", ca.files)->required();
  cadd->add_option("--provenance", ca.provenance, "Override provenance");
  auto* clist = cat->add_subcommand("list", "List entries");
  clist->add_flag("--lenient", ca.lenient, "Flag entries that fail re-verification instead of quarantining");
  cat->add_subcommand("dedupe", "Merge entries with the same certificate");
  auto* cexp = cat->add_subcommand("export", "Export entries");
  cexp->add_option("--format", ca.format, "jsonl or graph6");
  cexp->add_option("--out", ca.out, "Output file (default stdout)");
  auto* cimp = cat->add_subcommand("import", "Import a jsonl export");
  cimp->add_option("file", ca.input)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*c1) {
      const auto r = construction1(rds_arg(c1_rds), make_group(c1_u));
      return finish_construct(construction1_to_json(r), r.graph, r.verified(), r.check.ok(), oo, out, err);
    }
    if (*c2) {
      const FiniteGroup a = make_group(c2_a);
      Construction2Input in{a,
                            c2_a0.empty() ? elementary_index2_subgroup(a)
                                          : Subgroup(a, make_element_set(a, parse_elements(c2_a0))),
                            make_group(c2_h0), parse_elements(c2_s0), rds_arg(c2_rds)};
      const auto r = construction2(in);
      return finish_construct(construction2_to_json(r), r.graph, r.verified(), r.check.ok(), oo, out, err);
    }
    if (*t2) {
      Theorem2Options o;
      if (!t2_slopes.empty()) o.slopes = parse_slopes(t2_slopes);
      if (!t2_bent.empty()) o.bent = gf2::from_hex(t2_bent);
      const std::string a = t2_a.empty() ? "C2^" + std::to_string(t2_n + 1) : t2_a;
      const auto r = theorem2_graph(t2_n, a, o);
      const auto& g = r.construction;
      return finish_construct(theorem2_to_json(r), g.graph, r.verified(), g.check.ok(), oo, out, err);
    }
    if (*ps) {
      const auto r = ps_slopes.empty() ? partial_spread_srg(ps_n)
                                       : partial_spread_srg(gf2::spread_family(ps_n, parse_slopes(ps_slopes)));
      return finish_construct(partial_spread_to_json(r), r.graph, r.verified(), r.srg.ok(), oo, out, err);
    }
    if (*en) return cmd_enumerate(ea, out, err);
    if (*ve) return cmd_verify(verify_path, out, err);
    if (*cat) {
      for (const auto* sub : cat->get_subcommands()) return cmd_catalog(sub->get_name(), ca, out);
    }
  } catch (const CatalogCorrupt& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& q : e.quarantined()) err << "  quarantined " << q << "\n";
    return kBadInput;
  } catch (const InvalidInput& e) {
    err << "error: " << e.code() << ": " << e.what() << "\n";
    return e.code() == "NotNeumaier" ? kVerifiedFalse : kBadInput;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const SearchSpaceTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kBadInput;
}

}  // namespace neumaier::cli
