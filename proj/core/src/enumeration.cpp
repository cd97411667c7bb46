#include "neumaier/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

#include "neumaier/canonical.hpp"
#include "neumaier/constructions.hpp"
#include "neumaier/hash.hpp"

namespace neumaier {

EnumerationTask make_task(const FiniteGroup& g, const Subgroup& h, const NeumaierParams& target,
                          EnumerationOptions options) {
  auto bad = [](const std::string& why) { return InvalidInput("InfeasibleParameters", why); };
  if (!h.parent().same_table(g)) throw InvalidInput("subgroup belongs to a different group");
  if (target.v != g.order()) throw bad("v must equal |G| = " + std::to_string(g.order()));
  if (target.s != h.order()) throw bad("s must equal |H| = " + std::to_string(h.order()));
  if (h.order() == g.order()) throw bad("H must be a proper subgroup");
  if (target.s < 2) throw bad("s must be at least 2");
  const std::uint64_t n = target.v / target.s;
  if (target.m < 1 || target.m > target.s) throw bad("m must lie in [1, s]");
  const std::uint64_t k = target.s - 1 + (n - 1) * target.m;
  const std::uint64_t num = (n - 1) * target.m * (target.m - 1);
  if (target.k != k) throw bad("k must be s-1+(n-1)m = " + std::to_string(k));
  if (num % (target.s - 1) != 0) throw bad("(s-1) does not divide (n-1)m(m-1)");
  if (target.lambda != target.s - 2 + num / (target.s - 1)) throw bad("lambda does not match s-2+(n-1)m(m-1)/(s-1)");
  return EnumerationTask{g, h, target, std::move(options)};
}

namespace {

struct BudgetHit {};

// Depth-first search below one T2 seed. Level j fixes T ∩ Hg_j.
class SeedSearch {
 public:
  SeedSearch(const FiniteGroup& g, const Subgroup& h, const CosetDecomposition& cd, const NeumaierParams& target,
             bool strong, std::atomic<std::uint64_t>& global_nodes, std::uint64_t budget)
      : g_(g), h_(h), cd_(cd), m_(target.m), strong_(strong), global_(global_nodes), budget_(budget),
        a2_(static_cast<std::int64_t>(target.lambda) - static_cast<std::int64_t>(target.s) + 2),
        a3_(static_cast<std::int64_t>(target.lambda) - 2 * static_cast<std::int64_t>(target.m) + 2),
        sel_(g.order(), 0), d_(g.order(), 0) {}

  void run(const ElementSet& seed) {
    for (Element x : seed) add(x);
    if (strong_ && !bounds_ok(1)) {
      ++stats.prune_strong;
    } else {
      dfs(2);
    }
    for (std::size_t i = 0; i < seed.size(); ++i) remove_last();
  }

  std::vector<ElementSet> found;
  EnumerationStats stats;

 private:
  void tick() {
    ++stats.nodes;
    if (global_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) throw BudgetHit{};
  }

  void add(Element x) {
    if (strong_) {
      const Element xi = g_.inv(x);
      for (Element t : t_) {
        ++d_[g_.mul(xi, t)];
        ++d_[g_.mul(g_.inv(t), x)];
      }
    }
    t_.push_back(x);
    sel_[x] = 1;
  }

  void remove_last() {
    const Element x = t_.back();
    t_.pop_back();
    sel_[x] = 0;
    if (strong_) {
      const Element xi = g_.inv(x);
      for (Element t : t_) {
        --d_[g_.mul(xi, t)];
        --d_[g_.mul(g_.inv(t), x)];
      }
    }
  }

  // Upper bounds after cosets 1..done are fixed.
  bool bounds_ok(std::size_t done) const {
    for (Element x : h_.members()) {
      if (x != kIdentity && d_[x] > a2_) return false;
    }
    for (Element x : t_) {
      if (d_[x] > a3_) return false;
    }
    for (std::size_t j = done + 1; j < cd_.cosets.size(); ++j) {
      std::uint64_t forced = 0, avail = 0;
      for (Element x : cd_.cosets[j]) {
        const Element xi = g_.inv(x);
        if (sel_[xi]) {
          if (d_[x] > a3_) return false;
          ++forced;
          ++avail;
        } else if (cd_.coset_of[xi] > done && d_[x] <= a3_) {
          ++avail;
        }
      }
      if (forced > m_ || avail < m_) return false;
    }
    return true;
  }

  bool leaf_ok() const {
    if (strong_) {
      for (Element x : h_.members()) {
        if (x != kIdentity && d_[x] != a2_) return false;
      }
      for (Element x : t_) {
        if (d_[x] != a3_) return false;
      }
      return true;
    }
    auto overlap = [&](Element y) {
      std::int64_t c = 0;
      for (Element x : t_) c += sel_[g_.mul(x, y)];
      return c;
    };
    for (Element x : h_.members()) {
      if (x != kIdentity && overlap(x) != a2_) return false;
    }
    for (Element x : t_) {
      if (overlap(x) != a3_) return false;
    }
    return true;
  }

  void leaf() {
    ++stats.leaves;
    for (Element x : t_) {
      if (!sel_[g_.inv(x)]) {
        ++stats.leaf_rejects;
        return;
      }
    }
    if (!leaf_ok()) {
      ++stats.leaf_rejects;
      return;
    }
    ElementSet t = t_;
    std::sort(t.begin(), t.end());
    found.push_back(std::move(t));
  }

  void dfs(std::size_t j) {
    const std::size_t n = cd_.cosets.size();
    if (j == n) return leaf();
    const auto& coset = cd_.cosets[j];
    std::vector<Element> forced, cands;
    for (Element x : coset) {
      const Element xi = g_.inv(x);
      if (sel_[xi]) forced.push_back(x);
      else if (cd_.coset_of[xi] >= j && (!strong_ || d_[x] <= a3_)) cands.push_back(x);
    }
    if (forced.size() > m_) {
      ++stats.prune_cardinality;
      return;
    }
    const std::size_t r = m_ - forced.size();
    if (cands.size() < r) {
      ++stats.prune_cardinality;
      return;
    }

    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
      tick();
      const std::size_t before = t_.size();
      for (Element x : forced) add(x);
      for (std::size_t i : idx) add(cands[i]);
      // Inverses landing in this coset must be chosen too.
      bool consistent = true;
      for (std::size_t i = before; i < t_.size() && consistent; ++i) {
        const Element xi = g_.inv(t_[i]);
        if (cd_.coset_of[xi] == j && !sel_[xi]) consistent = false;
      }
      if (!consistent) {
        ++stats.prune_inverse;
      } else if (strong_ && !bounds_ok(j)) {
        ++stats.prune_strong;
      } else {
        dfs(j + 1);
      }
      while (t_.size() > before) remove_last();

      // Next r-combination of cands in lexicographic order.
      std::size_t i = r;
      while (i > 0 && idx[i - 1] == cands.size() - r + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t k = i; k < r; ++k) idx[k] = idx[k - 1] + 1;
    }
  }

  const FiniteGroup& g_;
  const Subgroup& h_;
  const CosetDecomposition& cd_;
  std::uint64_t m_;
  bool strong_;
  std::atomic<std::uint64_t>& global_;
  std::uint64_t budget_;
  std::int64_t a2_, a3_;
  std::vector<std::uint8_t> sel_;
  std::vector<std::int64_t> d_;
  std::vector<Element> t_;
};

void add_stats(EnumerationStats& into, const EnumerationStats& s) {
  into.nodes += s.nodes;
  into.prune_inverse += s.prune_inverse;
  into.prune_cardinality += s.prune_cardinality;
  into.prune_strong += s.prune_strong;
  into.leaves += s.leaves;
  into.leaf_rejects += s.leaf_rejects;
}

nlohmann::json stats_json(const EnumerationStats& s) {
  return {{"nodes", s.nodes},
          {"prune_inverse", s.prune_inverse},
          {"prune_cardinality", s.prune_cardinality},
          {"prune_strong", s.prune_strong},
          {"leaves", s.leaves},
          {"leaf_rejects", s.leaf_rejects}};
}

EnumerationStats stats_from_json(const nlohmann::json& j) {
  EnumerationStats s;
  s.nodes = j.value("nodes", 0ULL);
  s.prune_inverse = j.value("prune_inverse", 0ULL);
  s.prune_cardinality = j.value("prune_cardinality", 0ULL);
  s.prune_strong = j.value("prune_strong", 0ULL);
  s.leaves = j.value("leaves", 0ULL);
  s.leaf_rejects = j.value("leaf_rejects", 0ULL);
  return s;
}

std::string task_fingerprint(const EnumerationTask& task) {
  Fnv1a f;
  f.add("neumaier-enumerate-v1");
  f.add_all(task.group.table());
  f.add_all(std::span<const Element>(task.subgroup.members()));
  const auto& p = task.target;
  f.add(p.v).add(p.k).add(p.lambda).add(p.m).add(p.s);
  return f.hex();
}

struct SeedOutcome {
  bool done = false;
  std::vector<ElementSet> sets;
  EnumerationStats stats;
};

// Reads completed seeds from an existing checkpoint, or starts a new one.
std::map<std::size_t, SeedOutcome> load_checkpoint(const std::string& path, const std::string& fingerprint,
                                                   std::size_t seeds) {
  std::map<std::size_t, SeedOutcome> done;
  std::ifstream in(path);
  if (!in) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw InvalidInput("cannot write checkpoint " + path);
    out << nlohmann::json{{"fingerprint", fingerprint}, {"seeds", seeds}}.dump() << '\n';
    return done;
  }
  std::string line;
  if (!std::getline(in, line)) throw ParseError("checkpoint " + path + " is empty");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception&) {
    throw ParseError("checkpoint " + path + " has a corrupt header");
  }
  if (header.value("fingerprint", std::string()) != fingerprint || header.value("seeds", 0ULL) != seeds) {
    throw InvalidInput("checkpoint " + path + " belongs to a different task");
  }
  while (std::getline(in, line)) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      break;  // a torn final line from an interrupted run
    }
    SeedOutcome o;
    o.done = true;
    o.sets = j.at("sets").get<std::vector<ElementSet>>();
    o.stats = stats_from_json(j.at("stats"));
    done[j.at("seed").get<std::size_t>()] = std::move(o);
  }
  return done;
}

}  // namespace

EnumerationResult enumerate(const EnumerationTask& task) {
  const auto t0 = std::chrono::steady_clock::now();
  const FiniteGroup& g = task.group;
  const Subgroup& h = task.subgroup;
  const auto& opt = task.options;
  EnumerationResult res;
  res.target = task.target;
  if (task.target.m == task.target.s) {
    res.note = "m = s gives the complete graph, which is not Neumaier";
    return res;
  }

  const auto cd = right_cosets(h);
  const Element g2 = cd.reps[1];
  const auto stab = coset_stabilizer_action(h, g2, opt.automorphism_limits);
  const auto seeds = msubset_orbit_reps(stab, cd.cosets[1], task.target.m);
  res.stats.seeds = seeds.size();

  std::map<std::size_t, SeedOutcome> outcomes;
  std::string fingerprint;
  if (!opt.checkpoint.empty()) {
    fingerprint = task_fingerprint(task);
    outcomes = load_checkpoint(opt.checkpoint, fingerprint, seeds.size());
    res.stats.seeds_resumed = outcomes.size();
  }

  std::vector<SeedOutcome> results(seeds.size());
  for (auto& [i, o] : outcomes) {
    if (i < results.size()) results[i] = std::move(o);
  }
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::size_t> next{0};
  std::atomic<bool> out_of_budget{false};
  std::mutex ck_mutex;

  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= seeds.size() || out_of_budget.load()) return;
      if (results[i].done) continue;
      SeedSearch search(g, h, cd, task.target, opt.strong_prune, nodes, opt.node_budget);
      try {
        search.run(seeds[i]);
      } catch (const BudgetHit&) {
        out_of_budget = true;
        return;
      }
      SeedOutcome o{true, std::move(search.found), search.stats};
      if (!opt.checkpoint.empty()) {
        std::lock_guard<std::mutex> lock(ck_mutex);
        std::ofstream out(opt.checkpoint, std::ios::app);
        out << nlohmann::json{{"seed", i}, {"sets", o.sets}, {"stats", stats_json(o.stats)}}.dump() << '\n';
      }
      results[i] = std::move(o);
    }
  };

  // Seeds whose T2 breaks inverse consistency inside Hg2 are dropped first.
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const auto& t2 = seeds[i];
    bool ok = true;
    for (Element x : t2) {
      const Element xi = g.inv(x);
      if (cd.coset_of[xi] == 1 && !std::binary_search(t2.begin(), t2.end(), xi)) ok = false;
    }
    if (!ok && !results[i].done) {
      results[i].done = true;
      ++res.stats.seeds_skipped_inverse;
    }
  }

  const unsigned jobs = std::max(1u, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (auto& o : results) {
    if (!o.done) {
      res.exhaustive = false;
      continue;
    }
    add_stats(res.stats, o.stats);
    for (auto& s : o.sets) res.connection_sets.push_back(std::move(s));
  }
  res.raw_count = res.connection_sets.size();
  if (!res.exhaustive) res.note = "node budget exhausted; results cover completed seeds only";
  classify_sets(g, h, res, opt);
  if (!opt.collect_sets) res.connection_sets.clear();
  res.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

EnumerationResult brute_enumerate(const EnumerationTask& task) {
  const auto t0 = std::chrono::steady_clock::now();
  const FiniteGroup& g = task.group;
  const Subgroup& h = task.subgroup;
  EnumerationResult res;
  res.target = task.target;
  const std::uint64_t n = g.order() / h.order();
  const std::size_t size = static_cast<std::size_t>((n - 1) * task.target.m);
  std::vector<Element> outside;
  for (Element x = 0; x < g.order(); ++x) {
    if (!h.contains(x)) outside.push_back(x);
  }
  const std::uint64_t space = binomial(outside.size(), size);
  if (space > task.options.brute_cap) {
    throw SearchSpaceTooLarge("brute force space " + std::to_string(space) + " exceeds cap " +
                              std::to_string(task.options.brute_cap));
  }
  ElementSet hsharp;
  for (Element x : h.members()) {
    if (x != kIdentity) hsharp.push_back(x);
  }

  std::vector<std::uint8_t> in(g.order(), 0);
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  const std::size_t c = outside.size();
  while (size <= c) {
    ++res.stats.nodes;
    for (std::size_t i : idx) in[outside[i]] = 1;
    bool closed = true;
    for (std::size_t i : idx) closed = closed && in[g.inv(outside[i])];
    if (closed) {
      ++res.stats.leaves;
      std::vector<Element> s(hsharp);
      for (std::size_t i : idx) s.push_back(outside[i]);
      const CayleyGraph cg = make_cayley_graph(g, s);
      auto chk = strictly_neumaier_check(cg, h);
      if (chk && chk->params == task.target) {
        ElementSet t;
        for (std::size_t i : idx) t.push_back(outside[i]);
        res.connection_sets.push_back(std::move(t));
      } else {
        ++res.stats.leaf_rejects;
      }
    }
    for (std::size_t i : idx) in[outside[i]] = 0;
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == c - size + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t k = i; k < size; ++k) idx[k] = idx[k - 1] + 1;
  }
  res.raw_count = res.connection_sets.size();
  classify_sets(g, h, res, task.options);
  if (!task.options.collect_sets) res.connection_sets.clear();
  res.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

std::string graph_certificate(const FiniteGroup& g, const ElementSet& s, std::uint64_t budget) {
  const DenseGraph dg = materialize(CayleyGraph{g, s});
  CanonicalOptions co;
  co.node_budget = budget;
  co.automorphisms = right_translations(g);
  return canonical_form(dg, co);
}

std::string pair_certificate(const FiniteGroup& g, const Subgroup& h, const ElementSet& s, std::uint64_t budget) {
  const DenseGraph base = materialize(CayleyGraph{g, s});
  const auto cd = right_cosets(h);
  const std::size_t v = g.order(), n = cd.cosets.size();
  DenseGraph aug(v + n);
  for (Vertex u = 0; u < v; ++u) {
    for (Vertex w : base.neighbours(u)) {
      if (u < w) aug.add_edge(u, w);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (Element x : cd.cosets[i]) aug.add_edge(x, static_cast<Vertex>(v + i));
  CanonicalOptions co;
  co.node_budget = budget;
  co.colours.assign(v + n, 0);
  for (std::size_t i = 0; i < n; ++i) co.colours[v + i] = 1;
  // Right translations permute the cosets Hx -> Hxy.
  for (Element y = 1; y < v; ++y) {
    std::vector<Vertex> perm(v + n);
    for (Element x = 0; x < v; ++x) perm[x] = g.mul(x, y);
    for (std::size_t i = 0; i < n; ++i) perm[v + i] = static_cast<Vertex>(v + cd.coset_of[g.mul(cd.reps[i], y)]);
    co.automorphisms.push_back(std::move(perm));
  }
  return canonical_form(aug, co);
}

void classify_sets(const FiniteGroup& g, const Subgroup& h, EnumerationResult& result,
                   const EnumerationOptions& options) {
  result.classes.clear();
  result.pair_class_count = 0;
  result.strict_count = 0;
  if (options.dedupe == DedupeMode::none) return;
  ElementSet hsharp;
  for (Element x : h.members()) {
    if (x != kIdentity) hsharp.push_back(x);
  }
  std::map<std::string, GraphClass> by_cert;
  std::set<std::string> pairs;
  for (const auto& t : result.connection_sets) {
    ElementSet s(hsharp);
    s.insert(s.end(), t.begin(), t.end());
    std::sort(s.begin(), s.end());
    const std::string cert = graph_certificate(g, s, options.canonical_budget);
    const std::string pc = pair_certificate(g, h, s, options.canonical_budget);
    auto [it, fresh] = by_cert.try_emplace(cert);
    GraphClass& c = it->second;
    if (fresh) {
      c.certificate = cert;
      c.connection = s;
      c.subgroup = h.members();
      c.group = g.descriptor();
    }
    ++c.multiplicity;
    if (std::find(c.pair_certificates.begin(), c.pair_certificates.end(), pc) == c.pair_certificates.end()) {
      c.pair_certificates.push_back(pc);
    }
    pairs.insert(pc);
  }
  for (auto& [cert, c] : by_cert) {
    std::sort(c.pair_certificates.begin(), c.pair_certificates.end());
    // Strong regularity is an isomorphism invariant: one check per class.
    auto srg = strongly_regular(materialize(CayleyGraph{g, c.connection}));
    if (srg) c.srg = *srg;
    c.strict = !srg.ok();
    result.strict_count += c.strict;
    result.classes.push_back(std::move(c));
  }
  result.pair_class_count = pairs.size();
}

std::vector<Subgroup> subgroups_up_to_automorphism(const FiniteGroup& g, std::size_t order,
                                                   const AutomorphismLimits& limits) {
  auto profile = [&](const Subgroup& s) {
    std::vector<std::uint32_t> p;
    for (Element x : s.members()) p.push_back(g.element_order(x));
    std::sort(p.begin(), p.end());
    p.push_back(is_normal(s));
    return p;
  };
  std::vector<Subgroup> reps;
  std::vector<std::vector<std::uint32_t>> rep_profiles;
  for (const auto& s : subgroups_of_order(g, order)) {
    const auto p = profile(s);
    bool seen = false;
    for (std::size_t i = 0; i < reps.size() && !seen; ++i) {
      if (rep_profiles[i] == p && find_automorphism_mapping(reps[i], s, limits)) seen = true;
    }
    if (!seen) {
      reps.push_back(s);
      rep_profiles.push_back(p);
    }
  }
  return reps;
}

SweepResult enumerate_sweep(const FiniteGroup& g, const NeumaierParams& target, const EnumerationOptions& options,
                            const std::function<EnumerationResult(const EnumerationTask&)>& run,
                            std::optional<std::vector<Subgroup>> only) {
  SweepResult out;
  out.subgroups = only ? std::move(*only)
                       : subgroups_up_to_automorphism(g, static_cast<std::size_t>(target.s),
                                                      options.automorphism_limits);
  std::map<std::string, GraphClass> merged;
  std::set<std::string> pairs;
  for (const auto& h : out.subgroups) {
    auto r = run(make_task(g, h, target, options));
    out.exhaustive = out.exhaustive && r.exhaustive;
    for (const auto& c : r.classes) {
      auto [it, fresh] = merged.try_emplace(c.certificate, c);
      if (!fresh) {
        it->second.multiplicity += c.multiplicity;
        for (const auto& pc : c.pair_certificates) {
          auto& pcs = it->second.pair_certificates;
          if (std::find(pcs.begin(), pcs.end(), pc) == pcs.end()) pcs.push_back(pc);
        }
        std::sort(it->second.pair_certificates.begin(), it->second.pair_certificates.end());
      }
      pairs.insert(c.pair_certificates.begin(), c.pair_certificates.end());
    }
    out.per_subgroup.push_back(std::move(r));
  }
  for (auto& [cert, c] : merged) {
    out.strict_count += c.strict;
    out.classes.push_back(std::move(c));
  }
  out.pair_class_count = pairs.size();
  return out;
}

}  // namespace neumaier
