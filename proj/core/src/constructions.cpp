#include "neumaier/constructions.hpp"

#include <algorithm>

#include "neumaier/group_ring.hpp"

namespace neumaier {

namespace {

std::string params_string(const NeumaierParams& p) {
  return "(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," + std::to_string(p.lambda) + "," +
         std::to_string(p.m) + "," + std::to_string(p.s) + ")";
}

std::vector<std::uint8_t> mask_of(std::size_t v, std::span<const Element> xs) {
  std::vector<std::uint8_t> m(v, 0);
  for (Element x : xs) m[x] = 1;
  return m;
}

}  // namespace

CorollaryParams params_from_corollary(std::uint64_t n, std::uint64_t s, std::uint64_t m) {
  if (n < 2 || s < 2 || m < 1 || m > s) throw InvalidInput("corollary needs n >= 2, s >= 2 and 1 <= m <= s");
  CorollaryParams out;
  out.v = n * s;
  out.k = s - 1 + (n - 1) * m;
  const std::uint64_t num = (n - 1) * m * (m - 1);
  if (num % (s - 1) != 0) {
    out.reason = "(s-1) does not divide (n-1)m(m-1)";
    return out;
  }
  out.lambda = s - 2 + num / (s - 1);
  if (out.lambda + 1 >= out.k) {
    out.reason = "lambda >= k-1: the graph would be complete";
    return out;
  }
  out.feasible = true;
  return out;
}

std::string Theorem1Report::first_failure() const {
  if (!cond1.holds) return "cond1";
  if (!cond2.holds) return "cond2";
  if (!cond3.holds) return "cond3";
  if (!nexus_positive) return "nexus";
  if (!non_complete) return "complete";
  return "";
}

Theorem1Report theorem1_check(const Subgroup& h, std::span<const Element> s_in) {
  const FiniteGroup& g = h.parent();
  const ElementSet s = make_element_set(g, {s_in.begin(), s_in.end()});
  const std::size_t v = g.order();
  if (!s.empty() && s.front() == kIdentity) throw PreconditionViolated("identity", "identity lies in S");
  for (Element x : s) {
    if (!std::binary_search(s.begin(), s.end(), g.inv(x))) {
      throw PreconditionViolated("inverse", "S is not inverse-closed: inverse of " + std::to_string(x) + " missing");
    }
  }
  for (Element x : h.members()) {
    if (x != kIdentity && !std::binary_search(s.begin(), s.end(), x)) {
      throw PreconditionViolated("subgroup", "H^# is not contained in S: " + std::to_string(x) + " missing");
    }
  }
  if (h.order() == v) throw PreconditionViolated("proper", "H must be a proper subgroup");

  Theorem1Report r;
  for (Element x : s) {
    if (!h.contains(x)) r.t.push_back(x);
  }
  const auto in_t = mask_of(v, r.t);

  // (1) |T ∩ Hg| = m for g outside H.
  const auto cd = right_cosets(h);
  std::optional<std::uint64_t> m_first;
  r.cond1.holds = true;
  for (std::size_t i = 1; i < cd.cosets.size(); ++i) {
    std::uint64_t cnt = 0;
    for (Element x : cd.cosets[i]) cnt += in_t[x];
    if (!m_first) m_first = cnt;
    if (cnt != *m_first) {
      r.cond1 = {false, cd.reps[i], static_cast<std::int64_t>(cnt)};
      break;
    }
  }
  if (r.cond1.holds) r.m = m_first;

  auto overlap = [&](Element y) {
    // |T y ∩ T|
    std::int64_t c = 0;
    for (Element x : r.t) c += in_t[g.mul(x, y)];
    return c;
  };
  const auto s_size = static_cast<std::int64_t>(h.order());
  const auto m = static_cast<std::int64_t>(m_first.value_or(0));

  // (2) |T h ∩ T| = lambda - s + 2 for h in H^#.
  r.cond2.holds = true;
  for (Element x : h.members()) {
    if (x == kIdentity) continue;
    const std::int64_t c = overlap(x);
    if (!r.lambda) r.lambda = c + s_size - 2;
    if (c != *r.lambda - s_size + 2) {
      r.cond2 = {false, x, c};
      break;
    }
  }
  // (3) |T g ∩ T| = lambda - 2m + 2 for g in T.
  r.cond3.holds = true;
  for (Element x : r.t) {
    const std::int64_t c = overlap(x);
    if (!r.lambda) r.lambda = c + 2 * m - 2;
    if (c != *r.lambda - 2 * m + 2) {
      r.cond3 = {false, x, c};
      break;
    }
  }

  r.nexus_positive = m_first.value_or(0) >= 1;
  r.non_complete = s.size() + 1 < v;
  if (r.cond1.holds && r.cond2.holds && r.cond3.holds && r.nexus_positive && r.non_complete && r.lambda &&
      *r.lambda >= 0) {
    r.derived = NeumaierParams{v, s.size(), static_cast<std::uint64_t>(*r.lambda), *r.m, h.order()};
  }
  return r;
}

Construction1Result construction1(const RelativeDifferenceSet& t, const FiniteGroup& u) {
  const RdsParams& p = t.params;
  const std::uint64_t n = p.n, lambda = p.lambda;
  if (!t.flags.reversible || !t.flags.semiregular) {
    throw InvalidInput("BadRdsParams", "construction 1 needs a reversible semiregular RDS");
  }
  if (p.m != n * lambda || p.k != n * lambda) {
    throw InvalidInput("BadRdsParams", "RDS parameters must be (n lambda, n, n lambda, lambda)");
  }
  if (lambda % n != 0) throw InvalidInput("BadRdsParams", "n must divide lambda");
  if (u.order() != lambda / n) {
    throw InvalidInput("WrongUOrder", "U must have order lambda/n = " + std::to_string(lambda / n));
  }

  const FiniteGroup& g = t.group();
  const FiniteGroup gu = direct_product(g, u);
  ElementSet hm;
  for (Element x : t.forbidden.members())
    for (Element y = 0; y < u.order(); ++y) hm.push_back(product_index(u, x, y));
  std::sort(hm.begin(), hm.end());
  Subgroup h(gu, hm);

  std::vector<Element> s;
  for (Element x : t.members) {
    if (x != kIdentity) s.push_back(product_index(u, x, 0));
  }
  for (Element x : hm) {
    if (x != kIdentity) s.push_back(x);
  }
  CayleyGraph graph = make_cayley_graph(gu, std::move(s));

  const NeumaierParams expected{n * lambda * lambda, (n + 1) * lambda - 2, lambda - 2, 1, lambda};
  const bool expect_srg = n == lambda;
  auto check = strictly_neumaier_check(graph, h);

  const auto ind = indicator(gu, graph.connection);
  const auto sq = convolve(ind, ind, gu);
  bool pattern = sq[kIdentity] == static_cast<std::int64_t>(graph.connection.size());
  for (Element x : graph.connection) pattern = pattern && sq[x] == static_cast<std::int64_t>(lambda) - 2;

  Construction1Result r{graph, h, expected, expect_srg, check, pattern, {}};
  if (!check) {
    r.problems.push_back("Lemma 4.1: graph is not Neumaier: " + check.failure().code + ": " + check.failure().detail);
  } else {
    if (check->params != expected) {
      r.problems.push_back("Lemma 4.1: parameters " + params_string(check->params) + " differ from expected " +
                           params_string(expected));
    }
    if (check->strict == expect_srg) r.problems.push_back("Lemma 4.1: strong regularity iff n = lambda violated");
    if (expect_srg && check->srg &&
        *check->srg != SrgParams{n * n * n, n * n + n - 2, n - 2, n + 2}) {
      r.problems.push_back("Lemma 4.1: SRG parameters differ from (n^3, n^2+n-2, n-2, n+2)");
    }
  }
  if (!pattern) r.problems.push_back("Lemma 4.1: S^2 coefficient pattern violated");
  return r;
}

PartialSpreadResult partial_spread_srg(unsigned n) {
  if (n < 2 || n % 2 != 0) throw InvalidInput("n must be even and at least 2");
  return partial_spread_srg(gf2::spread_family(n, (1u << (n - 1)) + 1));
}

PartialSpreadResult partial_spread_srg(const gf2::SpreadFamily& spread) {
  if (!gf2::verify_spread(spread)) throw InvalidInput("spread lines do not intersect trivially");
  const FiniteGroup g0 = make_group(spread.ambient);
  std::vector<Element> s0;
  for (const auto& line : spread.lines)
    for (Element x : line)
      if (x != kIdentity) s0.push_back(x);
  CayleyGraph graph = make_cayley_graph(g0, std::move(s0));

  const std::uint64_t q = std::uint64_t{1} << spread.n;
  const std::uint64_t l = spread.lines.size();
  // Partial spread graph of l lines in GF(q)^2.
  const SrgParams expected{q * q, l * (q - 1), q - 2 + (l - 1) * (l - 2), l * (l - 1)};
  const DenseGraph dg = materialize(graph);
  auto srg = strongly_regular(dg);

  PartialSpreadResult r{spread, graph, expected, srg, {}, true, false, {}};
  for (const auto& line : spread.lines) {
    auto nx = clique_nexus(dg, line);
    r.line_nexus.push_back(nx.as_optional());
    if (!nx || *nx != l - 1) r.problems.push_back("spread line is not an (l-1)-regular clique");
  }
  for (Element x : spread.baseline) {
    if (std::binary_search(graph.connection.begin(), graph.connection.end(), x)) r.avoids_baseline = false;
  }
  if (!r.avoids_baseline) r.problems.push_back("S0 meets the baseline A0");
  if (!srg) {
    r.problems.push_back("not strongly regular: " + srg.failure().detail);
  } else {
    if (*srg != expected) r.problems.push_back("SRG parameters differ from the partial spread formula");
    const auto v0 = static_cast<std::int64_t>(srg->v), k0 = static_cast<std::int64_t>(srg->k),
               l0 = static_cast<std::int64_t>(srg->lambda);
    r.criterion = v0 == 4 * (k0 - l0 - 1);
  }
  if (l == q / 2 + 1 && !r.criterion) r.problems.push_back("Lemma 4.6: v0 = 4(k0 - lambda0 - 1) fails");
  return r;
}

Construction2Result construction2(const Construction2Input& in) {
  const FiniteGroup& a = in.a;
  const FiniteGroup& h0 = in.h0;
  if (!a.is_abelian()) throw InvalidInput("A must be abelian");
  if (!in.a0.parent().same_table(a) || in.a0.index() != 2) throw InvalidInput("A0 must be a subgroup of A of index 2");
  if (in.a0.order() < 2) throw InvalidInput("A0 must be nontrivial");
  if (!h0.is_abelian() || h0.order() < 2) throw InvalidInput("H0 must be a nontrivial abelian group");
  const std::uint64_t m0 = h0.order();
  if (m0 % 2 != 0) throw InvalidInput("|H0| must be even");

  const FiniteGroup ah0 = direct_product(a, h0);
  const ElementSet s0 = make_element_set(ah0, in.s0);
  if (!s0.empty() && s0.front() == kIdentity) throw InvalidInput("S0 contains the identity");
  if (!is_inverse_closed(ah0, s0)) throw InvalidInput("S0 is not inverse-closed");
  for (Element x : s0) {
    if (!in.a0.contains(static_cast<Element>(x / m0))) throw InvalidInput("S0 is not inside A0 x H0");
    if (x % m0 == 0) throw InvalidInput("S0 meets A0");
  }

  const FiniteGroup c2 = make_group("C2");
  const FiniteGroup hgrp = direct_product(h0, c2);
  const RelativeDifferenceSet& t = in.t;
  if (!t.group().same_table(hgrp)) throw InvalidInput("T must live in H0 x C2");
  if (t.forbidden.members() != ElementSet{0, 1}) throw InvalidInput("T must have forbidden subgroup C2 = {0, 1}");
  if (!t.flags.reversible || !t.flags.semiregular || t.params != RdsParams{m0, 2, m0, m0 / 2}) {
    throw InvalidInput("T must be an RSRDS with parameters (m0, 2, m0, m0/2)");
  }

  const FiniteGroup g = direct_product(ah0, c2);
  const Element hsize = static_cast<Element>(2 * m0);
  ElementSet hm(hsize);
  for (Element x = 0; x < hsize; ++x) hm[x] = x;
  Subgroup h(g, hm);

  std::vector<Element> s;
  for (Element x = 0; x < a.order(); ++x) {
    if (in.a0.contains(x)) continue;
    for (Element tau : t.members) s.push_back(x * hsize + tau);
  }
  for (Element x : s0) {
    s.push_back(2 * x);
    s.push_back(2 * x + 1);
  }
  s.push_back(1);
  CayleyGraph graph = make_cayley_graph(g, std::move(s));

  // Gamma0 over the induced group A0 x H0.
  ElementSet g0m;
  for (Element x : in.a0.members())
    for (Element y = 0; y < m0; ++y) g0m.push_back(product_index(h0, x, y));
  std::sort(g0m.begin(), g0m.end());
  const auto induced = induced_group(Subgroup(ah0, g0m));
  std::vector<Element> s0_local;
  for (Element x : s0) {
    s0_local.push_back(static_cast<Element>(std::lower_bound(g0m.begin(), g0m.end(), x) - g0m.begin()));
  }
  const CayleyGraph gamma0 = make_cayley_graph(induced.group, std::move(s0_local));
  const DenseGraph d0 = materialize(gamma0);
  auto er0 = edge_regular(d0);
  std::optional<SrgParams> srg0;
  if (auto sr = strongly_regular(d0)) srg0 = *sr;
  std::vector<Vertex> h0_local(m0);
  for (Element y = 0; y < m0; ++y) h0_local[y] = y;  // H0 = {(e, y)} sorts first.
  const auto h0_nexus = clique_nexus(d0, h0_local).as_optional();

  bool criterion = false;
  std::int64_t v0 = 0, k0 = 0, l0 = 0;
  if (er0) {
    v0 = static_cast<std::int64_t>(er0->v);
    k0 = static_cast<std::int64_t>(er0->k);
    l0 = static_cast<std::int64_t>(er0->lambda);
    criterion = v0 == 4 * (k0 - l0 - 1);
  }

  const DenseGraph dg = materialize(graph);
  auto er = edge_regular(dg);
  const auto h_nexus = clique_nexus(dg, hm).as_optional();
  auto check = strictly_neumaier_check(graph, h);

  Construction2Result r{graph, h, 1, er0, srg0, h0_nexus, criterion, er, h_nexus, check, std::nullopt, {}};
  if (er0) {
    if (er.ok() != criterion) r.problems.push_back("Lemma 4.6: edge-regularity of Gamma does not match v0 = 4(k0-lambda0-1)");
    if (er && criterion && er->lambda != static_cast<std::uint64_t>(2 * k0)) {
      r.problems.push_back("Lemma 4.6: lambda differs from 2 k0");
    }
  }
  if (h0_nexus && *h0_nexus == m0 / 2 && h_nexus != std::optional<std::uint64_t>(m0)) {
    r.problems.push_back("Lemma 4.5: H is not an m0-regular clique");
  }
  const bool gamma0_neumaier = er0 && h0_nexus && *h0_nexus == m0 / 2 && er0->k + 1 < er0->v;
  if (gamma0_neumaier && criterion) {
    r.expected = NeumaierParams{static_cast<std::uint64_t>(4 * v0), static_cast<std::uint64_t>(v0 + 2 * k0 + 1),
                                static_cast<std::uint64_t>(2 * k0), m0, 2 * m0};
    if (!check) {
      r.problems.push_back("Corollary 4.7: Gamma is not Neumaier: " + check.failure().detail);
    } else if (check->params != *r.expected) {
      r.problems.push_back("Corollary 4.7: parameters " + params_string(check->params) + " differ from " +
                           params_string(*r.expected));
    }
  }
  if (srg0 && check && !check->strict) r.problems.push_back("Lemma 4.8: Gamma0 is strongly regular but Gamma is too");
  return r;
}

NeumaierParams theorem2_params(unsigned n) {
  const std::uint64_t p = std::uint64_t{1} << n;
  return NeumaierParams{4 * p * p, (2 * p - 1) * (p + 1), 2 * (p - 1) * (p / 2 + 1), p, 2 * p};
}

Subgroup elementary_index2_subgroup(const FiniteGroup& a) {
  if (!a.is_abelian()) throw InvalidInput("A must be abelian");
  ElementSet omega;
  for (Element x = 0; x < a.order(); ++x) {
    if (a.element_order(x) <= 2) omega.push_back(x);
  }
  if (omega.size() * 2 == a.order()) return Subgroup(a, omega);
  if (omega.size() == a.order() && a.order() >= 2) {
    auto gens = generating_sequence(a);
    gens.erase(gens.begin());
    return subgroup_generated(a, gens);
  }
  throw InvalidInput(a.descriptor() + " has no elementary abelian subgroup of index 2");
}

Theorem2Result theorem2_graph(unsigned n, const std::string& a_spec, const Theorem2Options& options) {
  if (n == 0 || n % 2 != 0) throw InvalidInput("n must be even");
  if (n > 4) throw InvalidInput("Overflow", "n > 4 exceeds the supported group order");
  const std::uint32_t q = std::uint32_t{1} << n;
  const FiniteGroup a = make_group(a_spec);
  if (!a.is_abelian() || a.order() != 2 * q) {
    throw InvalidInput("A must be abelian of order 2^(n+1) = " + std::to_string(2 * q));
  }
  const Subgroup a0 = elementary_index2_subgroup(a);

  const unsigned l = q / 2 + 1;
  const gf2::SpreadFamily spread =
      options.slopes.empty() ? gf2::spread_family(n, l) : gf2::spread_family(n, options.slopes);
  if (spread.lines.size() != l) throw InvalidInput("Theorem 2 needs exactly 2^(n-1)+1 spread lines");

  const FiniteGroup h0 = make_group("C2^" + std::to_string(n));
  const FiniteGroup ah0 = direct_product(a, h0);

  // Field element -> A0 via a basis of A0.
  const auto a0_induced = induced_group(a0);
  std::vector<Element> basis;
  for (Element b : generating_sequence(a0_induced.group)) basis.push_back(a0_induced.to_parent[b]);
  if (basis.size() != n) throw Error("Internal", "A0 is not elementary abelian of rank n");
  auto embed = [&](std::uint32_t x) {
    Element e = kIdentity;
    for (unsigned i = 0; i < n; ++i) {
      if ((x >> i) & 1) e = a.mul(e, basis[i]);
    }
    return e;
  };

  // Coordinates (x, y) = (a, 0) + (t, slope1 * t): A0 x H0 with H0 the first line.
  const auto slope1 = spread.slopes.front();
  const std::uint32_t inv1 = slope1 ? gf2::gf_inv(spread.field, *slope1) : 0;
  std::vector<Element> s0;
  for (const auto& line : spread.lines) {
    for (Element p : line) {
      if (p == kIdentity) continue;
      const std::uint32_t x = p >> n, y = p & (q - 1);
      const std::uint32_t tt = slope1 ? gf2::gf_mul(spread.field, y, inv1) : y;
      const std::uint32_t aa = slope1 ? (x ^ tt) : x;
      s0.push_back(product_index(h0, embed(aa), tt));
    }
  }

  const gf2::BooleanFunction f = options.bent ? *options.bent : gf2::maiorana_mcfarland(n / 2);
  if (f.arity != n) throw InvalidInput("bent function must have n variables");
  RelativeDifferenceSet t = bent_rds(f);

  Construction2Input input{a, a0, h0, make_element_set(ah0, std::move(s0)), std::move(t)};
  Construction2Result c = construction2(input);
  Theorem2Result r{n, std::move(input), std::move(c), theorem2_params(n), {}};
  const auto& chk = r.construction.check;
  if (!chk) {
    r.problems.push_back("Theorem 2: graph is not Neumaier: " + chk.failure().detail);
  } else {
    if (chk->params != r.expected) {
      r.problems.push_back("Theorem 2: parameters " + params_string(chk->params) + " differ from " +
                           params_string(r.expected));
    }
    if (!chk->strict) r.problems.push_back("Theorem 2: graph is strongly regular");
  }
  return r;
}

}  // namespace neumaier
