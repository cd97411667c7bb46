#include "neumaier/rds.hpp"

#include <algorithm>

#include "neumaier/automorphism.hpp"
#include "neumaier/group_ring.hpp"

namespace neumaier {

Verdict<RdsParams> verify_rds(const Subgroup& n, std::span<const Element> t) {
  const FiniteGroup& g = n.parent();
  if (!is_normal(n)) return make_failure("NotNormal", "forbidden subgroup is not normal");
  if (n.order() == g.order()) return make_failure("NoElementOutsideN", "no element outside N");
  const ElementSet ts = make_element_set(g, {t.begin(), t.end()});
  const auto conv = convolve(indicator(g, ts), indicator(g, inverse_set(g, ts)), g);

  if (conv[kIdentity] != static_cast<std::int64_t>(ts.size())) {
    return make_failure("NotRds", "coefficient at identity differs from |T|", {kIdentity, conv[kIdentity]});
  }
  for (Element x : n.members()) {
    if (x != kIdentity && conv[x] != 0) {
      return make_failure("NotRds", "nonidentity element of N is a difference", {x, conv[x]});
    }
  }
  std::int64_t lambda = -1;
  for (Element x = 0; x < g.order(); ++x) {
    if (n.contains(x)) continue;
    if (lambda < 0) lambda = conv[x];
    else if (conv[x] != lambda) {
      return make_failure("NotRds", "difference counts outside N are not constant", {x, conv[x]});
    }
  }
  if (lambda <= 0) return make_failure("NotRds", "lambda must be positive", {0, lambda});
  return RdsParams{n.index(), n.order(), ts.size(), static_cast<std::uint64_t>(lambda)};
}

RdsFlags classify_rds(const RelativeDifferenceSet& r) {
  const FiniteGroup& g = r.group();
  RdsFlags f;
  f.reversible = inverse_set(g, r.members) == r.members;
  f.semiregular = r.params.k == r.params.m;
  const auto cosets = right_cosets(r.forbidden);
  std::vector<std::uint32_t> hits(cosets.reps.size(), 0);
  for (Element x : r.members) ++hits[cosets.coset_of[x]];
  f.transversal = std::all_of(hits.begin(), hits.end(), [](std::uint32_t h) { return h == 1; });
  if (f.semiregular) {
    if (r.params.k != r.params.lambda * r.params.n) throw Error("Internal", "semiregular RDS with k != lambda n");
    if (!f.transversal) throw Error("Internal", "semiregular RDS that is not a transversal");
  }
  return f;
}

RelativeDifferenceSet make_rds(const Subgroup& n, std::vector<Element> t) {
  ElementSet members = make_element_set(n.parent(), std::move(t));
  auto v = verify_rds(n, members);
  if (!v) throw InvalidInput(v.failure().code, v.failure().detail);
  RelativeDifferenceSet r{n, std::move(members), v.value(), {}};
  r.flags = classify_rds(r);
  return r;
}

RelativeDifferenceSet bent_rds(const gf2::BooleanFunction& f) {
  if (f.arity == 0 || f.arity % 2 != 0 || !gf2::is_bent(f)) {
    throw InvalidInput("NotBent", "boolean function is not bent");
  }
  const FiniteGroup g = make_group("C2^" + std::to_string(f.arity + 1));
  const std::uint8_t shift = f.table[0];
  ElementSet t;
  for (std::uint32_t x = 0; x < f.table.size(); ++x) t.push_back(2 * x + (f.table[x] ^ shift));
  auto r = make_rds(Subgroup(g, {0, 1}), std::move(t));
  if (!(r.flags.reversible && r.flags.semiregular && r.flags.transversal)) {
    throw Error("Internal", "bent RDS is not an RSRDS");
  }
  if (r.members[0] != kIdentity || r.members.size() < 2 || r.members[1] == 1) {
    throw Error("Internal", "bent RSRDS meets N nontrivially");
  }
  return r;
}

namespace {

class RdsSearch {
 public:
  RdsSearch(const Subgroup& n, std::size_t k, std::uint64_t lambda, const RdsSearchOptions& opt)
      : g_(n.parent()), n_(n), k_(k), lambda_(lambda), opt_(opt), diff_(g_.order(), 0),
        in_(g_.order(), 0) {}

  std::vector<ElementSet> run() {
    if (opt_.semiregular) {
      cosets_ = right_cosets(n_).cosets;
      if (k_ != cosets_.size()) return {};
      transversal(0);
    } else {
      combos(0);
    }
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  // Adds x; returns false (and leaves state unchanged) if a difference count
  // leaves the allowed range.
  bool push(Element x) {
    std::size_t i = 0;
    bool ok = true;
    for (; i < cur_.size(); ++i) {
      const Element y = cur_[i];
      const Element a = g_.mul(x, g_.inv(y));
      const Element b = g_.mul(y, g_.inv(x));
      ++diff_[a];
      ++diff_[b];
      if (n_.contains(a) || diff_[a] > lambda_ || diff_[b] > lambda_) {
        ok = false;
        ++i;
        break;
      }
    }
    if (!ok) {
      for (std::size_t j = 0; j < i; ++j) {
        --diff_[g_.mul(x, g_.inv(cur_[j]))];
        --diff_[g_.mul(cur_[j], g_.inv(x))];
      }
      return false;
    }
    cur_.push_back(x);
    in_[x] = 1;
    return true;
  }

  void pop() {
    const Element x = cur_.back();
    cur_.pop_back();
    in_[x] = 0;
    for (Element y : cur_) {
      --diff_[g_.mul(x, g_.inv(y))];
      --diff_[g_.mul(y, g_.inv(x))];
    }
  }

  void tick() {
    if (++nodes_ > opt_.node_budget) throw BudgetExceeded("RDS search exceeded node budget");
  }

  bool done() const { return opt_.first_only && !out_.empty(); }

  void leaf() {
    if (opt_.reversible) {
      for (Element x : cur_) {
        if (!in_[g_.inv(x)]) return;
      }
    }
    auto v = verify_rds(n_, cur_);
    if (v && v->lambda == lambda_) {
      ElementSet s = cur_;
      std::sort(s.begin(), s.end());
      out_.push_back(std::move(s));
    }
  }

  void combos(Element from) {
    if (done()) return;
    if (cur_.size() == k_) return leaf();
    const std::size_t v = g_.order();
    for (Element x = from; x + (k_ - cur_.size()) <= v; ++x) {
      if (opt_.reversible) {
        const Element xi = g_.inv(x);
        if (xi < x && !in_[xi]) continue;
      }
      tick();
      if (!push(x)) continue;
      combos(x + 1);
      pop();
      if (done()) return;
    }
  }

  void transversal(std::size_t level) {
    if (done()) return;
    if (level == cosets_.size()) return leaf();
    for (Element x : cosets_[level]) {
      tick();
      if (!push(x)) continue;
      transversal(level + 1);
      pop();
      if (done()) return;
    }
  }

  const FiniteGroup& g_;
  const Subgroup& n_;
  std::size_t k_;
  std::uint64_t lambda_;
  RdsSearchOptions opt_;
  std::vector<std::uint64_t> diff_;
  std::vector<std::uint8_t> in_;
  std::vector<Element> cur_;
  std::vector<std::vector<Element>> cosets_;
  std::vector<ElementSet> out_;
  std::uint64_t nodes_ = 0;
};

std::uint64_t saturating_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, b, &r)) return UINT64_MAX;
  }
  return r;
}

}  // namespace

std::vector<ElementSet> search_rds(const Subgroup& n, std::size_t k, std::uint64_t lambda,
                                   const RdsSearchOptions& options) {
  const FiniteGroup& g = n.parent();
  if (!is_normal(n)) throw InvalidInput("NotNormal", "forbidden subgroup is not normal");
  if (n.order() == g.order() || k == 0 || k > g.order() || lambda == 0) return {};
  const std::uint64_t space =
      options.semiregular ? saturating_pow(n.order(), n.index()) : binomial(g.order(), k);
  if (space > options.cap) {
    throw SearchSpaceTooLarge("RDS search space " + std::to_string(space) + " exceeds cap " +
                              std::to_string(options.cap));
  }
  return RdsSearch(n, k, lambda, options).run();
}

const std::vector<RdsFamily>& rds_families() {
  static const std::vector<RdsFamily> kFamilies = {
      {"H_{2r+1}(q)", "(q^{2r},q,q^{2r},q)", "q odd prime power, r >= 1", false},
      {"E^2_{2r+1}(p)", "(p^{2r},p,p^{2r},p)", "p odd prime, r >= 1", false},
      {"G0xG0xC2^j", "(2^{2i},2^j,2^{2i},2^{2i-j})",
       "G0 abelian of order 2^i, i >= j >= 1; constructible for G0 elementary abelian, j = 1 (bent route)", true},
      {"C4^l", "(2^{2l},4,2^{2l},2^{2l-2})", "l >= 3", false},
      {"G0xC2", "(4u^2,2,4u^2,2u^2)", "G0 in the class E, |G0| = 4u^2", false},
  };
  return kFamilies;
}

}  // namespace neumaier
