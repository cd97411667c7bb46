#include "neumaier/automorphism.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_set>

namespace neumaier {

namespace {

constexpr Element kUnset = std::numeric_limits<Element>::max();

// Backtracking search for injective homomorphisms G -> G defined by images
// of a generating sequence. Level j chooses the image of gens[j]; the map is
// extended to <gens[0..j]> by closing under right multiplication.
class HomSearch {
 public:
  HomSearch(const FiniteGroup& g, std::vector<Element> gens,
            std::vector<std::vector<Element>> candidates, std::uint64_t budget)
      : g_(g),
        gens_(std::move(gens)),
        candidates_(std::move(candidates)),
        budget_(budget),
        phi_(g.order(), kUnset),
        used_(g.order(), 0),
        centralizer_(g.order(), 0) {
    const std::size_t v = g.order();
    for (Element x = 0; x < v; ++x) {
      std::uint32_t c = 0;
      for (Element y = 0; y < v; ++y) c += g.mul(x, y) == g.mul(y, x);
      centralizer_[x] = c;
    }
    candidates_.resize(gens_.size());
    for (std::size_t j = 0; j < gens_.size(); ++j) {
      auto& cand = candidates_[j];
      if (cand.empty()) {
        cand.resize(v);
        for (Element y = 0; y < v; ++y) cand[y] = y;
      }
      const Element x = gens_[j];
      std::erase_if(cand, [&](Element y) {
        return g.element_order(y) != g.element_order(x) || centralizer_[y] != centralizer_[x];
      });
    }
    phi_[kIdentity] = kIdentity;
    used_[kIdentity] = 1;
    mapped_.push_back(kIdentity);
  }

  // visit(perm) returns the level at which to resume: frames deeper than
  // the returned level unwind; -1 stops the search.
  template <typename Visit>
  void run(Visit&& visit) {
    search(0, visit);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  template <typename Visit>
  int search(std::size_t level, Visit& visit) {
    const std::size_t r = gens_.size();
    if (level == r) {
      return visit(std::span<const Element>(phi_));
    }
    const std::size_t saved = mapped_.size();
    for (Element y : candidates_[level]) {
      if (used_[y]) continue;
      if (++nodes_ > budget_) {
        throw BudgetExceeded("automorphism search exceeded node budget of " + std::to_string(budget_));
      }
      images_.push_back(y);
      const bool ok = extend(level, saved);
      int rv = static_cast<int>(level);
      if (ok) rv = search(level + 1, visit);
      undo(saved);
      images_.pop_back();
      if (rv < static_cast<int>(level)) return rv;
    }
    return static_cast<int>(level);
  }

  bool extend(std::size_t level, std::size_t old_size) {
    for (std::size_t i = 0; i < mapped_.size(); ++i) {
      const Element z = mapped_[i];
      const std::size_t first_gen = i < old_size ? level : 0;
      for (std::size_t k = first_gen; k <= level; ++k) {
        const Element w = g_.mul(z, gens_[k]);
        const Element image = g_.mul(phi_[z], images_[k]);
        if (phi_[w] == kUnset) {
          if (used_[image]) return false;
          phi_[w] = image;
          used_[image] = 1;
          mapped_.push_back(w);
        } else if (phi_[w] != image) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t saved) {
    while (mapped_.size() > saved) {
      const Element w = mapped_.back();
      used_[phi_[w]] = 0;
      phi_[w] = kUnset;
      mapped_.pop_back();
    }
  }

  const FiniteGroup& g_;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> candidates_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Element> phi_;
  std::vector<std::uint8_t> used_;
  std::vector<std::uint32_t> centralizer_;
  std::vector<Element> mapped_;
  std::vector<Element> images_;
};

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ using u128 = unsigned __int128;
  u128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

bool is_automorphism(const FiniteGroup& g, std::span<const Element> perm) {
  const std::size_t v = g.order();
  if (perm.size() != v || perm[kIdentity] != kIdentity) return false;
  std::vector<std::uint8_t> seen(v, 0);
  for (Element x : perm) {
    if (x >= v || seen[x]) return false;
    seen[x] = 1;
  }
  for (Element x = 0; x < v; ++x) {
    for (Element y = 0; y < v; ++y) {
      if (perm[g.mul(x, y)] != g.mul(perm[x], perm[y])) return false;
    }
  }
  return true;
}

Automorphism identity_automorphism(const FiniteGroup& g) {
  Automorphism id;
  id.perm.resize(g.order());
  for (Element x = 0; x < g.order(); ++x) id.perm[x] = x;
  return id;
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  Automorphism out;
  out.perm.resize(g.perm.size());
  for (std::size_t x = 0; x < g.perm.size(); ++x) out.perm[x] = f.perm[g.perm[x]];
  return out;
}

Automorphism inverse(const Automorphism& f) {
  Automorphism out;
  out.perm.resize(f.perm.size());
  for (std::size_t x = 0; x < f.perm.size(); ++x) out.perm[f.perm[x]] = static_cast<Element>(x);
  return out;
}

ElementSet apply(const Automorphism& f, std::span<const Element> xs) {
  ElementSet out;
  out.reserve(xs.size());
  for (Element x : xs) out.push_back(f.perm[x]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> subgroup_generators(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  std::vector<Element> gens;
  std::vector<std::uint8_t> in(g.order(), 0);
  in[kIdentity] = 1;
  std::size_t generated = 1;
  while (generated < h.order()) {
    Element best = kIdentity;
    std::uint32_t best_order = 0;
    for (Element x : h.members()) {
      if (!in[x] && g.element_order(x) > best_order) {
        best = x;
        best_order = g.element_order(x);
      }
    }
    gens.push_back(best);
    const Subgroup k = subgroup_generated(g, gens);
    std::fill(in.begin(), in.end(), 0);
    for (Element x : k.members()) in[x] = 1;
    generated = k.order();
  }
  return gens;
}

std::vector<Automorphism> automorphism_group(const FiniteGroup& g, const AutomorphismLimits& limits) {
  if (g.order() > limits.max_order) {
    throw InvalidInput("automorphism_group: order " + std::to_string(g.order()) +
                       " exceeds configured maximum " + std::to_string(limits.max_order));
  }
  const auto gens = generating_sequence(g);
  HomSearch search(g, gens, {}, limits.node_budget);
  std::vector<Automorphism> out;
  const int last = static_cast<int>(gens.size()) - 1;
  search.run([&](std::span<const Element> perm) {
    out.push_back(Automorphism{{perm.begin(), perm.end()}});
    return last;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Automorphism> setwise_stabilizer(std::span<const Automorphism> auts,
                                             std::span<const Element> s) {
  ElementSet target(s.begin(), s.end());
  std::sort(target.begin(), target.end());
  std::vector<Automorphism> out;
  for (const auto& f : auts) {
    if (neumaier::apply(f, target) == target) out.push_back(f);
  }
  return out;
}

std::vector<ElementSet> msubset_orbit_reps(std::span<const Automorphism> stab,
                                           std::span<const Element> coset_in, std::size_t m,
                                           std::uint64_t cap) {
  ElementSet coset(coset_in.begin(), coset_in.end());
  std::sort(coset.begin(), coset.end());
  const std::size_t c = coset.size();
  if (m > c) throw InvalidInput("msubset_orbit_reps: m exceeds coset size");
  if (c > 64) throw InvalidInput("msubset_orbit_reps: cosets larger than 64 are not supported");
  const std::uint64_t total = binomial(c, m);
  if (total > cap) {
    throw SearchSpaceTooLarge("C(" + std::to_string(c) + "," + std::to_string(m) + ") = " +
                              std::to_string(total) + " exceeds cap " + std::to_string(cap));
  }

  // Each automorphism as a permutation of coset positions.
  std::vector<std::vector<std::uint8_t>> actions;
  {
    std::set<std::vector<std::uint8_t>> distinct;
    for (const auto& f : stab) {
      std::vector<std::uint8_t> pos(c);
      for (std::size_t i = 0; i < c; ++i) {
        auto it = std::lower_bound(coset.begin(), coset.end(), f.perm[coset[i]]);
        if (it == coset.end() || *it != f.perm[coset[i]]) {
          throw InvalidInput("msubset_orbit_reps: automorphism does not fix the coset");
        }
        pos[i] = static_cast<std::uint8_t>(it - coset.begin());
      }
      distinct.insert(std::move(pos));
    }
    actions.assign(distinct.begin(), distinct.end());
  }

  auto map_mask = [&](const std::vector<std::uint8_t>& pos, std::uint64_t mask) {
    std::uint64_t out = 0;
    while (mask) {
      const int i = __builtin_ctzll(mask);
      mask &= mask - 1;
      out |= std::uint64_t{1} << pos[i];
    }
    return out;
  };

  std::vector<ElementSet> reps;
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (std::size_t i : idx) mask |= std::uint64_t{1} << i;
    if (!seen.count(mask)) {
      ElementSet rep;
      for (std::size_t i : idx) rep.push_back(coset[i]);
      reps.push_back(std::move(rep));
      seen.insert(mask);
      for (const auto& pos : actions) seen.insert(map_mask(pos, mask));
    }
    // next combination in lexicographic order
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == c - m + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return reps;
}

std::vector<Automorphism> coset_stabilizer_action(const Subgroup& h, Element g2,
                                                  const AutomorphismLimits& limits) {
  const FiniteGroup& g = h.parent();
  if (h.contains(g2)) throw InvalidInput("coset_stabilizer_action: g2 lies in H");
  auto seed = subgroup_generators(h);
  const std::size_t h_gens = seed.size();
  seed.push_back(g2);
  const auto gens = generating_sequence(g, seed);
  // generating_sequence keeps a non-redundant seed verbatim.
  const std::size_t prefix = h_gens + 1;

  ElementSet coset = right_translate(g, h.members(), g2);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t j = 0; j < h_gens; ++j) candidates[j] = h.members();
  candidates[h_gens] = coset;

  HomSearch search(g, gens, std::move(candidates), limits.node_budget);
  std::set<ElementSet> restrictions;
  std::vector<Automorphism> out;
  const int resume = static_cast<int>(prefix) - 1;
  search.run([&](std::span<const Element> perm) {
    ElementSet images;
    images.reserve(coset.size());
    for (Element x : coset) images.push_back(perm[x]);
    if (restrictions.insert(images).second) out.push_back(Automorphism{{perm.begin(), perm.end()}});
    return resume;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Automorphism> find_automorphism_mapping(const Subgroup& from, const Subgroup& to,
                                                      const AutomorphismLimits& limits) {
  const FiniteGroup& g = from.parent();
  if (from.order() != to.order()) return std::nullopt;
  {
    std::vector<std::uint32_t> a, b;
    for (Element x : from.members()) a.push_back(g.element_order(x));
    for (Element x : to.members()) b.push_back(g.element_order(x));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  const auto seed = subgroup_generators(from);
  const auto gens = generating_sequence(g, seed);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t j = 0; j < seed.size(); ++j) candidates[j] = to.members();
  HomSearch search(g, gens, std::move(candidates), limits.node_budget);
  std::optional<Automorphism> found;
  search.run([&](std::span<const Element> perm) {
    found = Automorphism{{perm.begin(), perm.end()}};
    return -1;
  });
  return found;
}

}  // namespace neumaier
