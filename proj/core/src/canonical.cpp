#include "neumaier/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace neumaier {

namespace {

using Bits = std::vector<std::uint64_t>;

constexpr std::size_t kMaxStoredAutomorphisms = 4096;

class IrSearch {
 public:
  IrSearch(const DenseGraph& g, std::uint64_t budget) : g_(g), n_(g.size()), w_(g.words()), budget_(budget) {}

  void set_target(const Bits* target) { target_ = target; }
  void set_first_only(bool v) { first_only_ = v; }

  void add_automorphism(std::vector<Vertex> perm) {
    if (auts_.size() < kMaxStoredAutomorphisms) auts_.push_back(std::move(perm));
  }

  void run(std::vector<std::uint32_t> col) {
    std::uint32_t cells = normalize(col);
    search(std::move(col), cells);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  const Bits& best_cert() const noexcept { return best_cert_; }
  const std::vector<Vertex>& best_order() const noexcept { return best_order_; }
  const std::vector<Vertex>& first_order() const noexcept { return first_order_; }
  const Bits& first_cert() const noexcept { return first_cert_; }
  const std::optional<std::vector<Vertex>>& match() const noexcept { return match_; }
  const std::vector<std::vector<Vertex>>& automorphisms() const noexcept { return auts_; }

 private:
  // Replaces colour values by their ranks; returns the number of cells.
  static std::uint32_t normalize(std::vector<std::uint32_t>& col) {
    std::vector<std::uint32_t> vals(col);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (auto& c : col) c = static_cast<std::uint32_t>(std::lower_bound(vals.begin(), vals.end(), c) - vals.begin());
    return static_cast<std::uint32_t>(vals.size());
  }

  // Equitable refinement. New cells are ordered by (old cell, neighbour
  // counts into every cell), which commutes with relabeling.
  std::uint32_t refine(std::vector<std::uint32_t>& col, std::uint32_t cells) const {
    std::vector<std::uint16_t> counts;
    std::vector<Vertex> order(n_);
    while (cells < n_) {
      Bits cellbits(static_cast<std::size_t>(cells) * w_, 0);
      for (Vertex u = 0; u < n_; ++u) cellbits[col[u] * w_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
      counts.assign(n_ * cells, 0);
      for (Vertex u = 0; u < n_; ++u) {
        const auto r = g_.row(u);
        for (std::uint32_t c = 0; c < cells; ++c) {
          std::uint32_t k = 0;
          const std::uint64_t* cb = cellbits.data() + c * w_;
          for (std::size_t i = 0; i < w_; ++i) k += static_cast<std::uint32_t>(std::popcount(r[i] & cb[i]));
          counts[u * cells + c] = static_cast<std::uint16_t>(k);
        }
      }
      auto less = [&](Vertex a, Vertex b) {
        if (col[a] != col[b]) return col[a] < col[b];
        return std::lexicographical_compare(counts.begin() + a * cells, counts.begin() + (a + 1) * cells,
                                            counts.begin() + b * cells, counts.begin() + (b + 1) * cells);
      };
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), less);
      std::vector<std::uint32_t> next(n_);
      std::uint32_t c = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && less(order[i - 1], order[i])) ++c;
        next[order[i]] = c;
      }
      const std::uint32_t ncells = c + 1;
      col.swap(next);
      if (ncells == cells) break;
      cells = ncells;
    }
    return cells;
  }

  Bits leaf_cert(const std::vector<Vertex>& order) const {
    Bits cert(n_ * w_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (g_.adjacent(order[i], order[j])) cert[i * w_ + (j >> 6)] |= std::uint64_t{1} << (63 - (j & 63));
      }
    }
    return cert;
  }

  std::vector<Vertex> map_between(const std::vector<Vertex>& from, const std::vector<Vertex>& to) const {
    std::vector<Vertex> perm(n_);
    for (std::size_t i = 0; i < n_; ++i) perm[from[i]] = to[i];
    return perm;
  }

  void leaf(const std::vector<std::uint32_t>& col) {
    std::vector<Vertex> order(n_);
    for (Vertex u = 0; u < n_; ++u) order[col[u]] = u;
    Bits cert = leaf_cert(order);
    if (first_order_.empty()) {
      first_cert_ = cert;
      first_order_ = order;
      if (target_ == nullptr) {
        best_cert_ = std::move(cert);
        best_order_ = std::move(order);
        return;
      }
    } else if (cert == first_cert_) {
      add_automorphism(map_between(first_order_, order));
    }
    if (target_ != nullptr) {
      if (cert == *target_) match_ = std::move(order);
      return;
    }
    if (cert == best_cert_) {
      if (best_order_ != first_order_) add_automorphism(map_between(best_order_, order));
    } else if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_order_ = std::move(order);
    }
  }

  bool stop() const { return match_.has_value() || (first_only_ && !first_order_.empty()); }

  // Vertex orbits of the automorphisms found so far that fix the prefix.
  std::vector<Vertex> orbits() const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& a : auts_) {
      bool fixes = true;
      for (Vertex p : prefix_) {
        if (a[p] != p) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (Vertex u = 0; u < n_; ++u) {
        const Vertex x = find(u), y = find(a[u]);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    }
    for (Vertex u = 0; u < n_; ++u) parent[u] = find(u);
    return parent;
  }

  void search(std::vector<std::uint32_t> col, std::uint32_t cells) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("canonical labeling exceeded node budget of " + std::to_string(budget_));
    }
    cells = refine(col, cells);
    if (cells == n_) return leaf(col);

    // Target cell: the first smallest non-singleton cell.
    std::vector<std::uint32_t> size(cells, 0);
    for (Vertex u = 0; u < n_; ++u) ++size[col[u]];
    std::uint32_t target = cells;
    for (std::uint32_t c = 0; c < cells; ++c) {
      if (size[c] > 1 && (target == cells || size[c] < size[target])) target = c;
    }
    std::vector<Vertex> members;
    for (Vertex u = 0; u < n_; ++u) {
      if (col[u] == target) members.push_back(u);
    }

    std::vector<Vertex> explored;
    for (Vertex w : members) {
      if (!explored.empty()) {
        const auto orb = orbits();
        if (std::any_of(explored.begin(), explored.end(), [&](Vertex e) { return orb[e] == orb[w]; })) continue;
      }
      explored.push_back(w);
      std::vector<std::uint32_t> next(col);
      for (Vertex u = 0; u < n_; ++u) {
        if (col[u] > target || (col[u] == target && u != w)) ++next[u];
      }
      prefix_.push_back(w);
      search(std::move(next), cells + 1);
      prefix_.pop_back();
      if (stop()) return;
    }
  }

  const DenseGraph& g_;
  std::size_t n_;
  std::size_t w_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  const Bits* target_ = nullptr;
  bool first_only_ = false;
  std::vector<Vertex> prefix_;
  std::vector<std::vector<Vertex>> auts_;
  Bits best_cert_, first_cert_;
  std::vector<Vertex> best_order_, first_order_;
  std::optional<std::vector<Vertex>> match_;
};

bool preserves(const DenseGraph& g, const std::vector<std::uint32_t>& col, const std::vector<Vertex>& perm) {
  const std::size_t n = g.size();
  if (perm.size() != n) return false;
  std::vector<std::uint8_t> seen(n, 0);
  for (Vertex p : perm) {
    if (p >= n || seen[p]) return false;
    seen[p] = 1;
  }
  for (Vertex u = 0; u < n; ++u) {
    if (col[u] != col[perm[u]]) return false;
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) return false;
    }
  }
  return true;
}

void append_hex(std::string& out, std::uint64_t value, int digits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  for (int i = digits - 1; i >= 0; --i) out += kDigits[(value >> (4 * i)) & 0xF];
}

}  // namespace

CanonicalResult canonical_labeling(const DenseGraph& g, const CanonicalOptions& options) {
  const std::size_t n = g.size();
  if (n > kMaxCanonicalOrder) throw InvalidInput("Overflow", "canonical form supports at most 256 vertices");
  std::vector<std::uint32_t> col = options.colours;
  if (col.empty()) col.assign(n, 0);
  if (col.size() != n) throw InvalidInput("colour vector has wrong length");

  CanonicalResult res;
  if (n == 0) {
    res.certificate = "0000";
    return res;
  }
  IrSearch s(g, options.node_budget);
  for (const auto& a : options.automorphisms) {
    if (!preserves(g, col, a)) throw InvalidInput("supplied permutation is not a colour-preserving automorphism");
    s.add_automorphism(a);
  }
  s.run(col);

  res.nodes = s.nodes();
  res.automorphisms = s.automorphisms();
  res.labeling.assign(n, 0);
  const auto& order = s.best_order();
  for (std::size_t i = 0; i < n; ++i) res.labeling[order[i]] = static_cast<Vertex>(i);

  // Header: vertex count, then (colour, class size) pairs in colour order.
  std::string& cert = res.certificate;
  append_hex(cert, n, 4);
  if (!options.colours.empty()) {
    std::vector<std::uint32_t> vals(options.colours);
    std::sort(vals.begin(), vals.end());
    for (std::size_t i = 0; i < vals.size();) {
      std::size_t j = i;
      while (j < vals.size() && vals[j] == vals[i]) ++j;
      append_hex(cert, vals[i], 8);
      append_hex(cert, j - i, 4);
      i = j;
    }
  }
  const std::size_t w = g.words();
  const auto& bits = s.best_cert();
  unsigned nib = 0, filled = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      nib = (nib << 1) | static_cast<unsigned>((bits[i * w + (j >> 6)] >> (63 - (j & 63))) & 1);
      if (++filled == 4) {
        append_hex(cert, nib, 1);
        nib = filled = 0;
      }
    }
  }
  if (filled) append_hex(cert, nib << (4 - filled), 1);
  return res;
}

std::string canonical_form(const DenseGraph& g, const CanonicalOptions& options) {
  return canonical_labeling(g, options).certificate;
}

std::vector<std::vector<Vertex>> right_translations(const FiniteGroup& g) {
  std::vector<std::vector<Vertex>> out;
  for (Element y = 1; y < g.order(); ++y) {
    std::vector<Vertex> perm(g.order());
    for (Element x = 0; x < g.order(); ++x) perm[x] = g.mul(x, y);
    out.push_back(std::move(perm));
  }
  return out;
}

std::optional<std::vector<Vertex>> find_isomorphism(const DenseGraph& a, const DenseGraph& b,
                                                    std::uint64_t node_budget) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  if (n > kMaxGraphOrder) throw InvalidInput("Overflow", "graph too large");
  if (n == 0) return std::vector<Vertex>{};
  std::vector<std::size_t> da(n), db(n);
  for (Vertex u = 0; u < n; ++u) da[u] = a.degree(u), db[u] = b.degree(u);
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;

  IrSearch sa(a, node_budget);
  sa.set_first_only(true);
  sa.run(std::vector<std::uint32_t>(n, 0));
  const Bits target = sa.first_cert();

  IrSearch sb(b, node_budget);
  sb.set_target(&target);
  sb.run(std::vector<std::uint32_t>(n, 0));
  if (!sb.match()) return std::nullopt;
  std::vector<Vertex> iso(n);
  const auto& oa = sa.first_order();
  const auto& ob = *sb.match();
  for (std::size_t i = 0; i < n; ++i) iso[oa[i]] = ob[i];
  return iso;
}

}  // namespace neumaier
