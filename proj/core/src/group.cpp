#include "neumaier/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

#include "neumaier/errors.hpp"

namespace neumaier {

namespace {

struct Factor {
  char kind;  // 'C' or 'D'
  std::size_t n;
  std::size_t power;
};

std::size_t parse_number(std::string_view s, std::string_view whole) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("bad number '" + std::string(s) + "' in group spec '" + std::string(whole) + "'");
  }
  return value;
}

std::vector<Factor> parse_factors(std::string_view spec) {
  std::string compact;
  for (char c : spec) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw ParseError("empty group spec");

  std::vector<Factor> factors;
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    std::size_t next = compact.find('x', pos);
    if (next == std::string::npos) next = compact.size();
    std::string_view token(compact.data() + pos, next - pos);
    if (token.size() < 2 || (token[0] != 'C' && token[0] != 'D')) {
      throw ParseError("bad factor '" + std::string(token) + "' in group spec '" + compact + "'");
    }
    Factor f{token[0], 0, 1};
    std::string_view rest = token.substr(1);
    if (auto caret = rest.find('^'); caret != std::string_view::npos) {
      f.power = parse_number(rest.substr(caret + 1), compact);
      rest = rest.substr(0, caret);
    }
    f.n = parse_number(rest, compact);
    if (f.n == 0 || f.power == 0) throw ParseError("zero order or exponent in '" + compact + "'");
    if (f.kind == 'D' && (f.n % 2 != 0 || f.n < 4)) {
      throw ParseError("dihedral order must be even and at least 4 in '" + compact + "'");
    }
    factors.push_back(f);
    pos = next + 1;
  }
  return factors;
}

std::string factor_name(char kind, std::size_t n, std::size_t power) {
  std::string s(1, kind);
  s += std::to_string(n);
  if (power > 1) s += "^" + std::to_string(power);
  return s;
}

FiniteGroup cyclic(std::size_t n) {
  std::vector<Element> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return FiniteGroup("C" + std::to_string(n), n, std::move(mul), std::move(labels));
}

FiniteGroup dihedral(std::size_t n) {
  const std::size_t half = n / 2;
  std::vector<Element> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t a = x % half, fx = x / half;
    labels[x] = "r" + std::to_string(a) + (fx ? "s" : "");
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t b = y % half, fy = y / half;
      // r^a s^fx * r^b s^fy = r^(a +- b) s^(fx + fy)
      const std::size_t rot = fx ? (a + half - b) % half : (a + b) % half;
      mul[x * n + y] = static_cast<Element>(((fx + fy) % 2) * half + rot);
    }
  }
  return FiniteGroup("D" + std::to_string(n), n, std::move(mul), std::move(labels));
}

ElementSet closure(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<std::uint8_t> seen(g.order(), 0);
  ElementSet out{kIdentity};
  seen[kIdentity] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Element y = out[i];
    for (Element x : gens) {
      const Element z = g.mul(y, x);
      if (!seen[z]) {
        seen[z] = 1;
        out.push_back(z);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FiniteGroup::FiniteGroup(std::string descriptor, std::size_t order, std::vector<Element> mul,
                         std::vector<std::string> labels) {
  if (order == 0) throw InvalidInput("group order must be positive");
  if (mul.size() != order * order) throw InvalidInput("multiplication table has wrong size");
  if (labels.empty()) {
    labels.resize(order);
    for (std::size_t i = 0; i < order; ++i) labels[i] = std::to_string(i);
  }
  if (labels.size() != order) throw InvalidInput("label list has wrong size");

  auto data = std::make_shared<Data>();
  data->descriptor = std::move(descriptor);
  data->order = order;
  data->mul = std::move(mul);
  data->labels = std::move(labels);

  const auto& m = data->mul;
  std::vector<std::uint8_t> seen(order);
  for (std::size_t a = 0; a < order; ++a) {
    if (m[a] != a || m[a * order] != a) throw InvalidInput("index 0 is not the identity");
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < order; ++b) {
      const Element c = m[a * order + b];
      if (c >= order || seen[c]) throw InvalidInput("row " + std::to_string(a) + " is not a permutation");
      seen[c] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < order; ++b) {
      const Element c = m[b * order + a];
      if (seen[c]) throw InvalidInput("column " + std::to_string(a) + " is not a permutation");
      seen[c] = 1;
    }
  }

  data->inv.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      if (m[a * order + b] == kIdentity) {
        data->inv[a] = static_cast<Element>(b);
        break;
      }
    }
    if (m[data->inv[a] * order + a] != kIdentity) {
      throw InvalidInput("element " + std::to_string(a) + " has no two-sided inverse");
    }
  }

  data->element_order.assign(order, 1);
  std::uint64_t exponent = 1;
  for (std::size_t a = 0; a < order; ++a) {
    Element p = static_cast<Element>(a);
    std::uint32_t k = 1;
    while (p != kIdentity) {
      p = m[p * order + a];
      if (++k > order) throw InvalidInput("element order exceeds group order");
    }
    data->element_order[a] = k;
    exponent = std::lcm(exponent, static_cast<std::uint64_t>(k));
  }
  data->exponent = static_cast<std::uint32_t>(exponent);

  for (std::size_t a = 0; a < order && data->abelian; ++a) {
    for (std::size_t b = a + 1; b < order; ++b) {
      if (m[a * order + b] != m[b * order + a]) {
        data->abelian = false;
        break;
      }
    }
  }
  data_ = std::move(data);
}

bool FiniteGroup::check_associativity() const {
  const std::size_t v = order();
  for (Element a = 0; a < v; ++a) {
    for (Element b = 0; b < v; ++b) {
      const Element ab = mul(a, b);
      for (Element c = 0; c < v; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) return false;
      }
    }
  }
  return true;
}

bool FiniteGroup::same_table(const FiniteGroup& other) const noexcept {
  return data_ == other.data_ || data_->mul == other.data_->mul;
}

std::string normalize_descriptor(std::string_view spec) {
  auto factors = parse_factors(spec);
  std::vector<Factor> merged;
  for (const auto& f : factors) {
    if (f.kind == 'C' && f.n == 1) continue;
    if (!merged.empty() && merged.back().kind == f.kind && merged.back().n == f.n) {
      merged.back().power += f.power;
    } else {
      merged.push_back(f);
    }
  }
  if (merged.empty()) return "C1";
  std::string out;
  for (const auto& f : merged) {
    if (!out.empty()) out += "x";
    out += factor_name(f.kind, f.n, f.power);
  }
  return out;
}

FiniteGroup make_group(std::string_view spec, std::size_t max_order) {
  const auto factors = parse_factors(spec);
  std::size_t order = 1;
  for (const auto& f : factors) {
    for (std::size_t i = 0; i < f.power; ++i) {
      if (f.n > max_order || order > max_order / f.n) {
        throw InvalidInput("Overflow", "group '" + std::string(spec) + "' exceeds maximum order " +
                                           std::to_string(max_order));
      }
      order *= f.n;
    }
  }

  FiniteGroup result = cyclic(1);
  bool first = true;
  for (const auto& f : factors) {
    for (std::size_t i = 0; i < f.power; ++i) {
      FiniteGroup factor = f.kind == 'C' ? cyclic(f.n) : dihedral(f.n);
      result = first ? factor : direct_product(result, factor, max_order);
      first = false;
    }
  }
  const std::string normalized = normalize_descriptor(spec);
  std::vector<Element> mul(result.table().begin(), result.table().end());
  return FiniteGroup(normalized, result.order(), std::move(mul), result.labels());
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t max_order) {
  const std::size_t na = a.order(), nb = b.order();
  if (nb != 0 && na > max_order / nb) {
    throw InvalidInput("Overflow", "direct product order exceeds maximum " + std::to_string(max_order));
  }
  const std::size_t v = na * nb;
  std::vector<Element> mul(v * v);
  std::vector<std::string> labels(v);
  auto strip = [](const std::string& s) {
    return s.size() >= 2 && s.front() == '(' && s.back() == ')' ? s.substr(1, s.size() - 2) : s;
  };
  for (std::size_t x = 0; x < v; ++x) {
    const Element x1 = static_cast<Element>(x / nb), x2 = static_cast<Element>(x % nb);
    labels[x] = "(" + strip(a.label(x1)) + "," + strip(b.label(x2)) + ")";
    for (std::size_t y = 0; y < v; ++y) {
      const Element y1 = static_cast<Element>(y / nb), y2 = static_cast<Element>(y % nb);
      mul[x * v + y] = static_cast<Element>(a.mul(x1, y1) * nb + b.mul(x2, y2));
    }
  }
  std::string descriptor;
  try {
    descriptor = normalize_descriptor(a.descriptor() + "x" + b.descriptor());
  } catch (const ParseError&) {
    descriptor = "(" + a.descriptor() + ")x(" + b.descriptor() + ")";
  }
  return FiniteGroup(descriptor, v, std::move(mul), std::move(labels));
}

Subgroup::Subgroup(FiniteGroup parent, ElementSet members)
    : parent_(std::move(parent)), members_(std::move(members)), mask_(parent_.order(), 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Element x : members_) {
    if (x >= parent_.order()) throw InvalidInput("subgroup member out of range");
    mask_[x] = 1;
  }
  if (members_.empty() || members_.front() != kIdentity) {
    throw InvalidInput("subgroup must contain the identity");
  }
  if (parent_.order() % members_.size() != 0) {
    throw InvalidInput("subgroup order does not divide the group order");
  }
  for (Element x : members_) {
    if (!mask_[parent_.inv(x)]) throw InvalidInput("subgroup not closed under inverses");
    for (Element y : members_) {
      if (!mask_[parent_.mul(x, y)]) throw InvalidInput("subgroup not closed under multiplication");
    }
  }
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> gens) {
  for (Element x : gens) {
    if (x >= g.order()) throw InvalidInput("generator out of range");
  }
  return Subgroup(g, closure(g, gens));
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup(g, {kIdentity}); }

Subgroup whole_group(const FiniteGroup& g) {
  ElementSet all(g.order());
  std::iota(all.begin(), all.end(), Element{0});
  return Subgroup(g, std::move(all));
}

CosetDecomposition right_cosets(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  CosetDecomposition out;
  constexpr std::uint32_t kUnassigned = ~std::uint32_t{0};
  out.coset_of.assign(g.order(), kUnassigned);
  for (Element x = 0; x < g.order(); ++x) {
    if (out.coset_of[x] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(out.reps.size());
    ElementSet coset;
    coset.reserve(h.order());
    for (Element m : h.members()) {
      const Element y = g.mul(m, x);
      out.coset_of[y] = id;
      coset.push_back(y);
    }
    std::sort(coset.begin(), coset.end());
    out.reps.push_back(x);
    out.cosets.push_back(std::move(coset));
  }
  return out;
}

bool is_normal(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  for (Element x = 0; x < g.order(); ++x) {
    const Element xi = g.inv(x);
    for (Element m : h.members()) {
      if (!h.contains(g.mul(g.mul(x, m), xi))) return false;
    }
  }
  return true;
}

Subgroup center(const FiniteGroup& g) {
  ElementSet z;
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return Subgroup(g, std::move(z));
}

ElementSet inverse_set(const FiniteGroup& g, std::span<const Element> xs) {
  ElementSet out;
  out.reserve(xs.size());
  for (Element x : xs) out.push_back(g.inv(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_inverse_closed(const FiniteGroup& g, std::span<const Element> xs) {
  std::vector<std::uint8_t> in(g.order(), 0);
  for (Element x : xs) in[x] = 1;
  for (Element x : xs) {
    if (!in[g.inv(x)]) return false;
  }
  return true;
}

std::vector<Subgroup> subgroups_of_order(const FiniteGroup& g, std::size_t order) {
  if (order == 0 || g.order() % order != 0) return {};
  struct Node {
    ElementSet members;
    std::vector<Element> gens;
  };
  std::set<ElementSet> seen;
  std::vector<Node> queue{{{kIdentity}, {}}};
  seen.insert({kIdentity});
  std::set<ElementSet> found;
  if (order == 1) found.insert({kIdentity});
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    if (queue[qi].members.size() >= order) continue;
    const Node node = queue[qi];
    std::vector<std::uint8_t> in(g.order(), 0);
    for (Element x : node.members) in[x] = 1;
    for (Element x = 1; x < g.order(); ++x) {
      if (in[x] || order % g.element_order(x) != 0) continue;
      auto gens = node.gens;
      gens.push_back(x);
      ElementSet members = closure(g, gens);
      if (order % members.size() != 0) continue;
      if (!seen.insert(members).second) continue;
      if (members.size() == order) found.insert(members);
      queue.push_back({std::move(members), std::move(gens)});
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& m : found) out.emplace_back(g, m);
  return out;
}

std::vector<Element> generating_sequence(const FiniteGroup& g, std::span<const Element> seed) {
  std::vector<Element> gens;
  ElementSet current{kIdentity};
  std::vector<std::uint8_t> in(g.order(), 0);
  in[kIdentity] = 1;
  auto refresh = [&] {
    current = closure(g, gens);
    std::fill(in.begin(), in.end(), 0);
    for (Element x : current) in[x] = 1;
  };
  for (Element x : seed) {
    if (x >= g.order()) throw InvalidInput("seed element out of range");
    if (in[x]) continue;
    gens.push_back(x);
    refresh();
  }
  while (current.size() < g.order()) {
    Element best = 0;
    std::uint32_t best_order = 0;
    for (Element x = 1; x < g.order(); ++x) {
      if (!in[x] && g.element_order(x) > best_order) {
        best = x;
        best_order = g.element_order(x);
      }
    }
    gens.push_back(best);
    refresh();
  }
  return gens;
}

InducedGroup induced_group(const Subgroup& h, std::string descriptor) {
  const FiniteGroup& g = h.parent();
  const auto& members = h.members();
  const std::size_t n = members.size();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < n; ++i) local[members[i]] = static_cast<Element>(i);
  std::vector<Element> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = g.label(members[i]);
    for (std::size_t j = 0; j < n; ++j) mul[i * n + j] = local[g.mul(members[i], members[j])];
  }
  if (descriptor.empty()) descriptor = "subgroup(" + g.descriptor() + ")";
  return InducedGroup{FiniteGroup(std::move(descriptor), n, std::move(mul), std::move(labels)),
                      members};
}

ElementSet make_element_set(const FiniteGroup& g, std::vector<Element> xs) {
  for (Element x : xs) {
    if (x >= g.order()) {
      throw InvalidInput("element " + std::to_string(x) + " out of range for group of order " +
                         std::to_string(g.order()));
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

ElementSet right_translate(const FiniteGroup& g, std::span<const Element> xs, Element by) {
  ElementSet out;
  out.reserve(xs.size());
  for (Element x : xs) out.push_back(g.mul(x, by));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace neumaier
