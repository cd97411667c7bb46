#include "neumaier/group_ring.hpp"

#include "neumaier/errors.hpp"

namespace neumaier {

namespace {

void check_length(const GroupRingVector& a, const FiniteGroup& g) {
  if (a.coeffs.size() != g.order()) throw InvalidInput("group ring vector has wrong length");
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("Overflow", "group ring coefficient overflow");
  return r;
}

}  // namespace

GroupRingVector zero_vector(const FiniteGroup& g) { return {std::vector<std::int64_t>(g.order(), 0)}; }

GroupRingVector delta(const FiniteGroup& g, Element x) {
  auto v = zero_vector(g);
  v.coeffs.at(x) = 1;
  return v;
}

GroupRingVector indicator(const FiniteGroup& g, std::span<const Element> xs) {
  auto v = zero_vector(g);
  for (Element x : xs) v.coeffs.at(x) = 1;
  return v;
}

GroupRingVector operator+(const GroupRingVector& a, const GroupRingVector& b) {
  if (a.coeffs.size() != b.coeffs.size()) throw InvalidInput("length mismatch");
  GroupRingVector out = a;
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] = checked_add(out.coeffs[i], b.coeffs[i]);
  return out;
}

GroupRingVector operator-(const GroupRingVector& a, const GroupRingVector& b) {
  return a + (-1) * b;
}

GroupRingVector operator*(std::int64_t s, const GroupRingVector& a) {
  GroupRingVector out = a;
  for (auto& c : out.coeffs) {
    if (__builtin_mul_overflow(c, s, &c)) throw Error("Overflow", "group ring coefficient overflow");
  }
  return out;
}

GroupRingVector convolve(const GroupRingVector& a, const GroupRingVector& b, const FiniteGroup& g) {
  check_length(a, g);
  check_length(b, g);
  auto out = zero_vector(g);
  const std::size_t v = g.order();
  for (Element x = 0; x < v; ++x) {
    const std::int64_t ax = a.coeffs[x];
    if (ax == 0) continue;
    const auto row = g.row(x);
    for (Element y = 0; y < v; ++y) {
      const std::int64_t by = b.coeffs[y];
      if (by == 0) continue;
      std::int64_t p;
      if (__builtin_mul_overflow(ax, by, &p)) throw Error("Overflow", "group ring coefficient overflow");
      out.coeffs[row[y]] = checked_add(out.coeffs[row[y]], p);
    }
  }
  return out;
}

}  // namespace neumaier
