#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "neumaier/group.hpp"

namespace neumaier {

// Element of the integer group ring ZG: coefficient of element x at index x.
struct GroupRingVector {
  std::vector<std::int64_t> coeffs;

  std::int64_t operator[](Element x) const { return coeffs[x]; }
  bool operator==(const GroupRingVector&) const = default;
};

GroupRingVector zero_vector(const FiniteGroup& g);
GroupRingVector delta(const FiniteGroup& g, Element x);
GroupRingVector indicator(const FiniteGroup& g, std::span<const Element> xs);

GroupRingVector operator+(const GroupRingVector& a, const GroupRingVector& b);
GroupRingVector operator-(const GroupRingVector& a, const GroupRingVector& b);
GroupRingVector operator*(std::int64_t s, const GroupRingVector& a);

// (a * b)[z] = sum over x*y = z of a[x] * b[y]. Throws Error("Overflow")
// if a 64-bit accumulator would overflow.
GroupRingVector convolve(const GroupRingVector& a, const GroupRingVector& b, const FiniteGroup& g);

}  // namespace neumaier
