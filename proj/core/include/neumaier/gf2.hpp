#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "neumaier/group.hpp"

namespace neumaier::gf2 {

// GF(2^d) with elements as bitmasks of polynomial coefficients (bit i is
// the coefficient of x^i).
class BinaryField {
 public:
  // Throws InvalidInput unless `poly` has degree d and is irreducible.
  BinaryField(unsigned degree, std::uint32_t poly);

  unsigned degree() const noexcept { return degree_; }
  std::uint32_t poly() const noexcept { return poly_; }
  std::uint32_t size() const noexcept { return std::uint32_t{1} << degree_; }

 private:
  unsigned degree_;
  std::uint32_t poly_;
};

// Fixed primitive polynomial for 1 <= d <= 16.
std::uint32_t default_polynomial(unsigned degree);
BinaryField default_field(unsigned degree);

bool is_irreducible(std::uint32_t poly);

std::uint32_t gf_mul(const BinaryField& f, std::uint32_t a, std::uint32_t b);
std::uint32_t gf_pow(const BinaryField& f, std::uint32_t a, std::uint64_t e);
// Throws InvalidInput for a == 0.
std::uint32_t gf_inv(const BinaryField& f, std::uint32_t a);

// Boolean function on n variables. table[u] is f at input u, where variable
// x_1 is the most significant bit of u and x_n the least significant.
struct BooleanFunction {
  unsigned arity = 0;
  std::vector<std::uint8_t> table;

  std::uint8_t operator()(std::uint32_t u) const { return table[u]; }
  bool operator==(const BooleanFunction&) const = default;
};

BooleanFunction make_boolean_function(unsigned arity, std::vector<std::uint8_t> table);

// W_f(u) = sum_x (-1)^(f(x) + u.x), computed with the fast Walsh-Hadamard
// transform. Requires arity <= 24.
std::vector<std::int64_t> walsh_spectrum(const BooleanFunction& f);

// |W_f(u)| = 2^(n/2) for all u. Throws InvalidInput for odd arity.
bool is_bent(const BooleanFunction& f);

// f(x, y) = x . y on 2*half variables (x = first half, y = second half).
BooleanFunction maiorana_mcfarland(unsigned half);

// "n:hex" where hex is the truth table, f(0) in the most significant bit of
// the first digit. Tables shorter than 4 bits are left-aligned in one digit.
std::string to_hex(const BooleanFunction& f);
BooleanFunction from_hex(std::string_view text);

// A family of order-2^n subgroups of C2^(2n) = GF(2^n) x GF(2^n) meeting
// each other and the baseline A0 = {(a, 0)} trivially.
//
// Coordinate layout: element (x, y) has index x * 2^n + y, the index of
// make_group("C2^(2n)"). A line is {(t, slope * t)} or, for slope nullopt,
// the vertical line {(0, t)}.
struct SpreadFamily {
  unsigned n = 0;
  BinaryField field{1, 0b11};
  std::string ambient;
  std::vector<std::optional<std::uint32_t>> slopes;
  std::vector<ElementSet> lines;
  ElementSet baseline;
};

// `count` lines: nonzero slopes 1, 2, ... in field-element order, followed
// by the vertical line when all 2^n - 1 slopes are used.
SpreadFamily spread_family(unsigned n, unsigned count);
SpreadFamily spread_family(unsigned n, std::vector<std::optional<std::uint32_t>> slopes);

// Exhaustive check of the pairwise and baseline trivial-intersection property.
bool verify_spread(const SpreadFamily& s);

// Index of (x, y) in the ambient group.
inline Element spread_point(unsigned n, std::uint32_t x, std::uint32_t y) {
  return static_cast<Element>((x << n) | y);
}

}  // namespace neumaier::gf2
