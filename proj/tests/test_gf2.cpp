#include <gtest/gtest.h>

#include <random>

#include "neumaier/errors.hpp"
#include "neumaier/gf2.hpp"
#include "oracle.hpp"

using namespace neumaier;
using namespace neumaier::gf2;

namespace {

bool irreducible_brute(std::uint32_t poly) {
  const int d = 31 - __builtin_clz(poly);
  if (d < 1) return false;
  // Compare against every product of two polynomials of positive degree.
  for (std::uint32_t a = 2; a < (1u << d); ++a)
    for (std::uint32_t b = 2; b < (1u << d); ++b) {
      std::uint64_t p = 0;
      for (int i = 0; i < 32; ++i)
        if ((b >> i) & 1) p ^= static_cast<std::uint64_t>(a) << i;
      if (p == poly) return false;
    }
  return true;
}

}  // namespace

TEST(Gf2, IrreducibilityMatchesBruteForce) {
  for (std::uint32_t p = 2; p < 512; ++p) EXPECT_EQ(is_irreducible(p), irreducible_brute(p)) << p;
}

TEST(Gf2, DefaultPolynomialsArePrimitive) {
  for (unsigned d = 1; d <= 16; ++d) {
    const auto f = default_field(d);
    EXPECT_EQ(f.degree(), d);
    EXPECT_TRUE(is_irreducible(f.poly()));
    if (d <= 12) {
      // x generates the multiplicative group.
      const std::uint32_t x = d == 1 ? 1 : 2;
      std::uint32_t p = x, order = 1;
      while (p != 1) p = gf_mul(f, p, x), ++order;
      EXPECT_EQ(order, (1u << d) - 1) << d;
    }
  }
  EXPECT_THROW(default_field(0), InvalidInput);
  EXPECT_THROW(default_field(17), InvalidInput);
  EXPECT_THROW(BinaryField(4, 0b10001), InvalidInput);  // x^4 + 1 is reducible
  EXPECT_THROW(BinaryField(3, 0b10011), InvalidInput);  // degree mismatch
}

TEST(Gf2, MultiplicationMatchesOracle) {
  std::mt19937 rng(3);
  for (unsigned d : {1u, 2u, 3u, 4u, 8u, 13u, 16u}) {
    const auto f = default_field(d);
    std::uniform_int_distribution<std::uint32_t> pick(0, f.size() - 1);
    for (int i = 0; i < 500; ++i) {
      const auto a = pick(rng), b = pick(rng);
      EXPECT_EQ(gf_mul(f, a, b), oracle::gf_mul(a, b, f.poly(), d));
    }
  }
}

TEST(Gf2, FieldAxioms) {
  const auto f = default_field(4);
  for (std::uint32_t a = 0; a < 16; ++a) {
    EXPECT_EQ(gf_pow(f, a, 16), a);  // Frobenius fixes GF(16)
    if (a) EXPECT_EQ(gf_mul(f, a, gf_inv(f, a)), 1u);
    for (std::uint32_t b = 0; b < 16; ++b) {
      EXPECT_EQ(gf_mul(f, a, b), gf_mul(f, b, a));
      for (std::uint32_t c = 0; c < 16; c += 5) {
        EXPECT_EQ(gf_mul(f, a, b ^ c), gf_mul(f, a, b) ^ gf_mul(f, a, c));
      }
    }
  }
  EXPECT_THROW(gf_inv(f, 0), InvalidInput);
}

TEST(Gf2, WalshMatchesDefinition) {
  std::mt19937 rng(11);
  for (unsigned n = 1; n <= 8; ++n) {
    std::vector<std::uint8_t> t(1u << n);
    for (auto& x : t) x = rng() & 1;
    const auto w = walsh_spectrum(make_boolean_function(n, t));
    const auto o = oracle::walsh(t);
    for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(w[i], o[i]);
  }
}

TEST(Gf2, ParsevalHolds) {
  std::mt19937 rng(5);
  std::vector<std::uint8_t> t(64);
  for (auto& x : t) x = rng() & 1;
  std::int64_t sum = 0;
  for (auto w : walsh_spectrum(make_boolean_function(6, t))) sum += w * w;
  EXPECT_EQ(sum, 64 * 64);
}

TEST(Gf2, MaioranaMcFarlandIsBent) {
  for (unsigned h = 1; h <= 6; ++h) {
    const auto f = maiorana_mcfarland(h);
    EXPECT_EQ(f.arity, 2 * h);
    EXPECT_TRUE(is_bent(f)) << h;
    for (std::uint32_t u = 0; u < f.table.size(); ++u) {
      const std::uint32_t x = u >> h, y = u & ((1u << h) - 1);
      EXPECT_EQ(f(u), __builtin_popcount(x & y) % 2);
    }
  }
  EXPECT_THROW(maiorana_mcfarland(0), InvalidInput);
}

TEST(Gf2, BentRejections) {
  EXPECT_FALSE(is_bent(make_boolean_function(2, {0, 0, 0, 0})));
  EXPECT_TRUE(is_bent(make_boolean_function(2, {1, 1, 1, 0})));
  EXPECT_THROW(is_bent(make_boolean_function(3, std::vector<std::uint8_t>(8, 0))), InvalidInput);
  EXPECT_THROW(make_boolean_function(2, {0, 1, 2, 0}), InvalidInput);
  EXPECT_THROW(make_boolean_function(2, {0, 1}), InvalidInput);
}

TEST(Gf2, HexFormat) {
  EXPECT_EQ(to_hex(maiorana_mcfarland(1)), "2:1");
  EXPECT_EQ(to_hex(make_boolean_function(1, {1, 0})), "1:8");
  EXPECT_EQ(to_hex(make_boolean_function(3, {1, 0, 0, 0, 0, 0, 0, 1})), "3:81");
  // f(x1..x4) = x1x3 + x2x4
  EXPECT_EQ(to_hex(maiorana_mcfarland(2)), "4:0536");
  std::mt19937 rng(9);
  for (unsigned n = 1; n <= 10; ++n) {
    std::vector<std::uint8_t> t(1u << n);
    for (auto& x : t) x = rng() & 1;
    const auto f = make_boolean_function(n, t);
    EXPECT_EQ(from_hex(to_hex(f)), f);
  }
  for (const char* bad : {"", "4", "4:", "4:035", "4:03567", "x:0356", "2:33", "4:03g6", "1:1"}) {
    EXPECT_THROW(from_hex(bad), ParseError) << bad;
  }
}

TEST(Gf2, SpreadFamilies) {
  for (unsigned n = 1; n <= 4; ++n) {
    const unsigned q = 1u << n;
    const auto s = spread_family(n, q);  // q - 1 slopes plus the vertical line
    EXPECT_TRUE(verify_spread(s));
    EXPECT_EQ(s.lines.size(), q);
    const auto amb = make_group(s.ambient);
    EXPECT_EQ(amb.order(), q * q);
    for (const auto& line : s.lines) {
      EXPECT_EQ(line.size(), q);
      EXPECT_NO_THROW(Subgroup(amb, line));
    }
    // Lines and baseline cover every point exactly once outside 0.
    std::vector<int> cover(q * q, 0);
    for (const auto& line : s.lines)
      for (Element x : line) ++cover[x];
    for (Element x : s.baseline) ++cover[x];
    for (Element x = 1; x < q * q; ++x) EXPECT_EQ(cover[x], 1) << n;
  }
  EXPECT_EQ(spread_family(1, 2).lines, (std::vector<ElementSet>{{0, 3}, {0, 1}}));
  EXPECT_EQ(spread_family(1, 2).baseline, (ElementSet{0, 2}));
}

TEST(Gf2, SpreadValidation) {
  EXPECT_THROW(spread_family(2, 5), InvalidInput);
  EXPECT_THROW(spread_family(0, 1), InvalidInput);
  using Slopes = std::vector<std::optional<std::uint32_t>>;
  EXPECT_THROW(spread_family(2, Slopes{1, 1}), InvalidInput);
  EXPECT_THROW(spread_family(2, Slopes{0}), InvalidInput);  // slope 0 is the baseline
  EXPECT_THROW(spread_family(2, Slopes{4}), InvalidInput);
  const auto s = spread_family(2, {std::nullopt, 3});
  EXPECT_EQ(s.lines[0], (ElementSet{0, 1, 2, 3}));
  auto broken = s;
  broken.lines[1] = broken.lines[0];
  EXPECT_FALSE(verify_spread(broken));
}
