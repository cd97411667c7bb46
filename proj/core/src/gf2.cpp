#include "neumaier/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "neumaier/errors.hpp"

namespace neumaier::gf2 {

namespace {

int degree_of(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = degree_of(m);
  for (int da = degree_of(a); da >= dm; da = degree_of(a)) a ^= m << (da - dm);
  return a;
}

}  // namespace

bool is_irreducible(std::uint32_t poly) {
  const int d = degree_of(poly);
  if (d < 1) return false;
  if (d == 1) return true;
  if ((poly & 1) == 0) return false;
  // Trial division by every polynomial of degree 1..d/2.
  for (std::uint64_t q = 2; degree_of(q) <= d / 2; ++q) {
    if (poly_mod(poly, q) == 0) return false;
  }
  return true;
}

BinaryField::BinaryField(unsigned degree, std::uint32_t poly) : degree_(degree), poly_(poly) {
  if (degree < 1 || degree > 16) throw InvalidInput("field degree must be in [1, 16]");
  if (degree_of(poly) != static_cast<int>(degree)) {
    throw InvalidInput("polynomial degree does not match field degree " + std::to_string(degree));
  }
  if (!is_irreducible(poly)) throw InvalidInput("polynomial " + std::to_string(poly) + " is reducible");
}

std::uint32_t default_polynomial(unsigned degree) {
  static constexpr std::uint32_t kTable[17] = {
      0,
      0b11,
      0b111,
      0b1011,
      0b10011,
      0b100101,
      0b1011011,
      0b10000011,
      0b100011101,
      (1u << 9) | (1u << 4) | 1u,
      (1u << 10) | (1u << 3) | 1u,
      (1u << 11) | (1u << 2) | 1u,
      (1u << 12) | (1u << 6) | (1u << 4) | (1u << 1) | 1u,
      (1u << 13) | (1u << 4) | (1u << 3) | (1u << 1) | 1u,
      (1u << 14) | (1u << 10) | (1u << 6) | (1u << 1) | 1u,
      (1u << 15) | (1u << 1) | 1u,
      (1u << 16) | (1u << 12) | (1u << 3) | (1u << 1) | 1u,
  };
  if (degree < 1 || degree > 16) throw InvalidInput("no default polynomial for degree " + std::to_string(degree));
  return kTable[degree];
}

BinaryField default_field(unsigned degree) { return BinaryField(degree, default_polynomial(degree)); }

std::uint32_t gf_mul(const BinaryField& f, std::uint32_t a, std::uint32_t b) {
  const unsigned d = f.degree();
  const std::uint32_t top = std::uint32_t{1} << d;
  std::uint32_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= f.poly();
  }
  return r;
}

std::uint32_t gf_pow(const BinaryField& f, std::uint32_t a, std::uint64_t e) {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = gf_mul(f, r, a);
    a = gf_mul(f, a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t gf_inv(const BinaryField& f, std::uint32_t a) {
  if (a == 0) throw InvalidInput("zero has no inverse");
  return gf_pow(f, a, f.size() - 2);
}

BooleanFunction make_boolean_function(unsigned arity, std::vector<std::uint8_t> table) {
  if (arity > 24) throw InvalidInput("boolean function arity above 24");
  if (table.size() != (std::size_t{1} << arity)) throw InvalidInput("truth table length must be 2^arity");
  for (auto& b : table) {
    if (b > 1) throw InvalidInput("truth table entries must be 0 or 1");
  }
  return BooleanFunction{arity, std::move(table)};
}

std::vector<std::int64_t> walsh_spectrum(const BooleanFunction& f) {
  if (f.arity > 24) throw InvalidInput("boolean function arity above 24");
  const std::size_t len = std::size_t{1} << f.arity;
  if (f.table.size() != len) throw InvalidInput("truth table length must be 2^arity");
  std::vector<std::int64_t> w(len);
  for (std::size_t x = 0; x < len; ++x) w[x] = f.table[x] ? -1 : 1;
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t a = w[j], b = w[j + h];
        w[j] = a + b;
        w[j + h] = a - b;
      }
    }
  }
  return w;
}

bool is_bent(const BooleanFunction& f) {
  if (f.arity % 2 != 0) throw InvalidInput("bentness needs an even number of variables");
  const std::int64_t flat = std::int64_t{1} << (f.arity / 2);
  const auto w = walsh_spectrum(f);
  return std::all_of(w.begin(), w.end(), [&](std::int64_t x) { return std::llabs(x) == flat; });
}

BooleanFunction maiorana_mcfarland(unsigned half) {
  if (half < 1 || half > 12) throw InvalidInput("maiorana_mcfarland needs 1 <= half <= 12");
  const unsigned n = 2 * half;
  const std::uint32_t mask = (std::uint32_t{1} << half) - 1;
  std::vector<std::uint8_t> t(std::size_t{1} << n);
  for (std::uint32_t u = 0; u < t.size(); ++u) {
    t[u] = static_cast<std::uint8_t>(std::popcount((u >> half) & u & mask) & 1);
  }
  return BooleanFunction{n, std::move(t)};
}

std::string to_hex(const BooleanFunction& f) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = std::to_string(f.arity) + ":";
  const std::size_t len = f.table.size();
  for (std::size_t i = 0; i < len; i += 4) {
    unsigned nib = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      nib <<= 1;
      if (i + j < len) nib |= f.table[i + j] & 1;
    }
    out += kDigits[nib];
  }
  return out;
}

BooleanFunction from_hex(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0) throw ParseError("boolean function must look like n:hex");
  unsigned arity = 0;
  for (char c : text.substr(0, colon)) {
    if (c < '0' || c > '9') throw ParseError("bad arity in boolean function");
    arity = arity * 10 + static_cast<unsigned>(c - '0');
    if (arity > 24) throw ParseError("boolean function arity above 24");
  }
  const std::size_t len = std::size_t{1} << arity;
  const auto hex = text.substr(colon + 1);
  if (hex.size() != (len + 3) / 4) throw ParseError("truth table has wrong number of hex digits");
  std::vector<std::uint8_t> t(len);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const char c = hex[i];
    unsigned nib;
    if (c >= '0' && c <= '9') nib = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f') nib = static_cast<unsigned>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F') nib = static_cast<unsigned>(c - 'A' + 10);
    else throw ParseError(std::string("bad hex digit '") + c + "'");
    for (std::size_t j = 0; j < 4; ++j) {
      const unsigned bit = (nib >> (3 - j)) & 1;
      if (4 * i + j < len) t[4 * i + j] = static_cast<std::uint8_t>(bit);
      else if (bit) throw ParseError("padding bits must be zero");
    }
  }
  return BooleanFunction{arity, std::move(t)};
}

SpreadFamily spread_family(unsigned n, unsigned count) {
  if (n < 1 || n > 8) throw InvalidInput("spread_family needs 1 <= n <= 8");
  const std::uint32_t q = std::uint32_t{1} << n;
  if (count < 1 || count > q) {
    throw InvalidInput("at most " + std::to_string(q) + " lines avoid the baseline for n=" + std::to_string(n));
  }
  std::vector<std::optional<std::uint32_t>> slopes;
  for (std::uint32_t s = 1; s < q && slopes.size() < count; ++s) slopes.emplace_back(s);
  if (slopes.size() < count) slopes.emplace_back(std::nullopt);
  return spread_family(n, std::move(slopes));
}

SpreadFamily spread_family(unsigned n, std::vector<std::optional<std::uint32_t>> slopes) {
  if (n < 1 || n > 8) throw InvalidInput("spread_family needs 1 <= n <= 8");
  SpreadFamily s{n, default_field(n), "C2^" + std::to_string(2 * n), {}, {}, {}};
  const std::uint32_t q = s.field.size();
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    const auto& sl = slopes[i];
    if (sl && (*sl == 0 || *sl >= q)) throw InvalidInput("slope must be a nonzero field element");
    for (std::size_t j = 0; j < i; ++j) {
      if (slopes[j] == sl) throw InvalidInput("repeated slope in spread family");
    }
    ElementSet line;
    for (std::uint32_t t = 0; t < q; ++t) {
      line.push_back(sl ? spread_point(n, t, gf_mul(s.field, *sl, t)) : spread_point(n, 0, t));
    }
    std::sort(line.begin(), line.end());
    s.lines.push_back(std::move(line));
  }
  s.slopes = std::move(slopes);
  for (std::uint32_t a = 0; a < q; ++a) s.baseline.push_back(spread_point(n, a, 0));
  if (!verify_spread(s)) throw Error("Internal", "spread family lines intersect nontrivially");
  return s;
}

bool verify_spread(const SpreadFamily& s) {
  auto meet = [](const ElementSet& a, const ElementSet& b) {
    std::size_t c = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] < b[j]) ++i;
      else if (b[j] < a[i]) ++j;
      else ++c, ++i, ++j;
    }
    return c;
  };
  for (std::size_t i = 0; i < s.lines.size(); ++i) {
    if (meet(s.lines[i], s.baseline) != 1) return false;
    for (std::size_t j = i + 1; j < s.lines.size(); ++j) {
      if (meet(s.lines[i], s.lines[j]) != 1) return false;
    }
  }
  return true;
}

}  // namespace neumaier::gf2
