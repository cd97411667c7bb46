#pragma once

// Reference implementations used as test oracles. They are deliberately
// naive and share no code with the library beyond the FiniteGroup table.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "neumaier/group.hpp"

namespace oracle {

using Table = std::vector<std::vector<std::uint32_t>>;

inline Table cyclic(std::uint32_t n) {
  Table t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

// Element a*(n/2) + i is r^i s^a; (r^i s^a)(r^j s^b) = r^(i + (-1)^a j) s^(a+b).
inline Table dihedral(std::uint32_t n) {
  const std::uint32_t h = n / 2;
  Table t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      const std::uint32_t a = x / h, i = x % h, b = y / h, j = y % h;
      const std::uint32_t r = a == 0 ? (i + j) % h : (i + h - j) % h;
      t[x][y] = ((a + b) % 2) * h + r;
    }
  return t;
}

inline Table product(const Table& a, const Table& b) {
  const std::uint32_t na = a.size(), nb = b.size();
  Table t(na * nb, std::vector<std::uint32_t>(na * nb));
  for (std::uint32_t x = 0; x < na * nb; ++x)
    for (std::uint32_t y = 0; y < na * nb; ++y) t[x][y] = a[x / nb][y / nb] * nb + b[x % nb][y % nb];
  return t;
}

inline Table table_of(const neumaier::FiniteGroup& g) {
  Table t(g.order(), std::vector<std::uint32_t>(g.order()));
  for (std::uint32_t x = 0; x < g.order(); ++x)
    for (std::uint32_t y = 0; y < g.order(); ++y) t[x][y] = g.mul(x, y);
  return t;
}

inline std::uint32_t inverse(const Table& t, std::uint32_t x) {
  for (std::uint32_t y = 0; y < t.size(); ++y)
    if (t[x][y] == 0) return y;
  return UINT32_MAX;
}

using Matrix = std::vector<std::vector<int>>;

// x ~ y iff y x^-1 in S.
inline Matrix cayley(const Table& t, const std::vector<std::uint32_t>& s) {
  const std::size_t n = t.size();
  std::set<std::uint32_t> ss(s.begin(), s.end());
  Matrix a(n, std::vector<int>(n, 0));
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) a[x][y] = ss.count(t[y][inverse(t, x)]) ? 1 : 0;
  return a;
}

inline int common(const Matrix& a, std::size_t u, std::size_t v) {
  int c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += a[u][w] && a[v][w];
  return c;
}

struct Er {
  int v, k, lambda;
};

inline std::optional<Er> edge_regular(const Matrix& a) {
  const int n = a.size();
  int k = -1, lambda = -1;
  for (int u = 0; u < n; ++u) {
    int d = 0;
    for (int w = 0; w < n; ++w) d += a[u][w];
    if (k >= 0 && d != k) return std::nullopt;
    k = d;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (a[u][v]) {
        const int c = common(a, u, v);
        if (lambda >= 0 && c != lambda) return std::nullopt;
        lambda = c;
      }
  return Er{n, k, std::max(lambda, 0)};
}

inline std::optional<int> srg_mu(const Matrix& a) {
  if (!edge_regular(a)) return std::nullopt;
  int mu = -1;
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t v = u + 1; v < a.size(); ++v)
      if (!a[u][v]) {
        const int c = common(a, u, v);
        if (mu >= 0 && c != mu) return std::nullopt;
        mu = c;
      }
  return std::max(mu, 0);
}

struct Neumaier {
  int v, k, lambda, m, s;
  bool strict;
};

// Edge-regular, non-complete, and the right cosets of H form a spread of
// m-regular cliques with m >= 1.
inline std::optional<Neumaier> neumaier(const Table& t, const std::vector<std::uint32_t>& h,
                                        const std::vector<std::uint32_t>& s) {
  const Matrix a = cayley(t, s);
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t v = 0; v < a.size(); ++v)
      if (a[u][v] != a[v][u]) return std::nullopt;
  const auto er = edge_regular(a);
  if (!er || er->k == er->v - 1) return std::nullopt;
  const std::size_t n = t.size();
  std::vector<int> coset(n, -1);
  int ncos = 0;
  for (std::uint32_t g = 0; g < n; ++g) {
    if (coset[g] >= 0) continue;
    for (auto x : h) coset[t[x][g]] = ncos;
    ++ncos;
  }
  if (ncos == 1) return std::nullopt;
  int m = -1;
  for (int c = 0; c < ncos; ++c) {
    std::vector<std::uint32_t> members;
    for (std::uint32_t x = 0; x < n; ++x)
      if (coset[x] == c) members.push_back(x);
    for (auto x : members)
      for (auto y : members)
        if (x != y && !a[x][y]) return std::nullopt;
    for (std::uint32_t x = 0; x < n; ++x) {
      if (coset[x] == c) continue;
      int cnt = 0;
      for (auto y : members) cnt += a[x][y];
      if (m >= 0 && cnt != m) return std::nullopt;
      m = cnt;
    }
  }
  if (m < 1) return std::nullopt;
  return Neumaier{er->v, er->k, er->lambda, m, static_cast<int>(h.size()), !srg_mu(a).has_value()};
}

// Brute-force isomorphism test for small graphs.
inline bool isomorphic(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = 0; v < n && ok; ++v) ok = a[u][v] == b[p[u]][p[v]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Multiset of t1 t2^-1 over ordered pairs of distinct members.
inline std::vector<int> differences(const Table& t, const std::vector<std::uint32_t>& members) {
  std::vector<int> c(t.size(), 0);
  for (auto a : members)
    for (auto b : members)
      if (a != b) ++c[t[a][inverse(t, b)]];
  return c;
}

// Walsh coefficient by definition: sum_x (-1)^(f(x) + a.x).
inline std::vector<int> walsh(const std::vector<std::uint8_t>& f) {
  const std::size_t n = f.size();
  std::vector<int> w(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x) w[a] += ((f[x] + __builtin_popcountll(a & x)) % 2) ? -1 : 1;
  return w;
}

// Carry-less product followed by long division.
inline std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, std::uint32_t poly, unsigned degree) {
  std::uint64_t p = 0;
  for (unsigned i = 0; i < 32; ++i)
    if ((b >> i) & 1) p ^= static_cast<std::uint64_t>(a) << i;
  for (int i = 63; i >= static_cast<int>(degree); --i)
    if ((p >> i) & 1) p ^= static_cast<std::uint64_t>(poly) << (i - degree);
  return static_cast<std::uint32_t>(p);
}

}  // namespace oracle
