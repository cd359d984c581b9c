#pragma once

// Test-only oracles, written independently of the library algorithms.

#include <functional>
#include <random>
#include <vector>

#include "rootrel/lattice.hpp"
#include "rootrel/polynomial.hpp"

namespace support {

using rootrel::IntPoly;
using rootrel::Integer;
using rootrel::IntVector;
using rootrel::RatScalar;

inline IntPoly random_poly(std::mt19937_64& rng, int degree, long height, bool exact_degree = true) {
  std::uniform_int_distribution<long> c(-height, height);
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1);
  for (auto& x : v) x = c(rng);
  while (exact_degree && v.back() == 0) v.back() = c(rng);
  return IntPoly(std::move(v));
}

// Determinant by cofactor-free rational elimination.
inline RatScalar determinant(std::vector<std::vector<RatScalar>> a) {
  const std::size_t n = a.size();
  RatScalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const RatScalar f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

// Res(a, b) as the determinant of the Sylvester matrix.
inline Integer sylvester_resultant(const IntPoly& a, const IntPoly& b) {
  const std::size_t m = static_cast<std::size_t>(a.degree()), n = static_cast<std::size_t>(b.degree());
  const std::size_t size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<RatScalar>> s(size, std::vector<RatScalar>(size));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = a[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = b[n - k];
  const RatScalar d = determinant(s);
  return d.get_num();
}

// Power sums p_1..p_K of the roots of f, by Newton's identities.
inline std::vector<RatScalar> power_sums(const IntPoly& f, std::size_t K) {
  const std::size_t n = static_cast<std::size_t>(f.degree());
  // monic: x^n + c_{n-1} x^{n-1} + ...; e_k = (-1)^k c_{n-k}
  std::vector<RatScalar> e(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    e[k] = RatScalar(f[n - k], f.leading());
    e[k].canonicalize();
    if (k % 2 == 1) e[k] = -e[k];
  }
  std::vector<RatScalar> p(K + 1);
  for (std::size_t k = 1; k <= K; ++k) {
    RatScalar s = 0;
    for (std::size_t i = 1; i < k && i <= n; ++i) s += ((i % 2 == 1) ? 1 : -1) * e[i] * p[k - i];
    if (k <= n) s += ((k % 2 == 1) ? 1 : -1) * RatScalar(static_cast<long>(k)) * e[k];
    p[k] = s;
  }
  return p;
}

// Monic polynomial of degree m from its power sums, as a primitive integer polynomial.
inline IntPoly from_power_sums(const std::vector<RatScalar>& p, std::size_t m) {
  std::vector<RatScalar> e(m + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= m; ++k) {
    RatScalar s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += ((i % 2 == 1) ? 1 : -1) * e[k - i] * p[i];
    e[k] = s / RatScalar(static_cast<long>(k));
  }
  std::vector<RatScalar> c(m + 1);
  for (std::size_t k = 0; k <= m; ++k) c[m - k] = (k % 2 == 0) ? e[k] : RatScalar(-e[k]);
  return rootrel::RatPoly(std::move(c)).primitive_integer();
}

// f_[2] through power sums: p_k(f2) = (p_k(g)^2 - p_2k(g)) / 2.
inline IntPoly pair_product_by_power_sums(const IntPoly& g) {
  const std::size_t n = static_cast<std::size_t>(g.degree());
  const std::size_t m = n * (n - 1) / 2;
  const auto pg = power_sums(g, 2 * m);
  std::vector<RatScalar> pf(m + 1);
  for (std::size_t k = 1; k <= m; ++k) pf[k] = (pg[k] * pg[k] - pg[2 * k]) / 2;
  return from_power_sums(pf, m);
}

// All vectors in [-B, B]^n.
inline void for_each_box_vector(std::size_t n, int B, const std::function<void(const IntVector&)>& visit) {
  IntVector v(n, Integer(-B));
  for (;;) {
    visit(v);
    std::size_t i = 0;
    while (i < n && v[i] == B) v[i++] = -B;
    if (i == n) return;
    v[i] += 1;
  }
}

}  // namespace support
