#pragma once

// Polynomials over F_p for word-size primes (p < 2^32) and their
// factorization: squarefree split, distinct-degree, equal-degree.

#include <cstdint>
#include <utility>
#include <vector>

#include "rootrel/polynomial.hpp"

namespace rootrel {

class ModPoly {
 public:
  ModPoly() = default;
  ModPoly(std::vector<std::uint64_t> coeffs, std::uint64_t p);
  static ModPoly reduce(const IntPoly& f, std::uint64_t p);
  static ModPoly x(std::uint64_t p);
  static ModPoly constant(std::uint64_t c, std::uint64_t p);

  std::uint64_t prime() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::uint64_t leading() const { return c_.back(); }
  std::uint64_t operator[](std::size_t i) const { return c_[i]; }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  ModPoly monic() const;
  ModPoly derivative() const;
  // Symmetric lift of the residues to Z.
  IntPoly lift() const;

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  friend bool operator==(const ModPoly& a, const ModPoly& b) = default;

 private:
  void trim();
  std::vector<std::uint64_t> c_;
  std::uint64_t p_ = 2;
};

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
ModPoly operator%(const ModPoly& a, const ModPoly& b);
// Monic gcd.
ModPoly gcd(const ModPoly& a, const ModPoly& b);
// s*a + t*b = gcd(a, b), gcd monic.
ModPoly xgcd(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t);
ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& mod);

struct ModFactor {
  ModPoly poly;  // monic irreducible
  unsigned multiplicity = 0;
};

// Complete factorization of f mod p into monic irreducibles.
// Throws BadPrime when p divides lc(f).
std::vector<ModFactor> factor_mod_p(const IntPoly& f, std::uint64_t p);

// Distinct-degree split of a monic squarefree polynomial: pairs (product of
// all irreducible factors of degree d, d).
std::vector<std::pair<ModPoly, unsigned>> distinct_degree_factor(const ModPoly& f);
// Splits a product of irreducibles of degree d into its factors.
std::vector<ModPoly> equal_degree_factor(const ModPoly& f, unsigned d);

// Degrees of the irreducible factors of squarefree f mod p (with repetition).
std::vector<unsigned> factor_degree_pattern(const ModPoly& f);

// f mod p has the same degree and is squarefree.
bool is_good_prime(const IntPoly& f, std::uint64_t p);

std::vector<std::uint64_t> small_primes(std::size_t count, std::uint64_t start = 3);

}  // namespace rootrel
