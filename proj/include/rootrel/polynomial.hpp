#pragma once

// Dense univariate polynomials over Z and Q with exact GMP coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rootrel {

using Integer = mpz_class;
// Always canonical: gcd(|num|, den) = 1 and den >= 1.
using RatScalar = mpq_class;

// Coefficients in ascending order; the zero polynomial has no coefficients
// and degree -1. The leading coefficient of a nonzero polynomial is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t k);
  // x^k - c
  static IntPoly binomial(std::size_t k, const Integer& c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::size_t size() const { return coeffs_.size(); }

  // Coefficient of x^i; zero past the degree.
  Integer coeff(std::size_t i) const;
  const Integer& leading() const;
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const Integer> coeffs() const { return coeffs_; }

  Integer content() const;
  // Content removed and leading coefficient made positive.
  IntPoly primitive() const;
  IntPoly derivative() const;
  IntPoly negate_variable() const;  // f(-x)
  IntPoly reversed() const;         // x^deg f(1/x)
  IntPoly shifted(std::size_t k) const;  // x^k f(x)

  Integer eval(const Integer& x) const;
  RatScalar eval(const RatScalar& x) const;
  Integer height() const;  // max |c_i|

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(const IntPoly& a);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPoly pow(const IntPoly& f, unsigned k);

// Polynomial with rational coefficients (used for remainders modulo a
// non-monic modulus).
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<RatScalar> coeffs);
  explicit RatPoly(const IntPoly& f);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  RatScalar coeff(std::size_t i) const;
  const RatScalar& leading() const { return coeffs_.back(); }
  std::span<const RatScalar> coeffs() const { return coeffs_; }

  RatPoly monic() const;
  // Scales to a primitive integer polynomial with positive leading
  // coefficient; zero maps to zero.
  IntPoly primitive_integer() const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<RatScalar> coeffs_;
};

// a = q*b + r over Q with deg r < deg b.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

// Quotient a/b when b divides a in Z[x]; nullopt otherwise.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);
// Throwing variant for divisions known to be exact.
IntPoly divexact(const IntPoly& a, const IntPoly& b);
// lc(b)^(deg a - deg b + 1) * a = q*b + r
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

// Primitive gcd with positive leading coefficient.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

struct PolyPower {
  IntPoly poly;
  unsigned multiplicity = 0;
  friend bool operator==(const PolyPower&, const PolyPower&) = default;
};

// Yun decomposition: f = c * prod g_i^{k_i}, g_i squarefree, primitive,
// pairwise coprime, positive leading coefficient, k_i increasing.
std::vector<PolyPower> squarefree_decompose(const IntPoly& f);
IntPoly squarefree_part(const IntPoly& f);
bool is_squarefree(const IntPoly& f);

// lc(a)^{deg b} * prod b(alpha_i) over roots alpha_i of a.
Integer resultant(const IntPoly& a, const IntPoly& b);

// G with G(x^2) = (-1)^{deg f} f(x) f(-x).
IntPoly graeffe(const IntPoly& f);

// h with h^2 = f (positive leading coefficient) or nullopt.
std::optional<IntPoly> poly_sqrt_exact(const IntPoly& f);

// x^m mod g over Q.
RatPoly pow_mod(unsigned long m, const IntPoly& g);

IntPoly cyclotomic(unsigned long d);
unsigned long euler_phi(unsigned long n);
std::vector<unsigned long> divisors(unsigned long n);

// Values at the given points -> coefficients (degree < points.size()).
IntPoly interpolate(std::span<const Integer> xs, std::span<const Integer> ys);

}  // namespace rootrel
