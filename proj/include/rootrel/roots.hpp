#pragma once

// Certified isolation of all complex roots of a squarefree integer
// polynomial. Approximations come from Aberth iteration; the certificate is
// the Weierstrass inclusion: with corrections W_i = f(z_i) / (lc prod_{j!=i}
// (z_i - z_j)), pairwise disjoint discs D(z_i, n|W_i|) each contain exactly
// one root.

#include <span>
#include <string>
#include <vector>

#include "rootrel/ball.hpp"
#include "rootrel/polynomial.hpp"

namespace rootrel {

constexpr mpfr_prec_t kDefaultPrecision = 64;
constexpr mpfr_prec_t kDefaultCeiling = 1 << 16;
constexpr mpfr_prec_t kTieCeiling = 2048;

struct RootEnclosure {
  Cx mid;
  Real radius{mag::kPrec};
  // Center on the real axis; the enclosed root is then real.
  bool real = false;

  ComplexBall ball() const { return {mid, radius}; }
  std::string re_decimal(int digits) const { return mid.re.to_decimal(digits); }
  std::string im_decimal(int digits) const { return mid.im.to_decimal(digits); }
  double re_approx() const { return mid.re.to_double(); }
  double im_approx() const { return mid.im.to_double(); }
  double radius_approx() const { return radius.to_double(); }
};

class RootSet {
 public:
  // Throws InvalidInput for non-squarefree or constant f and
  // PrecisionExhausted when certification fails below the ceiling.
  static RootSet isolate(const IntPoly& f, mpfr_prec_t precision = kDefaultPrecision,
                         mpfr_prec_t ceiling = kDefaultCeiling);

  const IntPoly& poly() const { return f_; }
  std::size_t size() const { return roots_.size(); }
  const RootEnclosure& operator[](std::size_t i) const { return roots_[i]; }
  std::span<const RootEnclosure> roots() const { return roots_; }
  mpfr_prec_t precision() const { return prec_; }
  mpfr_prec_t ceiling() const { return ceiling_; }

  // Re-certifies at no less than `bits` of working precision. Root i keeps
  // denoting the same root.
  void refine(mpfr_prec_t bits);

  // Orders the roots by (real part, imaginary part), refining as needed to
  // make every comparison certified. Roots whose real parts cannot be
  // separated below kTieCeiling bits are treated as having equal real part.
  void sort_canonical();

 private:
  RootSet(IntPoly f, mpfr_prec_t ceiling) : f_(std::move(f)), ceiling_(ceiling) {}
  bool solve(std::vector<Cx> z, mpfr_prec_t p);
  bool ordering_certified() const;

  IntPoly f_;
  std::vector<RootEnclosure> roots_;
  mpfr_prec_t prec_ = 0;
  mpfr_prec_t ceiling_;
};

// Coordinate convention for relation vectors of a polynomial with repeated
// roots: slots 0..n-1 hold the distinct roots in canonical order; root i of
// multiplicity l_i + 1 then gets l_i extra slots, the blocks following each
// other in root order (slot n + sum_{s<i} l_s + j holds root i).
struct CanonicalOrder {
  static constexpr const char* kRule = "re-asc-im-asc/repeat-blocks";

  RootSet distinct;
  std::vector<std::size_t> slots;  // slot -> index into distinct

  std::size_t size() const { return slots.size(); }
  const RootEnclosure& operator[](std::size_t slot) const { return distinct[slots[slot]]; }
  std::vector<unsigned> extra_copies() const;
};

// Canonical order of the roots of g^k (g squarefree).
CanonicalOrder canonical_root_order(const IntPoly& g, unsigned k = 1, mpfr_prec_t precision = kDefaultPrecision);
// Canonical order of the roots of an arbitrary nonconstant f, with multiplicity.
CanonicalOrder canonical_order(const IntPoly& f, mpfr_prec_t precision = kDefaultPrecision);

std::vector<RootEnclosure> isolate_roots(const IntPoly& f, mpfr_prec_t precision = kDefaultPrecision);

}  // namespace rootrel
