#pragma once

// Multiprecision reals (RAII over mpfr_t), plain complex numbers for
// iteration, and complex midpoint-radius balls with rigorous radius
// propagation for certification.

#include <mpfr.h>

#include <string>

#include "rootrel/polynomial.hpp"

namespace rootrel {

class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64);
  Real(mpfr_prec_t prec, double value);
  Real(mpfr_prec_t prec, const Integer& value);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  // Changes precision, rounding the current value to nearest.
  void set_precision(mpfr_prec_t prec);

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // Scientific decimal string with `digits` significant digits.
  std::string to_decimal(int digits) const;
  // Exact value as a rational (the value is dyadic).
  RatScalar to_rational() const;

 private:
  mpfr_t v_;
};

// Upper-bound arithmetic on nonnegative magnitudes (radii, error terms).
namespace mag {
constexpr mpfr_prec_t kPrec = 64;
Real zero();
Real from_double(double x);  // rounded up
Real add(const Real& a, const Real& b);
Real mul(const Real& a, const Real& b);
Real div(const Real& a, const Real& b);  // b must be a lower bound
Real pow2(long e);                       // 2^e exactly
bool less(const Real& a, const Real& b);
}  // namespace mag

struct Cx {
  Real re, im;
  explicit Cx(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
  Cx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  mpfr_prec_t precision() const { return re.precision(); }
  void set_precision(mpfr_prec_t prec) {
    re.set_precision(prec);
    im.set_precision(prec);
  }
};

Cx cx_add(const Cx& a, const Cx& b, mpfr_prec_t p);
Cx cx_sub(const Cx& a, const Cx& b, mpfr_prec_t p);
Cx cx_mul(const Cx& a, const Cx& b, mpfr_prec_t p);
Cx cx_div(const Cx& a, const Cx& b, mpfr_prec_t p);
// Upper bound on |a|.
Real cx_abs_upper(const Cx& a);
// Lower bound on |a|.
Real cx_abs_lower(const Cx& a);
double cx_abs_approx(const Cx& a);

// Closed disc {z : |z - mid| <= rad}.
struct ComplexBall {
  Cx mid;
  Real rad{mag::kPrec};

  ComplexBall() = default;
  explicit ComplexBall(mpfr_prec_t prec) : mid(prec), rad(mag::zero()) {}
  ComplexBall(Cx m, Real r) : mid(std::move(m)), rad(std::move(r)) {}

  static ComplexBall exact(const Integer& value, mpfr_prec_t prec);
  static ComplexBall one(mpfr_prec_t prec) { return exact(Integer(1), prec); }
  mpfr_prec_t precision() const { return mid.precision(); }
};

ComplexBall add(const ComplexBall& a, const ComplexBall& b, mpfr_prec_t p);
ComplexBall sub(const ComplexBall& a, const ComplexBall& b, mpfr_prec_t p);
ComplexBall mul(const ComplexBall& a, const ComplexBall& b, mpfr_prec_t p);
// Throws InvalidInput when the ball contains zero.
ComplexBall inv(const ComplexBall& a, mpfr_prec_t p);
ComplexBall div(const ComplexBall& a, const ComplexBall& b, mpfr_prec_t p);
ComplexBall pow(const ComplexBall& a, long e, mpfr_prec_t p);
// exp(2 pi i k / n)
ComplexBall root_of_unity(long k, long n, mpfr_prec_t p);
// Horner evaluation of an integer polynomial.
ComplexBall evaluate(const IntPoly& f, const ComplexBall& z, mpfr_prec_t p);

bool contains_zero(const ComplexBall& a);
// Upper / lower bounds for |mid(a) - mid(b)|.
Real distance_upper(const Cx& a, const Cx& b);
Real distance_lower(const Cx& a, const Cx& b);
// |mid| + rad
Real abs_upper(const ComplexBall& a);

}  // namespace rootrel
