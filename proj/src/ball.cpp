#include "rootrel/ball.hpp"

#include <algorithm>

#include "rootrel/errors.hpp"

namespace rootrel {

// ---------------------------------------------------------------------------
// Real

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(mpfr_prec_t prec, double value) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, value, MPFR_RNDN);
}

Real::Real(mpfr_prec_t prec, const Integer& value) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

void Real::set_precision(mpfr_prec_t prec) { mpfr_prec_round(v_, prec, MPFR_RNDN); }

std::string Real::to_decimal(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

RatScalar Real::to_rational() const {
  if (mpfr_zero_p(v_)) return RatScalar(0);
  Integer m;
  const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  RatScalar r(m);
  if (e >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  return r;
}

// ---------------------------------------------------------------------------
// Magnitudes

namespace mag {

Real zero() { return Real(kPrec); }

Real from_double(double x) {
  Real r(kPrec);
  mpfr_set_d(r.get(), x, MPFR_RNDU);
  return r;
}

Real add(const Real& a, const Real& b) {
  Real r(kPrec);
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real mul(const Real& a, const Real& b) {
  Real r(kPrec);
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real div(const Real& a, const Real& b) {
  Real r(kPrec);
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real pow2(long e) {
  Real r(kPrec);
  mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDN);
  return r;
}

bool less(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }

}  // namespace mag

// ---------------------------------------------------------------------------
// Plain complex arithmetic (round to nearest)

Cx cx_add(const Cx& a, const Cx& b, mpfr_prec_t p) {
  Cx r(p);
  mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

Cx cx_sub(const Cx& a, const Cx& b, mpfr_prec_t p) {
  Cx r(p);
  mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

Cx cx_mul(const Cx& a, const Cx& b, mpfr_prec_t p) {
  Cx r(p);
  mpfr_fmms(r.re.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_fmma(r.im.get(), a.re.get(), b.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  return r;
}

Cx cx_div(const Cx& a, const Cx& b, mpfr_prec_t p) {
  Real norm(p + 8);
  mpfr_fmma(norm.get(), b.re.get(), b.re.get(), b.im.get(), b.im.get(), MPFR_RNDN);
  if (norm.is_zero()) throw InvalidInput("complex division by zero");
  Real nr(p + 8), ni(p + 8);
  mpfr_fmma(nr.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_fmms(ni.get(), a.im.get(), b.re.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  Cx r(p);
  mpfr_div(r.re.get(), nr.get(), norm.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), ni.get(), norm.get(), MPFR_RNDN);
  return r;
}

Real cx_abs_upper(const Cx& a) {
  Real r(mag::kPrec);
  mpfr_hypot(r.get(), a.re.get(), a.im.get(), MPFR_RNDU);
  return r;
}

Real cx_abs_lower(const Cx& a) {
  Real r(mag::kPrec);
  mpfr_hypot(r.get(), a.re.get(), a.im.get(), MPFR_RNDD);
  return r;
}

double cx_abs_approx(const Cx& a) {
  Real r(53);
  mpfr_hypot(r.get(), a.re.get(), a.im.get(), MPFR_RNDN);
  return r.to_double();
}

// ---------------------------------------------------------------------------
// Balls

namespace {

// Rounding error of a result whose components were each correctly rounded
// `roundings` times in sequence: bounded by roundings * 2^{1-p} |z|.
Real rounding_error(const Cx& z, mpfr_prec_t p, long roundings) {
  return mag::mul(cx_abs_upper(z), mag::pow2(1 - p + (roundings > 1 ? 2 : 0)));
}

}  // namespace

ComplexBall ComplexBall::exact(const Integer& value, mpfr_prec_t prec) {
  Cx m(prec);
  const int inexact = mpfr_set_z(m.re.get(), value.get_mpz_t(), MPFR_RNDN);
  ComplexBall b(std::move(m), mag::zero());
  if (inexact != 0) b.rad = rounding_error(b.mid, prec, 1);
  return b;
}

ComplexBall add(const ComplexBall& a, const ComplexBall& b, mpfr_prec_t p) {
  Cx m = cx_add(a.mid, b.mid, p);
  Real r = mag::add(mag::add(a.rad, b.rad), rounding_error(m, p, 1));
  return {std::move(m), std::move(r)};
}

ComplexBall sub(const ComplexBall& a, const ComplexBall& b, mpfr_prec_t p) {
  Cx m = cx_sub(a.mid, b.mid, p);
  Real r = mag::add(mag::add(a.rad, b.rad), rounding_error(m, p, 1));
  return {std::move(m), std::move(r)};
}

ComplexBall mul(const ComplexBall& a, const ComplexBall& b, mpfr_prec_t p) {
  Cx m = cx_mul(a.mid, b.mid, p);
  // |xy - x'y'| <= ra |b| + rb |a| + ra rb
  Real r = mag::add(mag::mul(a.rad, cx_abs_upper(b.mid)), mag::mul(b.rad, cx_abs_upper(a.mid)));
  r = mag::add(r, mag::mul(a.rad, b.rad));
  r = mag::add(r, rounding_error(m, p, 1));
  return {std::move(m), std::move(r)};
}

ComplexBall inv(const ComplexBall& a, mpfr_prec_t p) {
  const Real low = cx_abs_lower(a.mid);
  if (!mag::less(a.rad, low)) throw InvalidInput("inverse of a ball containing zero");
  Cx one(p);
  mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
  Cx m = cx_div(one, a.mid, p);
  // |1/z - 1/w| <= r / (|z| (|z| - r))
  Real gap(mag::kPrec);
  mpfr_sub(gap.get(), low.get(), a.rad.get(), MPFR_RNDD);
  Real denom(mag::kPrec);
  mpfr_mul(denom.get(), low.get(), gap.get(), MPFR_RNDD);
  Real r = mag::add(mag::div(a.rad, denom), rounding_error(m, p, 3));
  return {std::move(m), std::move(r)};
}

ComplexBall div(const ComplexBall& a, const ComplexBall& b, mpfr_prec_t p) { return mul(a, inv(b, p), p); }

ComplexBall pow(const ComplexBall& a, long e, mpfr_prec_t p) {
  if (e < 0) return pow(inv(a, p), -e, p);
  ComplexBall result = ComplexBall::one(p);
  ComplexBall base = a;
  bool first = true;
  while (e > 0) {
    if (e & 1L) {
      result = first ? base : mul(result, base, p);
      first = false;
    }
    e >>= 1;
    if (e > 0) base = mul(base, base, p);
  }
  return result;
}

ComplexBall root_of_unity(long k, long n, mpfr_prec_t p) {
  if (n <= 0) throw InvalidInput("root of unity order must be positive");
  k %= n;
  if (k < 0) k += n;
  const mpfr_prec_t wp = p + 32;
  Real theta(wp);
  mpfr_const_pi(theta.get(), MPFR_RNDN);
  mpfr_mul_si(theta.get(), theta.get(), 2 * k, MPFR_RNDN);
  mpfr_div_si(theta.get(), theta.get(), n, MPFR_RNDN);
  Cx m(p);
  mpfr_sin_cos(m.im.get(), m.re.get(), theta.get(), MPFR_RNDN);
  // theta carries relative error below 2^{2-wp}, |theta| < 7; the sine and
  // cosine roundings add at most 2^{-p} each.
  Real r = mag::add(mag::pow2(5 - wp), mag::pow2(1 - p));
  return {std::move(m), std::move(r)};
}

ComplexBall evaluate(const IntPoly& f, const ComplexBall& z, mpfr_prec_t p) {
  ComplexBall acc(p);
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = mul(acc, z, p);
    acc = add(acc, ComplexBall::exact(f[i], p), p);
  }
  return acc;
}

bool contains_zero(const ComplexBall& a) { return !mag::less(a.rad, cx_abs_lower(a.mid)); }

Real distance_upper(const Cx& a, const Cx& b) {
  Real dr(mag::kPrec), di(mag::kPrec);
  mpfr_sub(dr.get(), a.re.get(), b.re.get(), MPFR_RNDA);
  mpfr_sub(di.get(), a.im.get(), b.im.get(), MPFR_RNDA);
  Real r(mag::kPrec);
  mpfr_hypot(r.get(), dr.get(), di.get(), MPFR_RNDU);
  return r;
}

Real distance_lower(const Cx& a, const Cx& b) {
  Real dr(mag::kPrec), di(mag::kPrec);
  mpfr_sub(dr.get(), a.re.get(), b.re.get(), MPFR_RNDZ);
  mpfr_sub(di.get(), a.im.get(), b.im.get(), MPFR_RNDZ);
  Real r(mag::kPrec);
  mpfr_hypot(r.get(), dr.get(), di.get(), MPFR_RNDD);
  return r;
}

Real abs_upper(const ComplexBall& a) { return mag::add(cx_abs_upper(a.mid), a.rad); }

}  // namespace rootrel
