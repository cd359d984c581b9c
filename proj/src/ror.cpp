#include "rootrel/ror.hpp"

#include <cmath>
#include <optional>
#include <tuple>

#include "rootrel/deadline.hpp"
#include "rootrel/errors.hpp"
#include "rootrel/factor.hpp"
#include "rootrel/pairprod.hpp"

namespace rootrel {

namespace {

void check_input(const IntPoly& g) {
  if (g.degree() < 1) throw InvalidInput("root-of-rational test needs a nonconstant polynomial");
  if (g[0] == 0) throw InvalidInput("polynomial has the root 0");
}

// Certified: some pair of roots has moduli that differ.
bool moduli_differ(const RootSet& roots) {
  std::vector<std::pair<Real, Real>> ranges;  // [|mid| - r, |mid| + r]
  for (const auto& r : roots.roots()) {
    Real lo = cx_abs_lower(r.mid), hi = cx_abs_upper(r.mid);
    mpfr_sub(lo.get(), lo.get(), r.radius.get(), MPFR_RNDD);
    mpfr_add(hi.get(), hi.get(), r.radius.get(), MPFR_RNDU);
    ranges.emplace_back(std::move(lo), std::move(hi));
  }
  for (std::size_t i = 0; i < ranges.size(); ++i)
    for (std::size_t j = 0; j < ranges.size(); ++j)
      if (mpfr_less_p(ranges[i].second.get(), ranges[j].first.get())) return true;
  return false;
}

// Nearest exponent k with z ~ zeta_m^k, once the enclosure is tight enough
// that the nearest m-th root of unity is the only candidate.
std::optional<long> identify_power(const ComplexBall& z, unsigned long m) {
  const mpfr_prec_t p = z.mid.precision() + 16;
  Real half_gap(p);
  mpfr_const_pi(half_gap.get(), MPFR_RNDN);
  mpfr_div_ui(half_gap.get(), half_gap.get(), m, MPFR_RNDN);
  mpfr_sin(half_gap.get(), half_gap.get(), MPFR_RNDN);
  mpfr_div_ui(half_gap.get(), half_gap.get(), 2, MPFR_RNDD);
  // Leave slack for the rounding of sin(pi/m) itself.
  mpfr_mul_d(half_gap.get(), half_gap.get(), 0.99, MPFR_RNDD);
  if (m > 1 && !mag::less(z.rad, half_gap)) return std::nullopt;
  Real angle(p);
  mpfr_atan2(angle.get(), z.mid.im.get(), z.mid.re.get(), MPFR_RNDN);
  Real turns(p);
  mpfr_const_pi(turns.get(), MPFR_RNDN);
  mpfr_mul_2ui(turns.get(), turns.get(), 1, MPFR_RNDN);
  mpfr_div(turns.get(), angle.get(), turns.get(), MPFR_RNDN);
  mpfr_mul_ui(turns.get(), turns.get(), m, MPFR_RNDN);
  mpfr_round(turns.get(), turns.get());
  long k = mpfr_get_si(turns.get(), MPFR_RNDN) % static_cast<long>(m);
  if (k < 0) k += static_cast<long>(m);
  return k;
}

// Exponents k_i with f_i(roots) = zeta_m^{k_i}, refining as needed.
template <class Value>
std::vector<long> identify_all(RootSet& roots, unsigned long m, Value value) {
  for (mpfr_prec_t p = roots.precision();; p = std::min(roots.ceiling(), 2 * p)) {
    check_deadline();
    roots.refine(p);
    std::vector<long> out;
    bool ok = true;
    for (std::size_t i = 0; i < roots.size() && ok; ++i) {
      const auto k = identify_power(value(i, roots.precision()), m);
      if (!k) ok = false;
      else out.push_back(*k);
    }
    if (ok) return out;
    if (p >= roots.ceiling()) throw PrecisionExhausted("root-of-unity exponents not identified below the ceiling");
  }
}

}  // namespace

namespace detail {

bool is_root_of_rational_unchecked(const IntPoly& g, const RootSet* roots) {
  check_input(g);
  if (g.degree() == 1) return true;
  if (roots != nullptr && moduli_differ(*roots)) return false;
  return all_roots_roots_of_unity(ratio_poly(g));
}

}  // namespace detail

bool is_root_of_rational_poly(const IntPoly& g) {
  check_input(g);
  if (!is_irreducible(g)) throw InvalidInput("root-of-rational test needs an irreducible polynomial");
  return detail::is_root_of_rational_unchecked(g, nullptr);
}

std::pair<unsigned long, RatScalar> rational_power_data(const IntPoly& g) {
  check_input(g);
  const unsigned long n = static_cast<unsigned long>(g.degree());
  const unsigned long cap = cyclotomic_index_bound(n * n) * n * n;
  const RatPoly monic = RatPoly(g).monic();
  // r = x^m mod g, kept as a coefficient vector of length n.
  std::vector<RatScalar> r(n);
  if (n == 1)
    r[0] = -monic.coeff(0);
  else
    r[1] = 1;
  for (unsigned long m = 1; m <= cap; ++m) {
    bool constant = true;
    for (unsigned long i = 1; i < n; ++i)
      if (r[i] != 0) {
        constant = false;
        break;
      }
    if (constant) return {m, r[0]};
    if (m % 64 == 0) check_deadline();
    // r <- x r mod g
    const RatScalar top = r[n - 1];
    for (unsigned long i = n - 1; i > 0; --i) r[i] = r[i - 1] - top * monic.coeff(i);
    r[0] = -top * monic.coeff(0);
  }
  throw InternalError("no power of x is constant modulo g; not a root-of-rational polynomial");
}

std::vector<long> unity_exponents(const IntPoly& g, unsigned long N, RootSet& roots) {
  if (N == 0) throw InvalidInput("N must be positive");
  if (roots.size() != static_cast<std::size_t>(g.degree())) throw InvalidInput("root set does not match g");
  return identify_all(roots, N, [&](std::size_t i, mpfr_prec_t p) {
    return div(roots[i].ball(), roots[0].ball(), p);
  });
}

RootOfRationalData root_of_rational_data(const IntPoly& g, RootSet& roots) {
  RootOfRationalData d;
  std::tie(d.N, d.q) = rational_power_data(g);
  d.unity_case = (d.q == 1 || d.q == -1);
  if (!d.unity_case) {
    d.exponents = unity_exponents(g, d.N, roots);
    return d;
  }
  // b^{2N} = q^2 = 1, so g is the cyclotomic polynomial of some M | 2N.
  const IntPoly target = g.primitive();
  for (unsigned long m : divisors(2 * d.N)) {
    if (euler_phi(m) != static_cast<unsigned long>(g.degree())) continue;
    if (cyclotomic(m) == target) {
      d.M = m;
      break;
    }
  }
  if (d.M == 0) throw InternalError("roots of unity but g is not cyclotomic");
  d.exponents = identify_all(roots, d.M, [&](std::size_t i, mpfr_prec_t) { return roots[i].ball(); });
  return d;
}

LatticeBasis ror_lattice_basis(const IntPoly& g, const RootOfRationalData& data) {
  const std::size_t n = static_cast<std::size_t>(g.degree());
  if (data.exponents.size() != n) throw InvalidInput("exponent vector does not match g");
  IntVector w(data.exponents.begin(), data.exponents.end());
  if (data.unity_case) return kernel_with_congruence(CongruenceSpec(std::move(w), Integer(data.M), false));
  return kernel_with_congruence(CongruenceSpec(std::move(w), Integer(data.N), true));
}

}  // namespace rootrel
