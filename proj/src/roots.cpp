#include "rootrel/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "rootrel/deadline.hpp"
#include "rootrel/errors.hpp"

namespace rootrel {

namespace {

// f(z) and f'(z) by simultaneous Horner.
std::pair<Cx, Cx> eval_with_derivative(const IntPoly& f, const Cx& z, mpfr_prec_t p) {
  Cx v(p), d(p);
  for (std::size_t i = f.size(); i-- > 0;) {
    if (i + 1 < f.size()) d = cx_add(cx_mul(d, z, p), v, p);
    v = cx_mul(v, z, p);
    mpfr_add_z(v.re.get(), v.re.get(), f[i].get_mpz_t(), MPFR_RNDN);
  }
  return {std::move(v), std::move(d)};
}

bool is_zero(const Cx& z) { return z.re.is_zero() && z.im.is_zero(); }

void nudge(Cx& z, mpfr_prec_t p) {
  // Moves z by a relative 2^{-p/2}; used only to leave exact coincidences.
  Real eps(p);
  mpfr_set_ui_2exp(eps.get(), 1, -static_cast<long>(p / 2), MPFR_RNDN);
  mpfr_add(z.re.get(), z.re.get(), eps.get(), MPFR_RNDN);
  mpfr_add(z.im.get(), z.im.get(), eps.get(), MPFR_RNDN);
}

std::vector<Cx> initial_points(const IntPoly& f, mpfr_prec_t p) {
  const std::size_t n = static_cast<std::size_t>(f.degree());
  // Circle of radius |f(0)/lc|^{1/n}, the geometric mean of the root moduli.
  double radius = 1.0;
  if (f[0] != 0) {
    long e0 = 0, en = 0;
    const double m0 = mpz_get_d_2exp(&e0, f[0].get_mpz_t());
    const double mn = mpz_get_d_2exp(&en, f.leading().get_mpz_t());
    const double log2r = (std::log2(std::fabs(m0)) + e0 - std::log2(std::fabs(mn)) - en) / static_cast<double>(n);
    radius = std::exp2(std::clamp(log2r, -1000.0, 1000.0));
  }
  std::vector<Cx> z;
  z.reserve(n);
  Real theta(p), r(p, radius);
  for (std::size_t k = 0; k < n; ++k) {
    mpfr_const_pi(theta.get(), MPFR_RNDN);
    mpfr_mul_d(theta.get(), theta.get(), (2.0 * static_cast<double>(k) + 0.4) / static_cast<double>(n), MPFR_RNDN);
    Cx c(p);
    mpfr_sin_cos(c.im.get(), c.re.get(), theta.get(), MPFR_RNDN);
    mpfr_mul(c.re.get(), c.re.get(), r.get(), MPFR_RNDN);
    mpfr_mul(c.im.get(), c.im.get(), r.get(), MPFR_RNDN);
    z.push_back(std::move(c));
  }
  return z;
}

// Gauss-Seidel Aberth iteration until corrections reach the working
// precision or stop improving.
void aberth(const IntPoly& f, std::vector<Cx>& z, mpfr_prec_t p) {
  const std::size_t n = z.size();
  const std::size_t max_iter = 200 + 20 * n;
  Cx one(p);
  mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
  const double target = std::ldexp(1.0, 8 - static_cast<int>(std::min<mpfr_prec_t>(p, 1000)));
  double best = INFINITY;
  int stalled = 0;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    check_deadline();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      auto [fz, dfz] = eval_with_derivative(f, z[i], p);
      if (is_zero(fz)) continue;
      if (is_zero(dfz)) {
        nudge(z[i], p);
        worst = INFINITY;
        continue;
      }
      const Cx newton = cx_div(fz, dfz, p);
      Cx s(p);
      bool clash = false;
      for (std::size_t j = 0; j < n && !clash; ++j) {
        if (j == i) continue;
        const Cx diff = cx_sub(z[i], z[j], p);
        if (is_zero(diff)) {
          clash = true;
          break;
        }
        s = cx_add(s, cx_div(one, diff, p), p);
      }
      if (clash) {
        nudge(z[i], p);
        worst = INFINITY;
        continue;
      }
      const Cx w = cx_div(newton, cx_sub(one, cx_mul(newton, s, p), p), p);
      z[i] = cx_sub(z[i], w, p);
      const double scale = std::max(cx_abs_approx(z[i]), 1e-300);
      worst = std::max(worst, cx_abs_approx(w) / scale);
    }
    if (worst <= target) return;
    if (worst < std::sqrt(target)) {
      if (worst < 0.5 * best) {
        stalled = 0;
      } else if (++stalled >= 3) {
        return;
      }
    }
    best = std::min(best, worst);
  }
}

// Makes the approximation set closed under conjugation, as the true root
// set is: near-real points become real, and the remaining points are paired.
std::vector<bool> symmetrize(std::vector<Cx>& z, mpfr_prec_t p) {
  const std::size_t n = z.size();
  std::vector<bool> real(n, false);
  std::vector<std::size_t> upper, lower;
  for (std::size_t i = 0; i < n; ++i) {
    const double tol = std::ldexp(std::max(1.0, cx_abs_approx(z[i])), -static_cast<int>(std::min<mpfr_prec_t>(p, 2000) / 2));
    const double im = z[i].im.to_double();
    if (std::fabs(im) <= tol) {
      mpfr_set_zero(z[i].im.get(), 1);
      real[i] = true;
    } else {
      (im > 0 ? upper : lower).push_back(i);
    }
  }
  if (upper.size() != lower.size()) return real;
  std::vector<bool> used(lower.size(), false);
  for (std::size_t u : upper) {
    Cx conj = z[u];
    mpfr_neg(conj.im.get(), conj.im.get(), MPFR_RNDN);
    std::size_t best = lower.size();
    double best_d = INFINITY;
    for (std::size_t k = 0; k < lower.size(); ++k) {
      if (used[k]) continue;
      const double d = cx_abs_approx(cx_sub(conj, z[lower[k]], p));
      if (d < best_d) {
        best_d = d;
        best = k;
      }
    }
    used[best] = true;
    z[lower[best]] = std::move(conj);
  }
  return real;
}

// Weierstrass discs; empty when they are not pairwise disjoint.
std::vector<Real> certify(const IntPoly& f, const std::vector<Cx>& z, mpfr_prec_t p) {
  const std::size_t n = z.size();
  std::vector<Real> radii;
  radii.reserve(n);
  const ComplexBall lc = ComplexBall::exact(f.leading(), p);
  const Real degree = mag::from_double(static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const ComplexBall zi(z[i], mag::zero());
    ComplexBall denom = lc;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      denom = mul(denom, sub(zi, ComplexBall(z[j], mag::zero()), p), p);
    }
    if (contains_zero(denom)) return {};
    const ComplexBall w = div(evaluate(f, zi, p), denom, p);
    radii.push_back(mag::mul(degree, abs_upper(w)));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!mag::less(mag::add(radii[i], radii[j]), distance_lower(z[i], z[j]))) return {};
  return radii;
}

bool discs_meet(const RootEnclosure& a, const RootEnclosure& b) {
  return !mag::less(mag::add(a.radius, b.radius), distance_lower(a.mid, b.mid));
}

// Real-part interval endpoints, rounded outward.
Real re_low(const RootEnclosure& r) {
  Real v(r.mid.precision() + 8);
  mpfr_sub(v.get(), r.mid.re.get(), r.radius.get(), MPFR_RNDD);
  return v;
}

Real re_high(const RootEnclosure& r) {
  Real v(r.mid.precision() + 8);
  mpfr_add(v.get(), r.mid.re.get(), r.radius.get(), MPFR_RNDU);
  return v;
}

bool conjugate_pair(const RootEnclosure& a, const RootEnclosure& b) {
  if (a.real || b.real) return false;
  if (!mpfr_equal_p(a.mid.re.get(), b.mid.re.get())) return false;
  Real neg = b.mid.im;
  mpfr_neg(neg.get(), neg.get(), MPFR_RNDN);
  return mpfr_equal_p(a.mid.im.get(), neg.get()) != 0;
}

// Groups indices (sorted by real midpoint) into runs with overlapping
// real-part intervals.
std::vector<std::vector<std::size_t>> real_part_clusters(const std::vector<RootEnclosure>& roots) {
  std::vector<std::size_t> idx(roots.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return mpfr_less_p(roots[a].mid.re.get(), roots[b].mid.re.get()) != 0;
  });
  std::vector<std::vector<std::size_t>> clusters;
  Real reach;
  for (std::size_t i : idx) {
    if (clusters.empty() || mpfr_greater_p(re_low(roots[i]).get(), reach.get())) {
      clusters.push_back({i});
      reach = re_high(roots[i]);
    } else {
      clusters.back().push_back(i);
      const Real hi = re_high(roots[i]);
      if (mpfr_greater_p(hi.get(), reach.get())) reach = hi;
    }
  }
  return clusters;
}

}  // namespace

RootSet RootSet::isolate(const IntPoly& f, mpfr_prec_t precision, mpfr_prec_t ceiling) {
  if (f.degree() < 1) throw InvalidInput("root isolation needs a nonconstant polynomial");
  if (!is_squarefree(f)) throw InvalidInput("root isolation needs a squarefree polynomial");
  RootSet rs(f, ceiling);
  const mpfr_prec_t p = std::max<mpfr_prec_t>(precision, kDefaultPrecision);
  if (!rs.solve(initial_points(f, p), p))
    throw PrecisionExhausted("root isolation did not certify below the precision ceiling");
  return rs;
}

bool RootSet::solve(std::vector<Cx> z, mpfr_prec_t p) {
  for (;;) {
    for (auto& c : z) c.set_precision(p);
    aberth(f_, z, p);
    const std::vector<bool> real = symmetrize(z, p);
    std::vector<Real> radii = certify(f_, z, p);
    if (!radii.empty()) {
      roots_.clear();
      for (std::size_t i = 0; i < z.size(); ++i) {
        RootEnclosure e;
        e.mid = std::move(z[i]);
        e.radius = std::move(radii[i]);
        e.real = real[i];
        roots_.push_back(std::move(e));
      }
      prec_ = p;
      return true;
    }
    if (p >= ceiling_) return false;
    p = std::min(ceiling_, 2 * p);
  }
}

void RootSet::refine(mpfr_prec_t bits) {
  if (bits <= prec_) return;
  if (bits > ceiling_) throw PrecisionExhausted("requested precision exceeds the ceiling");
  const std::vector<RootEnclosure> old = roots_;
  std::vector<Cx> z;
  for (const auto& r : old) z.push_back(r.mid);
  for (mpfr_prec_t p = bits;; p = std::min(ceiling_, 2 * p)) {
    if (!solve(z, p)) break;
    // Each new disc holds one root, which lies in exactly one old disc.
    std::vector<std::size_t> match(roots_.size(), old.size());
    std::vector<bool> taken(old.size(), false);
    bool ok = true;
    for (std::size_t i = 0; i < roots_.size() && ok; ++i) {
      for (std::size_t j = 0; j < old.size(); ++j) {
        if (!discs_meet(roots_[i], old[j])) continue;
        if (match[i] != old.size()) {
          ok = false;
          break;
        }
        match[i] = j;
      }
      if (match[i] == old.size() || taken[match[i]]) ok = false;
      if (ok) taken[match[i]] = true;
    }
    if (ok) {
      std::vector<RootEnclosure> ordered(old.size());
      for (std::size_t i = 0; i < roots_.size(); ++i) {
        const std::size_t j = match[i];
        ordered[j] = mag::less(old[j].radius, roots_[i].radius) ? old[j] : std::move(roots_[i]);
      }
      roots_ = std::move(ordered);
      return;
    }
    if (p >= ceiling_) break;
  }
  roots_ = old;
  throw PrecisionExhausted("root refinement could not be matched to the previous enclosures");
}

bool RootSet::ordering_certified() const {
  for (const auto& cluster : real_part_clusters(roots_)) {
    if (cluster.size() == 1) continue;
    if (cluster.size() == 2 && conjugate_pair(roots_[cluster[0]], roots_[cluster[1]])) continue;
    return false;
  }
  return true;
}

void RootSet::sort_canonical() {
  const mpfr_prec_t limit = std::min(ceiling_, kTieCeiling);
  while (!ordering_certified() && prec_ < limit) refine(std::min(limit, 2 * prec_));
  std::vector<RootEnclosure> sorted;
  for (auto& cluster : real_part_clusters(roots_)) {
    std::sort(cluster.begin(), cluster.end(), [&](std::size_t a, std::size_t b) {
      return mpfr_less_p(roots_[a].mid.im.get(), roots_[b].mid.im.get()) != 0;
    });
    for (std::size_t i : cluster) sorted.push_back(roots_[i]);
  }
  roots_ = std::move(sorted);
}

std::vector<unsigned> CanonicalOrder::extra_copies() const {
  std::vector<unsigned> extra(distinct.size(), 0);
  for (std::size_t s = distinct.size(); s < slots.size(); ++s) ++extra[slots[s]];
  return extra;
}

CanonicalOrder canonical_root_order(const IntPoly& g, unsigned k, mpfr_prec_t precision) {
  if (k == 0) throw InvalidInput("multiplicity must be positive");
  RootSet rs = RootSet::isolate(g, precision);
  rs.sort_canonical();
  std::vector<std::size_t> slots(rs.size());
  std::iota(slots.begin(), slots.end(), 0);
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (unsigned j = 1; j < k; ++j) slots.push_back(i);
  return {std::move(rs), std::move(slots)};
}

CanonicalOrder canonical_order(const IntPoly& f, mpfr_prec_t precision) {
  if (f.degree() < 1) throw InvalidInput("root order of a constant polynomial");
  const std::vector<PolyPower> parts = squarefree_decompose(f);
  IntPoly h = IntPoly::constant(1);
  for (const auto& part : parts) h = h * part.poly;
  h = h.primitive();
  RootSet rs = RootSet::isolate(h, precision);
  rs.sort_canonical();
  // Each root of h is a root of exactly one (coprime) part; refine until
  // the part enclosing zero is unique.
  std::vector<unsigned> mult(rs.size(), 0);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (;;) {
      const mpfr_prec_t p = rs.precision();
      unsigned hits = 0;
      for (const auto& part : parts)
        if (contains_zero(evaluate(part.poly, rs[i].ball(), p))) {
          ++hits;
          mult[i] = part.multiplicity;
        }
      if (hits == 1) break;
      if (hits == 0 || p >= rs.ceiling()) throw InternalError("could not attribute a root to a squarefree part");
      rs.refine(std::min(rs.ceiling(), 2 * p));
    }
  }
  std::vector<std::size_t> slots(rs.size());
  std::iota(slots.begin(), slots.end(), 0);
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (unsigned j = 1; j < mult[i]; ++j) slots.push_back(i);
  return {std::move(rs), std::move(slots)};
}

std::vector<RootEnclosure> isolate_roots(const IntPoly& f, mpfr_prec_t precision) {
  RootSet rs = RootSet::isolate(f, precision);
  rs.sort_canonical();
  return {rs.roots().begin(), rs.roots().end()};
}

}  // namespace rootrel
