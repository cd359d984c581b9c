#include "rootrel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "rootrel/deadline.hpp"
#include "rootrel/errors.hpp"

namespace rootrel {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds_at_precision";
    case Verdict::fails: return "fails_at_precision";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

long bit_length(const Integer& x) { return x == 0 ? 0 : static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2)); }

// Exponents folded onto the distinct roots.
std::vector<Integer> fold(const CanonicalOrder& order, std::span<const Integer> v) {
  if (v.size() != order.size()) throw InvalidInput("relation vector length does not match the number of roots");
  std::vector<Integer> e(order.distinct.size());
  for (std::size_t s = 0; s < v.size(); ++s) e[order.slots[s]] += v[s];
  return e;
}

RelationVerdict evaluate_product(const CanonicalOrder& order, const std::vector<Integer>& e, mpfr_prec_t p,
                                 const Real& threshold) {
  ComplexBall prod = ComplexBall::one(p);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!e[i].fits_slong_p()) throw InvalidInput("relation exponent too large");
    prod = mul(prod, pow(order.distinct[i].ball(), e[i].get_si(), p), p);
  }
  const ComplexBall one = ComplexBall::one(p);
  RelationVerdict out;
  out.precision = p;
  const Real lower = distance_lower(prod.mid, one.mid);
  out.residual = mag::add(distance_upper(prod.mid, one.mid), prod.rad);
  if (mag::less(prod.rad, lower))
    out.verdict = Verdict::fails;
  else if (mag::less(out.residual, threshold))
    out.verdict = Verdict::holds;
  return out;
}

}  // namespace

RelationVerdict verify_relation(CanonicalOrder& order, std::span<const Integer> v, int digits) {
  if (digits < 1) throw InvalidInput("digits must be positive");
  const std::vector<Integer> e = fold(order, v);
  Real threshold(mag::kPrec);
  mpfr_set_si(threshold.get(), -digits, MPFR_RNDN);
  mpfr_exp10(threshold.get(), threshold.get(), MPFR_RNDD);

  long ebits = 0;
  for (const auto& x : e) ebits = std::max(ebits, bit_length(x));
  mpfr_prec_t p = static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32 + ebits +
                  static_cast<mpfr_prec_t>(std::bit_width(e.size()));
  RootSet& rs = order.distinct;
  p = std::max(p, rs.precision());
  RelationVerdict out;
  for (;;) {
    check_deadline();
    try {
      rs.refine(p);
    } catch (const PrecisionExhausted&) {
      return out;
    }
    out = evaluate_product(order, e, std::max(p, rs.precision()), threshold);
    if (out.verdict != Verdict::inconclusive || p >= rs.ceiling()) return out;
    p = std::min(rs.ceiling(), 2 * p);
  }
}

namespace {

using Key = std::pair<Integer, Integer>;

struct Enumeration {
  std::vector<std::size_t> coords;  // slots covered by this half
  std::size_t count = 1;
};

std::vector<long> digits_of(std::size_t index, std::size_t length, int bound) {
  const std::size_t base = static_cast<std::size_t>(2 * bound + 1);
  std::vector<long> d(length);
  for (std::size_t i = 0; i < length; ++i) {
    d[i] = static_cast<long>(index % base) - bound;
    index /= base;
  }
  return d;
}

// powers[slot][k + bound] = beta_slot^k as a plain complex number.
std::vector<std::vector<Cx>> power_table(const CanonicalOrder& order, int bound, mpfr_prec_t p) {
  std::vector<std::vector<Cx>> table;
  Cx one(p);
  mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
  for (std::size_t s = 0; s < order.size(); ++s) {
    const Cx& b = order[s].mid;
    const Cx binv = cx_div(one, b, p);
    std::vector<Cx> row(static_cast<std::size_t>(2 * bound + 1), one);
    for (int k = 1; k <= bound; ++k) {
      row[static_cast<std::size_t>(bound + k)] = cx_mul(row[static_cast<std::size_t>(bound + k - 1)], b, p);
      row[static_cast<std::size_t>(bound - k)] = cx_mul(row[static_cast<std::size_t>(bound - k + 1)], binv, p);
    }
    table.push_back(std::move(row));
  }
  return table;
}

Integer rounded(const Real& x, long scale_bits) {
  Real t(x.precision() + 8);
  mpfr_mul_2si(t.get(), x.get(), scale_bits, MPFR_RNDN);
  Integer z;
  mpfr_get_z(z.get_mpz_t(), t.get(), MPFR_RNDN);
  return z;
}

constexpr long kKeyBits = 200;

// Working precision large enough that every partial product carries
// absolute error far below 2^-kKeyBits.
mpfr_prec_t enumeration_precision(const CanonicalOrder& order, int bound) {
  double log2max = 0.0;
  for (std::size_t s = 0; s < order.size(); ++s) {
    const double m = cx_abs_approx(order[s].mid);
    log2max += bound * std::fabs(std::log2(m));
  }
  return static_cast<mpfr_prec_t>(kKeyBits + 96 + std::ceil(log2max));
}

std::vector<Key> half_keys(const std::vector<std::vector<Cx>>& table, const std::vector<std::size_t>& coords,
                           int bound, bool invert, mpfr_prec_t p, std::size_t count) {
  std::vector<Key> keys(count);
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(static)
  for (long idx = 0; idx < n; ++idx) {
    const std::vector<long> d = digits_of(static_cast<std::size_t>(idx), coords.size(), bound);
    Cx prod(p);
    mpfr_set_ui(prod.re.get(), 1, MPFR_RNDN);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      const long k = invert ? -d[i] : d[i];
      if (k != 0) prod = cx_mul(prod, table[coords[i]][static_cast<std::size_t>(k + bound)], p);
    }
    keys[static_cast<std::size_t>(idx)] = {rounded(prod.re, kKeyBits), rounded(prod.im, kKeyBits)};
  }
  return keys;
}

void check_oracle_input(const IntPoly& f, int bound, int digits) {
  if (f.degree() < 1) throw InvalidInput("oracle needs a nonconstant polynomial");
  if (f.degree() > kOracleMaxDegree) throw DegreeCapExceeded("degree exceeds the oracle cap");
  if (bound < 0 || bound > kOracleMaxBound) throw InvalidInput("oracle exponent bound must lie in [0, 4]");
  if (digits < 1) throw InvalidInput("digits must be positive");
  if (f[0] == 0) throw InvalidInput("oracle needs f(0) != 0");
}

// Adds v to the running generating set unless it already lies in the span;
// verifies it first.
void offer(OracleReport& rep, std::vector<IntVector>& gens, LatticeBasis& span, const IntVector& v, int digits) {
  if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; })) return;
  if (span.contains(v)) return;
  ++rep.verified;
  const RelationVerdict verdict = verify_relation(rep.order, v, digits);
  if (verdict.verdict != Verdict::holds) {
    ++rep.rejected;
    return;
  }
  gens.push_back(v);
  span = LatticeBasis::span(v.size(), gens);
  gens = span.columns();
}

void search_split(OracleReport& rep, int bound, int digits) {
  const std::size_t n = rep.order.size();
  const std::size_t base = static_cast<std::size_t>(2 * bound + 1);
  Enumeration left, right;
  for (std::size_t s = 0; s < n; ++s) (s < n / 2 ? left : right).coords.push_back(s);
  for (std::size_t i = 0; i < left.coords.size(); ++i) left.count *= base;
  for (std::size_t i = 0; i < right.coords.size(); ++i) right.count *= base;
  rep.candidates = left.count * right.count;

  const mpfr_prec_t p = enumeration_precision(rep.order, bound);
  rep.order.distinct.refine(p + 64);
  const auto table = power_table(rep.order, bound, p);
  // v = (a, b) is a relation iff prod_left beta^a = prod_right beta^{-b}.
  const std::vector<Key> lk = half_keys(table, left.coords, bound, false, p, left.count);
  const std::vector<Key> rk = half_keys(table, right.coords, bound, true, p, right.count);

  std::map<Key, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> groups;
  for (std::size_t i = 0; i < lk.size(); ++i) groups[lk[i]].first.push_back(i);
  for (std::size_t i = 0; i < rk.size(); ++i) groups[rk[i]].second.push_back(i);

  auto vec = [&](std::size_t li, std::size_t ri) {
    IntVector v(n);
    const auto a = digits_of(li, left.coords.size(), bound);
    const auto b = digits_of(ri, right.coords.size(), bound);
    for (std::size_t i = 0; i < a.size(); ++i) v[left.coords[i]] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) v[right.coords[i]] = b[i];
    return v;
  };
  // The bounded relations with a common partial product c span
  // (a0, b0) + {(a - a0, 0)} + {(0, b - b0)}.
  std::vector<IntVector> gens;
  LatticeBasis span(n);
  for (const auto& [key, members] : groups) {
    check_deadline();
    const auto& [as, bs] = members;
    if (as.empty() || bs.empty()) continue;
    const IntVector base_vec = vec(as[0], bs[0]);
    offer(rep, gens, span, base_vec, digits);
    for (std::size_t k = 1; k < as.size(); ++k) {
      IntVector d = vec(as[k], bs[0]);
      for (std::size_t i = 0; i < n; ++i) d[i] -= base_vec[i];
      offer(rep, gens, span, d, digits);
    }
    for (std::size_t k = 1; k < bs.size(); ++k) {
      IntVector d = vec(as[0], bs[k]);
      for (std::size_t i = 0; i < n; ++i) d[i] -= base_vec[i];
      offer(rep, gens, span, d, digits);
    }
  }
  rep.lattice = span;
}

void search_naive(OracleReport& rep, int bound, int digits) {
  const std::size_t n = rep.order.size();
  const std::size_t base = static_cast<std::size_t>(2 * bound + 1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= base;
  rep.candidates = total;

  const mpfr_prec_t p = enumeration_precision(rep.order, bound);
  rep.order.distinct.refine(p + 64);
  const auto table = power_table(rep.order, bound, p);
  std::vector<std::size_t> order_idx(total);
  std::iota(order_idx.begin(), order_idx.end(), 0);
  // Graded: by l1 norm, then lexicographic on the vector.
  std::vector<std::vector<long>> vs(total);
  std::vector<long> norm(total);
  for (std::size_t i = 0; i < total; ++i) {
    vs[i] = digits_of(i, n, bound);
    std::reverse(vs[i].begin(), vs[i].end());
    norm[i] = std::accumulate(vs[i].begin(), vs[i].end(), 0L, [](long s, long x) { return s + std::labs(x); });
  }
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    return norm[a] != norm[b] ? norm[a] < norm[b] : vs[a] < vs[b];
  });
  Real tol(mag::kPrec);
  mpfr_set_ui_2exp(tol.get(), 1, -kKeyBits / 2, MPFR_RNDN);
  Cx one(p);
  mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
  std::vector<IntVector> gens;
  LatticeBasis span(n);
  for (std::size_t idx : order_idx) {
    if (norm[idx] == 0) continue;
    check_deadline();
    Cx prod = one;
    for (std::size_t s = 0; s < n; ++s)
      if (vs[idx][s] != 0) prod = cx_mul(prod, table[s][static_cast<std::size_t>(vs[idx][s] + bound)], p);
    if (!mag::less(distance_lower(prod, one), tol)) continue;
    IntVector v(n);
    for (std::size_t s = 0; s < n; ++s) v[s] = vs[idx][s];
    offer(rep, gens, span, v, digits);
  }
  rep.lattice = span;
}

}  // namespace

OracleReport brute_force_search(const IntPoly& f, int bound, int digits, Kernel kernel) {
  check_oracle_input(f, bound, digits);
  OracleReport rep{canonical_order(f), LatticeBasis(static_cast<std::size_t>(f.degree())), {}, 0, 0, 0};
  if (kernel == Kernel::parallel)
    search_split(rep, bound, digits);
  else
    search_naive(rep, bound, digits);
  for (const auto& c : rep.lattice.columns()) rep.column_verdicts.push_back(verify_relation(rep.order, c, digits));
  return rep;
}

LatticeBasis brute_force_relations(const IntPoly& f, int bound, int digits) {
  return brute_force_search(f, bound, digits).lattice;
}

}  // namespace rootrel
