#include "rootrel/factor.hpp"

#include <algorithm>
#include <cstdint>

#include "rootrel/deadline.hpp"
#include "rootrel/errors.hpp"
#include "rootrel/modpoly.hpp"

namespace rootrel {

namespace {

using u64 = std::uint64_t;

constexpr std::size_t kFactorPrimes = 5;  // good primes tried when choosing the lifting prime
constexpr std::size_t kSievePrimes = 16;  // good primes tried by the irreducibility sieve
constexpr std::size_t kPrimeScan = 400;   // candidates scanned for good primes

// Subset sums of the factor degrees, as a membership table over [0, n].
std::vector<bool> subset_sums(const std::vector<unsigned>& degrees, unsigned n) {
  std::vector<bool> reach(n + 1, false);
  reach[0] = true;
  for (unsigned d : degrees)
    for (unsigned s = n; s >= d; --s) {
      if (reach[s - d]) reach[s] = true;
      if (s == d) break;
    }
  return reach;
}

bool only_trivial(const std::vector<bool>& allowed) {
  for (std::size_t s = 1; s + 1 < allowed.size(); ++s)
    if (allowed[s]) return false;
  return true;
}

IntPoly reduce_mod(const IntPoly& f, const Integer& m) {
  std::vector<Integer> v(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) mpz_fdiv_r(v[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly symmetric_mod(const IntPoly& f, const Integer& m) {
  const Integer half = m / 2;
  std::vector<Integer> v(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r(v[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
    if (v[i] > half) v[i] -= m;
  }
  return IntPoly(std::move(v));
}

IntPoly lift_nonneg(const ModPoly& f) {
  std::vector<Integer> v(f.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Integer(static_cast<unsigned long>(f[i]));
  return IntPoly(std::move(v));
}

// F monic modulo p^k with F = G0*H0 mod p (G0, H0 monic, coprime).
// Returns monic G, H with F = G*H mod p^k (linear Hensel lifting).
std::pair<IntPoly, IntPoly> hensel_pair(const IntPoly& F, const ModPoly& G0, const ModPoly& H0, u64 p,
                                        unsigned k) {
  ModPoly s, t;
  if (xgcd(G0, H0, s, t).degree() != 0) throw InternalError("Hensel lifting of non-coprime factors");
  IntPoly G = lift_nonneg(G0), H = lift_nonneg(H0);
  Integer pj = static_cast<unsigned long>(p);
  for (unsigned j = 1; j < k; ++j) {
    check_deadline();
    IntPoly E = F - G * H;
    std::vector<Integer> e(E.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!mpz_divisible_p(E[i].get_mpz_t(), pj.get_mpz_t())) throw InternalError("Hensel invariant violated");
      mpz_divexact(e[i].get_mpz_t(), E[i].get_mpz_t(), pj.get_mpz_t());
    }
    const ModPoly ebar = ModPoly::reduce(IntPoly(std::move(e)), p);
    auto [q, A] = divmod(t * ebar, G0);
    const ModPoly B = s * ebar + q * H0;
    G += lift_nonneg(A) * pj;
    H += lift_nonneg(B) * pj;
    pj *= static_cast<unsigned long>(p);
    G = reduce_mod(G, pj);
    H = reduce_mod(H, pj);
  }
  return {G, H};
}

std::vector<IntPoly> hensel_lift(const IntPoly& F, std::span<const ModPoly> facs, u64 p, unsigned k) {
  if (facs.size() == 1) return {F};
  const std::size_t mid = facs.size() / 2;
  ModPoly G0 = ModPoly::constant(1, p), H0 = ModPoly::constant(1, p);
  for (std::size_t i = 0; i < mid; ++i) G0 = G0 * facs[i];
  for (std::size_t i = mid; i < facs.size(); ++i) H0 = H0 * facs[i];
  auto [G, H] = hensel_pair(F, G0, H0, p, k);
  auto left = hensel_lift(G, facs.subspan(0, mid), p, k);
  auto right = hensel_lift(H, facs.subspan(mid), p, k);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

// Sieve state shared by factorization and the irreducibility test.
struct PrimeSurvey {
  std::vector<bool> allowed;  // degrees achievable modulo every surveyed prime
  u64 best_prime = 0;
  std::size_t best_count = 0;
  unsigned primes_used = 0;
};

PrimeSurvey survey_primes(const IntPoly& g, std::size_t wanted, bool stop_on_trivial) {
  const auto n = static_cast<unsigned>(g.degree());
  PrimeSurvey s;
  s.allowed.assign(n + 1, true);
  for (u64 p : small_primes(kPrimeScan)) {
    check_deadline();
    if (!is_good_prime(g, p)) continue;
    const auto pattern = factor_degree_pattern(ModPoly::reduce(g, p).monic());
    const auto sums = subset_sums(pattern, n);
    for (unsigned d = 0; d <= n; ++d) s.allowed[d] = s.allowed[d] && sums[d];
    if (s.best_prime == 0 || pattern.size() < s.best_count) {
      s.best_prime = p;
      s.best_count = pattern.size();
    }
    ++s.primes_used;
    if (stop_on_trivial && only_trivial(s.allowed)) break;
    if (s.primes_used >= wanted) break;
  }
  if (s.best_prime == 0) throw InternalError("no good prime found for " + g.to_string());
  return s;
}

Integer coefficient_bound(const IntPoly& g) {
  // Landau-Mignotte: a factor h of g has |h_i| <= 2^deg(g) ||g||_2; the
  // recombined candidate carries an extra factor |lc(g)|, and the symmetric
  // residue needs twice the magnitude. Doubled once more for margin.
  Integer norm2 = 0;
  for (const auto& c : g.coeffs()) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer b = abs(g.leading()) * root * 4;
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(g.degree()));
  return b;
}

// g primitive, squarefree, deg >= 1, g(0) != 0.
std::vector<IntPoly> factor_squarefree(const IntPoly& g_in) {
  IntPoly g = g_in.primitive();
  if (g.degree() <= 1) return {g};
  const PrimeSurvey survey = survey_primes(g, kFactorPrimes, true);
  if (only_trivial(survey.allowed)) return {g};

  const u64 p = survey.best_prime;
  std::vector<ModPoly> facs;
  for (auto& f : factor_mod_p(g, p)) facs.push_back(std::move(f.poly));

  const Integer bound = coefficient_bound(g);
  unsigned k = 1;
  Integer M = static_cast<unsigned long>(p);
  while (M <= bound) {
    M *= static_cast<unsigned long>(p);
    ++k;
  }
  Integer lc_inv;
  const Integer lc0 = g.leading();
  if (mpz_invert(lc_inv.get_mpz_t(), lc0.get_mpz_t(), M.get_mpz_t()) == 0)
    throw InternalError("leading coefficient not invertible modulo p^k");
  const IntPoly F = reduce_mod(g * lc_inv, M);
  std::vector<IntPoly> lifted = hensel_lift(F, facs, p, k);

  std::vector<IntPoly> found;
  std::vector<std::size_t> live(lifted.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;

  std::size_t s = 1;
  while (2 * s <= live.size()) {
    bool restart = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      check_deadline();
      unsigned deg = 0;
      for (std::size_t i : idx) deg += static_cast<unsigned>(lifted[live[i]].degree());
      if (survey.allowed[deg]) {
        const Integer lc = g.leading();
        Integer c0 = lc;
        for (std::size_t i : idx) c0 = (c0 * lifted[live[i]].coeff(0)) % M;
        mpz_fdiv_r(c0.get_mpz_t(), c0.get_mpz_t(), M.get_mpz_t());
        if (c0 > M / 2) c0 -= M;
        const Integer target = lc * g[0];
        if (c0 != 0 && mpz_divisible_p(target.get_mpz_t(), c0.get_mpz_t())) {
          IntPoly cand = IntPoly::constant(lc);
          for (std::size_t i : idx) cand = reduce_mod(cand * lifted[live[i]], M);
          cand = symmetric_mod(cand, M).primitive();
          if (auto q = divide_exact(g, cand)) {
            found.push_back(cand);
            g = q->primitive();
            std::vector<std::size_t> rest;
            for (std::size_t j = 0; j < live.size(); ++j)
              if (std::find(idx.begin(), idx.end(), j) == idx.end()) rest.push_back(live[j]);
            live = std::move(rest);
            restart = true;
            break;
          }
        }
      }
      // next combination
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == live.size() - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!restart) ++s;
  }
  if (g.degree() >= 1) found.push_back(g);
  return found;
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

IntPoly FactoredForm::expand() const {
  RatPoly acc(std::vector<RatScalar>{content});
  for (const auto& [g, m] : factors) acc = acc * RatPoly(pow(g, m));
  std::vector<Integer> v;
  for (const auto& c : acc.coeffs()) {
    if (c.get_den() != 1) throw InvalidInput("factored form does not expand to an integer polynomial");
    v.push_back(c.get_num());
  }
  return IntPoly(std::move(v));
}

FactoredForm factor_over_Q(const IntPoly& f) {
  if (f.degree() < 1) throw InvalidInput("factorization needs a non-constant polynomial");
  FactoredForm out;
  Integer c = f.content();
  if (sgn(f.leading()) < 0) c = -c;
  out.content = RatScalar(c);
  IntPoly g = f.primitive();
  std::size_t zeros = 0;
  while (g[zeros] == 0) ++zeros;
  if (zeros > 0) {
    out.factors.push_back({IntPoly{0, 1}, static_cast<unsigned>(zeros)});
    g = IntPoly(std::vector<Integer>(g.coeffs().begin() + static_cast<long>(zeros), g.coeffs().end()));
  }
  if (g.degree() >= 1) {
    for (const auto& [part, m] : squarefree_decompose(g))
      for (auto& h : factor_squarefree(part)) out.factors.push_back({std::move(h), m});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const PolyPower& a, const PolyPower& b) {
    if (a.poly != b.poly) return poly_less(a.poly, b.poly);
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

IrreducibilityReport irreducibility_test(const IntPoly& f_in) {
  if (f_in.degree() < 1) throw InvalidInput("irreducibility test needs a non-constant polynomial");
  const IntPoly f = f_in.primitive();
  IrreducibilityReport r;
  if (!is_squarefree(f)) return r;
  if (f.degree() == 1) {
    r.irreducible = r.sieve_certified = true;
    return r;
  }
  if (f[0] == 0) return r;
  const PrimeSurvey survey = survey_primes(f, kSievePrimes, true);
  r.primes_used = survey.primes_used;
  if (only_trivial(survey.allowed)) {
    r.irreducible = r.sieve_certified = true;
    return r;
  }
  const FactoredForm ff = factor_over_Q(f);
  r.irreducible = ff.factors.size() == 1 && ff.factors[0].multiplicity == 1;
  return r;
}

bool is_irreducible(const IntPoly& f) { return irreducibility_test(f).irreducible; }

unsigned long cyclotomic_index_bound(unsigned long n) {
  // phi(d) >= sqrt(d/2), so every d with phi(d) <= n satisfies d <= 2n^2.
  const unsigned long limit = 2 * n * n + 2;
  std::vector<unsigned long> phi(limit + 1);
  for (unsigned long i = 0; i <= limit; ++i) phi[i] = i;
  for (unsigned long i = 2; i <= limit; ++i)
    if (phi[i] == i)
      for (unsigned long j = i; j <= limit; j += i) phi[j] -= phi[j] / i;
  unsigned long best = 1;
  for (unsigned long d = 1; d <= limit; ++d)
    if (phi[d] <= n) best = d;
  return best;
}

bool all_roots_roots_of_unity(const IntPoly& f) {
  if (f.degree() < 1) throw InvalidInput("roots-of-unity test needs a non-constant polynomial");
  IntPoly h = squarefree_part(f);
  // A product of cyclotomic polynomials is monic with constant term +-1.
  if (h.leading() != 1 || abs(h[0]) != 1) return false;
  const unsigned long bound = cyclotomic_index_bound(static_cast<unsigned long>(h.degree()));
  for (unsigned long d = 1; d <= bound && h.degree() >= 1; ++d) {
    check_deadline();
    if (euler_phi(d) > static_cast<unsigned long>(h.degree())) continue;
    if (auto q = divide_exact(h, cyclotomic(d))) h = *std::move(q);
  }
  return h.degree() < 1;
}

}  // namespace rootrel
