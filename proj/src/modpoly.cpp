#include "rootrel/modpoly.hpp"

#include <random>

#include "rootrel/deadline.hpp"
#include "rootrel/errors.hpp"

namespace rootrel {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

}  // namespace

ModPoly::ModPoly(std::vector<u64> coeffs, u64 p) : c_(std::move(coeffs)), p_(p) {
  for (auto& c : c_) c %= p_;
  trim();
}

ModPoly ModPoly::reduce(const IntPoly& f, u64 p) {
  std::vector<u64> v(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) v[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
  return ModPoly(std::move(v), p);
}

ModPoly ModPoly::x(u64 p) { return ModPoly({0, 1}, p); }
ModPoly ModPoly::constant(u64 c, u64 p) { return ModPoly({c}, p); }

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

u64 inv_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw InvalidInput("inverse of zero modulo p");
  u64 r = 1, e = p - 2;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

ModPoly ModPoly::monic() const {
  if (is_zero()) return *this;
  const u64 li = inv_mod(leading(), p_);
  ModPoly r = *this;
  for (auto& c : r.c_) c = mulmod(c, li, p_);
  return r;
}

ModPoly ModPoly::derivative() const {
  std::vector<u64> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(mulmod(c_[i], i % p_, p_));
  return ModPoly(std::move(v), p_);
}

IntPoly ModPoly::lift() const {
  std::vector<Integer> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    v[i] = Integer(static_cast<unsigned long>(c_[i]));
    if (c_[i] > p_ / 2) v[i] -= Integer(static_cast<unsigned long>(p_));
  }
  return IntPoly(std::move(v));
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  std::vector<u64> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
  return ModPoly(std::move(v), a.p_);
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
  std::vector<u64> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (a.coeff(i) + a.p_ - b.coeff(i)) % a.p_;
  return ModPoly(std::move(v), a.p_);
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  if (a.is_zero() || b.is_zero()) return ModPoly({}, a.p_);
  const u64 p = a.p_;
  std::vector<u64> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::size_t lo = k >= b.c_.size() ? k - b.c_.size() + 1 : 0;
    const std::size_t hi = std::min(k, a.c_.size() - 1);
    u128 acc = 0;
    for (std::size_t i = lo; i <= hi; ++i) {
      acc += static_cast<u128>(a.c_[i]) * b.c_[k - i];
      if ((i & 0xF) == 0xF) acc %= p;
    }
    v[k] = static_cast<u64>(acc % p);
  }
  return ModPoly(std::move(v), p);
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
  if (b.is_zero()) throw InvalidInput("division by zero polynomial mod p");
  const u64 p = b.prime();
  if (a.degree() < b.degree()) return {ModPoly({}, p), a};
  std::vector<u64> r = a.coeffs();
  const int db = b.degree();
  std::vector<u64> q(static_cast<std::size_t>(a.degree() - db + 1));
  const u64 li = inv_mod(b.leading(), p);
  for (int k = a.degree(); k >= db; --k) {
    const u64 t = mulmod(r[static_cast<std::size_t>(k)], li, p);
    q[static_cast<std::size_t>(k - db)] = t;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) {
      u64& x = r[static_cast<std::size_t>(k - db + j)];
      x = (x + p - mulmod(t, b[static_cast<std::size_t>(j)], p)) % p;
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {ModPoly(std::move(q), p), ModPoly(std::move(r), p)};
}

ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
  ModPoly u = a, v = b;
  while (!v.is_zero()) {
    ModPoly r = u % v;
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

ModPoly xgcd(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) {
  const u64 p = a.prime();
  ModPoly r0 = a, r1 = b;
  ModPoly s0 = ModPoly::constant(1, p), s1({}, p);
  ModPoly t0({}, p), t1 = ModPoly::constant(1, p);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = s0;
    t = t0;
    return r0;
  }
  const ModPoly li = ModPoly::constant(inv_mod(r0.leading(), p), p);
  s = s0 * li;
  t = t0 * li;
  return r0 * li;
}

ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& mod) {
  const u64 p = mod.prime();
  ModPoly result = ModPoly::constant(1, p) % mod;
  ModPoly b = base % mod;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % mod;
  }
  return result;
}

namespace {

ModPoly pth_root(const ModPoly& f) {
  const u64 p = f.prime();
  std::vector<u64> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(f[i]);
  return ModPoly(std::move(v), p);
}

// Squarefree factorization of a monic polynomial over F_p.
std::vector<ModFactor> squarefree_mod(const ModPoly& f) {
  std::vector<ModFactor> out;
  if (f.degree() < 1) return out;
  ModPoly c = gcd(f, f.derivative());
  ModPoly w = divmod(f, c).first;
  unsigned i = 1;
  while (w.degree() > 0) {
    ModPoly y = gcd(w, c);
    ModPoly fac = divmod(w, y).first;
    if (fac.degree() > 0) out.push_back({fac.monic(), i});
    w = std::move(y);
    c = divmod(c, w).first;
    ++i;
  }
  if (c.degree() > 0) {
    const auto p = static_cast<unsigned>(f.prime());
    for (auto& [g, m] : squarefree_mod(pth_root(c.monic()))) out.push_back({g, m * p});
  }
  return out;
}

}  // namespace

std::vector<std::pair<ModPoly, unsigned>> distinct_degree_factor(const ModPoly& f_in) {
  std::vector<std::pair<ModPoly, unsigned>> out;
  ModPoly f = f_in.monic();
  const u64 p = f.prime();
  const Integer pz(static_cast<unsigned long>(p));
  const ModPoly x = ModPoly::x(p);
  ModPoly h = x % f;
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(f.degree()); ++d) {
    check_deadline();
    h = powmod(h, pz, f);
    ModPoly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = divmod(f, g).first;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

std::vector<ModPoly> equal_degree_factor(const ModPoly& f_in, unsigned d) {
  const ModPoly f = f_in.monic();
  if (f.degree() <= static_cast<int>(d)) return {f};
  const u64 p = f.prime();
  std::mt19937_64 rng(0x5eedULL + static_cast<u64>(f.degree()) * 1315423911ULL + p);
  std::uniform_int_distribution<u64> coin(0, p - 1);
  Integer exponent;
  if (p != 2) {
    mpz_ui_pow_ui(exponent.get_mpz_t(), static_cast<unsigned long>(p), d);
    exponent = (exponent - 1) / 2;
  }
  for (;;) {
    check_deadline();
    std::vector<u64> a(static_cast<std::size_t>(f.degree()));
    for (auto& c : a) c = coin(rng);
    ModPoly ap(std::move(a), p);
    if (ap.degree() < 1) continue;
    ModPoly g = gcd(ap, f);
    if (g.degree() <= 0 || g.degree() == f.degree()) {
      ModPoly b;
      if (p == 2) {
        // Absolute trace onto F_2.
        ModPoly term = ap % f;
        b = term;
        for (unsigned i = 1; i < d; ++i) {
          term = (term * term) % f;
          b = b + term;
        }
      } else {
        b = powmod(ap, exponent, f) - ModPoly::constant(1, p);
      }
      g = gcd(b, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      auto left = equal_degree_factor(g, d);
      auto right = equal_degree_factor(divmod(f, g).first, d);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<ModFactor> factor_mod_p(const IntPoly& f, std::uint64_t p) {
  if (f.degree() < 1) throw InvalidInput("factor_mod_p needs a non-constant polynomial");
  if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) throw BadPrime("prime divides the leading coefficient");
  std::vector<ModFactor> out;
  for (const auto& [part, mult] : squarefree_mod(ModPoly::reduce(f, p).monic())) {
    for (const auto& [block, d] : distinct_degree_factor(part))
      for (auto& g : equal_degree_factor(block, d)) out.push_back({std::move(g), mult});
  }
  return out;
}

std::vector<unsigned> factor_degree_pattern(const ModPoly& f) {
  std::vector<unsigned> degs;
  for (const auto& [block, d] : distinct_degree_factor(f))
    for (int k = 0; k < block.degree() / static_cast<int>(d); ++k) degs.push_back(d);
  return degs;
}

bool is_good_prime(const IntPoly& f, std::uint64_t p) {
  if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) return false;
  ModPoly fp = ModPoly::reduce(f, p);
  return gcd(fp, fp.derivative()).degree() == 0;
}

std::vector<std::uint64_t> small_primes(std::size_t count, std::uint64_t start) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = std::max<std::uint64_t>(start, 2); out.size() < count; ++n) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(n);
  }
  return out;
}

}  // namespace rootrel
