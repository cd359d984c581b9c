#include "rootrel/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "rootrel/deadline.hpp"
#include "rootrel/errors.hpp"

namespace rootrel {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::binomial(std::size_t k, const Integer& c) {
  std::vector<Integer> v(k + 1);
  v[k] = 1;
  v[0] -= c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return {};
  Integer g = content();
  if (sgn(leading()) < 0) g = -g;
  if (g == 1) return *this;
  std::vector<Integer> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::negate_variable() const {
  IntPoly r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

IntPoly IntPoly::reversed() const {
  std::vector<Integer> v(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Integer> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatScalar IntPoly::eval(const RatScalar& x) const {
  // Homogenized Horner keeps the arithmetic in Z.
  const Integer& p = x.get_num();
  const Integer& q = x.get_den();
  Integer acc = 0, qpow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * p + *it * qpow;
    qpow *= q;
  }
  if (is_zero()) return RatScalar(0);
  Integer den = 1;
  mpz_pow_ui(den.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(degree()));
  RatScalar r(acc, den);
  r.canonicalize();
  return r;
}

Integer IntPoly::height() const {
  Integer h = 0;
  for (const auto& c : coeffs_)
    if (abs(c) > h) h = abs(c);
  return h;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPoly operator-(const IntPoly& a) {
  IntPoly r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPoly(std::move(v));
}

namespace {

template <class T>
std::string format_poly(std::span<const T> c, char var) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    T a = c[k];
    bool neg = sgn(a) < 0;
    if (neg) a = -a;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (k == 0 || a != 1) {
      os << a;
      if (k > 0) os << '*';
    }
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

}  // namespace

std::string IntPoly::to_string(char var) const { return format_poly<Integer>(coeffs_, var); }

IntPoly pow(const IntPoly& f, unsigned k) {
  IntPoly result = IntPoly::constant(1), base = f;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// RatPoly

RatPoly::RatPoly(std::vector<RatScalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(const IntPoly& f) {
  coeffs_.reserve(f.size());
  for (const auto& c : f.coeffs()) coeffs_.emplace_back(c);
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatScalar RatPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : RatScalar(0); }

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  RatPoly r = *this;
  RatScalar inv = 1 / leading();
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

IntPoly RatPoly::primitive_integer() const {
  if (is_zero()) return {};
  Integer l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Integer> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[i].get_num() * (l / coeffs_[i].get_den());
  return IntPoly(std::move(v)).primitive();
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<RatScalar> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<RatScalar> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return RatPoly(std::move(v));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<RatScalar> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPoly(std::move(v));
}

std::string RatPoly::to_string(char var) const { return format_poly<RatScalar>(coeffs_, var); }

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw InvalidInput("division by the zero polynomial");
  std::vector<RatScalar> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  if (a.degree() < db) return {RatPoly{}, a};
  std::vector<RatScalar> q(static_cast<std::size_t>(a.degree() - db + 1));
  const RatScalar inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    RatScalar t = r[static_cast<std::size_t>(k)] * inv;
    if (t == 0) continue;
    q[static_cast<std::size_t>(k - db)] = t;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

// ---------------------------------------------------------------------------
// Division, gcd, resultant

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidInput("division by the zero polynomial");
  if (a.is_zero()) return IntPoly{};
  const int da = a.degree(), db = b.degree();
  if (da < db) return std::nullopt;
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<Integer> q(static_cast<std::size_t>(da - db + 1));
  const Integer& lb = b.leading();
  for (int k = da; k >= db; --k) {
    Integer& top = r[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= db; ++j)
      mpz_submul(r[static_cast<std::size_t>(k - db + j)].get_mpz_t(), t.get_mpz_t(),
                 b[static_cast<std::size_t>(j)].get_mpz_t());
    q[static_cast<std::size_t>(k - db)] = std::move(t);
  }
  for (int j = 0; j < db; ++j)
    if (r[static_cast<std::size_t>(j)] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw InternalError("inexact polynomial division: " + a.to_string() + " / " + b.to_string());
  return *std::move(q);
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidInput("pseudo-division by the zero polynomial");
  const int db = b.degree();
  if (a.degree() < db) return a;
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  const Integer& lb = b.leading();
  int e = a.degree() - db + 1;
  for (int k = a.degree(); k >= db; --k) {
    Integer t = r[static_cast<std::size_t>(k)];
    for (auto& c : r) c *= lb;
    --e;
    if (t != 0)
      for (int j = 0; j <= db; ++j)
        mpz_submul(r[static_cast<std::size_t>(k - db + j)].get_mpz_t(), t.get_mpz_t(),
                   b[static_cast<std::size_t>(j)].get_mpz_t());
    r.pop_back();
  }
  IntPoly rem(std::move(r));
  if (e > 0) {
    Integer s;
    mpz_pow_ui(s.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    rem *= s;
  }
  return rem;
}

namespace {

// Degree of gcd(a mod p, b mod p), used to certify coprimality cheaply.
int gcd_degree_mod(const IntPoly& a, const IntPoly& b, std::uint64_t p) {
  auto reduce = [p](const IntPoly& f) {
    std::vector<std::uint64_t> v(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) v[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  };
  auto inv = [p](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  auto u = reduce(a), v = reduce(b);
  while (!v.empty()) {
    const std::uint64_t li = inv(v.back());
    while (u.size() >= v.size()) {
      const std::uint64_t t = u.back() * li % p;
      const std::size_t off = u.size() - v.size();
      for (std::size_t j = 0; j < v.size(); ++j) u[off + j] = (u[off + j] + (p - t) * v[j]) % p;
      while (!u.empty() && u.back() == 0) u.pop_back();
    }
    std::swap(u, v);
  }
  return static_cast<int>(u.size()) - 1;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) throw InvalidInput("gcd of two zero polynomials");
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return IntPoly{1};

  // Good primes give deg gcd_p >= deg gcd; a degree-0 modular gcd proves coprimality.
  static constexpr std::uint64_t kPrimes[] = {2147483647ULL, 2147483629ULL, 2147483587ULL};
  for (std::uint64_t p : kPrimes) {
    if (mpz_divisible_ui_p(a.leading().get_mpz_t(), p) || mpz_divisible_ui_p(b.leading().get_mpz_t(), p)) continue;
    if (gcd_degree_mod(a, b, p) == 0) return IntPoly{1};
    break;
  }

  IntPoly u = a.primitive(), v = b.primitive();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    check_deadline();
    IntPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.primitive();
  }
  return u.primitive();
}

std::vector<PolyPower> squarefree_decompose(const IntPoly& f) {
  if (f.is_constant()) throw InvalidInput("squarefree decomposition needs a non-constant polynomial");
  const IntPoly g = f.primitive();
  std::vector<PolyPower> out;
  IntPoly a = poly_gcd(g, g.derivative());
  IntPoly b = divexact(g, a);
  IntPoly c = divexact(g.derivative(), a);
  IntPoly d = c - b.derivative();
  unsigned i = 1;
  while (!b.is_constant()) {
    check_deadline();
    a = poly_gcd(b, d);
    if (!a.is_constant()) out.push_back({a, i});
    b = divexact(b, a);
    c = divexact(d, a);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

IntPoly squarefree_part(const IntPoly& f) {
  IntPoly r{1};
  for (const auto& [g, k] : squarefree_decompose(f)) r = r * g;
  return r.primitive();
}

bool is_squarefree(const IntPoly& f) {
  if (f.is_zero()) throw InvalidInput("squarefree test of the zero polynomial");
  if (f.is_constant()) return true;
  return poly_gcd(f, f.derivative()).is_constant();
}

namespace {

Integer ipow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

Integer resultant(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) throw InvalidInput("resultant with a zero polynomial");
  if (a_in.degree() == 0) return ipow(a_in.leading(), static_cast<unsigned long>(b_in.degree()));
  if (b_in.degree() == 0) return ipow(b_in.leading(), static_cast<unsigned long>(a_in.degree()));

  // Subresultant PRS on the primitive parts (Collins, Brown).
  const Integer ca = a_in.content(), cb = b_in.content();
  IntPoly A = a_in, B = b_in;
  if (ca != 1) A = divexact(A, IntPoly::constant(ca));
  if (cb != 1) B = divexact(B, IntPoly::constant(cb));
  Integer t = ipow(ca, static_cast<unsigned long>(B.degree())) * ipow(cb, static_cast<unsigned long>(A.degree()));
  int s = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((A.degree() & 1) && (B.degree() & 1)) s = -1;
  }
  Integer g = 1, h = 1;
  for (;;) {
    check_deadline();
    const int delta = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    IntPoly R = pseudo_remainder(A, B);
    A = std::move(B);
    if (R.is_zero()) return 0;
    const Integer divisor = g * ipow(h, static_cast<unsigned long>(delta));
    B = divexact(R, IntPoly::constant(divisor));
    g = A.leading();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      Integer num = ipow(g, static_cast<unsigned long>(delta));
      Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (B.degree() == 0) break;
  }
  const unsigned long da = static_cast<unsigned long>(A.degree());
  Integer lb = ipow(B.leading(), da);
  if (da > 1) {
    Integer den = ipow(h, da - 1);
    mpz_divexact(lb.get_mpz_t(), lb.get_mpz_t(), den.get_mpz_t());
  }
  return s * t * lb;
}

IntPoly graeffe(const IntPoly& f) {
  if (f.is_zero()) throw InvalidInput("Graeffe transform of the zero polynomial");
  IntPoly prod = f * f.negate_variable();
  std::vector<Integer> v((prod.size() + 1) / 2);
  const bool flip = (f.degree() & 1) != 0;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = flip ? Integer(-prod[2 * i]) : prod[2 * i];
  return IntPoly(std::move(v));
}

std::optional<IntPoly> poly_sqrt_exact(const IntPoly& f) {
  if (f.is_zero()) return IntPoly{};
  if (sgn(f.leading()) < 0 || (f.degree() & 1)) return std::nullopt;
  if (!mpz_perfect_square_p(f.leading().get_mpz_t())) return std::nullopt;
  const std::size_t m = static_cast<std::size_t>(f.degree()) / 2;
  std::vector<Integer> h(m + 1);
  mpz_sqrt(h[m].get_mpz_t(), f.leading().get_mpz_t());
  const Integer two_lead = 2 * h[m];
  for (std::size_t k = m; k-- > 0;) {
    // coefficient of x^{m+k} in h^2 is 2 h_m h_k + sum_{i,j>k, i+j=m+k} h_i h_j
    Integer acc = f[m + k];
    for (std::size_t i = k + 1; i < m; ++i) {
      const std::size_t j = m + k - i;
      if (j <= k || j >= m) continue;
      mpz_submul(acc.get_mpz_t(), h[i].get_mpz_t(), h[j].get_mpz_t());
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), two_lead.get_mpz_t())) return std::nullopt;
    mpz_divexact(h[k].get_mpz_t(), acc.get_mpz_t(), two_lead.get_mpz_t());
  }
  IntPoly root(std::move(h));
  if (root * root != f) return std::nullopt;
  return root;
}

RatPoly pow_mod(unsigned long m, const IntPoly& g) {
  if (g.degree() < 1) throw InvalidInput("pow_mod needs a modulus of degree >= 1");
  const RatPoly mod = RatPoly(g).monic();
  auto reduce = [&mod](const RatPoly& p) { return divmod(p, mod).second; };
  RatPoly result = reduce(RatPoly(std::vector<RatScalar>{1}));
  RatPoly base = reduce(RatPoly(std::vector<RatScalar>{0, 1}));
  while (m > 0) {
    check_deadline();
    if (m & 1UL) result = reduce(result * base);
    m >>= 1UL;
    if (m > 0) base = reduce(base * base);
  }
  return result;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long r = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> small, large;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

namespace {

int mobius(unsigned long n) {
  int mu = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

IntPoly cyclotomic(unsigned long d) {
  if (d == 0) throw InvalidInput("cyclotomic index must be positive");
  // Phi_d = prod_{e | d} (x^e - 1)^{mu(d/e)}
  IntPoly num{1}, den{1};
  for (unsigned long e : divisors(d)) {
    const int mu = mobius(d / e);
    if (mu == 1) num = num * IntPoly::binomial(e, 1);
    if (mu == -1) den = den * IntPoly::binomial(e, 1);
  }
  return divexact(num, den);
}

IntPoly interpolate(std::span<const Integer> xs, std::span<const Integer> ys) {
  if (xs.size() != ys.size() || xs.empty()) throw InvalidInput("interpolation needs matching nonempty point sets");
  const std::size_t n = xs.size();
  // Newton divided differences.
  std::vector<RatScalar> c(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      c[i] = (c[i] - c[i - 1]) / RatScalar(xs[i] - xs[i - j]);
      if (i == j) break;
    }
  }
  std::vector<RatScalar> p{c[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    // p = p*(x - xs[k]) + c[k]
    std::vector<RatScalar> q(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] -= p[i] * xs[k];
    }
    q[0] += c[k];
    p = std::move(q);
  }
  std::vector<Integer> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].get_den() != 1) throw InternalError("interpolated polynomial is not integral");
    out[i] = p[i].get_num();
  }
  return IntPoly(std::move(out));
}

}  // namespace rootrel
