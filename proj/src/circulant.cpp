#include "rootrel/circulant.hpp"

#include <algorithm>
#include <cmath>

#include "rootrel/deadline.hpp"
#include "rootrel/errors.hpp"
#include "rootrel/modpoly.hpp"

namespace rootrel {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

FractalCirculant::FractalCirculant(unsigned m, unsigned d, std::vector<RatScalar> generators)
    : m_(m), d_(d), a_(std::move(generators)) {
  if (m < 2) throw InvalidInput("circulant order must be at least 2");
  if (d < 1) throw InvalidInput("circulant depth must be at least 1");
  std::size_t n = 1;
  for (unsigned i = 0; i < d; ++i) {
    n *= m;
    if (n > kMaxCirculantSize) throw InvalidInput("circulant size m^d exceeds 3125");
  }
  if (a_.size() != n) throw InvalidInput("generator table must have m^d entries");
  for (auto& x : a_) x.canonicalize();
}

std::size_t FractalCirculant::index(const std::vector<unsigned>& v) const {
  if (v.size() != d_) throw InvalidInput("index vector has the wrong length");
  std::size_t idx = 0;
  for (unsigned x : v) idx = idx * m_ + (x % m_);
  return idx;
}

std::vector<unsigned> FractalCirculant::vector_of(std::size_t index) const {
  std::vector<unsigned> v(d_);
  for (unsigned k = d_; k-- > 0;) {
    v[k] = static_cast<unsigned>(index % m_);
    index /= m_;
  }
  return v;
}

std::vector<Integer> FractalCirculant::integer_generators() const {
  Integer den = 1;
  for (const auto& x : a_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(a_.size());
  for (const auto& x : a_) out.push_back(x.get_num() * (den / x.get_den()));
  return out;
}

namespace {

// (v - u) mod m as a table index.
std::size_t difference_index(const FractalCirculant& F, std::size_t v, std::size_t u) {
  const unsigned m = F.order();
  std::size_t idx = 0, scale = 1;
  for (unsigned k = 0; k < F.depth(); ++k) {
    const unsigned dv = static_cast<unsigned>(v % m), du = static_cast<unsigned>(u % m);
    idx += ((dv + m - du) % m) * scale;
    scale *= m;
    v /= m;
    u /= m;
  }
  return idx;
}

std::vector<std::vector<Integer>> integer_matrix(const FractalCirculant& F) {
  const std::vector<Integer> a = F.integer_generators();
  const std::size_t n = F.size();
  std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) rows[u][v] = a[difference_index(F, v, u)];
  return rows;
}

unsigned dot_mod(const std::vector<unsigned>& u, const std::vector<unsigned>& v, unsigned m) {
  unsigned long s = 0;
  for (std::size_t k = 0; k < u.size(); ++k) s += static_cast<unsigned long>(u[k]) * v[k];
  return static_cast<unsigned>(s % m);
}

using u64 = std::uint64_t;

std::size_t rank_mod_p(const std::vector<std::vector<Integer>>& rows, u64 p) {
  const std::size_t nr = rows.size(), nc = nr ? rows[0].size() : 0;
  std::vector<std::vector<u64>> a(nr, std::vector<u64>(nc));
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) a[i][j] = mpz_fdiv_ui(rows[i][j].get_mpz_t(), p);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < nc && rank < nr; ++c) {
    std::size_t piv = rank;
    while (piv < nr && a[piv][c] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(a[piv], a[rank]);
    const u64 inv = inv_mod(a[rank][c], p);
    const long lo = static_cast<long>(rank + 1), hi = static_cast<long>(nr);
#pragma omp parallel for schedule(static)
    for (long i = lo; i < hi; ++i) {
      auto& row = a[static_cast<std::size_t>(i)];
      if (row[c] == 0) continue;
      const u64 f = static_cast<u64>((static_cast<unsigned __int128>(row[c]) * inv) % p);
      for (std::size_t j = c; j < nc; ++j)
        row[j] = (row[j] + p - static_cast<u64>((static_cast<unsigned __int128>(f) * a[rank][j]) % p)) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

RatMatrix build_matrix(const FractalCirculant& F) {
  const std::size_t n = F.size();
  RatMatrix M(n, std::vector<RatScalar>(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) M[u][v] = F.generators()[difference_index(F, v, u)];
  return M;
}

std::size_t rank_bareiss(std::vector<std::vector<Integer>> a, CirculantKernel kernel) {
  const std::size_t nr = a.size(), nc = nr ? a[0].size() : 0;
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < nc && rank < nr; ++c) {
    check_deadline();
    std::size_t piv = rank;
    while (piv < nr && a[piv][c] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(a[piv], a[rank]);
    const Integer& p = a[rank][c];
    const long lo = static_cast<long>(rank + 1), hi = static_cast<long>(nr);
    // a_ij <- (p a_ij - a_ic a_rj) / prev, exact by Sylvester's identity.
    auto update = [&](long i) {
      auto& row = a[static_cast<std::size_t>(i)];
      const Integer f = row[c];
      for (std::size_t j = c + 1; j < nc; ++j) {
        Integer t = p * row[j] - f * a[rank][j];
        mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    };
    if (kernel == CirculantKernel::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
      for (long i = lo; i < hi; ++i) update(i);
    } else {
      for (long i = lo; i < hi; ++i) update(i);
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t rank_multimodular(const std::vector<std::vector<Integer>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) return 0;
  // log2 of the Hadamard bound for any square minor: product of the
  // largest column norms.
  std::vector<double> col_log(rows[0].size(), 0.0);
  for (std::size_t j = 0; j < col_log.size(); ++j) {
    double s = 0.0;
    for (const auto& r : rows) s += std::pow(mpz_get_d(r[j].get_mpz_t()), 2);
    col_log[j] = s > 0 ? 0.5 * std::log2(s) : 0.0;
  }
  std::sort(col_log.rbegin(), col_log.rend());
  std::size_t best = 0;
  double covered = 0.0;  // log2 of the product of primes used
  u64 p = u64{1} << 31;
  for (;;) {
    check_deadline();
    do --p;
    while (!is_prime(p));
    best = std::max(best, rank_mod_p(rows, p));
    covered += std::log2(static_cast<double>(p));
    if (best == std::min(n, rows[0].size())) return best;
    double bound = 0.0;
    for (std::size_t j = 0; j <= best && j < col_log.size(); ++j) bound += std::max(col_log[j], 0.0);
    if (covered > bound + 1.0) return best;
  }
}

std::size_t corank_exact(const FractalCirculant& F, CirculantKernel kernel) {
  auto rows = integer_matrix(F);
  const std::size_t n = F.size();
  const std::size_t rank = n <= kBareissLimit ? rank_bareiss(std::move(rows), kernel) : rank_multimodular(rows);
  return n - rank;
}

bool dft_coefficient_vanishes(const FractalCirculant& F, std::size_t u_index) {
  const unsigned m = F.order();
  const std::vector<Integer> a = F.integer_generators();
  const std::vector<unsigned> u = F.vector_of(u_index);
  std::vector<Integer> coeffs(m);
  for (std::size_t v = 0; v < F.size(); ++v) coeffs[dot_mod(u, F.vector_of(v), m)] += a[v];
  IntPoly P(std::move(coeffs));
  if (P.is_zero()) return true;
  return divide_exact(P, cyclotomic(m)).has_value();
}

std::size_t corank_dft(const FractalCirculant& F, CirculantKernel kernel) {
  const long n = static_cast<long>(F.size());
  std::size_t count = 0;
  check_deadline();
  if (kernel == CirculantKernel::parallel) {
#pragma omp parallel for reduction(+ : count) schedule(dynamic)
    for (long u = 0; u < n; ++u)
      if (dft_coefficient_vanishes(F, static_cast<std::size_t>(u))) ++count;
  } else {
    for (long u = 0; u < n; ++u)
      if (dft_coefficient_vanishes(F, static_cast<std::size_t>(u))) ++count;
  }
  return count;
}

bool is_slicing_vector(const FractalCirculant& F, const std::vector<unsigned>& u) {
  const unsigned p = F.order();
  if (!is_prime(p)) throw InvalidInput("slicing vectors need prime order");
  if (std::all_of(u.begin(), u.end(), [p](unsigned x) { return x % p == 0; })) return false;
  std::vector<RatScalar> sums(p);
  for (std::size_t v = 0; v < F.size(); ++v) sums[dot_mod(u, F.vector_of(v), p)] += F.generators()[v];
  return std::all_of(sums.begin(), sums.end(), [&](const RatScalar& s) { return s == sums[0]; });
}

std::vector<std::vector<unsigned>> slicing_vectors(const FractalCirculant& F) {
  if (!is_prime(F.order())) throw InvalidInput("slicing vectors need prime order");
  std::vector<std::vector<unsigned>> out;
  for (std::size_t i = 1; i < F.size(); ++i) {
    auto u = F.vector_of(i);
    if (is_slicing_vector(F, u)) out.push_back(std::move(u));
  }
  return out;
}

std::size_t slicing_number(const FractalCirculant& F) { return slicing_vectors(F).size() / (F.order() - 1); }

std::size_t corank_via_slicing(const FractalCirculant& F) {
  RatScalar total = 0;
  for (const auto& x : F.generators()) total += x;
  return (F.order() - 1) * slicing_number(F) + (total == 0 ? 1 : 0);
}

}  // namespace rootrel
