#pragma once

// Fractal circulant matrices M = (a_{v-u}) indexed by (Z/mZ)^d, rows and
// columns in lexicographic order (first coordinate most significant), and
// three independent ways to compute their corank.

#include <vector>

#include "rootrel/polynomial.hpp"

namespace rootrel {

constexpr std::size_t kMaxCirculantSize = 3125;

class FractalCirculant {
 public:
  // generators[index(v)] = a_v; throws InvalidInput on size mismatch.
  FractalCirculant(unsigned m, unsigned d, std::vector<RatScalar> generators);

  unsigned order() const { return m_; }
  unsigned depth() const { return d_; }
  std::size_t size() const { return a_.size(); }
  const std::vector<RatScalar>& generators() const { return a_; }
  const RatScalar& at(const std::vector<unsigned>& v) const { return a_[index(v)]; }

  std::size_t index(const std::vector<unsigned>& v) const;
  std::vector<unsigned> vector_of(std::size_t index) const;
  // a_v scaled by a common positive denominator (coranks are unchanged).
  std::vector<Integer> integer_generators() const;

 private:
  unsigned m_, d_;
  std::vector<RatScalar> a_;
};

using RatMatrix = std::vector<std::vector<RatScalar>>;  // rows

RatMatrix build_matrix(const FractalCirculant& F);

enum class CirculantKernel { parallel, serial };

// Rank by fraction-free elimination; for sizes beyond kBareissLimit the rank
// is computed modulo primes until a Hadamard-bound certificate shows it
// equals the rank over Q.
constexpr std::size_t kBareissLimit = 256;
std::size_t corank_exact(const FractalCirculant& F, CirculantKernel kernel = CirculantKernel::parallel);
std::size_t rank_bareiss(std::vector<std::vector<Integer>> rows, CirculantKernel kernel = CirculantKernel::parallel);
std::size_t rank_multimodular(const std::vector<std::vector<Integer>>& rows);

// Number of u with DFT coefficient zero: Phi_m divides P_u(x) = sum_v a_v x^{u.v mod m}.
bool dft_coefficient_vanishes(const FractalCirculant& F, std::size_t u);
std::size_t corank_dft(const FractalCirculant& F, CirculantKernel kernel = CirculantKernel::parallel);

// Prime order only (InvalidInput otherwise).
std::vector<std::vector<unsigned>> slicing_vectors(const FractalCirculant& F);
bool is_slicing_vector(const FractalCirculant& F, const std::vector<unsigned>& u);
std::size_t slicing_number(const FractalCirculant& F);
std::size_t corank_via_slicing(const FractalCirculant& F);

bool is_prime(unsigned long n);

}  // namespace rootrel
