#pragma once

// Integer lattices in Z^n, stored canonically as column Hermite normal form.

#include <cstddef>
#include <vector>

#include "rootrel/polynomial.hpp"

namespace rootrel {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;  // list of columns

class LatticeBasis;
LatticeBasis hnf(std::size_t rows, const IntMatrix& columns);

// Columns are in column Hermite normal form: pivot rows strictly increase,
// entries above a pivot are zero, pivots are positive, and entries of
// earlier columns in a pivot row lie in [0, pivot). Equal lattices have
// identical representations; the empty basis is the zero lattice.
class LatticeBasis {
 public:
  explicit LatticeBasis(std::size_t dimension = 0) : dim_(dimension) {}

  // HNF of the span of the given vectors (each of length `dimension`).
  static LatticeBasis span(std::size_t dimension, const std::vector<IntVector>& vectors);
  static LatticeBasis full(std::size_t dimension);

  std::size_t dimension() const { return dim_; }
  std::size_t rank() const { return cols_.size(); }
  bool empty() const { return cols_.empty(); }
  const std::vector<IntVector>& columns() const { return cols_; }
  std::size_t pivot_row(std::size_t j) const { return pivots_[j]; }

  bool contains(const IntVector& v) const;
  bool contains(const LatticeBasis& other) const;
  // [Z^n : L] for full-rank L; throws otherwise.
  Integer index() const;

  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;
  friend LatticeBasis hnf(std::size_t rows, const IntMatrix& columns);

 private:
  std::size_t dim_;
  std::vector<IntVector> cols_;
  std::vector<std::size_t> pivots_;
};

struct CongruenceSpec {
  IntVector weights;  // reduced into [0, modulus)
  Integer modulus = 1;
  bool require_zero_sum = false;

  CongruenceSpec() = default;
  CongruenceSpec(IntVector w, Integer n, bool zero_sum);
};

// {v in Z^n : (zero_sum => sum v_i = 0) and sum a_i v_i = 0 mod N}
LatticeBasis kernel_with_congruence(const CongruenceSpec& spec);

// Basis of a trivial lattice R_f for monic f of degree n (constant term
// given): {} when f(0) is not +-1, {1} when (-1)^n f(0) = 1, {2*1} when
// (-1)^n f(0) = -1.
LatticeBasis trivial_basis(std::size_t n, const RatScalar& constant_term);

// Adjoins eps_ij for repeated roots: root i repeated multiplicities[i]
// extra times, copies indexed n + sum_{s<i} l_s + j.
LatticeBasis lift_multiplicity(const LatticeBasis& basis, const std::vector<unsigned>& multiplicities);

}  // namespace rootrel
