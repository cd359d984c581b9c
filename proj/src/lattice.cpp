#include "rootrel/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "rootrel/errors.hpp"

namespace rootrel {

namespace {

void axpy(IntVector& y, const Integer& a, const IntVector& x) {
  for (std::size_t i = 0; i < y.size(); ++i) mpz_submul(y[i].get_mpz_t(), a.get_mpz_t(), x[i].get_mpz_t());
}

bool is_zero_vector(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace

LatticeBasis hnf(std::size_t rows, const IntMatrix& columns) {
  std::vector<IntVector> work;
  for (const auto& c : columns) {
    if (c.size() != rows) throw InvalidInput("column length does not match the lattice dimension");
    if (!is_zero_vector(c)) work.push_back(c);
  }
  std::vector<IntVector> basis;
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < rows && !work.empty(); ++r) {
    // Euclid on row r across the remaining columns.
    for (;;) {
      std::size_t best = work.size();
      std::size_t nonzero = 0;
      for (std::size_t j = 0; j < work.size(); ++j) {
        if (work[j][r] == 0) continue;
        ++nonzero;
        if (best == work.size() || abs(work[j][r]) < abs(work[best][r])) best = j;
      }
      if (nonzero == 0) break;
      if (nonzero == 1) {
        IntVector col = std::move(work[best]);
        work.erase(work.begin() + static_cast<long>(best));
        if (col[r] < 0)
          for (auto& x : col) x = -x;
        basis.push_back(std::move(col));
        pivots.push_back(r);
        break;
      }
      for (std::size_t j = 0; j < work.size(); ++j) {
        if (j == best || work[j][r] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), work[j][r].get_mpz_t(), work[best][r].get_mpz_t());
        axpy(work[j], q, work[best]);
      }
      std::erase_if(work, is_zero_vector);
    }
  }
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const std::size_t r = pivots[j];
    for (std::size_t k = 0; k < j; ++k) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), basis[k][r].get_mpz_t(), basis[j][r].get_mpz_t());
      if (q != 0) axpy(basis[k], q, basis[j]);
    }
  }
  LatticeBasis out(rows);
  out.cols_ = std::move(basis);
  out.pivots_ = std::move(pivots);
  return out;
}

LatticeBasis LatticeBasis::span(std::size_t dimension, const std::vector<IntVector>& vectors) {
  return hnf(dimension, vectors);
}

LatticeBasis LatticeBasis::full(std::size_t dimension) {
  IntMatrix id(dimension, IntVector(dimension));
  for (std::size_t i = 0; i < dimension; ++i) id[i][i] = 1;
  return hnf(dimension, id);
}

bool LatticeBasis::contains(const IntVector& v_in) const {
  if (v_in.size() != dim_) throw InvalidInput("vector length does not match the lattice dimension");
  IntVector v = v_in;
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    const Integer& piv = cols_[j][pivots_[j]];
    if (!mpz_divisible_p(v[pivots_[j]].get_mpz_t(), piv.get_mpz_t())) return false;
    Integer q;
    mpz_divexact(q.get_mpz_t(), v[pivots_[j]].get_mpz_t(), piv.get_mpz_t());
    if (q != 0) axpy(v, q, cols_[j]);
  }
  return is_zero_vector(v);
}

bool LatticeBasis::contains(const LatticeBasis& other) const {
  if (other.dim_ != dim_) return false;
  return std::all_of(other.cols_.begin(), other.cols_.end(), [this](const IntVector& c) { return contains(c); });
}

Integer LatticeBasis::index() const {
  if (cols_.size() != dim_) throw InvalidInput("index of a lattice that is not full rank");
  Integer idx = 1;
  for (std::size_t j = 0; j < cols_.size(); ++j) idx *= cols_[j][pivots_[j]];
  return idx;
}

CongruenceSpec::CongruenceSpec(IntVector w, Integer n, bool zero_sum)
    : weights(std::move(w)), modulus(std::move(n)), require_zero_sum(zero_sum) {
  if (modulus < 1) throw InvalidInput("congruence modulus must be positive");
  for (auto& a : weights) mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
}

LatticeBasis kernel_with_congruence(const CongruenceSpec& spec) {
  const std::size_t n = spec.weights.size();
  if (n == 0) throw InvalidInput("kernel of a map on Z^0");
  const std::size_t top = spec.require_zero_sum ? 2 : 1;
  const std::size_t rows = top + n;
  // Columns (constraint values, e_i) plus the auxiliary column (0, N, 0...)
  // that makes the congruence row an equation in Z.
  IntMatrix cols;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector c(rows);
    if (spec.require_zero_sum) c[0] = 1;
    c[top - 1] = spec.weights[i];
    c[top + i] = 1;
    cols.push_back(std::move(c));
  }
  IntVector aux(rows);
  aux[top - 1] = spec.modulus;
  cols.push_back(std::move(aux));
  const LatticeBasis full = hnf(rows, cols);
  IntMatrix kernel;
  for (std::size_t j = 0; j < full.rank(); ++j) {
    if (full.pivot_row(j) < top) continue;
    const auto& c = full.columns()[j];
    kernel.emplace_back(c.begin() + static_cast<long>(top), c.end());
  }
  return hnf(n, kernel);
}

LatticeBasis trivial_basis(std::size_t n, const RatScalar& constant_term) {
  if (constant_term == 0) throw InvalidInput("trivial basis needs f(0) != 0");
  if (n == 0) throw InvalidInput("trivial basis needs a positive degree");
  const RatScalar signed_norm = (n % 2 == 1) ? RatScalar(-constant_term) : constant_term;
  if (signed_norm == 1) return LatticeBasis::span(n, {IntVector(n, Integer(1))});
  if (signed_norm == -1) return LatticeBasis::span(n, {IntVector(n, Integer(2))});
  return LatticeBasis(n);
}

LatticeBasis lift_multiplicity(const LatticeBasis& basis, const std::vector<unsigned>& multiplicities) {
  const std::size_t n = basis.dimension();
  if (multiplicities.size() != n) throw InvalidInput("multiplicity vector length does not match the lattice dimension");
  const std::size_t extra = std::accumulate(multiplicities.begin(), multiplicities.end(), std::size_t{0});
  const std::size_t total = n + extra;
  IntMatrix cols;
  for (const auto& c : basis.columns()) {
    IntVector v(total);
    std::copy(c.begin(), c.end(), v.begin());
    cols.push_back(std::move(v));
  }
  std::size_t slot = n;
  for (std::size_t i = 0; i < n; ++i)
    for (unsigned j = 0; j < multiplicities[i]; ++j) {
      IntVector e(total);
      e[i] = -1;
      e[slot++] = 1;
      cols.push_back(std::move(e));
    }
  return hnf(total, cols);
}

}  // namespace rootrel
