#pragma once

// Resultant constructions over the roots b_1..b_n of g: the pair-product
// polynomial f_[2] = prod_{i<j} (x - b_i b_j), the ratio polynomial with
// roots b_i / b_j, and the 2-homogeneity criterion (f_[2] squarefree and
// irreducible).

#include <optional>

#include "rootrel/polynomial.hpp"

namespace rootrel {

// Primitive, positive leading coefficient, degree n(n-1)/2.
IntPoly pair_product_poly(const IntPoly& g);

// Primitive, degree n^2, roots b_i / b_j over all ordered pairs.
IntPoly ratio_poly(const IntPoly& g);

struct PairProductReport {
  IntPoly f2;
  bool squarefree = false;
  std::optional<bool> irreducible;  // computed only when squarefree

  bool criterion_holds() const { return squarefree && irreducible.value_or(false); }
};

// g must be irreducible of degree >= 2; the caller is responsible for
// having excluded the root-of-rational case.
PairProductReport decide_two_homogeneous(const IntPoly& g);

namespace detail {
// Skips the irreducibility check on g.
PairProductReport decide_two_homogeneous_unchecked(const IntPoly& g);
}  // namespace detail

}  // namespace rootrel
