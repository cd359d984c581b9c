#pragma once

// The root-of-rational case: every root b of an irreducible g satisfies
// b^N = q for a rational q. Then b_i = b_1 zeta_N^{a_i} and
// prod b_i^{v_i} = b_1^{sum v} zeta_N^{sum a.v}, so for |q| != 1 the
// relations are {sum v = 0, a.v = 0 mod N}; when q = +-1 the roots are
// primitive M-th roots of unity zeta_M^{b_i} and the relations are
// {b.v = 0 mod M}.

#include <vector>

#include "rootrel/lattice.hpp"
#include "rootrel/roots.hpp"

namespace rootrel {

struct RootOfRationalData {
  unsigned long N = 1;
  RatScalar q;
  bool unity_case = false;
  unsigned long M = 0;         // order of the roots when unity_case
  std::vector<long> exponents;  // a_i (modulo N) or b_i (modulo M)
};

// g irreducible with g(0) != 0.
bool is_root_of_rational_poly(const IntPoly& g);

// Minimal N with x^N mod g constant, and that constant.
std::pair<unsigned long, RatScalar> rational_power_data(const IntPoly& g);

// a with a_0 = 0 and b_i / b_0 = zeta_N^{a_i}, roots in the given order.
std::vector<long> unity_exponents(const IntPoly& g, unsigned long N, RootSet& roots);

// Full data for the canonical order held in `roots`.
RootOfRationalData root_of_rational_data(const IntPoly& g, RootSet& roots);

LatticeBasis ror_lattice_basis(const IntPoly& g, const RootOfRationalData& data);

namespace detail {
// Skips the irreducibility check; `roots` (certified enclosures of g) allow
// a cheap certified rejection when two roots have different moduli.
bool is_root_of_rational_unchecked(const IntPoly& g, const RootSet* roots);
}  // namespace detail

}  // namespace rootrel
