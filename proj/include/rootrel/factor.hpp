#pragma once

// Factorization over Q (Zassenhaus: modular factorization, Hensel lifting,
// subset recombination), irreducibility with a degree-set sieve, and the
// all-roots-are-roots-of-unity test.

#include <vector>

#include "rootrel/polynomial.hpp"

namespace rootrel {

struct FactoredForm {
  RatScalar content;
  // Primitive, irreducible, positive leading coefficient, pairwise coprime.
  std::vector<PolyPower> factors;

  IntPoly expand() const;  // content * prod factor^multiplicity, as an integer polynomial
};

FactoredForm factor_over_Q(const IntPoly& f);

struct IrreducibilityReport {
  bool irreducible = false;
  // True when the modular degree-set sieve alone settled irreducibility.
  bool sieve_certified = false;
  unsigned primes_used = 0;
};

IrreducibilityReport irreducibility_test(const IntPoly& f);
bool is_irreducible(const IntPoly& f);

bool all_roots_roots_of_unity(const IntPoly& f);

// Largest d with phi(d) <= n.
unsigned long cyclotomic_index_bound(unsigned long n);

}  // namespace rootrel
