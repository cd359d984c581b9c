#pragma once

// The fast basis algorithm for the multiplicative relations among the roots
// of f: returns a lattice basis when f lies in the class E (f = c g^k with g
// irreducible whose roots are roots of rational, or whose pair-product
// polynomial is irreducible), and the verdict F otherwise.

#include <optional>
#include <string>
#include <vector>

#include "rootrel/lattice.hpp"
#include "rootrel/pairprod.hpp"
#include "rootrel/ror.hpp"
#include "rootrel/roots.hpp"

namespace rootrel {

struct FastBasisConfig {
  int max_degree = 30;
  mpfr_prec_t precision = kDefaultPrecision;
};

enum class Status { basis, F };
// factor_gate: F from the factorization test (x | f or two coprime factors).
// trivial_prop33: deg g = 1, where the trivial-lattice cases apply directly.
enum class Branch { factor_gate, rational_roots, two_homogeneous, trivial_prop33 };

std::string to_string(Status s);
std::string to_string(Branch b);

struct PhaseTiming {
  std::string phase;
  double seconds = 0.0;
};

struct BasisResult {
  Status status = Status::F;
  Branch branch = Branch::factor_gate;
  std::optional<LatticeBasis> basis;   // present iff status == basis
  std::optional<CanonicalOrder> roots;  // coordinate order of basis
  IntPoly g;                            // f = c g^k when the gate passes
  unsigned k = 0;
  std::optional<RootOfRationalData> ror;
  std::optional<PairProductReport> pair_product;
  std::string witness;
  std::vector<PhaseTiming> timings;
};

BasisResult fast_basis(const IntPoly& f, const FastBasisConfig& config = {});

struct MembershipE {
  bool member = false;
  std::string witness;
};

// Agrees with fast_basis: member iff status == basis.
MembershipE check_E(const IntPoly& f, const FastBasisConfig& config = {});

}  // namespace rootrel
