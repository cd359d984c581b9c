#pragma once

// Numeric verification of multiplicative relations among roots and a
// bounded brute-force relation finder, used to cross-check the exact
// pipeline. A "holds" verdict is evidence at the stated precision, not a
// proof; a "fails" verdict is a proof of non-relation.

#include <span>
#include <string>

#include "rootrel/lattice.hpp"
#include "rootrel/roots.hpp"

namespace rootrel {

constexpr int kDefaultDigits = 100;
constexpr int kOracleMaxDegree = 12;
constexpr int kOracleMaxBound = 4;

enum class Verdict { holds, fails, inconclusive };
std::string to_string(Verdict v);

struct RelationVerdict {
  Verdict verdict = Verdict::inconclusive;
  mpfr_prec_t precision = 0;
  Real residual{mag::kPrec};  // upper bound on |prod beta_i^v_i - 1|
};

// Evaluates prod beta_slot^v_slot over the coordinates of `order`. Refines
// the enclosures as needed; throws InvalidInput when a root enclosure
// contains zero.
RelationVerdict verify_relation(CanonicalOrder& order, std::span<const Integer> v, int digits = kDefaultDigits);

enum class Kernel { parallel, serial };

struct OracleReport {
  CanonicalOrder order;
  LatticeBasis lattice;
  std::vector<RelationVerdict> column_verdicts;
  std::size_t candidates = 0;    // bounded vectors covered by the search
  std::size_t verified = 0;      // calls to verify_relation
  std::size_t rejected = 0;      // numeric matches that failed verification
};

// Parallel kernel: meet in the middle over a split of the coordinates,
// grouping equal partial products. Serial kernel: every vector with
// |v_i| <= bound in graded order, skipping vectors already in the span.
// Both return the HNF of the span of the bounded vectors that verify.
OracleReport brute_force_search(const IntPoly& f, int bound, int digits = kDefaultDigits,
                                Kernel kernel = Kernel::parallel);

LatticeBasis brute_force_relations(const IntPoly& f, int bound, int digits = kDefaultDigits);

}  // namespace rootrel
