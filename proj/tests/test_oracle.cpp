#include "doctest.h"
#include "rootrel/errors.hpp"
#include "rootrel/oracle.hpp"

using namespace rootrel;

namespace {

const IntPoly kSchinzel{1, 0, -2, -6, -2, 0, 1};

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Canonical slot s holds the published root beta_{label[s]}.
IntVector from_published_labels(const IntVector& published) {
  const std::size_t label[] = {3, 4, 5, 6, 1, 2};
  IntVector v(6);
  for (std::size_t s = 0; s < 6; ++s) v[s] = published[label[s] - 1];
  return v;
}

}  // namespace

TEST_CASE("verify_relation examples") {
  auto o = canonical_root_order(kSchinzel);
  const auto r1 = verify_relation(o, from_published_labels(iv({0, 0, -1, 0, 0, -1})));
  CHECK(r1.verdict == Verdict::holds);
  const auto r2 = verify_relation(o, from_published_labels(iv({1, 0, 0, 0, 0, 0})));
  CHECK(r2.verdict == Verdict::fails);
  auto q = canonical_root_order(IntPoly{-1, -3, 1});
  CHECK(verify_relation(q, iv({2, 2})).verdict == Verdict::holds);
  CHECK(verify_relation(q, iv({1, 1})).verdict == Verdict::fails);
  CHECK(verify_relation(q, iv({0, 0})).verdict == Verdict::holds);
  CHECK_THROWS_AS(verify_relation(q, iv({1})), InvalidInput);
  CHECK(to_string(Verdict::holds) == "holds_at_precision");
  CHECK(to_string(Verdict::fails) == "fails_at_precision");
}

TEST_CASE("verdicts do not flip under refinement") {
  auto o = canonical_root_order(kSchinzel);
  const std::vector<IntVector> vs = {iv({1, 0, 0, 0, 0, 0}), iv({1, 1, 0, 0, 1, 1}),
                                     from_published_labels(iv({-1, -1, 0, 0, 0, 0})), iv({2, -1, 0, 1, 0, 0})};
  std::vector<Verdict> first;
  for (const auto& v : vs) first.push_back(verify_relation(o, v, 30).verdict);
  o.distinct.refine(1000);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto later = verify_relation(o, vs[i], 200);
    if (first[i] == Verdict::fails) CHECK(later.verdict == Verdict::fails);
    if (later.verdict == Verdict::holds) CHECK(mag::less(later.residual, mag::pow2(-600)));
  }
}

TEST_CASE("brute force examples") {
  const auto schinzel = brute_force_relations(kSchinzel, 1);
  const LatticeBasis expected = LatticeBasis::span(
      6, {from_published_labels(iv({0, 0, -1, 0, 0, -1})), from_published_labels(iv({-1, 0, -1, -1, 0, 0})),
          from_published_labels(iv({0, 0, 0, 1, 1, 0})), from_published_labels(iv({-1, -1, 0, 0, 0, 0}))});
  CHECK(schinzel.rank() == 4);
  CHECK(schinzel == expected);

  CHECK(brute_force_relations(IntPoly{-1, -3, 1}, 2) == LatticeBasis::span(2, {iv({2, 2})}));
  CHECK(brute_force_relations(IntPoly{1, -3, 1}, 2) == LatticeBasis::span(2, {iv({1, 1})}));
  CHECK(brute_force_relations(IntPoly{-2, 0, 1}, 2) == LatticeBasis::span(2, {iv({-2, 2})}));
  CHECK(brute_force_relations(IntPoly{-2, 1}, 4).empty());
  CHECK(brute_force_relations(IntPoly{1, 1}, 4) == LatticeBasis::span(1, {iv({2})}));

  CHECK_THROWS_AS(brute_force_relations(IntPoly{0, 1, 1}, 2), InvalidInput);
  CHECK_THROWS_AS(brute_force_relations(IntPoly{-2, 0, 1}, 5), InvalidInput);
  CHECK_THROWS_AS(brute_force_relations(cyclotomic(13) * IntPoly{2, 1}, 1), DegreeCapExceeded);
}

TEST_CASE("kernels agree") {
  const std::vector<std::pair<IntPoly, int>> cases = {
      {kSchinzel, 1},        {IntPoly{-2, 0, 0, 1}, 4},         {pow(IntPoly{-1, -3, 1}, 2), 2},
      {cyclotomic(5), 2},    {IntPoly{-1, -1, 0, 0, 0, 1}, 2}, {IntPoly{4, 0, 0, 0, 1}, 2},
      {IntPoly{-3, 0, 1}, 3}};
  for (const auto& [f, B] : cases) {
    const auto par = brute_force_search(f, B, 60, Kernel::parallel);
    const auto ser = brute_force_search(f, B, 60, Kernel::serial);
    CHECK(par.lattice == ser.lattice);
    for (const auto& v : par.column_verdicts) CHECK(v.verdict == Verdict::holds);
  }
}
