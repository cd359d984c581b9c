#include "doctest.h"
#include "rootrel/errors.hpp"
#include "rootrel/factor.hpp"
#include "rootrel/fastbasis.hpp"
#include "rootrel/oracle.hpp"
#include "support.hpp"

using namespace rootrel;

namespace {

const IntPoly kSchinzel{1, 0, -2, -6, -2, 0, 1};

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<IntPoly> corpus() {
  std::vector<IntPoly> c = {
      kSchinzel,           pow(IntPoly{-1, -3, 1}, 2), IntPoly{-2, 0, 0, 1},  IntPoly{-1, 0, 1},
      IntPoly{0, -1, 1},   IntPoly{-1, -1, 0, 0, 0, 1}, IntPoly{-2, 1},      IntPoly{1, 1},
      IntPoly{3, -1, 1},   IntPoly{1, -3, 1},          IntPoly{-1, -3, 1},   cyclotomic(7),
      cyclotomic(12),      IntPoly{-3, 0, 1},          pow(IntPoly{-3, 0, 1}, 3),
      IntPoly{2, 0, 0, 0, 3}, IntPoly{-1, 1, 0, 1},    pow(IntPoly{1, 1, 1}, 2),
      IntPoly{1, 0, -2, 0, 1}, IntPoly{7, 5, 0, 1},    pow(IntPoly{-2, 1}, 2),
      IntPoly{1, 1, 1, 1, 1, 1, 1, 1}};
  std::mt19937_64 rng(61);
  for (int t = 0; t < 40; ++t) c.push_back(support::random_poly(rng, static_cast<int>(rng() % 5) + 1, 10));
  return c;
}

}  // namespace

TEST_CASE("examples") {
  auto r = fast_basis(kSchinzel);
  CHECK(r.status == Status::F);
  CHECK(r.branch == Branch::two_homogeneous);
  CHECK_FALSE(r.basis.has_value());

  r = fast_basis(pow(IntPoly{-1, -3, 1}, 2));
  REQUIRE(r.status == Status::basis);
  CHECK(r.k == 2);
  CHECK(r.g == IntPoly{-1, -3, 1});
  CHECK(*r.basis == LatticeBasis::span(4, {iv({2, 2, 0, 0}), iv({-1, 0, 1, 0}), iv({0, -1, 0, 1})}));
  CHECK(r.roots->size() == 4);

  r = fast_basis(IntPoly{-2, 0, 0, 1});
  REQUIRE(r.status == Status::basis);
  CHECK(r.branch == Branch::rational_roots);
  CHECK(r.basis->rank() == 2);
  CHECK(*r.basis == brute_force_relations(IntPoly{-2, 0, 0, 1}, 4));

  r = fast_basis(IntPoly{-1, 0, 1});
  CHECK(r.status == Status::F);
  CHECK(r.branch == Branch::factor_gate);

  r = fast_basis(IntPoly{-5, 1});
  CHECK(r.status == Status::basis);
  CHECK(r.branch == Branch::trivial_prop33);
  CHECK(r.basis->empty());

  r = fast_basis(IntPoly{-1, -1, 0, 0, 0, 1});
  REQUIRE(r.status == Status::basis);
  CHECK(r.branch == Branch::two_homogeneous);
  CHECK(*r.basis == LatticeBasis::span(5, {iv({1, 1, 1, 1, 1})}));

  CHECK_THROWS_AS(fast_basis(IntPoly{4}), InvalidInput);
  FastBasisConfig small;
  small.max_degree = 4;
  CHECK_THROWS_AS(fast_basis(kSchinzel, small), DegreeCapExceeded);
  CHECK(to_string(Status::basis) == "Basis");
  CHECK(to_string(Branch::trivial_prop33) == "trivial-by-prop33");
}

TEST_CASE("trivial lattice cases") {
  CHECK(fast_basis(IntPoly{3, -1, 1}).basis->empty());
  CHECK(*fast_basis(IntPoly{1, -3, 1}).basis == LatticeBasis::span(2, {iv({1, 1})}));
  CHECK(*fast_basis(IntPoly{-1, -3, 1}).basis == LatticeBasis::span(2, {iv({2, 2})}));
}

TEST_CASE("membership in E") {
  auto m = check_E(pow(IntPoly{-1, -3, 1}, 2));
  CHECK(m.member);
  CHECK(m.witness == "g_[2] is irreducible");
  m = check_E(kSchinzel);
  CHECK_FALSE(m.member);
  CHECK(m.witness.find("g_[2] is not") == 0);
  m = check_E(IntPoly{0, -1, 1});
  CHECK_FALSE(m.member);
  CHECK(m.witness == "x | f");
}

TEST_CASE("corpus properties") {
  for (const auto& f : corpus()) {
    if (f.is_constant()) continue;
    CAPTURE(f.to_string());
    const auto r = fast_basis(f);
    CHECK((r.status == Status::basis) == check_E(f).member);

    // Invariance under scaling by a nonzero constant.
    const auto scaled = fast_basis(f * Integer(-6));
    CHECK(scaled.status == r.status);
    if (r.status != Status::basis) continue;
    CHECK(*scaled.basis == *r.basis);

    auto order = *r.roots;
    CHECK(order.size() == static_cast<std::size_t>(f.degree()));
    for (const auto& col : r.basis->columns()) CHECK(verify_relation(order, col).verdict == Verdict::holds);
    if (f.degree() <= 5) {
      const auto oracle = brute_force_relations(f, 3);
      CHECK(r.basis->contains(oracle));
    }
  }
}
