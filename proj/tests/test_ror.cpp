#include <complex>
#include <numbers>

#include "doctest.h"
#include "rootrel/errors.hpp"
#include "rootrel/factor.hpp"
#include "rootrel/oracle.hpp"
#include "rootrel/ror.hpp"

using namespace rootrel;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

RootOfRationalData data_for(const IntPoly& g, RootSet& rs) {
  rs.sort_canonical();
  return root_of_rational_data(g, rs);
}

}  // namespace

TEST_CASE("root of rational detection") {
  CHECK(is_root_of_rational_poly(IntPoly{-2, 0, 0, 1}));
  CHECK(is_root_of_rational_poly(cyclotomic(5)));
  CHECK_FALSE(is_root_of_rational_poly(IntPoly{-1, -3, 1}));
  CHECK_FALSE(is_root_of_rational_poly(IntPoly{1, 0, -2, -6, -2, 0, 1}));
  CHECK(is_root_of_rational_poly(IntPoly{-5, 1}));
  CHECK(is_root_of_rational_poly(IntPoly{3, 0, 0, 0, 2}));  // 2x^4 + 3
  CHECK_FALSE(is_root_of_rational_poly(IntPoly{-2, 0, 2, 0, 1}));  // x^2 = -1 +- sqrt(3)
  CHECK_THROWS_AS(is_root_of_rational_poly(IntPoly{-1, 0, 1}), InvalidInput);
}

TEST_CASE("rational power data") {
  CHECK(rational_power_data(IntPoly{-2, 0, 0, 1}) == std::pair<unsigned long, RatScalar>{3, 2});
  CHECK(rational_power_data(IntPoly{1, 0, 1}) == std::pair<unsigned long, RatScalar>{2, -1});
  CHECK(rational_power_data(IntPoly{-3, 0, 1}) == std::pair<unsigned long, RatScalar>{2, 3});
  CHECK(rational_power_data(IntPoly{-5, 1}) == std::pair<unsigned long, RatScalar>{1, 5});
  CHECK(rational_power_data(cyclotomic(5)).first == 5);
  CHECK(rational_power_data(cyclotomic(6)) == std::pair<unsigned long, RatScalar>{3, -1});
  CHECK(rational_power_data(IntPoly{3, 0, 0, 0, 2}) == std::pair<unsigned long, RatScalar>{4, RatScalar(-3, 2)});

  for (const IntPoly& g : {IntPoly{-2, 0, 0, 1}, cyclotomic(9), cyclotomic(7), IntPoly{-6, 0, 0, 0, 0, 1},
                           IntPoly{3, 0, 0, 0, 2}}) {
    const auto [N, q] = rational_power_data(g);
    CHECK(pow_mod(N, g) == RatPoly(std::vector<RatScalar>{q}));
    for (unsigned long m = 1; m < N; ++m) CHECK_FALSE(pow_mod(m, g).is_constant());
  }
}

TEST_CASE("exponent labels") {
  auto rs = RootSet::isolate(IntPoly{-2, 0, 0, 1});
  auto d = data_for(IntPoly{-2, 0, 0, 1}, rs);
  CHECK_FALSE(d.unity_case);
  CHECK(d.N == 3);
  REQUIRE(d.exponents.size() == 3);
  CHECK(d.exponents[0] == 0);
  // Order (-0.63-1.09i, -0.63+1.09i, 1.26): ratios to the first root.
  const double w = 2 * std::numbers::pi / 3;
  for (std::size_t i = 1; i < 3; ++i) {
    const std::complex<double> b0(rs[0].re_approx(), rs[0].im_approx()), bi(rs[i].re_approx(), rs[i].im_approx());
    CHECK(std::abs(bi / b0 - std::polar(1.0, w * static_cast<double>(d.exponents[i]))) < 1e-12);
  }
  CHECK(d.exponents[1] == 2);
  CHECK(d.exponents[2] == 1);

  auto r3 = RootSet::isolate(IntPoly{-3, 0, 1});
  d = data_for(IntPoly{-3, 0, 1}, r3);
  CHECK(d.N == 2);
  CHECK(d.exponents == std::vector<long>{0, 1});

  auto r5 = RootSet::isolate(IntPoly{-5, 1});
  d = data_for(IntPoly{-5, 1}, r5);
  CHECK(d.N == 1);
  CHECK(d.exponents == std::vector<long>{0});

  // Determinism: repeated computation yields identical labels.
  auto again = RootSet::isolate(IntPoly{-2, 0, 0, 1});
  CHECK(data_for(IntPoly{-2, 0, 0, 1}, again).exponents == std::vector<long>{0, 2, 1});
}

TEST_CASE("unity case") {
  auto rs = RootSet::isolate(cyclotomic(5));
  const auto d = data_for(cyclotomic(5), rs);
  CHECK(d.unity_case);
  CHECK(d.M == 5);
  const auto L = ror_lattice_basis(cyclotomic(5), d);
  CHECK(L.rank() == 4);
  CHECK(L.index() == 5);

  auto r6 = RootSet::isolate(cyclotomic(6));
  const auto d6 = data_for(cyclotomic(6), r6);
  CHECK(d6.M == 6);
  CHECK(ror_lattice_basis(cyclotomic(6), d6).index() == 6);
  // x^2 + 1: roots -i, i; i^2 (-i)^2 = 1 and (-i) i = 1.
  auto r4 = RootSet::isolate(cyclotomic(4));
  const auto d4 = data_for(cyclotomic(4), r4);
  const auto L4 = ror_lattice_basis(cyclotomic(4), d4);
  CHECK(L4 == LatticeBasis::span(2, {iv({1, 1}), iv({0, 4})}));
}

TEST_CASE("lattices match closed forms and the oracle") {
  auto rs = RootSet::isolate(IntPoly{-3, 0, 1});
  auto L = ror_lattice_basis(IntPoly{-3, 0, 1}, data_for(IntPoly{-3, 0, 1}, rs));
  CHECK(L == LatticeBasis::span(2, {iv({-2, 2})}));

  for (const auto& g : {IntPoly{-2, 0, 0, 1}, IntPoly{-3, 0, 0, 0, 1}, IntPoly{-2, 0, 0, 0, 0, 1},
                        IntPoly{5, 0, 0, 0, 0, 0, 1}, IntPoly{3, 0, 0, 0, 2}, cyclotomic(5), cyclotomic(9)}) {
    auto roots = RootSet::isolate(g);
    const auto data = data_for(g, roots);
    const auto lattice = ror_lattice_basis(g, data);
    CanonicalOrder order{roots, {}};
    for (std::size_t i = 0; i < roots.size(); ++i) order.slots.push_back(i);
    for (const auto& col : lattice.columns()) CHECK(verify_relation(order, col).verdict == Verdict::holds);
    if (g.degree() <= 6) CHECK(brute_force_relations(g, g.degree() <= 4 ? 4 : 3) == lattice);
  }
}
