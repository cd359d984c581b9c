#include <cmath>
#include <complex>

#include "doctest.h"
#include "rootrel/errors.hpp"
#include "rootrel/roots.hpp"
#include "support.hpp"

using namespace rootrel;

namespace {

const IntPoly kSchinzel{1, 0, -2, -6, -2, 0, 1};

std::complex<double> approx(const RootEnclosure& r) { return {r.re_approx(), r.im_approx()}; }

}  // namespace

TEST_CASE("simple isolation") {
  auto rs = RootSet::isolate(IntPoly{-2, 0, 1});
  rs.sort_canonical();
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].re_approx() == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-15));
  CHECK(rs[1].re_approx() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(rs[0].real);
  CHECK(rs[1].real);

  const auto o = canonical_root_order(IntPoly{1, 0, 1});
  REQUIRE(o.size() == 2);
  CHECK(o[0].im_approx() == doctest::Approx(-1.0));
  CHECK(o[1].im_approx() == doctest::Approx(1.0));
  CHECK(std::abs(o[0].re_approx()) < 1e-15);

  CHECK_THROWS_AS(RootSet::isolate(IntPoly{1, 2, 1}), InvalidInput);
  CHECK_THROWS_AS(RootSet::isolate(IntPoly{3}), InvalidInput);
}

TEST_CASE("Schinzel roots match the published decimals") {
  const auto o = canonical_root_order(kSchinzel);
  REQUIRE(o.size() == 6);
  // Canonical slots hold the published beta_3, beta_4, beta_5, beta_6, beta_1, beta_2.
  const std::complex<double> expected[] = {
      {-0.92999, -1.17407}, {-0.92999, 1.17407}, {-0.41455, -0.52336},
      {-0.41455, 0.52336},  {0.44576, 0.0},      {2.24333, 0.0}};
  for (std::size_t i = 0; i < 6; ++i) {
    // Published values are truncated to five decimals.
    CHECK(std::abs(approx(o[i]).real() - expected[i].real()) < 1e-5);
    CHECK(std::abs(approx(o[i]).imag() - expected[i].imag()) < 1e-5);
    CHECK(o[i].radius_approx() < 1e-10);
  }
  CHECK(o[4].real);
  CHECK(o[5].real);
  CHECK(o[4].re_decimal(6).rfind("4.45766", 0) == 0);
  CHECK(o[5].re_decimal(6).rfind("2.24333", 0) == 0);
}

TEST_CASE("canonical order examples") {
  auto o = canonical_root_order(IntPoly{-2, 0, 0, 1});
  REQUIRE(o.size() == 3);
  CHECK(std::abs(approx(o[0]) - std::complex<double>(-0.629960525, -1.091123636)) < 1e-8);
  CHECK(std::abs(approx(o[1]) - std::complex<double>(-0.629960525, 1.091123636)) < 1e-8);
  CHECK(std::abs(approx(o[2]) - std::complex<double>(1.259921050, 0)) < 1e-8);

  o = canonical_root_order(IntPoly{-1, -3, 1});
  CHECK(o[0].re_approx() == doctest::Approx((3 - std::sqrt(13.0)) / 2));
  CHECK(o[1].re_approx() == doctest::Approx((3 + std::sqrt(13.0)) / 2));

  o = canonical_root_order(IntPoly{-1, -3, 1}, 2);
  CHECK(o.size() == 4);
  CHECK(o.slots == std::vector<std::size_t>{0, 1, 0, 1});
  CHECK(o.extra_copies() == std::vector<unsigned>{1, 1});

  // (x - 1)^3 (x + 2): distinct roots -2, 1; two extra copies of 1.
  o = canonical_order(pow(IntPoly{-1, 1}, 3) * IntPoly{2, 1});
  CHECK(o.slots == std::vector<std::size_t>{0, 1, 1, 1});
  CHECK(o.extra_copies() == std::vector<unsigned>{0, 2});

  // Equal real parts: ordered by imaginary part.
  o = canonical_root_order(cyclotomic(12));
  for (std::size_t i = 0; i + 1 < o.size(); ++i) {
    const auto a = approx(o[i]), b = approx(o[i + 1]);
    CHECK((a.real() < b.real() - 1e-9 || (std::abs(a.real() - b.real()) < 1e-9 && a.imag() < b.imag())));
  }
}

TEST_CASE("Vieta and enclosure checks on random polynomials") {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    const IntPoly f = support::random_poly(rng, static_cast<int>(rng() % 9) + 1, 10);
    if (!is_squarefree(f)) continue;
    ++checked;
    const auto roots = isolate_roots(f);
    REQUIRE(roots.size() == static_cast<std::size_t>(f.degree()));
    std::complex<double> sum = 0;
    double rad = 0;
    for (const auto& r : roots) {
      sum += approx(r);
      rad += r.radius_approx();
    }
    const double expected = -f[f.size() - 2].get_d() / f.leading().get_d();
    CHECK(std::abs(sum - expected) < 1e-9 * (1 + std::abs(expected)) + rad);
    CHECK(std::abs(sum.imag()) < 1e-9);
    // Disjointness of the certified discs.
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j)
        CHECK(std::abs(approx(roots[i]) - approx(roots[j])) >
              roots[i].radius_approx() + roots[j].radius_approx() - 1e-300);
  }
  CHECK(checked > 30);
}

TEST_CASE("refinement never widens enclosures") {
  auto rs = RootSet::isolate(kSchinzel);
  std::vector<double> before;
  for (const auto& r : rs.roots()) before.push_back(r.radius_approx());
  std::vector<std::complex<double>> centers;
  for (const auto& r : rs.roots()) centers.push_back(approx(r));
  rs.refine(400);
  CHECK(rs.precision() >= 400);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    CHECK(rs[i].radius_approx() <= before[i]);
    CHECK(rs[i].radius_approx() < 1e-100);
    CHECK(std::abs(approx(rs[i]) - centers[i]) <= before[i] + 1e-15);
  }
}

TEST_CASE("close roots are separated") {
  // (x - 1)(x - 1 - 2^-40) scaled to integers; and a Mignotte-style polynomial.
  const Integer big = Integer(1) << 40;
  const IntPoly f = IntPoly{-1, 1} * IntPoly(std::vector<Integer>{-(big + 1), big});
  auto o = canonical_root_order(f);
  REQUIRE(o.size() == 2);
  CHECK(o[0].radius_approx() < 1e-13);
  const IntPoly mignotte = IntPoly::monomial(1, 7) - pow(IntPoly{-1, 50}, 2);
  o = canonical_root_order(mignotte);
  CHECK(o.size() == 7);
}
