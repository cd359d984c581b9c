#include "doctest.h"
#include "rootrel/errors.hpp"
#include "rootrel/polynomial.hpp"
#include "support.hpp"

using namespace rootrel;

TEST_CASE("gcd examples") {
  CHECK(poly_gcd(IntPoly{-1, 0, 1}, IntPoly{-1, 1}) == IntPoly{-1, 1});
  CHECK(poly_gcd(IntPoly{1, -2, 1}, IntPoly{-2, 2}) == IntPoly{-1, 1});
  CHECK(poly_gcd(IntPoly{1, 0, 1}, IntPoly{0, 1, 1}) == IntPoly{1});
  CHECK_THROWS_AS(poly_gcd(IntPoly{}, IntPoly{}), InvalidInput);
}

TEST_CASE("gcd contains common factor") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const IntPoly a = support::random_poly(rng, static_cast<int>(rng() % 8) + 1, 9);
    const IntPoly b = support::random_poly(rng, static_cast<int>(rng() % 8) + 1, 9);
    const IntPoly c = support::random_poly(rng, static_cast<int>(rng() % 4) + 1, 9);
    const IntPoly g = poly_gcd(a * c, b * c);
    CHECK(divide_exact(g, c.primitive()).has_value());
    CHECK(divide_exact(a * c, g).has_value());
    CHECK(divide_exact(b * c, g).has_value());
    CHECK(g.leading() > 0);
  }
}

TEST_CASE("squarefree decomposition") {
  const IntPoly xm1{-1, 1}, xp2{2, 1};
  const auto d = squarefree_decompose(pow(xm1, 2) * xp2);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == PolyPower{xp2, 1});
  CHECK(d[1] == PolyPower{xm1, 2});
  CHECK(squarefree_decompose(IntPoly{-2, 0, 0, 1}) == std::vector<PolyPower>{{IntPoly{-2, 0, 0, 1}, 1}});
  CHECK(squarefree_decompose(pow(IntPoly{-1, -3, 1}, 2)) == std::vector<PolyPower>{{IntPoly{-1, -3, 1}, 2}});
  CHECK_THROWS_AS(squarefree_decompose(IntPoly{5}), InvalidInput);

  std::mt19937_64 rng(12);
  for (int t = 0; t < 500; ++t) {
    IntPoly f = support::random_poly(rng, static_cast<int>(rng() % 3) + 1, 5);
    f = f * pow(support::random_poly(rng, static_cast<int>(rng() % 2) + 1, 5), static_cast<unsigned>(rng() % 3) + 1);
    const auto parts = squarefree_decompose(f);
    IntPoly prod = IntPoly::constant(1);
    unsigned last = 0;
    for (const auto& p : parts) {
      CHECK(p.multiplicity > last);
      last = p.multiplicity;
      CHECK(is_squarefree(p.poly));
      prod = prod * pow(p.poly, p.multiplicity);
    }
    CHECK(prod.primitive() == f.primitive());
  }
}

TEST_CASE("resultant examples and Sylvester oracle") {
  CHECK(resultant(IntPoly{-2, 1}, IntPoly{-3, 1}) == -1);
  CHECK(resultant(IntPoly{-1, 0, 1}, IntPoly{0, 1}) == -1);
  CHECK(resultant(IntPoly{1, 0, 1}, IntPoly{-1, 0, 1}) == 4);
  CHECK_THROWS_AS(resultant(IntPoly{}, IntPoly{1, 1}), InvalidInput);

  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const IntPoly a = support::random_poly(rng, static_cast<int>(rng() % 7) + 1, 9);
    const IntPoly b = support::random_poly(rng, static_cast<int>(rng() % 7) + 1, 9);
    const Integer r = resultant(a, b);
    CHECK(r == support::sylvester_resultant(a, b));
    const int sign = (a.degree() * b.degree()) % 2 == 0 ? 1 : -1;
    CHECK(r == sign * resultant(b, a));
  }
}

TEST_CASE("graeffe") {
  CHECK(graeffe(IntPoly{-2, 1}) == IntPoly{-4, 1});
  CHECK(graeffe(IntPoly{2, -3, 1}) == IntPoly{4, -5, 1});
  CHECK(graeffe(IntPoly{1, 0, 1}) == IntPoly{1, 2, 1});
  std::mt19937_64 rng(14);
  for (int t = 0; t < 20; ++t) {
    const IntPoly f = support::random_poly(rng, static_cast<int>(rng() % 6) + 1, 9);
    const IntPoly G = graeffe(f);
    for (long x = -10; x <= 10; x += 3) {
      const Integer tt(x);
      const int sign = f.degree() % 2 == 0 ? 1 : -1;
      CHECK(G.eval(Integer(tt * tt)) == sign * f.eval(tt) * f.eval(Integer(-tt)));
    }
  }
}

TEST_CASE("exact square root") {
  CHECK(poly_sqrt_exact(IntPoly{1, 2, 1}) == IntPoly{1, 1});
  CHECK_FALSE(poly_sqrt_exact(IntPoly{1, 0, 1}).has_value());
  CHECK(poly_sqrt_exact(IntPoly{4, 0, -4, 0, 1}) == IntPoly{-2, 0, 1});
  std::mt19937_64 rng(15);
  for (int t = 0; t < 50; ++t) {
    IntPoly h = support::random_poly(rng, static_cast<int>(rng() % 6) + 1, 20);
    if (h.leading() < 0) h = -h;
    const auto r = poly_sqrt_exact(h * h);
    REQUIRE(r.has_value());
    CHECK(*r == h);
  }
}

TEST_CASE("pow_mod") {
  CHECK(pow_mod(2, IntPoly{-2, 0, 1}) == RatPoly(IntPoly{2}));
  CHECK(pow_mod(3, IntPoly{-5, 0, 0, 1}) == RatPoly(IntPoly{5}));
  CHECK(pow_mod(2, IntPoly{1, 1, 1}) == RatPoly(IntPoly{-1, -1}));
  CHECK_THROWS_AS(pow_mod(2, IntPoly{3}), InvalidInput);
  // Non-monic modulus: x^2 mod (2x - 1) = 1/4.
  CHECK(pow_mod(2, IntPoly{-1, 2}).coeff(0) == RatScalar(1, 4));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPoly{-1, 1});
  CHECK(cyclotomic(4) == IntPoly{1, 0, 1});
  CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
  for (unsigned long d = 1; d <= 60; ++d) {
    IntPoly prod = IntPoly::constant(1);
    for (unsigned long e : divisors(d)) prod = prod * cyclotomic(e);
    CHECK(prod == IntPoly::binomial(d, Integer(1)));
    CHECK(cyclotomic(d).degree() == static_cast<int>(euler_phi(d)));
  }
}

TEST_CASE("interpolation recovers polynomials") {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 20; ++t) {
    const IntPoly f = support::random_poly(rng, static_cast<int>(rng() % 10) + 1, 50);
    std::vector<Integer> xs, ys;
    for (int i = 0; i <= f.degree(); ++i) {
      xs.emplace_back(i - f.degree() / 2);
      ys.push_back(f.eval(xs.back()));
    }
    CHECK(interpolate(xs, ys) == f);
  }
}
