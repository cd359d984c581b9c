#include <algorithm>
#include <complex>

#include "doctest.h"
#include "rootrel/errors.hpp"
#include "rootrel/factor.hpp"
#include "rootrel/pairprod.hpp"
#include "rootrel/roots.hpp"
#include "support.hpp"

using namespace rootrel;

namespace {

const IntPoly kSchinzel{1, 0, -2, -6, -2, 0, 1};

std::vector<std::complex<double>> numeric_roots(const IntPoly& f) {
  std::vector<std::complex<double>> out;
  for (const auto& r : isolate_roots(f)) out.emplace_back(r.re_approx(), r.im_approx());
  return out;
}

}  // namespace

TEST_CASE("pair product examples") {
  CHECK(pair_product_poly(IntPoly{-1, -3, 1}) == IntPoly{1, 1});
  CHECK(pair_product_poly(IntPoly{-2, 0, 0, 1}) == IntPoly{-4, 0, 0, 1});
  CHECK(pair_product_poly(IntPoly{1, 0, 1}) == IntPoly{-1, 1});
  CHECK(pair_product_poly(IntPoly{-4, 0, 0, 2}) == IntPoly{-4, 0, 0, 1});
  CHECK_THROWS_AS(pair_product_poly(IntPoly{3, 1}), InvalidInput);
}

TEST_CASE("pair product agrees with power sums") {
  std::mt19937_64 rng(51);
  int done = 0;
  while (done < 100) {
    const IntPoly g = support::random_poly(rng, static_cast<int>(rng() % 6) + 2, 9);
    if (g[0] == 0 || !is_squarefree(g)) continue;
    ++done;
    const IntPoly f2 = pair_product_poly(g);
    const std::size_t n = static_cast<std::size_t>(g.degree());
    CHECK(f2.degree() == static_cast<int>(n * (n - 1) / 2));
    CHECK(f2 == support::pair_product_by_power_sums(g));
  }
}

TEST_CASE("pair product roots are pairwise products") {
  std::mt19937_64 rng(52);
  int done = 0;
  while (done < 15) {
    const IntPoly g = support::random_poly(rng, static_cast<int>(rng() % 5) + 2, 6);
    if (!is_irreducible(g)) continue;
    const IntPoly f2 = pair_product_poly(g);
    if (!is_squarefree(f2)) continue;
    ++done;
    const auto b = numeric_roots(g);
    auto r = numeric_roots(f2);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        const auto p = b[i] * b[j];
        auto it = std::min_element(r.begin(), r.end(), [&](auto x, auto y) { return std::abs(x - p) < std::abs(y - p); });
        CHECK(std::abs(*it - p) < 1e-8 * (1 + std::abs(p)));
        r.erase(it);
      }
    CHECK(r.empty());
  }
}

TEST_CASE("ratio polynomial") {
  CHECK(ratio_poly(IntPoly{-2, 0, 1}) == pow(IntPoly{-1, 1}, 2) * pow(IntPoly{1, 1}, 2));
  CHECK(ratio_poly(IntPoly{-2, 0, 0, 1}) == pow(IntPoly{-1, 1}, 3) * pow(IntPoly{1, 1, 1}, 3));
  const IntPoly r = ratio_poly(IntPoly{-1, -3, 1});
  CHECK(r.degree() == 4);
  CHECK(divide_exact(r, pow(IntPoly{-1, 1}, 2)).has_value());
  const double beta1 = (3 - std::sqrt(13.0)) / 2, beta2 = (3 + std::sqrt(13.0)) / 2;
  const auto rs = numeric_roots(*divide_exact(r, pow(IntPoly{-1, 1}, 2)));
  REQUIRE(rs.size() == 2);
  const double lo = std::min(rs[0].real(), rs[1].real()), hi = std::max(rs[0].real(), rs[1].real());
  CHECK(lo == doctest::Approx(beta2 / beta1));
  CHECK(hi == doctest::Approx(beta1 / beta2));
  CHECK(lo == doctest::Approx(-10.908).epsilon(1e-4));

  std::mt19937_64 rng(53);
  for (int t = 0; t < 20; ++t) {
    const IntPoly g = support::random_poly(rng, static_cast<int>(rng() % 5) + 1, 9);
    if (g[0] == 0) continue;
    const IntPoly q = ratio_poly(g);
    const auto n = static_cast<unsigned>(g.degree());
    CHECK(q.degree() == static_cast<int>(n * n));
    CHECK(divide_exact(q, pow(IntPoly{-1, 1}, n)).has_value());
  }
}

TEST_CASE("two-homogeneity criterion") {
  const auto s = decide_two_homogeneous(kSchinzel);
  CHECK_FALSE(s.criterion_holds());
  CHECK(s.f2.degree() == 15);
  CHECK((!s.squarefree || !*s.irreducible));
  CHECK_FALSE(is_irreducible(pair_product_poly(kSchinzel)));

  const auto q = decide_two_homogeneous(IntPoly{-1, -3, 1});
  CHECK(q.criterion_holds());
  CHECK(q.f2 == IntPoly{1, 1});

  const auto s5 = decide_two_homogeneous(IntPoly{-1, -1, 0, 0, 0, 1});
  CHECK(s5.f2.degree() == 10);
  CHECK(s5.criterion_holds());
  CHECK(is_irreducible(s5.f2));

  CHECK_THROWS_AS(decide_two_homogeneous(IntPoly{-1, 0, 1}), InvalidInput);
  // irreducible is left empty for a non-squarefree f_[2] (Phi_5: products repeat).
  const auto c5 = decide_two_homogeneous(cyclotomic(5));
  CHECK_FALSE(c5.squarefree);
  CHECK_FALSE(c5.irreducible.has_value());
}
