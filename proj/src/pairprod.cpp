#include "rootrel/pairprod.hpp"

#include <functional>

#include "rootrel/deadline.hpp"
#include "rootrel/errors.hpp"
#include "rootrel/factor.hpp"

namespace rootrel {

namespace {

void check_input(const IntPoly& g, int min_degree) {
  if (g.degree() < min_degree) throw InvalidInput("polynomial degree too small for this construction");
  if (g[0] == 0) throw InvalidInput("polynomial has the root 0");
  if (!is_squarefree(g)) throw InvalidInput("polynomial is not squarefree");
}

// Interpolates x -> Res_y(g(y), h_x(y)), a polynomial of the given degree,
// from integer points (nonzero ones when skip_zero is set).
IntPoly interpolate_resultant(const IntPoly& g, std::size_t degree, bool skip_zero,
                              const std::function<IntPoly(const Integer&)>& second) {
  std::vector<Integer> xs;
  for (long t = skip_zero ? 1 : 0; xs.size() < degree + 1; ++t) {
    xs.emplace_back(t);
    if (t != 0 && xs.size() < degree + 1) xs.emplace_back(-t);
  }
  std::vector<Integer> ys(xs.size());
  const long count = static_cast<long>(xs.size());
  // Deadline checks stay on the calling thread.
  check_deadline();
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    ys[k] = resultant(g, second(xs[k]));
  }
  check_deadline();
  return interpolate(xs, ys);
}

}  // namespace

IntPoly pair_product_poly(const IntPoly& g) {
  check_input(g, 2);
  const std::size_t n = static_cast<std::size_t>(g.degree());
  // y^n g(x/y) at x = t: coefficient of y^{n-k} is g_k t^k.
  const IntPoly s = interpolate_resultant(g, n * n, false, [&](const Integer& t) {
    std::vector<Integer> c(n + 1);
    Integer tk = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      c[n - k] = g[k] * tk;
      tk *= t;
    }
    return IntPoly(std::move(c));
  });
  if (s.degree() != static_cast<int>(n * n)) throw InternalError("pair resultant has unexpected degree");
  // S = lc^{2n} graeffe-part * f_[2]^2.
  const auto quotient = divide_exact(s.primitive(), graeffe(g).primitive());
  if (!quotient) throw InternalError("pair resultant is not divisible by the Graeffe polynomial");
  const auto root = poly_sqrt_exact(quotient->primitive());
  if (!root) throw InternalError("pair resultant quotient is not a perfect square");
  return root->primitive();
}

IntPoly ratio_poly(const IntPoly& g) {
  check_input(g, 1);
  const std::size_t n = static_cast<std::size_t>(g.degree());
  const IntPoly r = interpolate_resultant(g, n * n, true, [&](const Integer& t) {
    std::vector<Integer> c(n + 1);
    Integer tk = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      c[k] = g[k] * tk;
      tk *= t;
    }
    return IntPoly(std::move(c));
  });
  if (r.degree() != static_cast<int>(n * n)) throw InternalError("ratio resultant has unexpected degree");
  return r.primitive();
}

namespace detail {

PairProductReport decide_two_homogeneous_unchecked(const IntPoly& g) {
  PairProductReport rep;
  rep.f2 = pair_product_poly(g);
  rep.squarefree = is_squarefree(rep.f2);
  if (rep.squarefree) rep.irreducible = is_irreducible(rep.f2);
  return rep;
}

}  // namespace detail

PairProductReport decide_two_homogeneous(const IntPoly& g) {
  check_input(g, 2);
  if (!is_irreducible(g)) throw InvalidInput("2-homogeneity criterion needs an irreducible polynomial");
  return detail::decide_two_homogeneous_unchecked(g);
}

}  // namespace rootrel
