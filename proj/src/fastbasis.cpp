#include "rootrel/fastbasis.hpp"

#include <chrono>

#include "rootrel/errors.hpp"
#include "rootrel/factor.hpp"

namespace rootrel {

std::string to_string(Status s) { return s == Status::basis ? "Basis" : "F"; }

std::string to_string(Branch b) {
  switch (b) {
    case Branch::factor_gate: return "factor-gate";
    case Branch::rational_roots: return "rational-roots";
    case Branch::two_homogeneous: return "two-homogeneous";
    case Branch::trivial_prop33: return "trivial-by-prop33";
  }
  return "factor-gate";
}

namespace {

class PhaseClock {
 public:
  explicit PhaseClock(std::vector<PhaseTiming>& out) : out_(out) {}
  void mark(std::string phase) {
    const auto now = std::chrono::steady_clock::now();
    out_.push_back({std::move(phase), std::chrono::duration<double>(now - last_).count()});
    last_ = now;
  }

 private:
  std::vector<PhaseTiming>& out_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

BasisResult gate_failure(std::string witness) {
  BasisResult r;
  r.witness = std::move(witness);
  return r;
}

// Splits f = c g^k with g irreducible, or reports why that is impossible.
std::optional<std::string> split_power(const IntPoly& f, BasisResult& r) {
  if (f[0] == 0) return "x | f";
  const std::vector<PolyPower> parts = squarefree_decompose(f);
  if (parts.size() != 1) return "f has at least two coprime irreducible factors";
  const IntPoly& h = parts[0].poly;
  if (!is_irreducible(h)) return "f has at least two coprime irreducible factors";
  r.g = h.primitive();
  r.k = parts[0].multiplicity;
  return std::nullopt;
}

RatScalar constant_term_of_monic(const IntPoly& g) {
  RatScalar c(g[0], g.leading());
  c.canonicalize();
  return c;
}

}  // namespace

BasisResult fast_basis(const IntPoly& f_in, const FastBasisConfig& config) {
  if (f_in.is_zero() || f_in.degree() < 1) throw InvalidInput("fast basis needs a nonconstant polynomial");
  if (f_in.degree() > config.max_degree) throw DegreeCapExceeded("polynomial degree exceeds the configured cap");
  const IntPoly f = f_in.primitive();

  BasisResult r;
  PhaseClock clock(r.timings);
  if (auto why = split_power(f, r)) {
    clock.mark("factor");
    BasisResult out = gate_failure(*why);
    out.timings = r.timings;
    return out;
  }
  clock.mark("factor");
  const IntPoly& g = r.g;
  const std::size_t n = static_cast<std::size_t>(g.degree());
  r.roots = canonical_root_order(g, r.k, config.precision);
  clock.mark("roots");
  const std::vector<unsigned> extra(n, r.k - 1);

  if (n == 1) {
    r.status = Status::basis;
    r.branch = Branch::trivial_prop33;
    r.witness = "every root of g is a root of rational";
    r.basis = lift_multiplicity(trivial_basis(1, constant_term_of_monic(g)), extra);
    clock.mark("basis");
    return r;
  }

  const bool ror = detail::is_root_of_rational_unchecked(g, &r.roots->distinct);
  clock.mark("root-of-rational");
  if (ror) {
    r.ror = root_of_rational_data(g, r.roots->distinct);
    r.status = Status::basis;
    r.branch = Branch::rational_roots;
    r.witness = "every root of g is a root of rational";
    r.basis = lift_multiplicity(ror_lattice_basis(g, *r.ror), extra);
    clock.mark("basis");
    return r;
  }

  r.pair_product = detail::decide_two_homogeneous_unchecked(g);
  clock.mark("pair-product");
  r.branch = Branch::two_homogeneous;
  if (!r.pair_product->squarefree) {
    r.witness = "g_[2] is not squarefree";
    return r;
  }
  if (!r.pair_product->criterion_holds()) {
    r.witness = "g_[2] is not irreducible";
    return r;
  }
  r.status = Status::basis;
  r.witness = "g_[2] is irreducible";
  r.basis = lift_multiplicity(trivial_basis(n, constant_term_of_monic(g)), extra);
  clock.mark("basis");
  return r;
}

MembershipE check_E(const IntPoly& f, const FastBasisConfig& config) {
  const BasisResult r = fast_basis(f, config);
  return {r.status == Status::basis, r.witness};
}

}  // namespace rootrel
