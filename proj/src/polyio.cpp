#include "rootrel/polyio.hpp"

#include <cctype>

#include "rootrel/errors.hpp"

namespace rootrel {

namespace {

std::string normalize(std::string_view text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN
    if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
      s.push_back('-');
      i += 2;
    } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      s.push_back(text[i]);
    }
  }
  return s;
}

IntPoly clear_denominators(const std::vector<RatScalar>& c) {
  Integer den = 1;
  for (const auto& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out;
  for (const auto& x : c) out.push_back(x.get_num() * (den / x.get_den()));
  IntPoly f(std::move(out));
  if (f.is_zero()) throw InvalidInput("the zero polynomial is not accepted");
  return f;
}

bool is_number_char(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '/'; }

IntPoly parse_expression(const std::string& s) {
  std::vector<RatScalar> c;
  std::size_t i = 0;
  if (s.empty()) throw InvalidInput("empty polynomial expression");
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw InvalidInput("expected + or - in polynomial expression");
    }
    std::size_t j = i;
    while (j < s.size() && is_number_char(s[j])) ++j;
    const bool has_coeff = j > i;
    const RatScalar coeff = has_coeff ? parse_rational(s.substr(i, j - i)) : RatScalar(1);
    i = j;
    std::size_t power = 0;
    if (i < s.size() && s[i] == '*') {
      if (!has_coeff) throw InvalidInput("dangling * in polynomial expression");
      ++i;
      if (i >= s.size() || s[i] != 'x') throw InvalidInput("expected x after *");
    }
    if (i < s.size() && s[i] == 'x') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) throw InvalidInput("expected exponent after ^");
        if (k - i > 4) throw InvalidInput("exponent too large");
        power = std::stoul(s.substr(i, k - i));
        i = k;
      }
    } else if (!has_coeff) {
      throw InvalidInput("malformed term in polynomial expression");
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-') throw InvalidInput("unexpected character in polynomial expression");
    if (c.size() <= power) c.resize(power + 1);
    c[power] += sign * coeff;
  }
  return clear_denominators(c);
}

}  // namespace

RatScalar parse_rational(std::string_view text_in) {
  const std::string text = normalize(text_in);
  if (text.empty()) throw InvalidInput("empty coefficient");
  const auto slash = text.find('/');
  auto parse_int = [](const std::string& t, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) start = 1;
    if (start >= t.size()) throw InvalidInput("malformed integer '" + t + "'");
    for (std::size_t i = start; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) throw InvalidInput("malformed integer '" + t + "'");
    return Integer(t[0] == '+' ? t.substr(1) : t);
  };
  if (slash == std::string::npos) return RatScalar(parse_int(text, true));
  const Integer num = parse_int(text.substr(0, slash), true);
  const Integer den = parse_int(text.substr(slash + 1), false);
  if (den == 0) throw InvalidInput("zero denominator");
  RatScalar r(num, den);
  r.canonicalize();
  return r;
}

std::vector<RatScalar> parse_rational_list(std::string_view text_in) {
  const std::string text = normalize(text_in);
  std::vector<RatScalar> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

IntPoly parse_polynomial(std::string_view text_in) {
  const std::string s = normalize(text_in);
  if (s.empty()) throw InvalidInput("empty polynomial text");
  if (s.find('x') != std::string::npos) return parse_expression(s);
  return clear_denominators(parse_rational_list(s));
}

json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw InvalidInput("expected an integer in JSON");
}

json basis_to_json(const LatticeBasis& b) {
  json cols = json::array();
  for (const auto& c : b.columns()) {
    json col = json::array();
    for (const auto& x : c) col.push_back(integer_to_json(x));
    cols.push_back(std::move(col));
  }
  return cols;
}

LatticeBasis basis_from_json(const json& j, std::size_t dimension) {
  if (!j.is_array()) throw InvalidInput("basis must be an array of columns");
  IntMatrix cols;
  for (const auto& col : j) {
    if (!col.is_array() || col.size() != dimension) throw InvalidInput("basis column has the wrong length");
    IntVector v;
    for (const auto& x : col) v.push_back(integer_from_json(x));
    cols.push_back(std::move(v));
  }
  return LatticeBasis::span(dimension, cols);
}

namespace {

std::string radius_string(const Real& r) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.3RUe", r.get());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

}  // namespace

json roots_to_json(const CanonicalOrder& order, int digits) {
  json out = json::array();
  for (std::size_t s = 0; s < order.size(); ++s) {
    const RootEnclosure& r = order[s];
    out.push_back({{"re", r.re_decimal(digits)},
                   {"im", r.im_decimal(digits)},
                   {"radius", radius_string(r.radius)},
                   {"root", order.slots[s]}});
  }
  return out;
}

json verdict_to_json(const RelationVerdict& v) {
  return {{"verdict", to_string(v.verdict)}, {"precision_bits", v.precision}, {"residual_bound", radius_string(v.residual)}};
}

json basis_result_to_json(const BasisResult& r) {
  json j;
  j["status"] = to_string(r.status);
  j["branch"] = to_string(r.branch);
  j["witness"] = r.witness;
  if (!r.g.is_zero()) {
    j["g"] = r.g.to_string();
    j["multiplicity"] = r.k;
  }
  if (r.basis) {
    j["dimension"] = r.basis->dimension();
    j["basis"] = basis_to_json(*r.basis);
  }
  if (r.roots) {
    j["root_order"] = CanonicalOrder::kRule;
    j["roots"] = roots_to_json(*r.roots);
  }
  if (r.ror) {
    json e = json::array();
    for (long x : r.ror->exponents) e.push_back(x);
    j["root_of_rational"] = {{"N", r.ror->N}, {"q", r.ror->q.get_str()}, {"unity_case", r.ror->unity_case},
                             {"M", r.ror->M}, {"exponents", e}};
  }
  if (r.pair_product) {
    json pp = {{"degree", r.pair_product->f2.degree()}, {"squarefree", r.pair_product->squarefree}};
    pp["irreducible"] = r.pair_product->irreducible ? json(*r.pair_product->irreducible) : json(nullptr);
    j["pair_product"] = pp;
  }
  json t = json::object();
  for (const auto& p : r.timings) t[p.phase] = p.seconds;
  j["timings"] = t;
  return j;
}

json stats_to_json(const SampleSpec& spec, const StatsReport& r) {
  json fixed = json::object();
  for (const auto& [i, c] : spec.fixed) fixed[std::to_string(i)] = c;
  return {{"n", spec.n},
          {"H", spec.H},
          {"fixed", fixed},
          {"exact_degree", spec.exact_degree},
          {"seed", spec.seed},
          {"timeout", spec.timeout_seconds ? json(*spec.timeout_seconds) : json(nullptr)},
          {"count", r.count},
          {"success", r.success},
          {"F", r.F},
          {"OT", r.timeout},
          {"errors", r.errors},
          {"success_ratio", r.success_ratio},
          {"mean_runtime", r.mean_runtime},
          {"median_runtime", r.median_runtime}};
}

json circulant_to_json(const FractalCirculant& F) {
  json j = {{"m", F.order()}, {"d", F.depth()}, {"corank_exact", corank_exact(F)}, {"corank_dft", corank_dft(F)}};
  if (is_prime(F.order())) {
    j["corank_slicing"] = corank_via_slicing(F);
    j["slicing_number"] = slicing_number(F);
    j["slicing_vectors"] = slicing_vectors(F);
  } else {
    j["corank_slicing"] = nullptr;
  }
  return j;
}

json oracle_to_json(const OracleReport& r, int bound, int digits) {
  json verdicts = json::array();
  for (const auto& v : r.column_verdicts) verdicts.push_back(verdict_to_json(v));
  return {{"grade", "numeric"},
          {"bound", bound},
          {"digits", digits},
          {"dimension", r.lattice.dimension()},
          {"rank", r.lattice.rank()},
          {"basis", basis_to_json(r.lattice)},
          {"verdicts", verdicts},
          {"root_order", CanonicalOrder::kRule},
          {"roots", roots_to_json(r.order)},
          {"candidates", r.candidates},
          {"verified", r.verified},
          {"rejected", r.rejected}};
}

}  // namespace rootrel
