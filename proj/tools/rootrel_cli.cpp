// Command-line front end: basis | check-e | stats | circulant | oracle.
// JSON goes to stdout, diagnostics to stderr.
//
// Exit codes: 0 success, 1 input error, 2 internal error, 3 F verdict,
// 4 timeout.

#include <chrono>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "rootrel/deadline.hpp"
#include "rootrel/errors.hpp"
#include "rootrel/factor.hpp"
#include "rootrel/polyio.hpp"

using namespace rootrel;

namespace {

enum Exit { kOk = 0, kInput = 1, kInternal = 2, kVerdictF = 3, kTimeout = 4 };

struct Common {
  std::string poly;
  unsigned power = 1;
  int max_degree = 30;
  long precision = kDefaultPrecision;
  std::optional<double> timeout;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("poly", c.poly, "ascending coefficients \"1,0,-2\" or an expression \"x^2-2\"")->required();
  cmd->add_option("--power", c.power, "raise the input to this power first")->check(CLI::Range(1u, 64u));
  cmd->add_option("--max-degree", c.max_degree, "degree cap of the pipeline")->check(CLI::PositiveNumber);
  cmd->add_option("--precision", c.precision, "initial root precision in bits")->check(CLI::Range(16L, 1L << 16));
  cmd->add_option("--timeout", c.timeout, "seconds before giving up")->check(CLI::PositiveNumber);
}

IntPoly input_poly(const Common& c) { return pow(parse_polynomial(c.poly), c.power); }

std::optional<std::chrono::steady_clock::duration> budget(const std::optional<double>& seconds) {
  if (!seconds) return std::nullopt;
  return std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*seconds));
}

FastBasisConfig config_of(const Common& c) {
  FastBasisConfig cfg;
  cfg.max_degree = c.max_degree;
  cfg.precision = c.precision;
  return cfg;
}

std::map<int, long> parse_fixed(const std::vector<std::string>& items) {
  std::map<int, long> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidInput("--fixed expects i=c, got '" + item + "'");
    try {
      std::size_t used = 0;
      const int i = std::stoi(item.substr(0, eq), &used);
      if (used != eq) throw std::invalid_argument("index");
      const std::string rhs = item.substr(eq + 1);
      const long v = std::stol(rhs, &used);
      if (used != rhs.size()) throw std::invalid_argument("value");
      if (!out.emplace(i, v).second) throw InvalidInput("coefficient " + std::to_string(i) + " pinned twice");
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const InvalidInput*>(&e)) throw;
      throw InvalidInput("--fixed expects i=c, got '" + item + "'");
    }
  }
  return out;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplicative relations among polynomial roots"};
  app.require_subcommand(1);

  Common basis_opts;
  bool verify = false;
  auto* basis = app.add_subcommand("basis", "compute a basis of the relation lattice or report F");
  add_common(basis, basis_opts);
  basis->add_flag("--verify", verify, "check every basis column numerically at 100 digits");

  Common e_opts;
  auto* check_e = app.add_subcommand("check-e", "decide membership in the class E");
  add_common(check_e, e_opts);

  SampleSpec spec;
  std::vector<std::string> fixed;
  bool serial = false;
  double stats_timeout = 60.0;
  auto* stats = app.add_subcommand("stats", "success statistics over random polynomials");
  stats->add_option("--n", spec.n, "degree bound")->required();
  stats->add_option("--H", spec.H, "height bound")->required();
  stats->add_option("--count", spec.count, "number of samples");
  stats->add_option("--seed", spec.seed, "master seed");
  stats->add_option("--timeout", stats_timeout, "per-sample timeout in seconds")->check(CLI::PositiveNumber);
  stats->add_flag("--exact-degree", spec.exact_degree, "require a nonzero leading coefficient");
  stats->add_option("--fixed", fixed, "pin coefficient i to c (repeatable)")->take_all();
  stats->add_option("--max-degree", spec.config.max_degree, "degree cap of the pipeline");
  stats->add_option("--precision", spec.config.precision, "initial root precision in bits");
  stats->add_flag("--serial", serial, "run samples one after another");

  unsigned m = 0, d = 0;
  std::string table;
  auto* circ = app.add_subcommand("circulant", "coranks of a fractal circulant matrix");
  circ->add_option("--m", m, "order")->required();
  circ->add_option("--d", d, "depth")->required();
  circ->add_option("generators", table, "m^d comma-separated rationals in lexicographic order")->required();

  Common oracle_opts;
  int bound = 2, digits = kDefaultDigits;
  auto* oracle = app.add_subcommand("oracle", "bounded brute-force relation search");
  add_common(oracle, oracle_opts);
  oracle->add_option("--bound", bound, "exponent bound B")->check(CLI::Range(0, kOracleMaxBound));
  oracle->add_option("--digits", digits, "verification digits")->check(CLI::Range(1, 10000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*basis) {
      DeadlineScope scope(budget(basis_opts.timeout));
      const BasisResult r = fast_basis(input_poly(basis_opts), config_of(basis_opts));
      json j = basis_result_to_json(r);
      if (verify && r.basis) {
        CanonicalOrder order = *r.roots;
        json verdicts = json::array();
        for (const auto& c : r.basis->columns()) verdicts.push_back(verdict_to_json(verify_relation(order, c)));
        j["verdicts"] = verdicts;
      }
      print(j);
      return r.status == Status::basis ? kOk : kVerdictF;
    }
    if (*check_e) {
      DeadlineScope scope(budget(e_opts.timeout));
      const MembershipE e = check_E(input_poly(e_opts), config_of(e_opts));
      print({{"member", e.member}, {"witness", e.witness}});
      return e.member ? kOk : kVerdictF;
    }
    if (*stats) {
      spec.fixed = parse_fixed(fixed);
      spec.timeout_seconds = stats_timeout;
      const StatsReport r = run_stats(spec, serial ? StatsKernel::serial : StatsKernel::parallel);
      print(stats_to_json(spec, r));
      return kOk;
    }
    if (*circ) {
      const FractalCirculant F(m, d, parse_rational_list(table));
      print(circulant_to_json(F));
      return kOk;
    }
    if (*oracle) {
      DeadlineScope scope(budget(oracle_opts.timeout));
      const OracleReport r = brute_force_search(input_poly(oracle_opts), bound, digits);
      print(oracle_to_json(r, bound, digits));
      return kOk;
    }
  } catch (const Timeout& e) {
    std::cerr << "timeout: " << e.what() << '\n';
    return kTimeout;
  } catch (const InvalidInput& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const DegreeCapExceeded& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const BadPrime& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
