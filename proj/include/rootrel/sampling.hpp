#pragma once

// Random sampling of integer polynomials of bounded height and degree, and
// success statistics of the fast basis algorithm over such samples.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rootrel/fastbasis.hpp"

namespace rootrel {

struct SampleSpec {
  int n = 6;   // degree bound
  long H = 10;  // height bound
  std::map<int, long> fixed;  // pinned coefficient index -> value
  std::size_t count = 100;
  std::uint64_t seed = 0;
  std::optional<double> timeout_seconds = 60.0;
  bool exact_degree = false;
  FastBasisConfig config;

  // Throws InvalidInput when the spec is inconsistent.
  void validate() const;
};

enum class Outcome { success, F, timeout, error };

struct SampleRecord {
  IntPoly f;
  Outcome outcome = Outcome::error;
  double seconds = 0.0;
};

struct StatsReport {
  std::size_t count = 0, success = 0, F = 0, timeout = 0, errors = 0;
  double success_ratio = 0.0;
  double mean_runtime = 0.0;    // over successes
  double median_runtime = 0.0;  // over successes
  std::vector<SampleRecord> samples;
};

// Sample `index` of the stream defined by spec.seed: coefficients i.i.d.
// uniform on [-H, H] except pinned ones; zero and constant polynomials are
// rejected and redrawn from the same stream.
IntPoly sample_polynomial(const SampleSpec& spec, std::size_t index);

enum class StatsKernel { parallel, serial };

StatsReport run_stats(const SampleSpec& spec, StatsKernel kernel = StatsKernel::parallel);

}  // namespace rootrel
