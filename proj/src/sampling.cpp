#include "rootrel/sampling.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

#include "rootrel/deadline.hpp"
#include "rootrel/errors.hpp"

namespace rootrel {

void SampleSpec::validate() const {
  if (n < 1) throw InvalidInput("degree bound must be at least 1");
  if (H < 0) throw InvalidInput("height bound must be nonnegative");
  if (count < 1) throw InvalidInput("sample count must be at least 1");
  if (fixed.size() > static_cast<std::size_t>(n - 1)) throw InvalidInput("at most n-1 coefficients may be pinned");
  bool can_be_nonconstant = false;
  for (int i = 1; i <= n; ++i) {
    const auto it = fixed.find(i);
    if (it == fixed.end() ? H > 0 : it->second != 0) can_be_nonconstant = true;
  }
  for (const auto& [i, c] : fixed) {
    if (i < 0 || i > n) throw InvalidInput("pinned coefficient index out of range");
    if (c < -H || c > H) throw InvalidInput("pinned coefficient exceeds the height bound");
  }
  if (!can_be_nonconstant) throw InvalidInput("the sample class contains only constants");
  if (exact_degree) {
    const auto it = fixed.find(n);
    if (it == fixed.end() ? H == 0 : it->second == 0) throw InvalidInput("exact degree n is impossible in this class");
  }
  if (timeout_seconds && *timeout_seconds <= 0) throw InvalidInput("timeout must be positive");
}

IntPoly sample_polynomial(const SampleSpec& spec, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(static_cast<std::uint64_t>(index) >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<long> coeff(-spec.H, spec.H);
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    std::vector<Integer> c(static_cast<std::size_t>(spec.n) + 1);
    for (int i = 0; i <= spec.n; ++i) {
      if (auto it = spec.fixed.find(i); it != spec.fixed.end()) {
        c[static_cast<std::size_t>(i)] = it->second;
        continue;
      }
      long v = coeff(rng);
      if (i == spec.n && spec.exact_degree)
        while (v == 0) v = coeff(rng);
      c[static_cast<std::size_t>(i)] = v;
    }
    IntPoly f(std::move(c));
    if (f.degree() >= 1) return f;
  }
  throw InvalidInput("could not draw a nonconstant polynomial from the sample class");
}

namespace {

SampleRecord run_one(const SampleSpec& spec, std::size_t index) {
  SampleRecord rec;
  rec.f = sample_polynomial(spec, index);
  std::optional<std::chrono::steady_clock::duration> budget;
  if (spec.timeout_seconds)
    budget = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(*spec.timeout_seconds));
  const auto start = std::chrono::steady_clock::now();
  try {
    DeadlineScope scope(budget);
    const BasisResult r = fast_basis(rec.f, spec.config);
    rec.outcome = r.status == Status::basis ? Outcome::success : Outcome::F;
  } catch (const Timeout&) {
    rec.outcome = Outcome::timeout;
  } catch (const std::exception&) {
    rec.outcome = Outcome::error;
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace

StatsReport run_stats(const SampleSpec& spec, StatsKernel kernel) {
  spec.validate();
  StatsReport rep;
  rep.count = spec.count;
  rep.samples.resize(spec.count);
  const long count = static_cast<long>(spec.count);
  if (kernel == StatsKernel::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) rep.samples[static_cast<std::size_t>(i)] = run_one(spec, static_cast<std::size_t>(i));
  } else {
    for (long i = 0; i < count; ++i) rep.samples[static_cast<std::size_t>(i)] = run_one(spec, static_cast<std::size_t>(i));
  }
  std::vector<double> times;
  for (const auto& s : rep.samples) {
    switch (s.outcome) {
      case Outcome::success:
        ++rep.success;
        times.push_back(s.seconds);
        break;
      case Outcome::F: ++rep.F; break;
      case Outcome::timeout: ++rep.timeout; break;
      case Outcome::error: ++rep.errors; break;
    }
  }
  rep.success_ratio = static_cast<double>(rep.success) / static_cast<double>(rep.count);
  if (!times.empty()) {
    rep.mean_runtime = std::accumulate(times.begin(), times.end(), 0.0) / static_cast<double>(times.size());
    std::sort(times.begin(), times.end());
    const std::size_t m = times.size() / 2;
    rep.median_runtime = times.size() % 2 == 1 ? times[m] : 0.5 * (times[m - 1] + times[m]);
  }
  return rep;
}

}  // namespace rootrel
