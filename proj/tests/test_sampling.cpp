#include "doctest.h"
#include "rootrel/errors.hpp"
#include "rootrel/sampling.hpp"

using namespace rootrel;

TEST_CASE("sample stream is deterministic and respects the class") {
  SampleSpec spec;
  spec.n = 5;
  spec.H = 3;
  spec.seed = 99;
  spec.fixed = {{0, 1}, {5, -2}};
  for (std::size_t i = 0; i < 200; ++i) {
    const IntPoly f = sample_polynomial(spec, i);
    CHECK(f == sample_polynomial(spec, i));
    CHECK(f.degree() == 5);
    CHECK(f.coeff(0) == 1);
    CHECK(f.coeff(5) == -2);
    CHECK(f.height() <= 3);
  }
  SampleSpec other = spec;
  other.seed = 100;
  int differ = 0;
  for (std::size_t i = 0; i < 20; ++i) differ += sample_polynomial(spec, i) != sample_polynomial(other, i);
  CHECK(differ > 10);

  SampleSpec tiny;
  tiny.n = 1;
  tiny.H = 1;
  tiny.seed = 3;
  for (std::size_t i = 0; i < 100; ++i) CHECK(sample_polynomial(tiny, i).degree() == 1);

  SampleSpec exact;
  exact.n = 4;
  exact.H = 1;
  exact.exact_degree = true;
  for (std::size_t i = 0; i < 100; ++i) CHECK(sample_polynomial(exact, i).degree() == 4);
}

TEST_CASE("validation") {
  SampleSpec s;
  CHECK_NOTHROW(s.validate());
  s.n = 0;
  CHECK_THROWS_AS(s.validate(), InvalidInput);
  s = {};
  s.H = -1;
  CHECK_THROWS_AS(s.validate(), InvalidInput);
  s = {};
  s.fixed = {{2, 11}};
  CHECK_THROWS_AS(s.validate(), InvalidInput);
  s = {};
  s.fixed = {{7, 1}};
  CHECK_THROWS_AS(s.validate(), InvalidInput);
  s = {};
  s.n = 2;
  s.fixed = {{1, 0}, {2, 0}};
  CHECK_THROWS_AS(s.validate(), InvalidInput);
  s = {};
  s.n = 2;
  s.H = 0;
  CHECK_THROWS_AS(s.validate(), InvalidInput);
  s = {};
  s.exact_degree = true;
  s.fixed = {{6, 0}};
  CHECK_THROWS_AS(s.validate(), InvalidInput);
  s = {};
  s.timeout_seconds = 0.0;
  CHECK_THROWS_AS(s.validate(), InvalidInput);
  s = {};
  s.count = 0;
  CHECK_THROWS_AS(s.validate(), InvalidInput);
}

TEST_CASE("statistics are kernel independent") {
  SampleSpec spec;
  spec.n = 5;
  spec.H = 4;
  spec.count = 80;
  spec.seed = 5;
  const auto par = run_stats(spec, StatsKernel::parallel);
  const auto ser = run_stats(spec, StatsKernel::serial);
  CHECK(par.count == 80);
  CHECK(par.success + par.F + par.timeout + par.errors == par.count);
  CHECK(par.success == ser.success);
  CHECK(par.F == ser.F);
  CHECK(par.errors == 0);
  REQUIRE(par.samples.size() == ser.samples.size());
  for (std::size_t i = 0; i < par.samples.size(); ++i) {
    CHECK(par.samples[i].f == ser.samples[i].f);
    CHECK(par.samples[i].outcome == ser.samples[i].outcome);
  }
  CHECK(par.success_ratio == doctest::Approx(static_cast<double>(par.success) / 80));
}

TEST_CASE("small class mix") {
  SampleSpec spec;
  spec.n = 2;
  spec.H = 1;
  spec.count = 200;
  spec.seed = 1;
  const auto r = run_stats(spec);
  CHECK(r.success + r.F + r.timeout + r.errors == 200);
  CHECK(r.timeout == 0);
  CHECK(r.success > 0);
  CHECK(r.F > 0);
}
