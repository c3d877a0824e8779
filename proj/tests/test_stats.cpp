#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sksaw/random.hpp"
#include "sksaw/reference.hpp"
#include "sksaw/stats.hpp"

using namespace sksaw;

namespace {

ReferenceCdf constant_reference(const std::vector<double>& grid, double value) {
  return {grid, std::vector<double>(grid.size(), value), CdfProvenance::Analytic};
}

}  // namespace

TEST_CASE("empirical CDF on small inputs") {
  const std::vector<double> s{1.0, 2.0, 3.0};
  const EmpiricalCdf f = empirical_cdf(s, std::vector<double>{1.5, 2.5, 3.5});
  CHECK(f.counts == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(f.n == 3);
  const EmpiricalCdf g = empirical_cdf(s, std::vector<double>{4.0, 5.0});
  CHECK(g.counts == std::vector<std::uint64_t>{3, 3});
  // Ties count as "at most".
  const EmpiricalCdf t = empirical_cdf(s, std::vector<double>{2.0});
  CHECK(t.counts[0] == 2);
  CHECK_THROWS_AS(empirical_cdf(std::vector<double>{}, std::vector<double>{1.0}), std::invalid_argument);
  CHECK_THROWS_AS(empirical_cdf(s, std::vector<double>{2.0, 1.0}), std::invalid_argument);
}

TEST_CASE("empirical CDF matches a brute-force recount") {
  RandomStream rng(2, 0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> samples(300), grid(37);
    for (double& x : samples) x = rng.uniform() * 3.0 - 1.0;
    for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = -1.2 + 3.4 * static_cast<double>(i) / 36.0;
    const EmpiricalCdf f = empirical_cdf(samples, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      std::uint64_t c = 0;
      for (double x : samples) c += x <= grid[i];
      REQUIRE(f.counts[i] == c);
    }
    for (std::size_t i = 1; i < grid.size(); ++i) REQUIRE(f.counts[i] >= f.counts[i - 1]);
  }
}

TEST_CASE("accumulators merge exactly") {
  const auto grid = uniform_grid(0.0, 1.0, 11);
  CdfAccumulator a(grid), b(grid), all(grid);
  RandomStream rng(3, 0);
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.uniform();
    (i % 3 ? a : b).add(x);
    all.add(x);
  }
  a.merge(b);
  CHECK(a.cdf().counts == all.cdf().counts);
  CHECK(a.n() == 1000);
  CdfAccumulator other(uniform_grid(0.0, 2.0, 11));
  CHECK_THROWS_AS(a.merge(other), std::invalid_argument);
}

TEST_CASE("difference curves") {
  const auto grid = uniform_grid(0.0, 1.0, 3);
  const EmpiricalCdf f = empirical_cdf(std::vector<double>{0.25, 0.75}, grid);
  const ReferenceCdf same{grid, {0.0, 0.5, 1.0}, CdfProvenance::Analytic};
  const DiffCurve zero = diff_curve(f, same, 1.0);
  for (double d : zero.diff) CHECK(d == 0.0);

  const ReferenceCdf h = constant_reference(grid, 0.2);
  const DiffCurve full = diff_curve(f, h, 1.0);
  const DiffCurve half = diff_curve(f, h, 0.5);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(half.diff[i] == doctest::Approx(0.5 * full.diff[i]));
    CHECK(half.std_error[i] == doctest::Approx(0.5 * full.std_error[i]));
    const double p = f.value(i);
    CHECK(full.std_error[i] == doctest::Approx(std::sqrt(p * (1.0 - p) / 2.0)));
  }
  CHECK_THROWS_AS(diff_curve(f, constant_reference(uniform_grid(0.0, 2.0, 3), 0.0), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(diff_curve(f, h, 0.0), std::invalid_argument);
}

TEST_CASE("L1 norm") {
  DiffCurve d;
  d.grid = uniform_grid(0.0, std::numbers::pi, 20001);
  d.diff.assign(d.grid.size(), 0.0);
  CHECK(l1_norm(d) == 0.0);
  d.diff.assign(d.grid.size(), -0.3);
  CHECK(l1_norm(d) == doctest::Approx(0.3));
  for (std::size_t i = 0; i < d.grid.size(); ++i) d.diff[i] = std::sin(2.0 * d.grid[i]);
  // Mean of |sin 2x| over [0, pi] is 2 / pi.
  CHECK(std::abs(l1_norm(d) - 2.0 / std::numbers::pi) < 1e-6);
  const auto w = trapezoid_weights(d.grid);
  double s = 0.0;
  for (double x : w) s += x;
  CHECK(s == doctest::Approx(1.0));
}

TEST_CASE("L1 error estimate tracks the spread across replicates") {
  // Samples drawn from a shifted law so the norm is well away from zero.
  const auto grid = uniform_grid(0.0, 1.0, 257);
  ReferenceCdf h{grid, {}, CdfProvenance::Analytic};
  for (double x : grid) h.values.push_back(x);
  const int reps = 200, n = 4000;
  std::vector<double> values;
  double mean_reported = 0.0;
  for (int r = 0; r < reps; ++r) {
    RandomStream rng(41, static_cast<std::uint64_t>(r));
    CdfAccumulator acc(grid);
    for (int i = 0; i < n; ++i) acc.add(std::pow(rng.uniform(), 1.2));
    const L1Estimate e = l1_estimate(acc.cdf(), h);
    values.push_back(e.value);
    mean_reported += e.std_error / reps;
  }
  double m = 0.0, v = 0.0;
  for (double x : values) m += x / reps;
  for (double x : values) v += (x - m) * (x - m) / (reps - 1);
  CHECK(mean_reported == doctest::Approx(std::sqrt(v)).epsilon(0.25));
}

TEST_CASE("KS distance and p-values") {
  DiffCurve d;
  d.grid = {0.0, 1.0, 2.0};
  d.diff = {0.01, -0.05, 0.02};
  d.std_error = {0.1, 0.2, 0.3};
  const KsResult r = ks_distance(d);
  CHECK(r.distance == doctest::Approx(0.05));
  CHECK(r.argmax == 1);
  CHECK(r.std_error == doctest::Approx(0.2));
  CHECK(kolmogorov_survival(0.0) == 1.0);
  CHECK(kolmogorov_survival(1.36) == doctest::Approx(0.05).epsilon(0.02));
  CHECK(ks_p_value(0.0, 100) == 1.0);
  CHECK(ks_p_value(0.5, 1000) < 1e-10);
}

TEST_CASE("least-squares line") {
  const std::vector<double> x{1.0, 2.0, 3.0, 4.0};
  const std::vector<double> y{3.0, 5.0, 7.0, 9.0};
  FitResult f = fit_line(x, y);
  CHECK(f.slope == doctest::Approx(2.0));
  CHECK(f.intercept == doctest::Approx(1.0));
  CHECK(f.rss == doctest::Approx(0.0));

  const std::vector<double> yn{3.1, 4.8, 7.3, 8.9};
  f = fit_line(x, yn);
  // Residuals are orthogonal to 1 and x.
  double r0 = 0.0, r1 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = yn[i] - f.intercept - f.slope * x[i];
    r0 += e;
    r1 += e * x[i];
  }
  CHECK(std::abs(r0) < 1e-12);
  CHECK(std::abs(r1) < 1e-12);
  CHECK_THROWS_AS(fit_line(std::vector<double>{1.0, 1.0}, std::vector<double>{1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(fit_line(std::vector<double>{1.0}, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("conditioned tables sort samples into the six subsets") {
  const auto xy = uniform_grid(0.0, 1.0, 65), z = uniform_grid(1.0, 2.0, 65);
  std::vector<ConditionedSample> samples;
  RandomStream rng(5, 0);
  for (int i = 0; i < 6000; ++i) {
    samples.push_back({2.0 * std::numbers::pi * rng.uniform(), {0.5 * rng.uniform(), 0.5 * rng.uniform(), 1.2}});
  }
  const ConditionedReport r = conditioned_xyz_tables(samples, xy, z);
  std::uint64_t total = 0;
  for (auto c : r.counts) {
    total += c;
    CHECK(std::abs(static_cast<double>(c) - 1000.0) < 4.0 * std::sqrt(6000.0 / 6.0 * 5.0 / 6.0));
  }
  CHECK(total == 6000);
  CHECK_FALSE(r.any_empty);
  double sx = 0.0;
  for (const auto& row : r.l1) sx += row[0].value;
  CHECK(r.summed_l1[0] == doctest::Approx(sx));

  const ConditionedReport empty = conditioned_xyz_tables(std::vector<ConditionedSample>{}, xy, z);
  CHECK(empty.any_empty);
}
