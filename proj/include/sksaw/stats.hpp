#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "sksaw/geometry.hpp"
#include "sksaw/reference.hpp"

namespace sksaw {

/// Cumulative counts of samples at or below each grid point.
struct EmpiricalCdf {
  std::vector<double> grid;
  std::vector<std::uint64_t> counts;
  std::uint64_t n = 0;

  double value(std::size_t i) const {
    return n == 0 ? 0.0 : static_cast<double>(counts[i]) / static_cast<double>(n);
  }
};

/// Streaming histogram over a fixed grid. Bin i holds samples in
/// (grid[i-1], grid[i]] (bin 0: everything <= grid[0]); one overflow bin
/// above the last grid point. Integer counts, so merging is exact and
/// order independent.
class CdfAccumulator {
 public:
  CdfAccumulator() = default;
  explicit CdfAccumulator(std::vector<double> grid);

  void add(double x);
  void merge(const CdfAccumulator& other);

  std::uint64_t n() const { return n_; }
  const std::vector<double>& grid() const { return grid_; }
  const std::vector<std::uint64_t>& bins() const { return bins_; }
  EmpiricalCdf cdf() const;

 private:
  std::vector<double> grid_;
  std::vector<std::uint64_t> bins_;  // grid.size() + 1 entries
  std::uint64_t n_ = 0;
};

/// Throws std::invalid_argument for an empty sample set or a grid that is not
/// strictly increasing.
EmpiricalCdf empirical_cdf(std::span<const double> samples, std::span<const double> grid);

/// Scaled difference of an empirical CDF and a reference on the same grid,
/// with binomial standard errors sqrt(F(1 - F)/n) scaled alike.
struct DiffCurve {
  std::vector<double> grid;
  std::vector<double> f_emp;
  std::vector<double> h_ref;
  std::vector<double> diff;
  std::vector<double> std_error;
  double scale = 1.0;
};

DiffCurve diff_curve(const EmpiricalCdf& f, const ReferenceCdf& h, double scale = 1.0);

/// Trapezoid integral of |diff| divided by the grid span.
double l1_norm(const DiffCurve& d);

/// Trapezoid weights (already divided by the span) used by l1_norm.
std::vector<double> trapezoid_weights(std::span<const double> grid);

/// L1 norm with its uncertainty. `std_error` is the sampling standard
/// deviation of the norm to first order (the sign pattern of the difference
/// held fixed). `noise_floor` is the norm that pure sampling noise would
/// produce on its own, sum_i w_i sigma_i sqrt(2/pi).
struct L1Estimate {
  double value = 0.0;
  double std_error = 0.0;
  double noise_floor = 0.0;

  /// Combined statistical error used for noise gates.
  double error() const;
};

L1Estimate l1_estimate(const EmpiricalCdf& f, const ReferenceCdf& h);

/// sup |F - H| with the binomial standard error at the maximizing point.
struct KsResult {
  double distance = 0.0;
  double std_error = 0.0;
  std::size_t argmax = 0;
};

KsResult ks_distance(const DiffCurve& d);

/// Asymptotic Kolmogorov survival function Q(lambda) = P(sqrt(n) D > lambda).
double kolmogorov_survival(double lambda);

/// p-value of a one-sample KS distance computed from n samples.
double ks_p_value(double distance, std::uint64_t n);

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double rss = 0.0;
};

/// Ordinary least squares. Throws for fewer than two distinct abscissae.
FitResult fit_line(std::span<const double> x, std::span<const double> y);

/// Per-boundary-subset X, Y, Z histograms for fixed-orientation unit-disc
/// runs. Subsets follow boundary_subset_index.
class ConditionedXyz {
 public:
  ConditionedXyz() = default;
  ConditionedXyz(const std::vector<double>& xy_grid, const std::vector<double>& z_grid);

  void add(double exit_theta, const HullStats& s);
  void merge(const ConditionedXyz& other);

  const CdfAccumulator& table(int subset, HullVariable v) const {
    return tables_[static_cast<std::size_t>(subset)][static_cast<std::size_t>(v)];
  }
  std::uint64_t count(int subset) const { return table(subset, HullVariable::X).n(); }

 private:
  std::array<std::array<CdfAccumulator, 3>, 6> tables_;
};

struct ConditionedReport {
  std::array<std::uint64_t, 6> counts{};
  std::array<bool, 6> empty{};
  std::array<std::array<L1Estimate, 3>, 6> l1{};
  std::array<double, 3> summed_l1{};        // by variable X, Y, Z
  std::array<double, 3> summed_l1_error{};  // errors added in quadrature
  bool any_empty = false;
};

ConditionedReport conditioned_xyz_tables(const ConditionedXyz& tables);

struct ConditionedSample {
  double exit_theta = 0.0;
  HullStats stats;
};

/// Convenience form over raw samples.
ConditionedReport conditioned_xyz_tables(std::span<const ConditionedSample> samples,
                                         const std::vector<double>& xy_grid,
                                         const std::vector<double>& z_grid);

}  // namespace sksaw
