#include "sksaw/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sksaw {

namespace {

void require_increasing(std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw std::invalid_argument("grid must be strictly increasing");
  }
}

}  // namespace

CdfAccumulator::CdfAccumulator(std::vector<double> grid) : grid_(std::move(grid)) {
  require_increasing(grid_);
  bins_.assign(grid_.size() + 1, 0);
}

void CdfAccumulator::add(double x) {
  const auto it = std::lower_bound(grid_.begin(), grid_.end(), x);
  ++bins_[static_cast<std::size_t>(it - grid_.begin())];
  ++n_;
}

void CdfAccumulator::merge(const CdfAccumulator& other) {
  if (other.grid_ != grid_) throw std::invalid_argument("merge: accumulators use different grids");
  for (std::size_t i = 0; i < bins_.size(); ++i) bins_[i] += other.bins_[i];
  n_ += other.n_;
}

EmpiricalCdf CdfAccumulator::cdf() const {
  EmpiricalCdf out;
  out.grid = grid_;
  out.n = n_;
  out.counts.resize(grid_.size());
  std::uint64_t running = 0;
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    running += bins_[i];
    out.counts[i] = running;
  }
  return out;
}

EmpiricalCdf empirical_cdf(std::span<const double> samples, std::span<const double> grid) {
  if (samples.empty()) throw std::invalid_argument("empirical_cdf: no samples");
  CdfAccumulator acc(std::vector<double>(grid.begin(), grid.end()));
  for (double s : samples) acc.add(s);
  return acc.cdf();
}

DiffCurve diff_curve(const EmpiricalCdf& f, const ReferenceCdf& h, double scale) {
  if (f.grid != h.grid || h.values.size() != h.grid.size()) {
    throw std::invalid_argument("diff_curve: empirical and reference grids differ");
  }
  if (!(scale > 0.0)) throw std::invalid_argument("diff_curve: scale must be positive");
  DiffCurve d;
  d.grid = f.grid;
  d.scale = scale;
  const std::size_t m = f.grid.size();
  d.f_emp.resize(m);
  d.h_ref = h.values;
  d.diff.resize(m);
  d.std_error.resize(m);
  const double n = static_cast<double>(f.n);
  for (std::size_t i = 0; i < m; ++i) {
    const double p = f.value(i);
    d.f_emp[i] = p;
    d.diff[i] = scale * (p - h.values[i]);
    d.std_error[i] = f.n == 0 ? 0.0 : scale * std::sqrt(p * (1.0 - p) / n);
  }
  return d;
}

std::vector<double> trapezoid_weights(std::span<const double> grid) {
  const std::size_t m = grid.size();
  std::vector<double> w(m, 0.0);
  if (m < 2) return w;
  const double span = grid.back() - grid.front();
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const double half = 0.5 * (grid[i + 1] - grid[i]) / span;
    w[i] += half;
    w[i + 1] += half;
  }
  return w;
}

double l1_norm(const DiffCurve& d) {
  const auto w = trapezoid_weights(d.grid);
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * std::abs(d.diff[i]);
  return s;
}

double L1Estimate::error() const { return std::hypot(std_error, noise_floor); }

L1Estimate l1_estimate(const EmpiricalCdf& f, const ReferenceCdf& h) {
  const DiffCurve d = diff_curve(f, h, 1.0);
  L1Estimate out;
  out.value = l1_norm(d);
  if (f.n == 0) return out;
  const auto w = trapezoid_weights(d.grid);
  const std::size_t m = w.size();
  const double n = static_cast<double>(f.n);

  // To first order the norm is the sample mean of psi(sample) =
  // sum_{i : sample <= grid[i]} w_i sign(diff_i), which is constant on each
  // histogram bin: psi on bin b is the suffix sum from b.
  std::vector<double> suffix(m + 1, 0.0);
  for (std::size_t i = m; i-- > 0;) {
    const double sign = d.diff[i] > 0.0 ? 1.0 : (d.diff[i] < 0.0 ? -1.0 : 0.0);
    suffix[i] = suffix[i + 1] + w[i] * sign;
  }
  double mean = 0.0, second = 0.0;
  std::uint64_t previous = 0;
  for (std::size_t b = 0; b <= m; ++b) {
    const std::uint64_t upto = b < m ? f.counts[b] : f.n;
    const double p = static_cast<double>(upto - previous) / n;
    previous = upto;
    mean += p * suffix[b];
    second += p * suffix[b] * suffix[b];
  }
  out.std_error = std::sqrt(std::max(0.0, second - mean * mean) / n);

  double floor = 0.0;
  for (std::size_t i = 0; i < m; ++i) floor += w[i] * d.std_error[i];
  out.noise_floor = floor * std::sqrt(2.0 / std::numbers::pi);
  return out;
}

KsResult ks_distance(const DiffCurve& d) {
  KsResult r;
  for (std::size_t i = 0; i < d.diff.size(); ++i) {
    const double a = std::abs(d.diff[i]);
    if (a > r.distance) {
      r.distance = a;
      r.argmax = i;
    }
  }
  if (!d.std_error.empty()) r.std_error = d.std_error[r.argmax];
  return r;
}

double kolmogorov_survival(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-17) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

double ks_p_value(double distance, std::uint64_t n) {
  const double rn = std::sqrt(static_cast<double>(n));
  return kolmogorov_survival((rn + 0.12 + 0.11 / rn) * distance);
}

FitResult fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_line: x and y differ in length");
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("fit_line: need at least two points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("fit_line: abscissae are all equal");
  FitResult r;
  r.slope = sxy / sxx;
  r.intercept = my - r.slope * mx;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = y[i] - (r.intercept + r.slope * x[i]);
    r.rss += e * e;
  }
  return r;
}

ConditionedXyz::ConditionedXyz(const std::vector<double>& xy_grid,
                               const std::vector<double>& z_grid) {
  for (auto& row : tables_) {
    row[0] = CdfAccumulator(xy_grid);
    row[1] = CdfAccumulator(xy_grid);
    row[2] = CdfAccumulator(z_grid);
  }
}

void ConditionedXyz::add(double exit_theta, const HullStats& s) {
  auto& row = tables_[static_cast<std::size_t>(boundary_subset_index(exit_theta))];
  row[0].add(s.x);
  row[1].add(s.y);
  row[2].add(s.z);
}

void ConditionedXyz::merge(const ConditionedXyz& other) {
  for (std::size_t k = 0; k < tables_.size(); ++k) {
    for (std::size_t v = 0; v < 3; ++v) tables_[k][v].merge(other.tables_[k][v]);
  }
}

ConditionedReport conditioned_xyz_tables(const ConditionedXyz& tables) {
  ConditionedReport report;
  constexpr std::array<HullVariable, 3> kVars = {HullVariable::X, HullVariable::Y, HullVariable::Z};
  std::array<ReferenceCdf, 3> refs;
  for (std::size_t v = 0; v < 3; ++v) refs[v] = xyz_cdf(kVars[v], tables.table(0, kVars[v]).grid());
  std::array<double, 3> var{};
  for (int k = 0; k < 6; ++k) {
    const std::size_t ks = static_cast<std::size_t>(k);
    report.counts[ks] = tables.count(k);
    report.empty[ks] = report.counts[ks] == 0;
    report.any_empty = report.any_empty || report.empty[ks];
    if (report.empty[ks]) continue;
    for (std::size_t v = 0; v < 3; ++v) {
      const L1Estimate e = l1_estimate(tables.table(k, kVars[v]).cdf(), refs[v]);
      report.l1[ks][v] = e;
      report.summed_l1[v] += e.value;
      var[v] += e.error() * e.error();
    }
  }
  for (std::size_t v = 0; v < 3; ++v) report.summed_l1_error[v] = std::sqrt(var[v]);
  return report;
}

ConditionedReport conditioned_xyz_tables(std::span<const ConditionedSample> samples,
                                         const std::vector<double>& xy_grid,
                                         const std::vector<double>& z_grid) {
  ConditionedXyz tables(xy_grid, z_grid);
  for (const auto& s : samples) tables.add(s.exit_theta, s.stats);
  return conditioned_xyz_tables(tables);
}

}  // namespace sksaw
