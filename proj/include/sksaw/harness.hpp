#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sksaw/geometry.hpp"
#include "sksaw/lattice.hpp"
#include "sksaw/reference.hpp"
#include "sksaw/stats.hpp"

namespace sksaw {

inline constexpr const char* kVersion = "1.0.0";

enum class Mode {
  ExitRotAveraged,  // exit angle, fresh uniform domain rotation per sample
  ExitFixed,        // exit angle, domain fixed relative to the lattice
  XyzRotAveraged,   // unit disc; X, Y, Z after rotating each exit to 1
  XyzConditioned,   // unit disc, fixed lattice; X, Y, Z per boundary subset
  MeanSteps,        // step counts only
  Validation,       // walks checked decision by decision against flood fill
};

const char* to_string(Mode m);
Mode parse_mode(std::string_view name);
LatticeKind parse_lattice(std::string_view name);

/// Raised for invalid configurations (maps to exit code 2).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
  LatticeKind lattice = LatticeKind::Square;
  DomainKind domain = DomainKind::UnitDisc;
  double delta = 0.01;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  Mode mode = Mode::ExitRotAveraged;
  int workers = 1;
  std::size_t grid_size = 2048;
  std::uint64_t step_budget = 100'000'000;
  double scale = 1.0;            // applied to difference curves
  std::uint64_t first_sample = 0;  // sample indices [first_sample, first_sample + samples)
};

/// Throws ConfigError when a field is out of range or the mode does not fit
/// the domain.
void validate(const ExperimentConfig& cfg);

/// Abscissa grids: exit angles on [0, 2 pi]; X and Y on [0, 1]; Z on [1, 2].
std::vector<double> theta_grid(std::size_t n);
std::vector<double> xy_grid(std::size_t n);
std::vector<double> z_grid(std::size_t n);

/// Per-worker partial results. All counters are integers, so merging is
/// exact and the result does not depend on the merge order.
struct RunAccumulator {
  std::uint64_t completed = 0;
  std::uint64_t aborted = 0;
  std::uint64_t step_sum = 0;
  unsigned __int128 step_square_sum = 0;
  std::uint64_t hull_bound_violations = 0;
  std::uint64_t oracle_mismatches = 0;
  std::uint64_t oracle_decisions = 0;
  CdfAccumulator theta;
  std::array<CdfAccumulator, 3> xyz;
  ConditionedXyz conditioned;

  static RunAccumulator empty_for(const ExperimentConfig& cfg);
  void merge(const RunAccumulator& other);
  bool compatible(const RunAccumulator& other) const;
};

/// Throws std::invalid_argument if the parts were built for different grids.
RunAccumulator merge(const std::vector<RunAccumulator>& parts);

/// Samples [begin, end) of the experiment, single-threaded.
RunAccumulator run_range(const ExperimentConfig& cfg, std::uint64_t begin, std::uint64_t end);

struct CurveReport {
  std::string name;
  DiffCurve curve;
  L1Estimate l1;
  KsResult ks;
  std::uint64_t n = 0;
};

struct RunSummary {
  ExperimentConfig config;
  RunAccumulator totals;
  std::vector<CurveReport> curves;
  std::optional<ConditionedReport> conditioned;
  double mean_steps = 0.0;
  double sd_steps = 0.0;
  double wall_seconds = 0.0;  // reported on the console only
};

/// Runs the experiment over `cfg.workers` threads and builds the curves.
RunSummary run_experiment(const ExperimentConfig& cfg);

/// Adds more samples to a finished run (indices continue where it stopped).
RunSummary extend_experiment(const RunSummary& previous, std::uint64_t more_samples, int workers);

/// Builds curves and statistics from merged counts.
RunSummary summarize(const ExperimentConfig& cfg, RunAccumulator totals);

/// One CSV per curve plus summary.json. Output depends only on the
/// configuration (worker count and timing are left out).
void write_outputs(const RunSummary& s, const std::filesystem::path& dir);

void write_curve_csv(const DiffCurve& d, const std::filesystem::path& file);
void write_reference_csv(const ReferenceCdf& r, const std::filesystem::path& file);

std::string summary_json(const RunSummary& s);

}  // namespace sksaw
