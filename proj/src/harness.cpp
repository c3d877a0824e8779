#include "sksaw/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "sksaw/validation/flood_fill.hpp"
#include "sksaw/walker.hpp"

namespace sksaw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::array<HullVariable, 3> kVars = {HullVariable::X, HullVariable::Y, HullVariable::Z};

bool rotation_averaged(Mode m) { return m == Mode::ExitRotAveraged || m == Mode::XyzRotAveraged; }
bool hull_mode(Mode m) { return m == Mode::XyzRotAveraged || m == Mode::XyzConditioned; }

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool hull_in_bounds(const HullStats& h) {
  constexpr double kTol = 1e-12;
  return h.x >= -kTol && h.x <= 1.0 + kTol && h.y >= -kTol && h.y <= 1.0 + kTol &&
         h.z >= 1.0 - kTol && h.z <= 2.0 + kTol;
}

}  // namespace

const char* to_string(Mode m) {
  switch (m) {
    case Mode::ExitRotAveraged: return "exit-rot";
    case Mode::ExitFixed: return "exit-fixed";
    case Mode::XyzRotAveraged: return "xyz-rot";
    case Mode::XyzConditioned: return "xyz-cond";
    case Mode::MeanSteps: return "mean-steps";
    case Mode::Validation: return "validation";
  }
  return "?";
}

Mode parse_mode(std::string_view name) {
  for (Mode m : {Mode::ExitRotAveraged, Mode::ExitFixed, Mode::XyzRotAveraged,
                 Mode::XyzConditioned, Mode::MeanSteps, Mode::Validation}) {
    if (name == to_string(m)) return m;
  }
  throw ConfigError("unknown mode '" + std::string(name) + "'");
}

LatticeKind parse_lattice(std::string_view name) {
  if (name == "square") return LatticeKind::Square;
  if (name == "hex") return LatticeKind::Hexagonal;
  throw ConfigError("unknown lattice '" + std::string(name) + "'");
}

void validate(const ExperimentConfig& cfg) {
  if (!(cfg.delta > 0.0 && cfg.delta <= 0.5)) throw ConfigError("delta must be in (0, 0.5]");
  if (cfg.samples < 1) throw ConfigError("samples must be at least 1");
  if (cfg.workers < 1) throw ConfigError("workers must be at least 1");
  if (cfg.grid_size < 2) throw ConfigError("grid must have at least 2 points");
  if (cfg.step_budget < 1) throw ConfigError("step budget must be positive");
  if (!(cfg.scale > 0.0)) throw ConfigError("scale must be positive");
  if (hull_mode(cfg.mode) && cfg.domain != DomainKind::UnitDisc) {
    throw ConfigError(std::string(to_string(cfg.mode)) + " requires the unit disc");
  }
  if (cfg.mode == Mode::XyzConditioned && cfg.lattice != LatticeKind::Square) {
    throw ConfigError("xyz-cond folds exit angles with square-lattice symmetries");
  }
}

std::vector<double> theta_grid(std::size_t n) { return uniform_grid(0.0, kTwoPi, n); }
std::vector<double> xy_grid(std::size_t n) { return uniform_grid(0.0, 1.0, n); }
std::vector<double> z_grid(std::size_t n) { return uniform_grid(1.0, 2.0, n); }

RunAccumulator RunAccumulator::empty_for(const ExperimentConfig& cfg) {
  RunAccumulator a;
  switch (cfg.mode) {
    case Mode::ExitRotAveraged:
    case Mode::ExitFixed:
      a.theta = CdfAccumulator(theta_grid(cfg.grid_size));
      break;
    case Mode::XyzRotAveraged:
      a.xyz = {CdfAccumulator(xy_grid(cfg.grid_size)), CdfAccumulator(xy_grid(cfg.grid_size)),
               CdfAccumulator(z_grid(cfg.grid_size))};
      break;
    case Mode::XyzConditioned:
      a.conditioned = ConditionedXyz(xy_grid(cfg.grid_size), z_grid(cfg.grid_size));
      break;
    case Mode::MeanSteps:
    case Mode::Validation:
      break;
  }
  return a;
}

bool RunAccumulator::compatible(const RunAccumulator& other) const {
  if (theta.grid() != other.theta.grid()) return false;
  for (std::size_t v = 0; v < 3; ++v) {
    if (xyz[v].grid() != other.xyz[v].grid()) return false;
    if (conditioned.table(0, kVars[v]).grid() != other.conditioned.table(0, kVars[v]).grid()) {
      return false;
    }
  }
  return true;
}

void RunAccumulator::merge(const RunAccumulator& other) {
  if (!compatible(other)) throw std::invalid_argument("merge: accumulators from different configurations");
  completed += other.completed;
  aborted += other.aborted;
  step_sum += other.step_sum;
  step_square_sum += other.step_square_sum;
  hull_bound_violations += other.hull_bound_violations;
  oracle_mismatches += other.oracle_mismatches;
  oracle_decisions += other.oracle_decisions;
  if (!theta.grid().empty()) theta.merge(other.theta);
  for (std::size_t v = 0; v < 3; ++v) {
    if (!xyz[v].grid().empty()) xyz[v].merge(other.xyz[v]);
  }
  if (!conditioned.table(0, HullVariable::X).grid().empty()) conditioned.merge(other.conditioned);
}

RunAccumulator merge(const std::vector<RunAccumulator>& parts) {
  if (parts.empty()) throw std::invalid_argument("merge: nothing to merge");
  RunAccumulator total = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) total.merge(parts[i]);
  return total;
}

namespace {

// Walk grown step by step with every decision checked against flood fill.
ExitOutcome run_checked(const ExitProblem& problem, RandomStream& rng, WalkState& w,
                        validation::FloodFillOracle& oracle, RunAccumulator& acc) {
  w.reset();
  ExitOutcome out;
  for (;;) {
    if (out.steps >= problem.step_budget) {
      out.aborted = true;
      return out;
    }
    const NeighborList expected = oracle.allowable(w);
    const NeighborList got = allowable_neighbors(w);
    ++acc.oracle_decisions;
    bool same = expected.count == got.count;
    for (const Site& s : got) same = same && expected.contains(s);
    if (!same) ++acc.oracle_mismatches;
    const Site s = step(w, rng);
    ++out.steps;
    const Point p = embed(s, problem.lattice, problem.delta);
    if (!problem.domain.contains_closed(p)) {
      out.exit = {p, exit_angle(p, problem.domain)};
      return out;
    }
  }
}

}  // namespace

RunAccumulator run_range(const ExperimentConfig& cfg, std::uint64_t begin, std::uint64_t end) {
  RunAccumulator acc = RunAccumulator::empty_for(cfg);
  Walker walker(cfg.lattice);
  WalkState checked(cfg.lattice);
  validation::FloodFillOracle oracle;
  std::vector<Point> points;
  for (std::uint64_t i = begin; i < end; ++i) {
    RandomStream rng(cfg.seed, i);
    const double rotation = rotation_averaged(cfg.mode) ? kTwoPi * rng.uniform() : 0.0;
    const ExitProblem problem{cfg.lattice, DomainSpec(cfg.domain, rotation), cfg.delta, cfg.step_budget};
    const ExitOutcome out = cfg.mode == Mode::Validation
                                ? run_checked(problem, rng, checked, oracle, acc)
                                : walker.run_until_exit(problem, rng);
    if (out.aborted) {
      ++acc.aborted;
      continue;
    }
    ++acc.completed;
    acc.step_sum += out.steps;
    acc.step_square_sum += static_cast<unsigned __int128>(out.steps) * out.steps;

    switch (cfg.mode) {
      case Mode::ExitRotAveraged:
      case Mode::ExitFixed:
        acc.theta.add(out.exit.theta);
        break;
      case Mode::XyzRotAveraged:
      case Mode::XyzConditioned: {
        const auto path = walker.state().path();
        points.resize(path.size());
        for (std::size_t k = 0; k < path.size(); ++k) points[k] = embed(path[k], cfg.lattice, cfg.delta);
        // The hull is taken in the lattice frame, rotated so the exit is at 1.
        const double lattice_angle = std::atan2(out.exit.exit_point.y, out.exit.exit_point.x);
        const HullStats h = hull_stats(points, lattice_angle);
        if (!hull_in_bounds(h)) ++acc.hull_bound_violations;
        if (cfg.mode == Mode::XyzRotAveraged) {
          acc.xyz[0].add(h.x);
          acc.xyz[1].add(h.y);
          acc.xyz[2].add(h.z);
        } else {
          acc.conditioned.add(out.exit.theta, h);
        }
        break;
      }
      case Mode::MeanSteps:
      case Mode::Validation:
        break;
    }
  }
  return acc;
}

namespace {

RunAccumulator run_parallel(const ExperimentConfig& cfg, std::uint64_t begin, std::uint64_t end,
                            int workers) {
  const std::uint64_t total = end - begin;
  const std::uint64_t w = std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), std::max<std::uint64_t>(total, 1));
  std::vector<RunAccumulator> parts(w);
  std::vector<std::exception_ptr> errors(w);
  std::vector<std::thread> threads;
  for (std::uint64_t k = 0; k < w; ++k) {
    const std::uint64_t lo = begin + total * k / w;
    const std::uint64_t hi = begin + total * (k + 1) / w;
    threads.emplace_back([&, k, lo, hi] {
      try {
        parts[k] = run_range(cfg, lo, hi);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return merge(parts);
}

}  // namespace

RunSummary summarize(const ExperimentConfig& cfg, RunAccumulator totals) {
  RunSummary s;
  s.config = cfg;
  s.totals = std::move(totals);
  const auto& t = s.totals;
  if (t.completed > 0) {
    const long double n = static_cast<long double>(t.completed);
    const long double mean = static_cast<long double>(t.step_sum) / n;
    s.mean_steps = static_cast<double>(mean);
    if (t.completed > 1) {
      const long double ss = static_cast<long double>(t.step_square_sum) - n * mean * mean;
      s.sd_steps = static_cast<double>(std::sqrt(std::max(0.0L, ss / (n - 1))));
    }
  }

  const auto add_curve = [&](std::string name, const CdfAccumulator& acc, const ReferenceCdf& ref) {
    CurveReport c;
    c.name = std::move(name);
    const EmpiricalCdf f = acc.cdf();
    c.n = f.n;
    c.curve = diff_curve(f, ref, cfg.scale);
    c.l1 = l1_estimate(f, ref);
    c.ks = ks_distance(diff_curve(f, ref, 1.0));
    s.curves.push_back(std::move(c));
  };

  switch (cfg.mode) {
    case Mode::ExitRotAveraged:
    case Mode::ExitFixed:
      add_curve("exit_theta", t.theta, harmonic_cdf(cfg.domain, t.theta.grid()));
      break;
    case Mode::XyzRotAveraged:
      for (std::size_t v = 0; v < 3; ++v) {
        add_curve(to_string(kVars[v]), t.xyz[v], xyz_cdf(kVars[v], t.xyz[v].grid()));
      }
      break;
    case Mode::XyzConditioned:
      for (int k = 0; k < 6; ++k) {
        for (HullVariable v : kVars) {
          const CdfAccumulator& acc = t.conditioned.table(k, v);
          if (acc.n() == 0) continue;
          add_curve(std::string(to_string(v)) + "_subset" + std::to_string(k), acc,
                    xyz_cdf(v, acc.grid()));
        }
      }
      s.conditioned = conditioned_xyz_tables(t.conditioned);
      break;
    case Mode::MeanSteps:
    case Mode::Validation:
      break;
  }
  return s;
}

RunSummary run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  RunAccumulator totals = run_parallel(cfg, cfg.first_sample, cfg.first_sample + cfg.samples, cfg.workers);
  RunSummary s = summarize(cfg, std::move(totals));
  s.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

RunSummary extend_experiment(const RunSummary& previous, std::uint64_t more_samples, int workers) {
  ExperimentConfig cfg = previous.config;
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t begin = cfg.first_sample + cfg.samples;
  RunAccumulator totals = previous.totals;
  totals.merge(run_parallel(cfg, begin, begin + more_samples, workers));
  cfg.samples += more_samples;
  RunSummary s = summarize(cfg, std::move(totals));
  s.wall_seconds = previous.wall_seconds +
                   std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

void write_curve_csv(const DiffCurve& d, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << "abscissa,f_emp,h_ref,diff,stderr,scale\n";
  for (std::size_t i = 0; i < d.grid.size(); ++i) {
    out << format_double(d.grid[i]) << ',' << format_double(d.f_emp[i]) << ','
        << format_double(d.h_ref[i]) << ',' << format_double(d.diff[i]) << ','
        << format_double(d.std_error[i]) << ',' << format_double(d.scale) << '\n';
  }
  if (!out) throw std::runtime_error("write failed for " + file.string());
}

void write_reference_csv(const ReferenceCdf& r, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << "abscissa,f_emp,h_ref,diff,stderr,scale\n";
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    out << format_double(r.grid[i]) << ",," << format_double(r.values[i]) << ",,,1\n";
  }
  if (!out) throw std::runtime_error("write failed for " + file.string());
}

std::string summary_json(const RunSummary& s) {
  using nlohmann::json;
  const ExperimentConfig& c = s.config;
  json j;
  j["version"] = kVersion;
  j["config"] = {
      {"lattice", c.lattice == LatticeKind::Square ? "square" : "hex"},
      {"domain", to_string(c.domain)},
      {"delta", c.delta},
      {"samples", c.samples},
      {"first_sample", c.first_sample},
      {"mode", to_string(c.mode)},
      {"grid", c.grid_size},
      {"step_budget", c.step_budget},
      {"scale", c.scale},
  };
  j["seeds"] = {{"seed", c.seed}, {"stream_key", "(seed, sample index)"}};
  j["samples"] = {{"completed", s.totals.completed}, {"aborted", s.totals.aborted}};
  j["steps"] = {{"mean", s.mean_steps}, {"sd", s.sd_steps}};
  j["l1_normalization"] = "trapezoid integral of |F - H| divided by the grid span";
  json curves = json::object();
  for (const auto& cr : s.curves) {
    curves[cr.name] = {{"n", cr.n},
                       {"l1", cr.l1.value},
                       {"l1_std_error", cr.l1.std_error},
                       {"l1_noise_floor", cr.l1.noise_floor},
                       {"ks", cr.ks.distance},
                       {"ks_std_error", cr.ks.std_error},
                       {"ks_p_value", ks_p_value(cr.ks.distance, cr.n)},
                       {"file", cr.name + ".csv"}};
  }
  j["curves"] = curves;
  if (s.conditioned) {
    const auto& r = *s.conditioned;
    j["conditioned"] = {
        {"subset_counts", std::vector<std::uint64_t>(r.counts.begin(), r.counts.end())},
        {"empty_subsets", std::vector<bool>(r.empty.begin(), r.empty.end())},
        {"summed_l1", {{"x", r.summed_l1[0]}, {"y", r.summed_l1[1]}, {"z", r.summed_l1[2]}}},
        {"summed_l1_error",
         {{"x", r.summed_l1_error[0]}, {"y", r.summed_l1_error[1]}, {"z", r.summed_l1_error[2]}}},
    };
  }
  if (s.totals.hull_bound_violations > 0) j["hull_bound_violations"] = s.totals.hull_bound_violations;
  if (c.mode == Mode::Validation) {
    j["oracle"] = {{"decisions", s.totals.oracle_decisions}, {"mismatches", s.totals.oracle_mismatches}};
  }
  return j.dump(2) + "\n";
}

void write_outputs(const RunSummary& s, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& c : s.curves) write_curve_csv(c.curve, dir / (c.name + ".csv"));
  std::ofstream out(dir / "summary.json", std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + (dir / "summary.json").string());
  out << summary_json(s);
}

}  // namespace sksaw
