#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "sksaw/harness.hpp"

using namespace sksaw;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExperimentConfig small(Mode mode, DomainKind domain = DomainKind::UnitDisc) {
  ExperimentConfig c;
  c.mode = mode;
  c.domain = domain;
  c.delta = 0.05;
  c.samples = 300;
  c.seed = 99;
  c.grid_size = 129;
  return c;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("sksaw_harness_test_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(parse_mode("fast"), ConfigError);
  CHECK_THROWS_AS(parse_lattice("triangular"), ConfigError);
  CHECK(parse_mode("xyz-cond") == Mode::XyzConditioned);
  CHECK(parse_lattice("hex") == LatticeKind::Hexagonal);
  ExperimentConfig c = small(Mode::ExitFixed);
  c.delta = 0.0;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = small(Mode::XyzRotAveraged, DomainKind::Strip);
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = small(Mode::ExitFixed);
  c.samples = 0;
  CHECK_THROWS_AS(run_experiment(c), ConfigError);
  c = small(Mode::ExitFixed);
  c.workers = 0;
  CHECK_THROWS_AS(validate(c), ConfigError);
}

TEST_CASE("outputs do not depend on the worker count") {
  for (Mode m : {Mode::ExitRotAveraged, Mode::XyzRotAveraged, Mode::XyzConditioned, Mode::MeanSteps}) {
    ExperimentConfig c = small(m);
    c.workers = 1;
    const RunSummary one = run_experiment(c);
    c.workers = 4;
    const RunSummary four = run_experiment(c);
    const fs::path a = scratch("w1"), b = scratch("w4");
    write_outputs(one, a);
    write_outputs(four, b);
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(a)) {
      ++files;
      CHECK(slurp(e.path()) == slurp(b / e.path().filename()));
    }
    CHECK(files == one.curves.size() + 1);
  }
}

TEST_CASE("extending a run equals running the total at once") {
  ExperimentConfig c = small(Mode::ExitFixed, DomainKind::Triangle);
  c.samples = 200;
  const RunSummary part = run_experiment(c);
  const RunSummary extended = extend_experiment(part, 100, 2);
  c.samples = 300;
  const RunSummary whole = run_experiment(c);
  CHECK(summary_json(extended) == summary_json(whole));
  CHECK(extended.config.samples == 300);
}

TEST_CASE("run ranges merge into the full run") {
  const ExperimentConfig c = small(Mode::ExitRotAveraged, DomainKind::Strip);
  RunAccumulator left = run_range(c, 0, 120);
  const RunAccumulator right = run_range(c, 120, 300);
  left.merge(right);
  const RunAccumulator all = run_range(c, 0, 300);
  CHECK(left.theta.cdf().counts == all.theta.cdf().counts);
  CHECK(left.step_sum == all.step_sum);
  RunAccumulator other = RunAccumulator::empty_for(small(Mode::XyzRotAveraged));
  CHECK_THROWS_AS(left.merge(other), std::invalid_argument);
}

TEST_CASE("summary contents") {
  const RunSummary s = run_experiment(small(Mode::ExitRotAveraged));
  REQUIRE(s.curves.size() == 1);
  CHECK(s.curves[0].name == "exit_theta");
  CHECK(s.curves[0].n == 300);
  CHECK(s.totals.completed == 300);
  CHECK(s.mean_steps > 0.0);
  const std::string j = summary_json(s);
  for (const char* key : {"\"version\"", "\"config\"", "\"curves\"", "\"seeds\"", "\"steps\"", "\"l1\""}) {
    CHECK(j.find(key) != std::string::npos);
  }
  CHECK(j.find("workers") == std::string::npos);
}

TEST_CASE("curve CSV layout") {
  const RunSummary s = run_experiment(small(Mode::ExitFixed, DomainKind::OffCenterDisc));
  const fs::path dir = scratch("csv");
  write_outputs(s, dir);
  const std::string text = slurp(dir / "exit_theta.csv");
  CHECK(text.rfind("abscissa,f_emp,h_ref,diff,stderr,scale\n", 0) == 0);
  CHECK(text.find('\r') == std::string::npos);
  std::size_t lines = 0;
  for (char ch : text) lines += ch == '\n';
  CHECK(lines == 130);
}

TEST_CASE("validation mode checks every decision") {
  ExperimentConfig c = small(Mode::Validation);
  c.lattice = LatticeKind::Hexagonal;
  c.samples = 50;
  const RunSummary s = run_experiment(c);
  CHECK(s.totals.oracle_decisions == s.totals.step_sum);
  CHECK(s.totals.oracle_mismatches == 0);
}

TEST_CASE("hull statistics stay in range") {
  const RunSummary s = run_experiment(small(Mode::XyzRotAveraged));
  CHECK(s.totals.hull_bound_violations == 0);
  CHECK(s.curves.size() == 3);
}
