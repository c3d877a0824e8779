#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sksaw/harness.hpp"
#include "sksaw/validation/enumeration.hpp"

namespace {

constexpr int kConfigError = 2;
constexpr int kValidationFailure = 3;

int run_command(sksaw::ExperimentConfig cfg, const std::string& lattice, const std::string& domain,
                const std::string& mode, const std::string& out) {
  cfg.lattice = sksaw::parse_lattice(lattice);
  try {
    cfg.domain = sksaw::parse_domain(domain);
  } catch (const std::invalid_argument& e) {
    throw sksaw::ConfigError(e.what());
  }
  cfg.mode = sksaw::parse_mode(mode);
  sksaw::validate(cfg);

  const sksaw::RunSummary s = sksaw::run_experiment(cfg);
  sksaw::write_outputs(s, out);

  std::printf("%s %s %s delta=%g samples=%llu workers=%d: %.1f s\n", sksaw::to_string(cfg.lattice),
              sksaw::to_string(cfg.domain), sksaw::to_string(cfg.mode), cfg.delta,
              static_cast<unsigned long long>(cfg.samples), cfg.workers, s.wall_seconds);
  std::printf("  steps: mean %.2f sd %.2f, aborted %llu\n", s.mean_steps, s.sd_steps,
              static_cast<unsigned long long>(s.totals.aborted));
  for (const auto& c : s.curves) {
    std::printf("  %-12s L1 %.4e +- %.1e  KS %.4e\n", c.name.c_str(), c.l1.value, c.l1.error(),
                c.ks.distance);
  }
  if (cfg.mode == sksaw::Mode::Validation) {
    std::printf("  oracle: %llu decisions, %llu mismatches\n",
                static_cast<unsigned long long>(s.totals.oracle_decisions),
                static_cast<unsigned long long>(s.totals.oracle_mismatches));
    if (s.totals.oracle_mismatches > 0) return kValidationFailure;
  }
  return 0;
}

int validate_command(int max_steps, std::uint64_t decisions, int max_interior, std::uint64_t seed) {
  using namespace sksaw::validation;
  bool ok = true;
  const auto report = [&](const char* name, bool pass, const std::string& detail) {
    std::printf("%-34s %s  %s\n", name, pass ? "ok  " : "FAIL", detail.c_str());
    ok = ok && pass;
  };

  for (auto lattice : {sksaw::LatticeKind::Square, sksaw::LatticeKind::Hexagonal}) {
    const auto ex = exhaustive_trap_check(lattice, max_steps);
    report((std::string("trap test, all walks, ") + sksaw::to_string(lattice)).c_str(),
           ex.mismatches == 0,
           std::to_string(ex.configurations) + " walks, " + std::to_string(ex.decisions) +
               " decisions, " + std::to_string(ex.mismatches) + " mismatches");
    const auto sm = sampled_trap_check(lattice, decisions, seed, 4000);
    report((std::string("trap test, sampled, ") + sksaw::to_string(lattice)).c_str(),
           sm.mismatches == 0,
           std::to_string(sm.decisions) + " decisions, " + std::to_string(sm.mismatches) +
               " mismatches");
  }

  const auto perc = percolation_equivalence(max_interior, 6, seed);
  report("percolation equivalence", perc.interface_mismatches == 0 && perc.reversal_mismatches == 0,
         std::to_string(perc.domains) + " domains, " + std::to_string(perc.interface_mismatches) +
             " interface and " + std::to_string(perc.reversal_mismatches) +
             " reversal mismatches " + perc.first_failure);

  bool law = true;
  for (int n = 1; n <= 8; ++n) law = law && weight_law(n, true).distinct_values.size() == 1;
  report("weight law (origin faces counted)", law, "n <= 8");

  report("never stuck", sksaw::stuck_events() == 0,
         std::to_string(sksaw::stuck_events()) + " stuck events");
  return ok ? 0 : kValidationFailure;
}

int reference_command(const std::string& domain, const std::string& curve, std::size_t grid,
                      const std::string& out) {
  const std::filesystem::path path(out);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  if (curve == "exit") {
    sksaw::DomainKind kind;
    try {
      kind = sksaw::parse_domain(domain);
    } catch (const std::invalid_argument& e) {
      throw sksaw::ConfigError(e.what());
    }
    const auto g = sksaw::theta_grid(grid);
    sksaw::write_reference_csv(sksaw::harmonic_cdf(kind, g), path);
    return 0;
  }
  sksaw::HullVariable v;
  if (curve == "x") v = sksaw::HullVariable::X;
  else if (curve == "y") v = sksaw::HullVariable::Y;
  else if (curve == "z") v = sksaw::HullVariable::Z;
  else throw sksaw::ConfigError("unknown curve '" + curve + "'");
  const auto g = v == sksaw::HullVariable::Z ? sksaw::z_grid(grid) : sksaw::xy_grid(grid);
  sksaw::write_reference_csv(sksaw::xyz_cdf(v, g), path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smart kinetic self-avoiding walk simulations"};
  app.set_version_flag("--version", std::string(sksaw::kVersion));
  app.require_subcommand(1);

  sksaw::ExperimentConfig cfg;
  std::string lattice = "square", domain = "disc", mode = "exit-rot", out = "out";
  auto* run = app.add_subcommand("run", "Sample walks and write curves plus summary.json");
  run->add_option("--lattice", lattice, "square | hex")->capture_default_str();
  run->add_option("--domain", domain, "d1 | d2 | d3 | disc")->capture_default_str();
  run->add_option("--delta", cfg.delta, "Lattice spacing")->capture_default_str();
  run->add_option("--samples", cfg.samples)->capture_default_str();
  run->add_option("--seed", cfg.seed)->capture_default_str();
  run->add_option("--mode", mode, "exit-rot | exit-fixed | xyz-rot | xyz-cond | mean-steps | validation")
      ->capture_default_str();
  run->add_option("--workers", cfg.workers)->capture_default_str();
  run->add_option("--grid", cfg.grid_size, "CDF grid points")->capture_default_str();
  run->add_option("--scale", cfg.scale, "Factor applied to difference curves")->capture_default_str();
  run->add_option("--first-sample", cfg.first_sample)->capture_default_str();
  run->add_option("--step-budget", cfg.step_budget)->capture_default_str();
  run->add_option("--out", out, "Output directory")->capture_default_str();

  int max_steps = 14, max_interior = 8;
  std::uint64_t decisions = 1'000'000, vseed = 1;
  auto* val = app.add_subcommand("validate", "Oracle and enumeration checks");
  val->add_option("--max-steps", max_steps, "Exhaustive trap check depth")->capture_default_str();
  val->add_option("--decisions", decisions, "Sampled trap decisions per lattice")->capture_default_str();
  val->add_option("--max-interior", max_interior, "Largest percolation domain")->capture_default_str();
  val->add_option("--seed", vseed)->capture_default_str();

  std::string ref_domain = "disc", curve = "exit", ref_out = "reference.csv";
  std::size_t ref_grid = 2048;
  auto* ref = app.add_subcommand("reference", "Write an analytic reference CDF");
  ref->add_option("--domain", ref_domain, "d1 | d2 | d3 | disc (exit curve)")->capture_default_str();
  ref->add_option("--curve", curve, "exit | x | y | z")->capture_default_str();
  ref->add_option("--grid", ref_grid)->capture_default_str();
  ref->add_option("--out", ref_out)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    if (*run) return run_command(cfg, lattice, domain, mode, out);
    if (*val) return validate_command(max_steps, decisions, max_interior, vseed);
    if (*ref) return reference_command(ref_domain, curve, ref_grid, ref_out);
  } catch (const sksaw::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
