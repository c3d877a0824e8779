#include "sksaw/validation/enumeration.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <unordered_set>

#include "sksaw/validation/flood_fill.hpp"

namespace sksaw::validation {

namespace {

bool same_set(const NeighborList& a, const NeighborList& b) {
  if (a.count != b.count) return false;
  for (const Site& s : a) {
    if (!b.contains(s)) return false;
  }
  return true;
}

// Classifies every free tip neighbor both ways. Returns false on any
// disagreement; the oracle's allowable set is written to `oracle_allowed`.
bool compare_decisions(const WalkState& w, FloodFillOracle& oracle, TrapCheckReport& report,
                       NeighborList& oracle_allowed) {
  oracle_allowed = oracle.allowable(w);
  NeighborList fast;
  try {
    fast = allowable_neighbors(w);
  } catch (const std::logic_error&) {
    fast = {};
  }
  for (const Site& q : neighbors(w.tip(), w.lattice())) report.decisions += w.occupied(q) ? 0 : 1;
  ++report.configurations;
  if (same_set(fast, oracle_allowed)) return true;
  if (report.mismatches++ == 0) {
    report.first_mismatch.assign(w.path().begin(), w.path().end());
  }
  return false;
}

void exhaust(WalkState& w, int remaining, FloodFillOracle& oracle, TrapCheckReport& report) {
  NeighborList allowed;
  compare_decisions(w, oracle, report, allowed);
  if (remaining == 0) return;
  const auto snapshot = w.to_path();
  for (const Site& s : allowed) {
    w.extend(s);
    exhaust(w, remaining - 1, oracle, report);
    // Rebuild instead of popping: the walk state is append-only.
    w.reset(snapshot.sites.front());
    for (std::size_t i = 1; i < snapshot.sites.size(); ++i) w.extend(snapshot.sites[i]);
  }
}

Rational power_of_two(int k) { return Rational(std::int64_t{1} << k); }

}  // namespace

TrapCheckReport exhaustive_trap_check(LatticeKind lattice, int max_steps) {
  TrapCheckReport report;
  FloodFillOracle oracle;
  WalkState w(lattice);
  exhaust(w, max_steps, oracle, report);
  return report;
}

TrapCheckReport sampled_trap_check(LatticeKind lattice, std::uint64_t decisions,
                                   std::uint64_t seed, int walk_length) {
  TrapCheckReport report;
  FloodFillOracle oracle;
  WalkState w(lattice);
  for (std::uint64_t stream = 0; report.decisions < decisions; ++stream) {
    RandomStream rng(seed, stream);
    w.reset();
    for (int i = 0; i < walk_length && report.decisions < decisions; ++i) {
      NeighborList allowed;
      if (!compare_decisions(w, oracle, report, allowed)) break;
      w.extend(allowed[static_cast<std::size_t>(rng.uniform_index(allowed.count))]);
    }
  }
  return report;
}

std::vector<std::pair<WalkPath, Rational>> enumerate_hex_walks(int n) {
  std::vector<std::pair<WalkPath, Rational>> out;
  const auto recurse = [&](auto&& self, const WalkState& w, Rational p) -> void {
    if (static_cast<int>(w.steps()) == n) {
      out.emplace_back(w.to_path(), p);
      return;
    }
    const NeighborList allowed = allowable_neighbors(w);
    for (const Site& s : allowed) {
      WalkState child = w;
      child.extend(s);
      self(self, child, p / Rational(allowed.count));
    }
  };
  recurse(recurse, WalkState(LatticeKind::Hexagonal), Rational(1));
  return out;
}

WeightLawReport weight_law(int steps, bool count_origin_faces) {
  WeightLawReport report;
  report.steps = steps;
  const auto walks = enumerate_hex_walks(steps);
  Rational low, high;
  for (const auto& [path, p] : walks) {
    ++report.walks;
    report.total_probability += p;
    int n_faces = hexagon_count(path);
    if (count_origin_faces) {
      std::unordered_set<Hexagon> faces;
      for (std::size_t i = 0; i + 1 < path.sites.size(); ++i) {
        for (const Hexagon& h : hexagons_of_edge(path.sites[i], path.sites[i + 1])) faces.insert(h);
      }
      for (const Hexagon& h : hexagons_at(path.sites.front())) faces.insert(h);
      n_faces = static_cast<int>(faces.size());
    }
    const Rational value = p * power_of_two(n_faces);
    if (std::find(report.distinct_values.begin(), report.distinct_values.end(), value) ==
        report.distinct_values.end()) {
      report.distinct_values.push_back(value);
    }
    if (report.walks == 1 || value < low) {
      low = value;
      report.witness_low = path;
    }
    if (report.walks == 1 || value > high) {
      high = value;
      report.witness_high = path;
    }
  }
  std::sort(report.distinct_values.begin(), report.distinct_values.end());
  return report;
}

PathDistribution interface_distribution(const HexDomain& d) {
  const std::size_t m = d.interior().size();
  if (m > 20) throw std::invalid_argument("interface_distribution: too many interior hexagons");
  PathDistribution dist;
  const Rational weight(1, std::int64_t{1} << m);
  std::vector<HexColor> colors(m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (std::size_t i = 0; i < m; ++i) {
      colors[i] = (mask >> i) & 1 ? HexColor::White : HexColor::Black;
    }
    dist[percolation_interface(d, colors).sites] += weight;
  }
  return dist;
}

PathDistribution chordal_distribution(const HexDomain& d) {
  PathDistribution dist;
  std::vector<Site> path{d.u()};
  const auto recurse = [&](auto&& self, Rational p) -> void {
    if (path.back() == d.v()) {
      dist[path] += p;
      return;
    }
    const NeighborList allowed = chordal_allowable(d, path);
    for (const Site& s : allowed) {
      path.push_back(s);
      self(self, p / Rational(allowed.count));
      path.pop_back();
    }
  };
  recurse(recurse, Rational(1));
  return dist;
}

PathDistribution reverse_paths(const PathDistribution& dist) {
  PathDistribution out;
  for (const auto& [path, p] : dist) {
    std::vector<Site> r(path.rbegin(), path.rend());
    out[r] += p;
  }
  return out;
}

PercolationCheck percolation_equivalence(int max_interior, int domains_per_size,
                                         std::uint64_t seed) {
  PercolationCheck check;
  std::vector<std::vector<Hexagon>> shapes;
  shapes.push_back({{0, 0}});
  // Flower: a hexagon and its six neighbors.
  if (max_interior >= 7) {
    std::vector<Hexagon> flower{{0, 0}};
    for (const Hexagon& h : adjacent_hexagons({0, 0})) flower.push_back(h);
    shapes.push_back(flower);
  }
  std::uint64_t stream = 0;
  for (int size = 2; size <= max_interior; ++size) {
    for (int k = 0; k < domains_per_size; ++k) {
      RandomStream rng(seed, stream++);
      shapes.push_back(HexDomain::random_polyhex(size, rng));
    }
  }

  const auto describe = [](const HexDomain& d) {
    std::string s = "interior";
    for (const Hexagon& h : d.interior()) s += " (" + std::to_string(h.x) + "," + std::to_string(h.y) + ")";
    s += " u (" + std::to_string(d.u().x) + "," + std::to_string(d.u().y) + ")";
    s += " v (" + std::to_string(d.v().x) + "," + std::to_string(d.v().y) + ")";
    return s;
  };

  for (const auto& shape : shapes) {
    const auto marks = HexDomain::marked_site_candidates(shape);
    if (marks.size() < 2) continue;
    // A spread of marked pairs: first with each of a few others.
    const std::size_t stride = std::max<std::size_t>(1, marks.size() / 4);
    for (std::size_t j = 1; j < marks.size(); j += stride) {
      std::unique_ptr<HexDomain> d;
      try {
        d = std::make_unique<HexDomain>(shape, marks[0], marks[j]);
      } catch (const std::invalid_argument&) {
        continue;
      }
      ++check.domains;
      check.largest_interior = std::max(check.largest_interior, static_cast<int>(shape.size()));
      const PathDistribution chordal = chordal_distribution(*d);
      if (interface_distribution(*d) != chordal) {
        if (check.interface_mismatches++ == 0 && check.first_failure.empty()) {
          check.first_failure = "interface vs chordal: " + describe(*d);
        }
      }
      if (reverse_paths(chordal_distribution(d->reversed())) != chordal) {
        if (check.reversal_mismatches++ == 0 && check.first_failure.empty()) {
          check.first_failure = "reversal: " + describe(*d);
        }
      }
    }
  }
  return check;
}

}  // namespace sksaw::validation
