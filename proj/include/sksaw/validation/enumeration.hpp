#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sksaw/hex_domain.hpp"
#include "sksaw/walker.hpp"

namespace sksaw::validation {

struct TrapCheckReport {
  std::uint64_t configurations = 0;  // walk states visited
  std::uint64_t decisions = 0;       // free neighbors classified
  std::uint64_t mismatches = 0;
  std::vector<Site> first_mismatch;  // walk at the first disagreement
};

/// Compares the winding-angle trap test with flood fill on every walk the
/// smart kinetic walk can produce in up to `max_steps` steps.
TrapCheckReport exhaustive_trap_check(LatticeKind lattice, int max_steps);

/// Same comparison along random long walks until `decisions` neighbor
/// classifications have been checked.
TrapCheckReport sampled_trap_check(LatticeKind lattice, std::uint64_t decisions,
                                   std::uint64_t seed, int walk_length);

/// Every n-step full-plane hexagonal walk with its exact probability.
std::vector<std::pair<WalkPath, Rational>> enumerate_hex_walks(int n);

struct WeightLawReport {
  int steps = 0;
  std::uint64_t walks = 0;
  Rational total_probability{0};
  std::vector<Rational> distinct_values;  // of probability * 2^N
  WalkPath witness_low, witness_high;     // walks with the extreme products
};

/// Checks whether probability * 2^N(walk) is one value over all n-step
/// walks. With `count_origin_faces`, N also counts the three hexagons at the
/// origin.
WeightLawReport weight_law(int steps, bool count_origin_faces = false);

using PathDistribution = std::map<std::vector<Site>, Rational>;

/// Exact law of the exploration path, summing over all interior colorings.
PathDistribution interface_distribution(const HexDomain& d);

/// Exact law of the chordal smart kinetic walk.
PathDistribution chordal_distribution(const HexDomain& d);

/// Law of the reversed paths.
PathDistribution reverse_paths(const PathDistribution& dist);

struct PercolationCheck {
  int domains = 0;
  int interface_mismatches = 0;
  int reversal_mismatches = 0;
  int largest_interior = 0;
  std::string first_failure;
};

/// Runs both comparisons on a deterministic family of small domains: a
/// hexagon flower plus random polyhexes of up to `max_interior` hexagons,
/// each with several choices of marked sites.
PercolationCheck percolation_equivalence(int max_interior, int domains_per_size,
                                         std::uint64_t seed);

}  // namespace sksaw::validation
