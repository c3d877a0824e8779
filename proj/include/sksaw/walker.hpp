#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "sksaw/geometry.hpp"
#include "sksaw/lattice.hpp"
#include "sksaw/random.hpp"

namespace sksaw {

using Rational = boost::rational<std::int64_t>;

/// A walk as a sequence of sites on a given lattice.
struct WalkPath {
  LatticeKind lattice = LatticeKind::Square;
  std::vector<Site> sites;
};

/// Open-addressing map from site to its position in the walk. Cleared in O(1)
/// between samples through generation stamps.
class SiteIndex {
 public:
  explicit SiteIndex(std::size_t capacity = 1024);

  /// Position of `s` in the walk, or -1.
  int find(Site s) const {
    const std::uint64_t key = pack(s);
    for (std::size_t i = slot_of(key);; i = (i + 1) & mask_) {
      const Slot& slot = slots_[i];
      if (slot.stamp != stamp_) return -1;
      if (slot.key == key) return slot.value;
    }
  }

  void insert(Site s, int value);
  void clear();
  std::size_t size() const { return size_; }

 private:
  struct Slot {
    std::uint64_t key = 0;
    std::int32_t value = 0;
    std::uint32_t stamp = 0;
  };

  std::size_t slot_of(std::uint64_t key) const {
    return static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ULL) >> shift_);
  }
  void grow();

  std::vector<Slot> slots_;
  std::size_t mask_ = 0;
  int shift_ = 64;
  std::uint32_t stamp_ = 1;
  std::size_t size_ = 0;
};

/// A growing full-plane walk: the path, the occupancy index, and the running
/// turn totals used for winding-angle trap detection.
class WalkState {
 public:
  explicit WalkState(LatticeKind lattice, Site origin = {0, 0});

  void reset(Site origin = {0, 0});

  LatticeKind lattice() const { return lattice_; }
  std::span<const Site> path() const { return path_; }
  Site tip() const { return path_.back(); }
  std::size_t steps() const { return path_.size() - 1; }

  /// Path position of `s`, or -1 if unoccupied.
  int index_of(Site s) const { return index_.find(s); }
  bool occupied(Site s) const { return index_.find(s) >= 0; }

  /// Direction of step i (1 <= i <= steps()), in pi/6 units.
  int heading(std::size_t i) const { return heading_[i]; }

  /// Sum of the turn angles at sites 1 .. i-1 (pi/6 units); zero for i < 2.
  int turn_total(std::size_t i) const { return turn_total_[i]; }

  /// Appends a site. Throws if it is not a free neighbor of the tip.
  void extend(Site next);

  WalkPath to_path() const { return {lattice_, path_}; }

 private:
  friend class Walker;
  friend Site step(WalkState& w, RandomStream& rng);
  void extend_unchecked(Site next, int direction);

  LatticeKind lattice_;
  std::vector<Site> path_;
  std::vector<int> heading_;
  std::vector<int> turn_total_;
  SiteIndex index_;
};

struct TrapVerdict {
  Site candidate;
  bool trapping = false;
};

/// Unoccupied, non-trapping neighbors of the tip (trapping judged with
/// respect to infinity). Throws std::logic_error if the list would be empty,
/// which the growth rule makes impossible.
NeighborList allowable_neighbors(const WalkState& w);

/// Whether the free neighbor `p` of the tip is cut off from infinity.
///
/// Only the five sites in front of the tip can close a loop around a
/// neighbor (square: left, front-left, front, front-right, right; hexagonal:
/// the vertices of the hexagon ahead). For each occupied one, omega(j), the
/// walk from omega(j) to the tip plus the straight passage back across the
/// shared face is a simple loop. Its total turning, read off the running
/// turn totals plus the two closing turns, is +2 pi or -2 pi; `p` is trapped
/// iff it lies on the interior side of the loop at the tip.
TrapVerdict is_trapping(const WalkState& w, Site p);

/// Appends a uniformly chosen allowable neighbor and returns it.
Site step(WalkState& w, RandomStream& rng);

/// Number of times any walker found no allowable neighbor (always zero for a
/// correct trap test).
std::uint64_t stuck_events();

struct ExitProblem {
  LatticeKind lattice = LatticeKind::Square;
  DomainSpec domain{DomainKind::UnitDisc};
  double delta = 0.01;
  std::uint64_t step_budget = 100'000'000;
};

struct ExitOutcome {
  ExitRecord exit;
  std::uint64_t steps = 0;
  bool aborted = false;
};

/// Reusable driver: keeps its buffers between samples.
class Walker {
 public:
  explicit Walker(LatticeKind lattice);

  /// Grows a full-plane walk from the origin until its embedded tip leaves
  /// the closed domain. On abort (step budget), `exit` is meaningless.
  ExitOutcome run_until_exit(const ExitProblem& problem, RandomStream& rng);

  const WalkState& state() const { return state_; }

 private:
  WalkState state_;
};

struct ExitSample {
  WalkPath path;
  ExitOutcome outcome;
};

ExitSample run_until_exit(const ExitProblem& problem, RandomStream& rng);

std::vector<Point> embed_path(std::span<const Site> sites, LatticeKind lattice, double delta);

/// Number of hexagons with at least one edge on the walk. Hexagonal only.
int hexagon_count(const WalkPath& path);

/// Probability that the full-plane walk produces `path` as its first
/// steps: the product of 1/|allowable| along the way. Throws
/// std::invalid_argument for a path the walk cannot produce.
double kinetic_probability(const WalkPath& path);

/// Exact version for short paths (the denominator must fit in 64 bits).
Rational kinetic_probability_exact(const WalkPath& path);

}  // namespace sksaw
