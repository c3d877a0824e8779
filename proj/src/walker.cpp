#include "sksaw/walker.hpp"

#include <atomic>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace sksaw {

namespace {

std::atomic<std::uint64_t> g_stuck_events{0};

// Sites in front of the tip, relative to it, for each incoming heading
// (pi/6 units). `chord` is the direction from the tip to the ring site
// relative to the heading, in pi/12 units.
struct FrontRing {
  std::array<Site, 5> offset{};
  std::array<int, 5> chord{};
  std::array<int, 3> neighbor_slots{};
  int neighbor_count = 0;
};

Site add(Site a, Site b) { return {a.x + b.x, a.y + b.y}; }
Site sub(Site a, Site b) { return {a.x - b.x, a.y - b.y}; }

FrontRing square_ring(int h) {
  const auto off = [](int a) { return step({0, 0}, Direction{wrap_angle(a)}, LatticeKind::Square); };
  const Site f = off(h);
  const Site l = off(h + 3);
  const Site r = off(h - 3);
  FrontRing ring;
  ring.offset = {l, add(f, l), f, add(f, r), r};
  ring.chord = {6, 3, 0, -3, -6};
  ring.neighbor_slots = {0, 2, 4};
  ring.neighbor_count = 3;
  return ring;
}

FrontRing hex_ring(int h) {
  // The tip's parity is fixed by the heading that reached it.
  const bool tip_even = h == 1 || h == 5 || h == 9;
  const Site tip = tip_even ? Site{0, 0} : Site{1, 0};
  const auto go = [](Site s, int a) { return step(s, Direction{wrap_angle(a)}, LatticeKind::Hexagonal); };
  const Site a = go(tip, h + 2);
  const Site c = go(a, h);
  const Site d = go(c, h - 2);
  const Site e = go(d, h - 4);
  const Site b = go(tip, h - 2);
  FrontRing ring;
  ring.offset = {sub(a, tip), sub(c, tip), sub(d, tip), sub(e, tip), sub(b, tip)};
  ring.chord = {4, 2, 0, -2, -4};
  ring.neighbor_slots = {0, 4, 0};
  ring.neighbor_count = 2;
  return ring;
}

struct RingTables {
  std::array<FrontRing, kFullTurn> square{};
  std::array<FrontRing, kFullTurn> hex{};

  RingTables() {
    for (int h = 0; h < kFullTurn; h += 3) square[static_cast<std::size_t>(h)] = square_ring(h);
    for (int h = 1; h < kFullTurn; h += 2) hex[static_cast<std::size_t>(h)] = hex_ring(h);
  }
};

const RingTables& ring_tables() {
  static const RingTables tables;
  return tables;
}

constexpr int mod24(int a) { return ((a % 24) + 24) % 24; }

// Signed turn in (-12, 12), pi/12 units.
int turn24(int from, int to) {
  const int d = mod24(to - from);
  if (d == 12) throw std::logic_error("trap test: closing chord reverses along the walk");
  return d > 12 ? d - 24 : d;
}

int turn12(int in, int out) {
  const int d = wrap_angle(out - in);
  if (d == kHalfTurn) throw std::logic_error("walk reverses onto its previous site");
  return d > kHalfTurn ? d - kFullTurn : d;
}

// Free, non-trapped neighbors of the tip for a walk with at least one step.
// Writes every free neighbor and its verdict into `verdicts`.
int classify(const WalkState& w, std::array<TrapVerdict, 4>& verdicts) {
  const std::size_t n = w.steps();
  const Site tip = w.tip();
  if (n == 0) {
    const NeighborList nb = neighbors(tip, w.lattice());
    for (int k = 0; k < nb.count; ++k) verdicts[static_cast<std::size_t>(k)] = {nb.sites[static_cast<std::size_t>(k)], false};
    return nb.count;
  }

  const int h = w.heading(n);
  const auto& tables = ring_tables();
  const FrontRing& ring = (w.lattice() == LatticeKind::Square ? tables.square : tables.hex)[static_cast<std::size_t>(h)];

  std::array<int, 5> idx{};
  for (std::size_t k = 0; k < 5; ++k) idx[k] = w.index_of(add(tip, ring.offset[k]));

  const int tn = w.turn_total(n);
  int count = 0;
  for (int q = 0; q < ring.neighbor_count; ++q) {
    const std::size_t slot = static_cast<std::size_t>(ring.neighbor_slots[static_cast<std::size_t>(q)]);
    if (idx[slot] >= 0) continue;
    bool trapped = false;
    for (std::size_t o = 0; o < 5 && !trapped; ++o) {
      const int j = idx[o];
      if (j < 0) continue;
      if (static_cast<std::size_t>(j) + 2 > n) {
        throw std::logic_error("trap test: front site is the previous site");
      }
      const int chord = ring.chord[o];
      const int back_turn = turn24(2 * h + chord, 2 * w.heading(static_cast<std::size_t>(j) + 1));
      const int total = 2 * (tn - w.turn_total(static_cast<std::size_t>(j) + 1)) + chord + back_turn;
      const int phi = ring.chord[slot];
      if (total == 24) {
        trapped = mod24(phi - chord) < mod24(12 - chord);
      } else if (total == -24) {
        trapped = mod24(phi - 12) < mod24(chord - 12);
      } else {
        throw std::logic_error("trap test: closed loop has turning " + std::to_string(total) +
                               " (pi/12 units)");
      }
    }
    verdicts[static_cast<std::size_t>(count++)] = {add(tip, ring.offset[slot]), trapped};
  }
  return count;
}

}  // namespace

SiteIndex::SiteIndex(std::size_t capacity) {
  std::size_t cap = 16;
  int bits = 4;
  while (cap < capacity) {
    cap <<= 1;
    ++bits;
  }
  slots_.assign(cap, Slot{});
  mask_ = cap - 1;
  shift_ = 64 - bits;
}

void SiteIndex::insert(Site s, int value) {
  if (2 * (size_ + 1) > slots_.size()) grow();
  const std::uint64_t key = pack(s);
  for (std::size_t i = slot_of(key);; i = (i + 1) & mask_) {
    Slot& slot = slots_[i];
    if (slot.stamp != stamp_) {
      slot = {key, value, stamp_};
      ++size_;
      return;
    }
    if (slot.key == key) {
      slot.value = value;
      return;
    }
  }
}

void SiteIndex::clear() {
  size_ = 0;
  if (++stamp_ == 0) {
    for (Slot& slot : slots_) slot.stamp = 0;
    stamp_ = 1;
  }
}

void SiteIndex::grow() {
  std::vector<Slot> old;
  old.swap(slots_);
  const std::uint32_t live = stamp_;
  slots_.assign(old.size() * 2, Slot{});
  mask_ = slots_.size() - 1;
  --shift_;
  stamp_ = 1;
  size_ = 0;
  for (const Slot& slot : old) {
    if (slot.stamp != live) continue;
    for (std::size_t i = slot_of(slot.key);; i = (i + 1) & mask_) {
      if (slots_[i].stamp != stamp_) {
        slots_[i] = {slot.key, slot.value, stamp_};
        ++size_;
        break;
      }
    }
  }
}

WalkState::WalkState(LatticeKind lattice, Site origin) : lattice_(lattice) { reset(origin); }

void WalkState::reset(Site origin) {
  path_.clear();
  heading_.clear();
  turn_total_.clear();
  index_.clear();
  path_.push_back(origin);
  heading_.push_back(0);
  turn_total_.push_back(0);
  index_.insert(origin, 0);
}

void WalkState::extend(Site next) {
  if (!are_neighbors(tip(), next, lattice_)) {
    throw std::invalid_argument("extend: site is not a neighbor of the tip");
  }
  if (occupied(next)) throw std::invalid_argument("extend: site already on the walk");
  extend_unchecked(next, direction_between(tip(), next, lattice_).angle);
}

void WalkState::extend_unchecked(Site next, int direction) {
  const std::size_t n = steps();
  const int total = n >= 1 ? turn_total_[n] + turn12(heading_[n], direction) : 0;
  path_.push_back(next);
  heading_.push_back(direction);
  turn_total_.push_back(total);
  index_.insert(next, static_cast<int>(n + 1));
}

NeighborList allowable_neighbors(const WalkState& w) {
  std::array<TrapVerdict, 4> verdicts{};
  const int free_count = classify(w, verdicts);
  NeighborList out;
  for (int k = 0; k < free_count; ++k) {
    const TrapVerdict& v = verdicts[static_cast<std::size_t>(k)];
    if (!v.trapping) out.sites[static_cast<std::size_t>(out.count++)] = v.candidate;
  }
  if (out.count == 0) {
    g_stuck_events.fetch_add(1, std::memory_order_relaxed);
    throw std::logic_error("walker has no allowable neighbor after " + std::to_string(w.steps()) +
                           " steps");
  }
  return out;
}

TrapVerdict is_trapping(const WalkState& w, Site p) {
  if (!are_neighbors(w.tip(), p, w.lattice()) || w.occupied(p)) {
    throw std::invalid_argument("is_trapping: not a free neighbor of the tip");
  }
  std::array<TrapVerdict, 4> verdicts{};
  const int free_count = classify(w, verdicts);
  for (int k = 0; k < free_count; ++k) {
    if (verdicts[static_cast<std::size_t>(k)].candidate == p) return verdicts[static_cast<std::size_t>(k)];
  }
  throw std::logic_error("is_trapping: neighbor missing from the front ring");
}

Site step(WalkState& w, RandomStream& rng) {
  const NeighborList allowed = allowable_neighbors(w);
  const Site next = allowed[static_cast<std::size_t>(rng.uniform_index(allowed.count))];
  w.extend_unchecked(next, direction_between(w.tip(), next, w.lattice()).angle);
  return next;
}

std::uint64_t stuck_events() { return g_stuck_events.load(std::memory_order_relaxed); }

Walker::Walker(LatticeKind lattice) : state_(lattice) {}

ExitOutcome Walker::run_until_exit(const ExitProblem& problem, RandomStream& rng) {
  if (problem.lattice != state_.lattice()) state_ = WalkState(problem.lattice);
  state_.reset();
  ExitOutcome out;
  for (;;) {
    if (out.steps >= problem.step_budget) {
      out.aborted = true;
      return out;
    }
    const Site s = step(state_, rng);
    ++out.steps;
    const Point p = embed(s, problem.lattice, problem.delta);
    if (!problem.domain.contains_closed(p)) {
      out.exit = {p, exit_angle(p, problem.domain)};
      return out;
    }
  }
}

ExitSample run_until_exit(const ExitProblem& problem, RandomStream& rng) {
  Walker walker(problem.lattice);
  ExitSample sample;
  sample.outcome = walker.run_until_exit(problem, rng);
  sample.path = walker.state().to_path();
  return sample;
}

std::vector<Point> embed_path(std::span<const Site> sites, LatticeKind lattice, double delta) {
  std::vector<Point> out;
  out.reserve(sites.size());
  for (const Site& s : sites) out.push_back(embed(s, lattice, delta));
  return out;
}

int hexagon_count(const WalkPath& path) {
  if (path.lattice != LatticeKind::Hexagonal) {
    throw std::invalid_argument("hexagon_count: walk is not on the hexagonal lattice");
  }
  std::unordered_set<Hexagon> seen;
  for (std::size_t i = 0; i + 1 < path.sites.size(); ++i) {
    for (const Hexagon& h : hexagons_of_edge(path.sites[i], path.sites[i + 1])) seen.insert(h);
  }
  return static_cast<int>(seen.size());
}

namespace {

template <typename Prob>
Prob replay_probability(const WalkPath& path) {
  if (path.sites.empty()) throw std::invalid_argument("kinetic_probability: empty walk");
  WalkState w(path.lattice, path.sites.front());
  Prob p(1);
  for (std::size_t i = 1; i < path.sites.size(); ++i) {
    const NeighborList allowed = allowable_neighbors(w);
    if (!allowed.contains(path.sites[i])) {
      throw std::invalid_argument("kinetic_probability: step " + std::to_string(i) +
                                  " is not allowable");
    }
    p /= Prob(allowed.count);
    w.extend(path.sites[i]);
  }
  return p;
}

}  // namespace

double kinetic_probability(const WalkPath& path) { return replay_probability<double>(path); }

Rational kinetic_probability_exact(const WalkPath& path) {
  return replay_probability<Rational>(path);
}

}  // namespace sksaw
