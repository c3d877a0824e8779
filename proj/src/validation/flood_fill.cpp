#include "sksaw/validation/flood_fill.hpp"

#include <algorithm>
#include <stdexcept>

namespace sksaw::validation {

void FloodFillOracle::prepare(const WalkState& w) {
  const auto path = w.path();
  int xmin = path[0].x, xmax = xmin, ymin = path[0].y, ymax = ymin;
  for (const Site& s : path) {
    xmin = std::min(xmin, s.x);
    xmax = std::max(xmax, s.x);
    ymin = std::min(ymin, s.y);
    ymax = std::max(ymax, s.y);
  }
  x0_ = xmin - 1;
  y0_ = ymin - 1;
  width_ = xmax - xmin + 3;
  height_ = ymax - ymin + 3;
  const std::size_t cells = static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
  blocked_.assign(cells, 0);
  if (seen_.size() < cells) {
    seen_.assign(cells, 0);
    stamp_ = 0;
  }
  for (const Site& s : path) {
    blocked_[static_cast<std::size_t>(s.y - y0_) * static_cast<std::size_t>(width_) +
             static_cast<std::size_t>(s.x - x0_)] = 1;
  }
}

bool FloodFillOracle::trapped(const WalkState& w, Site p) {
  if (w.occupied(p)) throw std::invalid_argument("flood fill: start site is occupied");
  prepare(w);
  if (++stamp_ == 0) {
    std::fill(seen_.begin(), seen_.end(), 0);
    stamp_ = 1;
  }
  const auto cell = [&](Site s) {
    return static_cast<std::size_t>(s.y - y0_) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(s.x - x0_);
  };
  const auto on_frame = [&](Site s) {
    return s.x <= x0_ || s.y <= y0_ || s.x >= x0_ + width_ - 1 || s.y >= y0_ + height_ - 1;
  };
  if (on_frame(p)) return false;
  stack_.clear();
  stack_.push_back(p);
  seen_[cell(p)] = stamp_;
  while (!stack_.empty()) {
    const Site s = stack_.back();
    stack_.pop_back();
    for (const Site& q : neighbors(s, w.lattice())) {
      if (on_frame(q)) return false;
      const std::size_t c = cell(q);
      if (blocked_[c] || seen_[c] == stamp_) continue;
      seen_[c] = stamp_;
      stack_.push_back(q);
    }
  }
  return true;
}

NeighborList FloodFillOracle::allowable(const WalkState& w) {
  NeighborList out;
  for (const Site& q : neighbors(w.tip(), w.lattice())) {
    if (w.occupied(q) || trapped(w, q)) continue;
    out.sites[static_cast<std::size_t>(out.count++)] = q;
  }
  return out;
}

}  // namespace sksaw::validation
