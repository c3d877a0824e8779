#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sksaw/lattice.hpp"
#include "sksaw/walker.hpp"

namespace sksaw::validation {

/// Reference trap test by explicit search. A free site is connected to
/// infinity iff a search over free sites reaches the frame one site outside
/// the walk's bounding box. Keeps its scratch grid between calls.
class FloodFillOracle {
 public:
  bool trapped(const WalkState& w, Site p);

  /// Free, non-trapped tip neighbors in the lattice's neighbor order.
  NeighborList allowable(const WalkState& w);

 private:
  void prepare(const WalkState& w);

  int x0_ = 0, y0_ = 0, width_ = 0, height_ = 0;
  std::vector<std::uint32_t> seen_;
  std::vector<std::uint8_t> blocked_;
  std::uint32_t stamp_ = 0;
  std::vector<Site> stack_;
};

}  // namespace sksaw::validation
