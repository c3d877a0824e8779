#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "sksaw/reference.hpp"
#include "sksaw/validation/flood_fill.hpp"
#include "sksaw/validation/walk_on_spheres.hpp"

using namespace sksaw;

TEST_CASE("flood fill finds an enclosed site") {
  WalkState w(LatticeKind::Square);
  for (Site s : {Site{1, 0}, Site{2, 0}, Site{2, 1}, Site{2, 2}, Site{1, 2}, Site{0, 2}, Site{0, 1}}) w.extend(s);
  validation::FloodFillOracle oracle;
  CHECK(oracle.trapped(w, {1, 1}));
  CHECK_FALSE(oracle.trapped(w, {-1, 1}));
  const NeighborList a = oracle.allowable(w);
  REQUIRE(a.size() == 1);
  CHECK(a[0] == Site{-1, 1});
}

TEST_CASE("flood fill on an open walk") {
  WalkState w(LatticeKind::Hexagonal);
  w.extend({1, 0});
  validation::FloodFillOracle oracle;
  CHECK(oracle.allowable(w).size() == 2);
}

TEST_CASE("walk on spheres reproduces harmonic measure") {
  const auto grid = uniform_grid(0.0, 2.0 * std::numbers::pi, 257);
  for (DomainKind k : {DomainKind::OffCenterDisc, DomainKind::Strip, DomainKind::Triangle, DomainKind::UnitDisc}) {
    const std::uint64_t n = 20000;
    const CdfAccumulator acc = validation::walk_on_spheres_cdf(k, grid, n, 77);
    const DiffCurve d = diff_curve(acc.cdf(), harmonic_cdf(k, grid), 1.0);
    CHECK(ks_p_value(ks_distance(d).distance, n) > 1e-3);
  }
}

TEST_CASE("walk on spheres exit points lie on the boundary") {
  RandomStream rng(3, 3);
  for (int i = 0; i < 100; ++i) {
    const double t = validation::walk_on_spheres_exit_angle(DomainKind::UnitDisc, rng);
    CHECK(t >= 0.0);
    CHECK(t < 2.0 * std::numbers::pi);
  }
}
