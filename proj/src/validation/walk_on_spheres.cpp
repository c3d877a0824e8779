#include "sksaw/validation/walk_on_spheres.hpp"

#include <cmath>
#include <numbers>

namespace sksaw::validation {

double walk_on_spheres_exit_angle(DomainKind kind, RandomStream& rng, double epsilon) {
  Point p{0.0, 0.0};
  for (;;) {
    const double r = boundary_distance(kind, p);
    if (r < epsilon) break;
    const double a = 2.0 * std::numbers::pi * rng.uniform();
    p = {p.x + r * std::cos(a), p.y + r * std::sin(a)};
  }
  const Point q = nearest_boundary_point(kind, p);
  return exit_angle(q, DomainSpec(kind));
}

CdfAccumulator walk_on_spheres_cdf(DomainKind kind, std::span<const double> grid,
                                   std::uint64_t samples, std::uint64_t seed, double epsilon) {
  CdfAccumulator acc(std::vector<double>(grid.begin(), grid.end()));
  for (std::uint64_t i = 0; i < samples; ++i) {
    RandomStream rng(seed, i);
    acc.add(walk_on_spheres_exit_angle(kind, rng, epsilon));
  }
  return acc;
}

}  // namespace sksaw::validation
