#pragma once

#include <cstdint>
#include <span>

#include "sksaw/geometry.hpp"
#include "sksaw/random.hpp"
#include "sksaw/stats.hpp"

namespace sksaw::validation {

/// Exit angle of Brownian motion from the origin, sampled by walk on
/// spheres: jump to a uniform point on the largest circle inside the domain
/// until within `epsilon` of the boundary, then project onto it.
double walk_on_spheres_exit_angle(DomainKind kind, RandomStream& rng, double epsilon = 1e-6);

/// Histogram of `samples` exit angles; sample i uses stream (seed, i).
CdfAccumulator walk_on_spheres_cdf(DomainKind kind, std::span<const double> grid,
                                   std::uint64_t samples, std::uint64_t seed,
                                   double epsilon = 1e-6);

}  // namespace sksaw::validation
