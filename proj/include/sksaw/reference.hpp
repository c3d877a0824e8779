#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "sksaw/geometry.hpp"
#include "sksaw/random.hpp"

namespace sksaw {

enum class CdfProvenance { Analytic, BrownianOracle };

struct ReferenceCdf {
  std::vector<double> grid;
  std::vector<double> values;
  CdfProvenance provenance = CdfProvenance::Analytic;
};

/// n equally spaced points from lo to hi inclusive.
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

/// CDF of the polar angle (in [0, 2 pi)) at which Brownian motion from the
/// origin first leaves the unrotated domain.
double harmonic_cdf_at(DomainKind kind, double theta);
ReferenceCdf harmonic_cdf(DomainKind kind, std::span<const double> grid);

enum class RestrictionFamily {
  LeftHalfPlane,   // {Re z <= -x}, x in (0, 1)
  UpperHalfPlane,  // {Im z >= y}, y in (0, 1)
  FarFromOne,      // {|z - 1| >= r}, r in (1, 2)
};

struct RestrictionSet {
  RestrictionFamily family = RestrictionFamily::LeftHalfPlane;
  double parameter = 0.5;
};

/// Conformal map from (unit disc minus A) onto the unit disc fixing 0 and 1,
/// built as: Moebius sending the two corners of the region to 0 and
/// infinity (a wedge), a power map opening the wedge to the upper
/// half-plane, then a Moebius to the disc normalized at 0 and 1.
class RestrictionMap {
 public:
  explicit RestrictionMap(RestrictionSet set);

  std::complex<double> operator()(std::complex<double> z) const;

  /// |Phi'(1)|, from the chain rule on the three pieces.
  double derivative_at_one() const;

  /// Points on the two boundary arcs of the region, for sanity checks.
  std::vector<std::complex<double>> boundary_samples(int per_arc) const;

 private:
  std::complex<double> to_wedge(std::complex<double> z) const;  // rotated to arg in [0, alpha]
  std::complex<double> open_wedge(std::complex<double> w) const;

  RestrictionSet set_;
  std::complex<double> p1_, p2_;  // corners on the unit circle
  std::complex<double> inner_;    // a point of the region's inner boundary arc
  std::complex<double> start_ray_;
  double alpha_ = 0.0;            // wedge opening
  std::complex<double> zeta0_;    // half-plane image of the origin
  std::complex<double> final_rotation_;
};

/// P(K avoids A) = Phi_A'(1) for the hull K of Brownian motion from 0
/// conditioned to exit the disc at 1. Throws for parameters outside the
/// family's open range.
double phi_prime_at_one(RestrictionSet set);

enum class HullVariable { X, Y, Z };

const char* to_string(HullVariable v);

/// CDF of X, Y or Z, extended by 0 and 1 outside [0, 1] (X, Y) or [1, 2] (Z).
double xyz_cdf_at(HullVariable v, double t);
ReferenceCdf xyz_cdf(HullVariable v, std::span<const double> grid);

double hull_value(const HullStats& s, HullVariable v);

struct BrownianHull {
  HullStats stats;
  std::uint64_t steps = 0;
};

enum class HullDiscretization {
  /// Extremes over the Gaussian walk's vertices; exit at the first vertex
  /// outside the disc. Bias of order sqrt(h).
  Vertices,
  /// Between consecutive vertices the path is treated as a Brownian bridge:
  /// exits between vertices are detected with the local crossing
  /// probability, the exit point is placed on the circle, and the extremes
  /// of each bridge segment are sampled exactly along the relevant
  /// direction.
  Bridge,
};

/// Gaussian random walk with per-coordinate step variance h, run from 0 until
/// it leaves the unit disc, rotated to exit at angle 0.
BrownianHull bm_hull_sample(RandomStream& rng, double h,
                            HullDiscretization method = HullDiscretization::Vertices);

}  // namespace sksaw
