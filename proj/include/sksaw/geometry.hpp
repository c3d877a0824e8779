#pragma once

#include <span>
#include <string_view>

#include "sksaw/lattice.hpp"

namespace sksaw {

/// The four continuum domains. Unrotated shapes:
///   OffCenterDisc  |z - 1| < 2
///   Strip          -1 < Im z < 2
///   Triangle       convex hull of (2, 0), (-1, sqrt 3), (-1, -sqrt 3)
///   UnitDisc       |z| < 1
/// Each is at distance exactly 1 from the origin.
enum class DomainKind { OffCenterDisc, Strip, Triangle, UnitDisc };

const char* to_string(DomainKind kind);
DomainKind parse_domain(std::string_view name);  // d1 | d2 | d3 | disc

Point rotate(Point p, double angle);

/// A domain together with the rotation applied to it (counterclockwise,
/// radians). Points are given in the lattice frame.
class DomainSpec {
 public:
  explicit DomainSpec(DomainKind kind, double rotation = 0.0);

  DomainKind kind() const { return kind_; }
  double rotation() const { return rotation_; }

  /// Strictly inside the rotated domain.
  bool contains(Point p) const { return contains_unrotated(kind_, to_domain_frame(p)); }

  /// Inside or on the boundary of the rotated domain, with 1e-12 slack for
  /// rounding.
  bool contains_closed(Point p) const;

  /// Maps a lattice-frame point into the unrotated domain frame.
  Point to_domain_frame(Point p) const {
    return {cos_ * p.x + sin_ * p.y, -sin_ * p.x + cos_ * p.y};
  }

  static bool contains_unrotated(DomainKind kind, Point p);

 private:
  DomainKind kind_;
  double rotation_;
  double cos_;
  double sin_;
};

/// Distance from `p` (inside the unrotated domain) to its boundary.
double boundary_distance(DomainKind kind, Point p);

/// Closest boundary point of the unrotated domain.
Point nearest_boundary_point(DomainKind kind, Point p);

/// Where and at which polar angle a walk left its domain. `exit_point` is in
/// the lattice frame; `theta` in [0, 2 pi) is measured in the unrotated
/// domain frame.
struct ExitRecord {
  Point exit_point;
  double theta = 0.0;
};

/// Polar angle of `e` in the unrotated frame of `d`, reduced to [0, 2 pi).
double exit_angle(Point e, const DomainSpec& d);

/// Reduction of an exit angle to [0, pi/4] under the square lattice's
/// rotations and reflections.
double fold_angle(double theta);

/// Which of the six equal subintervals of [0, pi/4] the folded angle falls
/// in; pi/4 itself belongs to subset 5.
int boundary_subset_index(double theta);

/// Extremes of a curve from 0 to the unit circle after rotating it so that
/// its exit point sits at angle 0: X = max(-Re), Y = max(Im), Z = max|w - 1|.
struct HullStats {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

HullStats hull_stats(std::span<const Point> path, double exit_theta);

}  // namespace sksaw
