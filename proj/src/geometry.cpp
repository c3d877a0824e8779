#include "sksaw/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sksaw {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Outward unit normals of the triangle's edges; each edge line is {p . n = 1}.
constexpr std::array<Point, 3> kTriangleNormals = {{
    {0.5, 0.8660254037844386},
    {-1.0, 0.0},
    {0.5, -0.8660254037844386},
}};

}  // namespace

const char* to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::OffCenterDisc: return "d1";
    case DomainKind::Strip: return "d2";
    case DomainKind::Triangle: return "d3";
    case DomainKind::UnitDisc: return "disc";
  }
  return "?";
}

DomainKind parse_domain(std::string_view name) {
  if (name == "d1") return DomainKind::OffCenterDisc;
  if (name == "d2") return DomainKind::Strip;
  if (name == "d3") return DomainKind::Triangle;
  if (name == "disc") return DomainKind::UnitDisc;
  throw std::invalid_argument("unknown domain '" + std::string(name) + "'");
}

Point rotate(Point p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

DomainSpec::DomainSpec(DomainKind kind, double rotation)
    : kind_(kind), rotation_(rotation), cos_(std::cos(rotation)), sin_(std::sin(rotation)) {}

bool DomainSpec::contains_unrotated(DomainKind kind, Point p) {
  switch (kind) {
    case DomainKind::OffCenterDisc: {
      const double dx = p.x - 1.0;
      return dx * dx + p.y * p.y < 4.0;
    }
    case DomainKind::Strip:
      return p.y > -1.0 && p.y < 2.0;
    case DomainKind::Triangle:
      for (const Point& n : kTriangleNormals) {
        if (n.x * p.x + n.y * p.y >= 1.0) return false;
      }
      return true;
    case DomainKind::UnitDisc:
      return p.x * p.x + p.y * p.y < 1.0;
  }
  return false;
}

bool DomainSpec::contains_closed(Point lattice_point) const {
  // Points within rounding distance of the boundary count as on it, so that
  // lattice sites lying exactly on a circle in exact arithmetic stay inside.
  constexpr double kEps = 1e-12;
  const Point p = to_domain_frame(lattice_point);
  switch (kind_) {
    case DomainKind::OffCenterDisc: {
      const double dx = p.x - 1.0;
      return dx * dx + p.y * p.y <= 4.0 + kEps;
    }
    case DomainKind::Strip:
      return p.y >= -1.0 - kEps && p.y <= 2.0 + kEps;
    case DomainKind::Triangle:
      for (const Point& n : kTriangleNormals) {
        if (n.x * p.x + n.y * p.y > 1.0 + kEps) return false;
      }
      return true;
    case DomainKind::UnitDisc:
      return p.x * p.x + p.y * p.y <= 1.0 + kEps;
  }
  return false;
}

double boundary_distance(DomainKind kind, Point p) {
  switch (kind) {
    case DomainKind::OffCenterDisc:
      return 2.0 - std::hypot(p.x - 1.0, p.y);
    case DomainKind::Strip:
      return std::min(2.0 - p.y, p.y + 1.0);
    case DomainKind::Triangle: {
      double d = std::numeric_limits<double>::infinity();
      for (const Point& n : kTriangleNormals) d = std::min(d, 1.0 - (n.x * p.x + n.y * p.y));
      return d;
    }
    case DomainKind::UnitDisc:
      return 1.0 - std::hypot(p.x, p.y);
  }
  return 0.0;
}

Point nearest_boundary_point(DomainKind kind, Point p) {
  switch (kind) {
    case DomainKind::OffCenterDisc: {
      const double r = std::hypot(p.x - 1.0, p.y);
      if (r == 0.0) return {3.0, 0.0};
      return {1.0 + 2.0 * (p.x - 1.0) / r, 2.0 * p.y / r};
    }
    case DomainKind::Strip:
      return 2.0 - p.y < p.y + 1.0 ? Point{p.x, 2.0} : Point{p.x, -1.0};
    case DomainKind::Triangle: {
      std::size_t best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < kTriangleNormals.size(); ++k) {
        const Point& n = kTriangleNormals[k];
        const double d = 1.0 - (n.x * p.x + n.y * p.y);
        if (d < best_d) {
          best_d = d;
          best = k;
        }
      }
      const Point& n = kTriangleNormals[best];
      return {p.x + best_d * n.x, p.y + best_d * n.y};
    }
    case DomainKind::UnitDisc: {
      const double r = std::hypot(p.x, p.y);
      if (r == 0.0) return {1.0, 0.0};
      return {p.x / r, p.y / r};
    }
  }
  return p;
}

double exit_angle(Point e, const DomainSpec& d) {
  const Point q = d.to_domain_frame(e);
  double t = std::atan2(q.y, q.x);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t -= kTwoPi;
  return t;
}

double fold_angle(double theta) {
  constexpr double kQuarter = kPi / 2.0;
  double t = theta - std::floor(theta / kQuarter) * kQuarter;
  t = std::clamp(t, 0.0, kQuarter);
  if (t > kPi / 4.0) t = kQuarter - t;
  return std::clamp(t, 0.0, kPi / 4.0);
}

int boundary_subset_index(double theta) {
  // The small slack keeps angles that are subset edges in exact arithmetic
  // (pi/6, pi/8, ...) from dropping into the lower subset through rounding.
  const double x = fold_angle(theta) / (kPi / 24.0) + 1e-9;
  return std::min(5, static_cast<int>(std::floor(x)));
}

HullStats hull_stats(std::span<const Point> path, double exit_theta) {
  const double c = std::cos(exit_theta);
  const double s = std::sin(exit_theta);
  HullStats h{0.0, 0.0, 0.0};
  bool first = true;
  for (const Point& p : path) {
    // Rotation by -exit_theta.
    const double wx = c * p.x + s * p.y;
    const double wy = -s * p.x + c * p.y;
    const double z = std::hypot(wx - 1.0, wy);
    if (first) {
      h = {-wx, wy, z};
      first = false;
    } else {
      h.x = std::max(h.x, -wx);
      h.y = std::max(h.y, wy);
      h.z = std::max(h.z, z);
    }
  }
  return h;
}

}  // namespace sksaw
