#include "sksaw/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>

namespace sksaw {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSqrt3 = 1.7320508075688772;

double mod_two_pi(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0.0 ? a + kTwoPi : a;
}

double off_center_disc_cdf(double theta) {
  const double c = std::cos(theta);
  const double rho = c + std::sqrt(c * c + 3.0);
  const cplx z = std::polar(rho, theta);
  const double phi = mod_two_pi(std::arg((z - 1.0) / 2.0));
  // Poisson integral over [0, phi] seen from -1/2 in the unit disc.
  return std::atan2(std::sin(phi / 2.0) / 3.0, std::cos(phi / 2.0)) / kPi;
}

double strip_cdf(double theta) {
  // w = exp(pi (z + i) / 3) sends the strip to the upper half-plane and the
  // origin to a + ib; the top line goes to the negative axis.
  const double a = 0.5;
  const double b = kSqrt3 / 2.0;
  if (theta < kPi) {
    const double x0 = 2.0 / std::tan(theta);
    const double s = std::exp(kPi * x0 / 3.0);
    return (std::atan((-s - a) / b) + kPi / 2.0) / kPi;
  }
  if (theta == kPi) return 1.0 / 3.0;
  const double x = -1.0 / std::tan(theta);
  const double t = std::exp(kPi * x / 3.0);
  return 1.0 / 3.0 + (std::atan((t - a) / b) - std::atan(-a / b)) / kPi;
}

double triangle_cdf(double theta) {
  // The disc-to-triangle map integrates (1 - s^3)^(-2/3); along the boundary
  // arc from 1 the fraction of a side covered at disc angle phi is
  // I(3 phi / 2) / I(pi) with I(x) = int_0^x sin(t)^(-2/3) dt, an incomplete
  // beta function in sin^2.
  constexpr double kSide = 2.0 * kPi / 3.0;
  const int k = std::min(2, static_cast<int>(std::floor(theta / kSide)));
  const double t = theta - k * kSide;
  const double rho = 1.0 / std::cos(t - kPi / 3.0);
  const double px = rho * std::cos(t) - 2.0;
  const double py = rho * std::sin(t);
  const double u = std::clamp(std::hypot(px, py) / (2.0 * kSqrt3), 0.0, 1.0);
  double x;
  if (u <= 0.5) {
    x = std::asin(std::sqrt(boost::math::ibeta_inv(1.0 / 6.0, 0.5, 2.0 * u)));
  } else {
    x = kPi - std::asin(std::sqrt(boost::math::ibeta_inv(1.0 / 6.0, 0.5, 2.0 * (1.0 - u))));
  }
  const double phi = 2.0 * x / 3.0;
  return (phi + k * kSide) / kTwoPi;
}

}  // namespace

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  if (n < 2 || !(hi > lo)) throw std::invalid_argument("uniform_grid: need n >= 2 and hi > lo");
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  g.back() = hi;
  return g;
}

double harmonic_cdf_at(DomainKind kind, double theta) {
  if (theta <= 0.0) return 0.0;
  if (theta >= kTwoPi) return 1.0;
  double v = 0.0;
  switch (kind) {
    case DomainKind::UnitDisc: v = theta / kTwoPi; break;
    case DomainKind::OffCenterDisc: v = off_center_disc_cdf(theta); break;
    case DomainKind::Strip: v = strip_cdf(theta); break;
    case DomainKind::Triangle: v = triangle_cdf(theta); break;
  }
  return std::clamp(v, 0.0, 1.0);
}

ReferenceCdf harmonic_cdf(DomainKind kind, std::span<const double> grid) {
  ReferenceCdf out;
  out.grid.assign(grid.begin(), grid.end());
  out.values.reserve(grid.size());
  for (double t : grid) out.values.push_back(harmonic_cdf_at(kind, t));
  return out;
}

RestrictionMap::RestrictionMap(RestrictionSet set) : set_(set) {
  const double p = set.parameter;
  switch (set.family) {
    case RestrictionFamily::LeftHalfPlane: {
      if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("left half-plane parameter must be in (0, 1)");
      const double s = std::sqrt(1.0 - p * p);
      p1_ = {-p, s};
      p2_ = {-p, -s};
      inner_ = {-p, 0.0};
      break;
    }
    case RestrictionFamily::UpperHalfPlane: {
      if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("upper half-plane parameter must be in (0, 1)");
      const double s = std::sqrt(1.0 - p * p);
      p1_ = {s, p};
      p2_ = {-s, p};
      inner_ = {0.0, p};
      break;
    }
    case RestrictionFamily::FarFromOne: {
      if (!(p > 1.0 && p < 2.0)) throw std::invalid_argument("distance parameter must be in (1, 2)");
      const double c = 1.0 - p * p / 2.0;
      const double s = std::sqrt(1.0 - c * c);
      p1_ = {c, s};
      p2_ = {c, -s};
      inner_ = {1.0 - p, 0.0};
      break;
    }
  }

  // The region's image under z -> (z - p1)/(z - p2) is a wedge bounded by
  // the images of its two arcs; pick the side containing the origin.
  const auto t = [&](cplx z) { return (z - p1_) / (z - p2_); };
  const double a_outer = std::arg(t(1.0));
  const double a_inner = std::arg(t(inner_));
  const double a_origin = std::arg(t(0.0));
  const double width = mod_two_pi(a_outer - a_inner);
  double start;
  if (mod_two_pi(a_origin - a_inner) < width) {
    start = a_inner;
    alpha_ = width;
  } else {
    start = a_outer;
    alpha_ = kTwoPi - width;
  }
  start_ray_ = std::polar(1.0, -start);

  zeta0_ = open_wedge(to_wedge(0.0));
  const cplx zeta1 = open_wedge(to_wedge(1.0));
  const cplx m1 = (zeta1 - zeta0_) / (zeta1 - std::conj(zeta0_));
  final_rotation_ = std::polar(1.0, -std::arg(m1));
}

cplx RestrictionMap::to_wedge(cplx z) const { return (z - p1_) / (z - p2_) * start_ray_; }

cplx RestrictionMap::open_wedge(cplx w) const {
  double a = mod_two_pi(std::arg(w));
  // Points on the ray at angle 0 may land just below 2 pi through rounding.
  if (a > alpha_ + 0.5 * (kTwoPi - alpha_)) a -= kTwoPi;
  const double k = kPi / alpha_;
  return std::polar(std::pow(std::abs(w), k), a * k);
}

cplx RestrictionMap::operator()(cplx z) const {
  const cplx zeta = open_wedge(to_wedge(z));
  return final_rotation_ * (zeta - zeta0_) / (zeta - std::conj(zeta0_));
}

double RestrictionMap::derivative_at_one() const {
  const cplx one = 1.0;
  const double d_moebius = std::abs((p1_ - p2_) / ((one - p2_) * (one - p2_)));
  const cplx w1 = to_wedge(one);
  const double k = kPi / alpha_;
  const double d_power = k * std::pow(std::abs(w1), k - 1.0);
  const cplx zeta1 = open_wedge(w1);
  const cplx den = zeta1 - std::conj(zeta0_);
  const double d_disc = std::abs((zeta0_ - std::conj(zeta0_)) / (den * den));
  return d_moebius * d_power * d_disc;
}

std::vector<cplx> RestrictionMap::boundary_samples(int per_arc) const {
  std::vector<cplx> out;
  const double p = set_.parameter;
  const auto in_region_closure = [&](cplx z) {
    switch (set_.family) {
      case RestrictionFamily::LeftHalfPlane: return z.real() > -p;
      case RestrictionFamily::UpperHalfPlane: return z.imag() < p;
      case RestrictionFamily::FarFromOne: return std::abs(z - 1.0) < p;
    }
    return false;
  };
  const auto far_from_corners = [&](cplx z) {
    return std::abs(z - p1_) > 1e-3 && std::abs(z - p2_) > 1e-3;
  };
  for (int i = 0; i < per_arc; ++i) {
    const double s = (i + 0.5) / per_arc;
    const cplx outer = std::polar(1.0, kTwoPi * s);
    if (in_region_closure(outer) && far_from_corners(outer)) out.push_back(outer);
    cplx inner;
    switch (set_.family) {
      case RestrictionFamily::LeftHalfPlane: inner = {-p, 2.0 * s - 1.0}; break;
      case RestrictionFamily::UpperHalfPlane: inner = {2.0 * s - 1.0, p}; break;
      case RestrictionFamily::FarFromOne: inner = 1.0 + std::polar(p, kTwoPi * s); break;
    }
    if (std::abs(inner) < 1.0 && far_from_corners(inner)) out.push_back(inner);
  }
  return out;
}

double phi_prime_at_one(RestrictionSet set) { return RestrictionMap(set).derivative_at_one(); }

const char* to_string(HullVariable v) {
  switch (v) {
    case HullVariable::X: return "x";
    case HullVariable::Y: return "y";
    case HullVariable::Z: return "z";
  }
  return "?";
}

double xyz_cdf_at(HullVariable v, double t) {
  switch (v) {
    case HullVariable::X:
      if (t <= 0.0) return 0.0;
      if (t >= 1.0) return 1.0;
      return phi_prime_at_one({RestrictionFamily::LeftHalfPlane, t});
    case HullVariable::Y:
      if (t <= 0.0) return 0.0;
      if (t >= 1.0) return 1.0;
      return phi_prime_at_one({RestrictionFamily::UpperHalfPlane, t});
    case HullVariable::Z:
      if (t <= 1.0) return 0.0;
      if (t >= 2.0) return 1.0;
      return phi_prime_at_one({RestrictionFamily::FarFromOne, t});
  }
  return 0.0;
}

ReferenceCdf xyz_cdf(HullVariable v, std::span<const double> grid) {
  ReferenceCdf out;
  out.grid.assign(grid.begin(), grid.end());
  out.values.reserve(grid.size());
  for (double t : grid) out.values.push_back(xyz_cdf_at(v, t));
  return out;
}

double hull_value(const HullStats& s, HullVariable v) {
  switch (v) {
    case HullVariable::X: return s.x;
    case HullVariable::Y: return s.y;
    case HullVariable::Z: return s.z;
  }
  return 0.0;
}

namespace {

// Largest value of a one-dimensional Brownian bridge from a to b whose
// endpoint variance (over the whole segment) is h.
double bridge_max(double a, double b, double h, RandomStream& rng) {
  const double u = 1.0 - rng.uniform();  // (0, 1]
  return 0.5 * (a + b + std::sqrt((b - a) * (b - a) - 2.0 * h * std::log(u)));
}

BrownianHull bridge_hull_sample(RandomStream& rng, double h) {
  thread_local std::vector<Point> path;
  path.clear();
  path.push_back({0.0, 0.0});
  std::normal_distribution<double> gauss(0.0, std::sqrt(h));
  BrownianHull out;
  Point a{0.0, 0.0};
  Point exit{};
  for (;;) {
    const Point b{a.x + gauss(rng), a.y + gauss(rng)};
    ++out.steps;
    const double da = 1.0 - std::hypot(a.x, a.y);
    const double rb = std::hypot(b.x, b.y);
    const double db = 1.0 - rb;
    double t = -1.0;
    if (db <= 0.0) {
      t = da / (da - db);
    } else if (rng.uniform() < std::exp(-2.0 * da * db / h)) {
      // The bridge touched the circle between two interior vertices.
      t = da / (da + db);
    }
    if (t >= 0.0) {
      const Point c{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
      const double rc = std::hypot(c.x, c.y);
      exit = rc > 0.0 ? Point{c.x / rc, c.y / rc} : Point{1.0, 0.0};
      break;
    }
    path.push_back(b);
    a = b;
  }

  const double theta = std::atan2(exit.y, exit.x);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const auto rotated = [&](Point p) { return Point{c * p.x + s * p.y, -s * p.x + c * p.y}; };

  HullStats st{0.0, 0.0, 1.0};
  Point prev = rotated(path.front());
  for (std::size_t i = 1; i < path.size(); ++i) {
    const Point cur = rotated(path[i]);
    st.x = std::max(st.x, bridge_max(-prev.x, -cur.x, h, rng));
    st.y = std::max(st.y, bridge_max(prev.y, cur.y, h, rng));
    // Distance from 1 is maximized, to first order, along the direction from
    // 1 to the segment.
    const double mx = 0.5 * (prev.x + cur.x) - 1.0;
    const double my = 0.5 * (prev.y + cur.y);
    const double mr = std::hypot(mx, my);
    const double ux = mx / mr, uy = my / mr;
    const double pa = (prev.x - 1.0) * ux + prev.y * uy;
    const double pb = (cur.x - 1.0) * ux + cur.y * uy;
    st.z = std::max({st.z, bridge_max(pa, pb, h, rng), std::hypot(cur.x - 1.0, cur.y)});
    prev = cur;
  }
  st.x = std::clamp(st.x, 0.0, 1.0);
  st.y = std::clamp(st.y, 0.0, 1.0);
  st.z = std::clamp(st.z, 1.0, 2.0);
  out.stats = st;
  return out;
}

}  // namespace

BrownianHull bm_hull_sample(RandomStream& rng, double h, HullDiscretization method) {
  if (!(h > 0.0)) throw std::invalid_argument("bm_hull_sample: step variance must be positive");
  if (method == HullDiscretization::Bridge) return bridge_hull_sample(rng, h);
  thread_local std::vector<Point> path;
  path.clear();
  path.push_back({0.0, 0.0});
  std::normal_distribution<double> gauss(0.0, std::sqrt(h));
  double x = 0.0, y = 0.0;
  BrownianHull out;
  while (x * x + y * y < 1.0) {
    x += gauss(rng);
    y += gauss(rng);
    path.push_back({x, y});
    ++out.steps;
  }
  out.stats = hull_stats(path, std::atan2(y, x));
  return out;
}

}  // namespace sksaw
