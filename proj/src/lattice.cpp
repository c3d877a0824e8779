#include "sksaw/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sksaw {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

// Unit offsets indexed by angle (pi/6 units). Square uses 0, 3, 6, 9.
constexpr std::array<Site, kFullTurn> kOffset = {{
    {1, 0},   // 0   (square E)
    {1, 0},   // 30  (hex, odd site)
    {0, 0},
    {0, 1},   // 90  (square N, hex even site)
    {0, 0},
    {-1, 0},  // 150 (hex, odd site)
    {-1, 0},  // 180 (square W)
    {-1, 0},  // 210 (hex, even site)
    {0, 0},
    {0, -1},  // 270 (square S, hex odd site)
    {0, 0},
    {1, 0},   // 330 (hex, even site)
}};

}  // namespace

const char* to_string(LatticeKind kind) {
  return kind == LatticeKind::Square ? "square" : "hex";
}

bool NeighborList::contains(Site s) const {
  return std::find(begin(), end(), s) != end();
}

int coordination(LatticeKind kind) { return kind == LatticeKind::Square ? 4 : 3; }

NeighborList neighbors(Site s, LatticeKind kind) {
  NeighborList out;
  if (kind == LatticeKind::Square) {
    out.sites = {{{s.x + 1, s.y}, {s.x - 1, s.y}, {s.x, s.y + 1}, {s.x, s.y - 1}}};
    out.count = 4;
  } else {
    out.sites[0] = {s.x + 1, s.y};
    out.sites[1] = {s.x - 1, s.y};
    out.sites[2] = hex_even(s) ? Site{s.x, s.y + 1} : Site{s.x, s.y - 1};
    out.count = 3;
  }
  return out;
}

bool are_neighbors(Site a, Site b, LatticeKind kind) { return neighbors(a, kind).contains(b); }

bool valid_direction(Site s, Direction d, LatticeKind kind) {
  const int a = d.angle;
  if (a < 0 || a >= kFullTurn) return false;
  if (kind == LatticeKind::Square) return a % 3 == 0;
  if (a % 2 == 0) return false;
  // Even sites own 90, 210, 330 degrees; odd sites 30, 150, 270.
  const bool even_dir = (a == 3 || a == 7 || a == 11);
  return even_dir == hex_even(s);
}

Site step(Site s, Direction d, LatticeKind kind) {
  if (!valid_direction(s, d, kind)) {
    throw std::invalid_argument("step: direction " + std::to_string(d.angle) +
                                " is not an edge at this site");
  }
  const Site off = kOffset[static_cast<std::size_t>(d.angle)];
  return {s.x + off.x, s.y + off.y};
}

Direction direction_between(Site from, Site to, LatticeKind kind) {
  const int dx = to.x - from.x;
  const int dy = to.y - from.y;
  if (kind == LatticeKind::Square) {
    if (dx == 1 && dy == 0) return {0};
    if (dx == 0 && dy == 1) return {3};
    if (dx == -1 && dy == 0) return {6};
    if (dx == 0 && dy == -1) return {9};
  } else {
    const bool even = hex_even(from);
    if (dx == 1 && dy == 0) return {even ? 11 : 1};
    if (dx == -1 && dy == 0) return {even ? 7 : 5};
    if (dx == 0 && dy == 1 && even) return {3};
    if (dx == 0 && dy == -1 && !even) return {9};
  }
  throw std::invalid_argument("direction_between: sites are not neighbors");
}

Point embed(Site s, LatticeKind kind, double delta) {
  if (kind == LatticeKind::Square) return {s.x * delta, s.y * delta};
  const double y = 1.5 * s.y - (hex_even(s) ? 0.0 : 0.5);
  return {s.x * (kSqrt3 / 2.0) * delta, y * delta};
}

int turn_units(Direction in, Direction out) {
  const int d = wrap_angle(out.angle - in.angle);
  if (d == kHalfTurn) throw std::logic_error("turn_units: walk reverses onto its previous site");
  return d > kHalfTurn ? d - kFullTurn : d;
}

double turn_angle(Direction in, Direction out, LatticeKind kind) {
  const bool ok = kind == LatticeKind::Square ? (in.angle % 3 == 0 && out.angle % 3 == 0)
                                              : (in.angle % 2 == 1 && out.angle % 2 == 1);
  if (!ok) throw std::invalid_argument("turn_angle: direction not on this lattice");
  const int u = turn_units(in, out);
  if (kind == LatticeKind::Hexagonal && u == 0) {
    throw std::invalid_argument("turn_angle: hexagonal walks cannot go straight");
  }
  return units_to_radians(u);
}

double units_to_radians(int units) { return units * (std::numbers::pi / 6.0); }

std::array<Site, 6> hexagon_vertices(Hexagon h) {
  return {{{h.x, h.y},
           {h.x + 1, h.y},
           {h.x + 2, h.y},
           {h.x + 2, h.y + 1},
           {h.x + 1, h.y + 1},
           {h.x, h.y + 1}}};
}

std::array<Hexagon, 3> hexagons_at(Site s) {
  if (hex_even(s)) return {{{s.x, s.y}, {s.x - 2, s.y}, {s.x - 1, s.y - 1}}};
  return {{{s.x - 1, s.y}, {s.x, s.y - 1}, {s.x - 2, s.y - 1}}};
}

std::array<Hexagon, 2> hexagons_of_edge(Site a, Site b) {
  if (!are_neighbors(a, b, LatticeKind::Hexagonal)) {
    throw std::invalid_argument("hexagons_of_edge: not a hexagonal edge");
  }
  const auto fa = hexagons_at(a);
  const auto fb = hexagons_at(b);
  std::array<Hexagon, 2> out{};
  int n = 0;
  for (const Hexagon& f : fa) {
    if (std::find(fb.begin(), fb.end(), f) != fb.end()) out[static_cast<std::size_t>(n++)] = f;
  }
  if (n != 2) throw std::logic_error("hexagons_of_edge: inconsistent face table");
  return out;
}

Hexagon left_hexagon(Site a, Site b) {
  const auto faces = hexagons_of_edge(a, b);
  const Point pa = embed(a, LatticeKind::Hexagonal, 1.0);
  const Point pb = embed(b, LatticeKind::Hexagonal, 1.0);
  const Point c = hexagon_center(faces[0], 1.0);
  const double cross = (pb.x - pa.x) * (c.y - pa.y) - (pb.y - pa.y) * (c.x - pa.x);
  return cross > 0 ? faces[0] : faces[1];
}

Hexagon right_hexagon(Site a, Site b) {
  const auto faces = hexagons_of_edge(a, b);
  const Hexagon l = left_hexagon(a, b);
  return faces[0] == l ? faces[1] : faces[0];
}

Hexagon hit_hexagon(Site prev, Site cur) {
  const auto edge = hexagons_of_edge(prev, cur);
  for (const Hexagon& f : hexagons_at(cur)) {
    if (f != edge[0] && f != edge[1]) return f;
  }
  throw std::logic_error("hit_hexagon: inconsistent face table");
}

Point hexagon_center(Hexagon h, double delta) {
  return {(h.x + 1) * (kSqrt3 / 2.0) * delta, (1.5 * h.y + 0.5) * delta};
}

std::array<Hexagon, 6> adjacent_hexagons(Hexagon h) {
  return {{{h.x + 2, h.y},
           {h.x + 1, h.y + 1},
           {h.x - 1, h.y + 1},
           {h.x - 2, h.y},
           {h.x - 1, h.y - 1},
           {h.x + 1, h.y - 1}}};
}

}  // namespace sksaw
