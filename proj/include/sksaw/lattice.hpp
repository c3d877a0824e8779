#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace sksaw {

enum class LatticeKind { Square, Hexagonal };

const char* to_string(LatticeKind kind);

/// Integer lattice site.
///
/// Square lattice: Cartesian coordinates.
/// Hexagonal lattice: brick-wall coordinates. Every site has the horizontal
/// neighbors (x +- 1, y); the third neighbor is (x, y + 1) when x + y is even
/// and (x, y - 1) when x + y is odd.
struct Site {
  int x = 0;
  int y = 0;

  friend constexpr bool operator==(Site, Site) = default;
  friend constexpr auto operator<=>(Site, Site) = default;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Edge direction. The angle is the planar direction of the edge in units of
/// pi/6: square edges use {0, 3, 6, 9}, hexagonal edges {1, 3, 5, 7, 9, 11}.
struct Direction {
  int angle = 0;

  friend constexpr bool operator==(Direction, Direction) = default;
};

/// Angles in units of pi/6 per full turn.
inline constexpr int kFullTurn = 12;
inline constexpr int kHalfTurn = 6;

constexpr int wrap_angle(int a) { return ((a % kFullTurn) + kFullTurn) % kFullTurn; }

constexpr bool hex_even(Site s) { return ((s.x + s.y) & 1) == 0; }

/// Fixed-capacity neighbor list (at most four entries).
struct NeighborList {
  std::array<Site, 4> sites{};
  int count = 0;

  const Site* begin() const { return sites.data(); }
  const Site* end() const { return sites.data() + count; }
  std::size_t size() const { return static_cast<std::size_t>(count); }
  Site operator[](std::size_t i) const { return sites[i]; }
  bool contains(Site s) const;
};

int coordination(LatticeKind kind);

/// Nearest neighbors in a fixed order. Square: E, W, N, S. Hexagonal:
/// (x + 1, y), (x - 1, y), then the vertical neighbor.
NeighborList neighbors(Site s, LatticeKind kind);

bool are_neighbors(Site a, Site b, LatticeKind kind);

/// True when `d` is an outgoing edge direction at `s`.
bool valid_direction(Site s, Direction d, LatticeKind kind);

/// Neighbor of `s` along `d`; throws std::invalid_argument if `d` is not an
/// edge direction at `s`.
Site step(Site s, Direction d, LatticeKind kind);

/// Direction of the edge from `from` to its neighbor `to`; throws if the two
/// sites are not neighbors.
Direction direction_between(Site from, Site to, LatticeKind kind);

/// Planar embedding with nearest-neighbor distance `delta`. The origin maps to
/// (0, 0). Square axes follow the plane axes; hexagonal edges include the
/// vertical direction.
Point embed(Site s, LatticeKind kind, double delta);

/// Signed exterior angle of a turn, in units of pi/6 (counterclockwise
/// positive). Throws std::logic_error on a reversal.
int turn_units(Direction in, Direction out);

/// Same turn in radians, with the directions checked against the lattice.
double turn_angle(Direction in, Direction out, LatticeKind kind);

double units_to_radians(int units);

// Hexagonal faces. A hexagon is named by its lower-left vertex, which always
// has even parity; its vertices are (x, y), (x+1, y), (x+2, y), (x+2, y+1),
// (x+1, y+1), (x, y+1).
struct Hexagon {
  int x = 0;
  int y = 0;

  friend constexpr bool operator==(Hexagon, Hexagon) = default;
  friend constexpr auto operator<=>(Hexagon, Hexagon) = default;
};

/// Vertices in counterclockwise order starting at the lower-left vertex.
std::array<Site, 6> hexagon_vertices(Hexagon h);

/// The three hexagons meeting at a site.
std::array<Hexagon, 3> hexagons_at(Site s);

/// The two hexagons sharing the edge (a, b).
std::array<Hexagon, 2> hexagons_of_edge(Site a, Site b);

/// Hexagon on the left of the directed edge a -> b.
Hexagon left_hexagon(Site a, Site b);
Hexagon right_hexagon(Site a, Site b);

/// The hexagon a walk stepping prev -> cur is about to hit: the face at `cur`
/// not containing the edge.
Hexagon hit_hexagon(Site prev, Site cur);

Point hexagon_center(Hexagon h, double delta);

/// The six hexagons sharing an edge with `h`.
std::array<Hexagon, 6> adjacent_hexagons(Hexagon h);

inline std::uint64_t pack(Site s) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(s.x)) << 32) |
         static_cast<std::uint32_t>(s.y);
}

}  // namespace sksaw

template <>
struct std::hash<sksaw::Site> {
  std::size_t operator()(sksaw::Site s) const noexcept {
    return std::hash<std::uint64_t>{}(sksaw::pack(s));
  }
};

template <>
struct std::hash<sksaw::Hexagon> {
  std::size_t operator()(sksaw::Hexagon h) const noexcept {
    return std::hash<std::uint64_t>{}(sksaw::pack({h.x, h.y}));
  }
};
