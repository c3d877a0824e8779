#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sksaw/lattice.hpp"

using namespace sksaw;

namespace {

constexpr LatticeKind kBoth[] = {LatticeKind::Square, LatticeKind::Hexagonal};

double dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Total turning of the closed polygon through `loop`, in pi/6 units.
int loop_turning(const std::vector<Site>& loop, LatticeKind kind) {
  const std::size_t n = loop.size();
  int total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Direction in = direction_between(loop[(i + n - 1) % n], loop[i], kind);
    const Direction out = direction_between(loop[i], loop[(i + 1) % n], kind);
    total += turn_units(in, out);
  }
  return total;
}

}  // namespace

TEST_CASE("neighbor relation is symmetric with the right coordination") {
  for (LatticeKind kind : kBoth) {
    for (int x = -50; x < 50; ++x) {
      for (int y = -50; y < 50; ++y) {
        const Site s{x, y};
        const NeighborList nb = neighbors(s, kind);
        REQUIRE(static_cast<int>(nb.size()) == coordination(kind));
        for (Site t : nb) {
          REQUIRE(neighbors(t, kind).contains(s));
          REQUIRE(are_neighbors(s, t, kind));
          REQUIRE(dist(embed(s, kind, 0.1), embed(t, kind, 0.1)) == doctest::Approx(0.1));
          REQUIRE(step(s, direction_between(s, t, kind), kind) == t);
        }
      }
    }
  }
}

TEST_CASE("coordination numbers") {
  CHECK(coordination(LatticeKind::Square) == 4);
  CHECK(coordination(LatticeKind::Hexagonal) == 3);
}

TEST_CASE("hexagonal parity and vertical neighbor") {
  CHECK(hex_even(Site{0, 0}));
  CHECK_FALSE(hex_even(Site{1, 0}));
  CHECK(are_neighbors({0, 0}, {0, 1}, LatticeKind::Hexagonal));
  CHECK_FALSE(are_neighbors({0, 0}, {0, -1}, LatticeKind::Hexagonal));
  CHECK(are_neighbors({1, 0}, {1, -1}, LatticeKind::Hexagonal));
  const Point up = embed({0, 1}, LatticeKind::Hexagonal, 1.0);
  CHECK(up.x == doctest::Approx(0.0));
  CHECK(up.y == doctest::Approx(1.0));
}

TEST_CASE("direction sets") {
  for (int x = -3; x <= 3; ++x) {
    for (int y = -3; y <= 3; ++y) {
      const Site s{x, y};
      std::set<int> sq, hx;
      for (Site t : neighbors(s, LatticeKind::Square)) sq.insert(direction_between(s, t, LatticeKind::Square).angle);
      for (Site t : neighbors(s, LatticeKind::Hexagonal)) hx.insert(direction_between(s, t, LatticeKind::Hexagonal).angle);
      CHECK(sq == std::set<int>{0, 3, 6, 9});
      CHECK(hx == (hex_even(s) ? std::set<int>{3, 7, 11} : std::set<int>{1, 5, 9}));
    }
  }
  CHECK_THROWS_AS(step(Site{0, 0}, Direction{1}, LatticeKind::Hexagonal), std::invalid_argument);
  CHECK_THROWS_AS(direction_between({0, 0}, {2, 0}, LatticeKind::Square), std::invalid_argument);
}

TEST_CASE("embedding mirror symmetry") {
  for (LatticeKind kind : kBoth) {
    for (int x = -6; x <= 6; ++x) {
      for (int y = -6; y <= 6; ++y) {
        const Point p = embed({x, y}, kind, 0.3);
        const Point q = embed({-x, y}, kind, 0.3);
        CHECK(q.x == doctest::Approx(-p.x));
        CHECK(q.y == doctest::Approx(p.y));
      }
    }
  }
  const Point o = embed({0, 0}, LatticeKind::Hexagonal, 0.5);
  CHECK(o.x == 0.0);
  CHECK(o.y == 0.0);
}

TEST_CASE("turns") {
  CHECK(turn_units(Direction{0}, Direction{3}) == 3);
  CHECK(turn_units(Direction{0}, Direction{9}) == -3);
  CHECK(turn_units(Direction{3}, Direction{1}) == -2);
  CHECK_THROWS_AS(turn_units(Direction{0}, Direction{6}), std::logic_error);
  CHECK(units_to_radians(6) == doctest::Approx(M_PI));
}

TEST_CASE("every simple lattice loop of up to 10 steps turns by plus or minus 2 pi") {
  for (LatticeKind kind : kBoth) {
    std::vector<Site> path{{0, 0}};
    std::set<Site> used{{0, 0}};
    int loops = 0;
    std::function<void()> grow = [&] {
      const Site tip = path.back();
      if (path.size() >= 3 && are_neighbors(tip, path.front(), kind)) {
        const int t = loop_turning(path, kind);
        REQUIRE((t == kFullTurn || t == -kFullTurn));
        ++loops;
      }
      if (path.size() == 10) return;
      for (Site n : neighbors(tip, kind)) {
        if (used.count(n)) continue;
        path.push_back(n);
        used.insert(n);
        grow();
        used.erase(n);
        path.pop_back();
      }
    };
    grow();
    CHECK(loops > 0);
  }
}

TEST_CASE("hexagon faces") {
  const Hexagon h{0, 0};
  const auto v = hexagon_vertices(h);
  CHECK(v[0] == Site{0, 0});
  CHECK(loop_turning({v.begin(), v.end()}, LatticeKind::Hexagonal) == kFullTurn);
  for (std::size_t i = 0; i < 6; ++i) CHECK(are_neighbors(v[i], v[(i + 1) % 6], LatticeKind::Hexagonal));

  for (int x = -4; x <= 4; ++x) {
    for (int y = -4; y <= 4; ++y) {
      const Site s{x, y};
      std::set<Hexagon> faces;
      for (Hexagon f : hexagons_at(s)) {
        faces.insert(f);
        const auto fv = hexagon_vertices(f);
        CHECK(std::find(fv.begin(), fv.end(), s) != fv.end());
      }
      CHECK(faces.size() == 3);
      for (Site t : neighbors(s, LatticeKind::Hexagonal)) {
        const Hexagon l = left_hexagon(s, t), r = right_hexagon(s, t);
        CHECK_FALSE(l == r);
        const auto pair = hexagons_of_edge(s, t);
        CHECK(((pair[0] == l && pair[1] == r) || (pair[0] == r && pair[1] == l)));
        const Point a = embed(s, LatticeKind::Hexagonal, 1.0), b = embed(t, LatticeKind::Hexagonal, 1.0);
        const Point c = hexagon_center(l, 1.0);
        CHECK((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x) > 0.0);
        const Hexagon hit = hit_hexagon(s, t);
        CHECK_FALSE(hit == l);
        CHECK_FALSE(hit == r);
        const auto hv = hexagon_vertices(hit);
        CHECK(std::find(hv.begin(), hv.end(), t) != hv.end());
      }
    }
  }
  std::set<Hexagon> adj;
  for (Hexagon a : adjacent_hexagons(h)) {
    adj.insert(a);
    const Point c0 = hexagon_center(h, 1.0), c1 = hexagon_center(a, 1.0);
    CHECK(dist(c0, c1) == doctest::Approx(std::sqrt(3.0)));
  }
  CHECK(adj.size() == 6);
}
