#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sksaw/hex_domain.hpp"
#include "sksaw/validation/enumeration.hpp"

using namespace sksaw;

namespace {

std::vector<Hexagon> flower() {
  std::vector<Hexagon> h{{0, 0}};
  for (Hexagon a : adjacent_hexagons({0, 0})) h.push_back(a);
  return h;
}

}  // namespace

TEST_CASE("single hexagon domain") {
  const std::vector<Hexagon> one{{0, 0}};
  const auto marks = HexDomain::marked_site_candidates(one);
  CHECK(marks.size() == 6);
  const HexDomain d(one, marks[0], marks[3]);
  CHECK(d.contains(marks[1]));
  CHECK(d.is_interior({0, 0}));
  CHECK(d.interior_index({0, 0}) == 0);
  CHECK(d.interior_index({2, 0}) == -1);
  CHECK_FALSE(d.contains(d.u_outside()));
  CHECK(are_neighbors(d.u(), d.u_outside(), LatticeKind::Hexagonal));

  int black = 0, white = 0;
  for (Hexagon a : adjacent_hexagons({0, 0})) {
    const HexColor c = d.boundary_color(a);
    CHECK(c != HexColor::Uncolored);
    black += c == HexColor::Black;
    white += c == HexColor::White;
  }
  CHECK(black > 0);
  CHECK(white > 0);
  CHECK(d.boundary_color({0, 0}) == HexColor::Uncolored);
}

TEST_CASE("invalid domains are rejected") {
  const std::vector<Hexagon> one{{0, 0}};
  const auto marks = HexDomain::marked_site_candidates(one);
  CHECK_THROWS_AS(HexDomain(one, marks[0], marks[0]), std::invalid_argument);
  CHECK_THROWS_AS(HexDomain({{0, 0}, {0, 0}}, marks[0], marks[1]), std::invalid_argument);
  CHECK_THROWS_AS(HexDomain({{1, 0}}, {1, 0}, {2, 0}), std::invalid_argument);  // odd name
  CHECK_THROWS_AS(HexDomain({{0, 0}, {6, 0}}, marks[0], marks[1]), std::invalid_argument);

  // A ring of six around an empty centre has a hole.
  std::vector<Hexagon> ring;
  for (Hexagon a : adjacent_hexagons({0, 0})) ring.push_back(a);
  const auto ring_marks = HexDomain::marked_site_candidates(ring);
  REQUIRE(ring_marks.size() >= 2);
  CHECK_THROWS_AS(HexDomain(ring, ring_marks[0], ring_marks[1]), std::invalid_argument);

  // The flower's centre vertex touches three interior hexagons.
  const auto f = flower();
  const auto fm = HexDomain::marked_site_candidates(f);
  CHECK_THROWS_AS(HexDomain(f, Site{1, 0}, fm[0]), std::invalid_argument);
}

TEST_CASE("chordal walk runs from u to v inside the domain") {
  const auto f = flower();
  const auto marks = HexDomain::marked_site_candidates(f);
  const HexDomain d(f, marks[0], marks[marks.size() / 2]);
  for (std::uint64_t i = 0; i < 300; ++i) {
    RandomStream rng(8, i);
    const WalkPath w = chordal_sksaw(d, rng);
    REQUIRE(w.sites.front() == d.u());
    REQUIRE(w.sites.back() == d.v());
    std::set<Site> seen(w.sites.begin(), w.sites.end());
    CHECK(seen.size() == w.sites.size());
    for (std::size_t k = 0; k < w.sites.size(); ++k) {
      CHECK(d.contains(w.sites[k]));
      if (k > 0) CHECK(are_neighbors(w.sites[k - 1], w.sites[k], LatticeKind::Hexagonal));
    }
    RandomStream rng2(8, i);
    const WalkPath p = percolation_interface(d, rng2);
    CHECK(p.sites.front() == d.u());
    CHECK(p.sites.back() == d.v());
  }
}

TEST_CASE("allowable moves of the chordal walk") {
  const auto f = flower();
  const auto marks = HexDomain::marked_site_candidates(f);
  const HexDomain d(f, marks[0], marks[marks.size() / 2]);
  const std::vector<Site> start{d.u()};
  const NeighborList first = chordal_allowable(d, start);
  CHECK(first.size() == 2);
  for (Site s : first) CHECK(d.contains(s));
}

TEST_CASE("interface with a fixed coloring reports what it consulted") {
  const auto f = flower();
  const auto marks = HexDomain::marked_site_candidates(f);
  const HexDomain d(f, marks[0], marks[4]);
  std::vector<HexColor> all_black(f.size(), HexColor::Black);
  std::vector<int> consulted;
  const WalkPath p = percolation_interface(d, all_black, &consulted);
  CHECK(p.sites.front() == d.u());
  CHECK(p.sites.back() == d.v());
  CHECK_FALSE(consulted.empty());
  for (int k : consulted) CHECK((k >= 0 && k < static_cast<int>(f.size())));
}

TEST_CASE("random polyhexes are connected and of the requested size") {
  RandomStream rng(12, 0);
  for (int size = 1; size <= 12; ++size) {
    const auto h = HexDomain::random_polyhex(size, rng);
    CHECK(static_cast<int>(h.size()) == size);
    std::set<Hexagon> set(h.begin(), h.end());
    CHECK(set.size() == h.size());
  }
}

TEST_CASE("interface and chordal walk have the same law on small domains") {
  const auto r = validation::percolation_equivalence(5, 3, 17);
  CHECK(r.domains > 10);
  CHECK(r.interface_mismatches == 0);
  CHECK(r.reversal_mismatches == 0);
}
