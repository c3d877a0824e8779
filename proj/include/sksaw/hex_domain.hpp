#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sksaw/lattice.hpp"
#include "sksaw/random.hpp"
#include "sksaw/walker.hpp"

namespace sksaw {

enum class HexColor : std::uint8_t { Uncolored, Black, White };

/// A bounded, simply connected region of the hexagonal lattice given by its
/// interior hexagons, with two marked boundary sites u and v.
///
/// The sites of the domain are the vertices of the interior hexagons. A
/// marked site must touch exactly one interior hexagon; its outside neighbor
/// (across the edge between its two outside hexagons) is where the walk
/// enters from. The outside hexagons sharing an edge with the domain are
/// colored by walking the boundary clockwise from u: black up to v, white
/// from v back to u.
///
/// Throws std::invalid_argument for domains where that construction is not
/// well defined: disconnected or holed interiors, pinched boundaries,
/// outside edges joining two domain sites, or invalid marked sites.
class HexDomain {
 public:
  HexDomain(std::vector<Hexagon> interior, Site u, Site v);

  /// Sites touching exactly one interior hexagon, in clockwise boundary
  /// order. Candidates for u and v.
  static std::vector<Site> marked_site_candidates(std::span<const Hexagon> interior);

  /// Connected hexagon set of the given size around the origin hexagon,
  /// grown by random accretion.
  static std::vector<Hexagon> random_polyhex(int size, RandomStream& rng);

  const std::vector<Hexagon>& interior() const { return interior_; }
  Site u() const { return u_; }
  Site v() const { return v_; }
  Site u_outside() const { return u_out_; }
  Site v_outside() const { return v_out_; }

  bool contains(Site s) const { return sites_.count(s) != 0; }
  bool is_interior(Hexagon h) const { return interior_index_.count(h) != 0; }

  /// Position of `h` in interior(), or -1.
  int interior_index(Hexagon h) const;

  /// Black or white for boundary hexagons, Uncolored otherwise.
  HexColor boundary_color(Hexagon h) const;

  /// Same region with u and v exchanged.
  HexDomain reversed() const { return HexDomain(interior_, v_, u_); }

 private:
  std::vector<Hexagon> interior_;
  std::unordered_map<Hexagon, int> interior_index_;
  std::unordered_set<Site> sites_;
  std::unordered_map<Hexagon, HexColor> boundary_;
  Site u_, v_, u_out_, v_out_;
};

/// Percolation exploration path from u to v. Interior hexagons are colored
/// by fair coins when first hit.
WalkPath percolation_interface(const HexDomain& d, RandomStream& rng);

/// Same path for a fixed coloring of the interior hexagons (indexed as in
/// interior()). Also reports which interior hexagons the path consulted.
WalkPath percolation_interface(const HexDomain& d, std::span<const HexColor> interior_colors,
                               std::vector<int>* consulted = nullptr);

/// Neighbors of the tip that are domain sites, unoccupied, and still
/// connected to v through free domain sites. `path` starts at u.
NeighborList chordal_allowable(const HexDomain& d, std::span<const Site> path);

/// Smart kinetic walk from u to v inside the domain.
WalkPath chordal_sksaw(const HexDomain& d, RandomStream& rng);

}  // namespace sksaw
