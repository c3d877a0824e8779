#include "sksaw/hex_domain.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace sksaw {

namespace {

constexpr LatticeKind kHex = LatticeKind::Hexagonal;

int interior_faces(Site s, const std::unordered_map<Hexagon, int>& interior) {
  int k = 0;
  for (const Hexagon& f : hexagons_at(s)) k += interior.count(f) ? 1 : 0;
  return k;
}

std::unordered_map<Hexagon, int> index_hexagons(std::span<const Hexagon> interior) {
  std::unordered_map<Hexagon, int> index;
  for (std::size_t i = 0; i < interior.size(); ++i) {
    const Hexagon h = interior[i];
    if (((h.x + h.y) & 1) != 0) throw std::invalid_argument("hexagon names must have even parity");
    if (!index.emplace(h, static_cast<int>(i)).second) {
      throw std::invalid_argument("duplicate interior hexagon");
    }
  }
  return index;
}

std::unordered_set<Site> vertex_set(std::span<const Hexagon> interior) {
  std::unordered_set<Site> sites;
  for (const Hexagon& h : interior) {
    for (const Site& s : hexagon_vertices(h)) sites.insert(s);
  }
  return sites;
}

}  // namespace

HexDomain::HexDomain(std::vector<Hexagon> interior, Site u, Site v)
    : interior_(std::move(interior)), u_(u), v_(v) {
  if (interior_.empty()) throw std::invalid_argument("domain has no interior hexagons");
  interior_index_ = index_hexagons(interior_);
  sites_ = vertex_set(interior_);

  // Connectivity of the interior.
  {
    std::unordered_set<Hexagon> seen{interior_.front()};
    std::vector<Hexagon> stack{interior_.front()};
    while (!stack.empty()) {
      const Hexagon h = stack.back();
      stack.pop_back();
      for (const Hexagon& g : adjacent_hexagons(h)) {
        if (interior_index_.count(g) && seen.insert(g).second) stack.push_back(g);
      }
    }
    if (seen.size() != interior_.size()) throw std::invalid_argument("interior is not connected");
  }

  // Clockwise boundary successor of every boundary site.
  std::unordered_map<Site, Site> next;
  for (const Site& s : sites_) {
    for (const Site& t : neighbors(s, kHex)) {
      if (!sites_.count(t)) continue;
      const Hexagon l = left_hexagon(s, t);
      const Hexagon r = right_hexagon(s, t);
      const bool li = interior_index_.count(l) != 0;
      const bool ri = interior_index_.count(r) != 0;
      if (!li && !ri) throw std::invalid_argument("an outside edge joins two domain sites");
      if (ri && !li && !next.emplace(s, t).second) {
        throw std::invalid_argument("boundary is pinched");
      }
    }
  }

  for (const Site& m : {u_, v_}) {
    if (!sites_.count(m) || interior_faces(m, interior_index_) != 1) {
      throw std::invalid_argument("marked sites must touch exactly one interior hexagon");
    }
  }
  if (u_ == v_) throw std::invalid_argument("marked sites must differ");

  const auto outside_neighbor = [&](Site m) {
    for (const Site& t : neighbors(m, kHex)) {
      const auto faces = hexagons_of_edge(m, t);
      if (!interior_index_.count(faces[0]) && !interior_index_.count(faces[1])) return t;
    }
    throw std::logic_error("marked site has no outside edge");
  };
  u_out_ = outside_neighbor(u_);
  v_out_ = outside_neighbor(v_);

  // One boundary cycle through every boundary edge, or the region has holes.
  HexColor color = HexColor::Black;
  Site s = u_;
  std::size_t length = 0;
  do {
    const auto it = next.find(s);
    if (it == next.end()) throw std::logic_error("boundary walk left the boundary");
    const Site t = it->second;
    const Hexagon face = left_hexagon(s, t);
    const auto [pos, fresh] = boundary_.emplace(face, color);
    if (!fresh && pos->second != color) {
      throw std::invalid_argument("a boundary hexagon would need both colors");
    }
    s = t;
    if (s == v_) color = HexColor::White;
    if (++length > next.size()) break;
  } while (s != u_);
  if (length != next.size()) throw std::invalid_argument("domain is not simply connected");
}

std::vector<Site> HexDomain::marked_site_candidates(std::span<const Hexagon> interior) {
  const auto index = index_hexagons(interior);
  std::vector<Site> out;
  for (const Site& s : vertex_set(interior)) {
    if (interior_faces(s, index) == 1) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Hexagon> HexDomain::random_polyhex(int size, RandomStream& rng) {
  if (size < 1) throw std::invalid_argument("random_polyhex: size must be positive");
  std::vector<Hexagon> cells{{0, 0}};
  std::unordered_set<Hexagon> taken{{0, 0}};
  while (static_cast<int>(cells.size()) < size) {
    const Hexagon base = cells[static_cast<std::size_t>(rng.uniform() * static_cast<double>(cells.size()))];
    const auto adj = adjacent_hexagons(base);
    const Hexagon g = adj[static_cast<std::size_t>(rng.uniform() * 6.0)];
    if (taken.insert(g).second) cells.push_back(g);
  }
  return cells;
}

int HexDomain::interior_index(Hexagon h) const {
  const auto it = interior_index_.find(h);
  return it == interior_index_.end() ? -1 : it->second;
}

HexColor HexDomain::boundary_color(Hexagon h) const {
  const auto it = boundary_.find(h);
  return it == boundary_.end() ? HexColor::Uncolored : it->second;
}

namespace {

template <typename ColorOf>
WalkPath explore(const HexDomain& d, ColorOf&& color_of) {
  WalkPath path{kHex, {d.u()}};
  std::unordered_set<Site> visited{d.u()};
  Site prev = d.u_outside();
  Site cur = d.u();
  while (cur != d.v()) {
    const Hexagon hit = hit_hexagon(prev, cur);
    const HexColor c = color_of(hit);
    const int heading = direction_between(prev, cur, kHex).angle;
    // White on the right: turn left around a white hexagon, right around black.
    const int turn = c == HexColor::White ? 2 : -2;
    const Site next = step(cur, Direction{wrap_angle(heading + turn)}, kHex);
    if (!d.contains(next) || !visited.insert(next).second) {
      throw std::logic_error("percolation interface left the domain or revisited a site");
    }
    path.sites.push_back(next);
    prev = cur;
    cur = next;
  }
  return path;
}

}  // namespace

WalkPath percolation_interface(const HexDomain& d, RandomStream& rng) {
  std::unordered_map<Hexagon, HexColor> drawn;
  return explore(d, [&](Hexagon h) {
    if (!d.is_interior(h)) {
      const HexColor c = d.boundary_color(h);
      if (c == HexColor::Uncolored) throw std::logic_error("interface hit an uncolored outside hexagon");
      return c;
    }
    auto [it, fresh] = drawn.emplace(h, HexColor::Uncolored);
    if (fresh) it->second = rng.coin() ? HexColor::White : HexColor::Black;
    return it->second;
  });
}

WalkPath percolation_interface(const HexDomain& d, std::span<const HexColor> interior_colors,
                               std::vector<int>* consulted) {
  if (interior_colors.size() != d.interior().size()) {
    throw std::invalid_argument("percolation_interface: one color per interior hexagon required");
  }
  if (consulted) consulted->clear();
  return explore(d, [&](Hexagon h) {
    const int i = d.interior_index(h);
    HexColor c = i >= 0 ? interior_colors[static_cast<std::size_t>(i)] : d.boundary_color(h);
    if (i >= 0 && consulted) consulted->push_back(i);
    if (c == HexColor::Uncolored) throw std::logic_error("interface hit an uncolored hexagon");
    return c;
  });
}

NeighborList chordal_allowable(const HexDomain& d, std::span<const Site> path) {
  if (path.empty() || path.front() != d.u()) {
    throw std::invalid_argument("chordal_allowable: walk must start at u");
  }
  const std::unordered_set<Site> occupied(path.begin(), path.end());
  const auto free_site = [&](Site s) { return d.contains(s) && !occupied.count(s); };

  NeighborList out;
  for (const Site& t : neighbors(path.back(), kHex)) {
    if (!free_site(t)) continue;
    bool reaches = t == d.v();
    std::unordered_set<Site> seen{t};
    std::deque<Site> queue{t};
    while (!reaches && !queue.empty()) {
      const Site s = queue.front();
      queue.pop_front();
      for (const Site& q : neighbors(s, kHex)) {
        if (!free_site(q) || !seen.insert(q).second) continue;
        if (q == d.v()) {
          reaches = true;
          break;
        }
        queue.push_back(q);
      }
    }
    if (reaches) out.sites[static_cast<std::size_t>(out.count++)] = t;
  }
  if (out.count == 0) throw std::logic_error("chordal walk has no allowable neighbor");
  return out;
}

WalkPath chordal_sksaw(const HexDomain& d, RandomStream& rng) {
  WalkPath path{kHex, {d.u()}};
  while (path.sites.back() != d.v()) {
    const NeighborList allowed = chordal_allowable(d, path.sites);
    path.sites.push_back(allowed[static_cast<std::size_t>(rng.uniform_index(allowed.count))]);
  }
  return path;
}

}  // namespace sksaw
