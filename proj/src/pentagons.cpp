#include "fullwiener/pentagons.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace fullwiener {

unsigned PentagonGraph::degree(unsigned i) const { return std::popcount(mask.at(i)); }

std::vector<unsigned> PentagonGraph::component_sizes() const {
  std::vector<unsigned> sizes;
  std::uint16_t unseen = 0x0FFF;
  while (unseen != 0) {
    std::uint16_t comp = static_cast<std::uint16_t>(unseen & -unseen);
    std::uint16_t frontier = comp;
    while (frontier != 0) {
      std::uint16_t next = 0;
      for (std::uint16_t f = frontier; f != 0; f &= static_cast<std::uint16_t>(f - 1)) {
        next |= mask[std::countr_zero(f)];
      }
      frontier = static_cast<std::uint16_t>(next & ~comp);
      comp |= next;
    }
    unseen &= static_cast<std::uint16_t>(~comp);
    sizes.push_back(std::popcount(comp));
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

PentagonGraph pentagon_adjacency(const FaceSet& faces) {
  if (faces.pentagon_count != 12) {
    throw NotTwelvePentagons("face set has " + std::to_string(faces.pentagon_count) + " pentagons");
  }
  PentagonGraph pg;
  unsigned next = 0;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (faces.faces[f].size() == 5) {
      pg.face[next++] = static_cast<std::uint32_t>(f);
    }
  }

  // Pentagons sharing an edge list it once each; sort the 60 edges to pair them up.
  struct Edge {
    Vertex lo, hi;
    unsigned pentagon;
    bool operator<(const Edge& o) const { return lo != o.lo ? lo < o.lo : hi < o.hi; }
  };
  std::array<Edge, 60> edges{};
  std::size_t e = 0;
  for (unsigned p = 0; p < 12; ++p) {
    const auto& cyc = faces.faces[pg.face[p]];
    for (std::size_t i = 0; i < 5; ++i) {
      const Vertex u = cyc[i];
      const Vertex v = cyc[(i + 1) % 5];
      edges[e++] = {std::min(u, v), std::max(u, v), p};
    }
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const auto& a = edges[i];
    const auto& b = edges[i + 1];
    if (a.lo == b.lo && a.hi == b.hi && a.pentagon != b.pentagon) {
      pg.mask[a.pentagon] |= static_cast<std::uint16_t>(1u << b.pentagon);
      pg.mask[b.pentagon] |= static_cast<std::uint16_t>(1u << a.pentagon);
    }
  }
  return pg;
}

PentagonStats pentagon_stats(const PentagonGraph& pg) {
  PentagonStats s;
  s.parts = static_cast<unsigned>(pg.component_sizes().size());
  for (unsigned i = 0; i < 12; ++i) {
    if (pg.mask[i] == 0) ++s.isolated;
  }
  s.ipr = s.isolated == 12;
  return s;
}

PentagonStats pentagon_stats(const FaceSet& faces) { return pentagon_stats(pentagon_adjacency(faces)); }

}  // namespace fullwiener
