#pragma once

#include "fullwiener/graph.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fullwiener {

class NotTwelvePentagons : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adjacency among the 12 pentagonal faces; pentagons are adjacent when they
/// share an edge. Bit j of `mask[i]` is set iff pentagons i and j are adjacent.
struct PentagonGraph {
  std::array<std::uint32_t, 12> face{};  // index into FaceSet::faces
  std::array<std::uint16_t, 12> mask{};

  unsigned degree(unsigned i) const;
  /// Component sizes, largest first.
  std::vector<unsigned> component_sizes() const;
};

struct PentagonStats {
  unsigned parts = 0;     // connected components of the pentagon graph
  unsigned isolated = 0;  // pentagons adjacent to no other pentagon
  bool ipr = false;

  bool operator==(const PentagonStats&) const = default;
};

PentagonGraph pentagon_adjacency(const FaceSet& faces);
PentagonStats pentagon_stats(const FaceSet& faces);
PentagonStats pentagon_stats(const PentagonGraph& pg);

}  // namespace fullwiener
