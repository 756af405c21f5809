#pragma once

#include "fullwiener/graph.hpp"
#include "fullwiener/pentagons.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fullwiener {

using Distance = std::uint32_t;
using Transmission = std::uint32_t;  // tr(v) <= n * D, far below 2^31 for n <= 216
using WienerIndex = std::uint64_t;

struct TransmissionVector {
  std::vector<Transmission> transmission;
  std::vector<Distance> eccentricity;

  std::size_t size() const { return transmission.size(); }
  bool operator==(const TransmissionVector&) const = default;
};

struct GraphReport {
  std::size_t order = 0;
  WienerIndex wiener = 0;
  std::uint32_t complexity = 0;  // number of distinct transmissions
  Distance diameter = 0;
  TransmissionVector transmissions;
  std::optional<PentagonStats> pentagons;
  std::string label;

  bool operator==(const GraphReport&) const = default;
};

/// Hop distances from `source` to every vertex. Throws VertexOutOfRange.
std::vector<Distance> bfs_distances(const FullereneGraph& g, Vertex source);

Transmission transmission(const FullereneGraph& g, Vertex v);
WienerIndex wiener_index(const FullereneGraph& g);
std::uint32_t wiener_complexity(const FullereneGraph& g);
Distance diameter(const FullereneGraph& g);

/// Number of distinct values.
std::uint32_t count_distinct(std::vector<Transmission> values);

/// All distance invariants from one sweep of n BFS runs.
GraphReport report(const FullereneGraph& g);

/// Reusable BFS workspace; one per thread keeps the scan loop allocation-free.
class DistanceEngine {
 public:
  struct SourceSummary {
    Transmission transmission;
    Distance eccentricity;
  };

  SourceSummary from(const FullereneGraph& g, Vertex source);
  TransmissionVector all(const FullereneGraph& g);
  void fill(const FullereneGraph& g, GraphReport& out);

 private:
  std::vector<Vertex> queue_;
  std::vector<Distance> dist_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

}  // namespace fullwiener
