#include "fullwiener/metrics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace fullwiener {

namespace {

void check_vertex(const FullereneGraph& g, Vertex v) {
  if (v >= g.order()) {
    throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range for order " +
                           std::to_string(g.order()));
  }
}

}  // namespace

std::vector<Distance> bfs_distances(const FullereneGraph& g, Vertex source) {
  check_vertex(g, source);
  constexpr Distance unreached = std::numeric_limits<Distance>::max();
  std::vector<Distance> dist(g.order(), unreached);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] == unreached) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

DistanceEngine::SourceSummary DistanceEngine::from(const FullereneGraph& g, Vertex source) {
  check_vertex(g, source);
  const std::size_t n = g.order();
  if (stamp_.size() < n) {
    stamp_.assign(n, 0);
    dist_.resize(n);
    queue_.resize(n);
    epoch_ = 0;
  }
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }

  const auto& rot = g.rotation();
  std::size_t tail = 0;
  queue_[tail++] = source;
  stamp_[source] = epoch_;
  dist_[source] = 0;
  Transmission sum = 0;
  Distance ecc = 0;
  for (std::size_t head = 0; head < tail; ++head) {
    const Vertex v = queue_[head];
    const Distance next = dist_[v] + 1;
    for (Vertex u : rot[v]) {
      if (stamp_[u] != epoch_) {
        stamp_[u] = epoch_;
        dist_[u] = next;
        sum += next;
        ecc = next;
        queue_[tail++] = u;
      }
    }
  }
  return {sum, ecc};
}

TransmissionVector DistanceEngine::all(const FullereneGraph& g) {
  TransmissionVector tv;
  tv.transmission.resize(g.order());
  tv.eccentricity.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto s = from(g, v);
    tv.transmission[v] = s.transmission;
    tv.eccentricity[v] = s.eccentricity;
  }
  return tv;
}

void DistanceEngine::fill(const FullereneGraph& g, GraphReport& out) {
  out.order = g.order();
  out.label = g.label();
  out.transmissions = all(g);
  const auto& tr = out.transmissions.transmission;
  out.wiener = std::accumulate(tr.begin(), tr.end(), WienerIndex{0}) / 2;
  out.complexity = count_distinct(tr);
  const auto& ecc = out.transmissions.eccentricity;
  out.diameter = ecc.empty() ? 0 : *std::max_element(ecc.begin(), ecc.end());
}

std::uint32_t count_distinct(std::vector<Transmission> values) {
  std::sort(values.begin(), values.end());
  return static_cast<std::uint32_t>(std::unique(values.begin(), values.end()) - values.begin());
}

Transmission transmission(const FullereneGraph& g, Vertex v) {
  DistanceEngine engine;
  return engine.from(g, v).transmission;
}

WienerIndex wiener_index(const FullereneGraph& g) { return report(g).wiener; }

std::uint32_t wiener_complexity(const FullereneGraph& g) { return report(g).complexity; }

Distance diameter(const FullereneGraph& g) { return report(g).diameter; }

GraphReport report(const FullereneGraph& g) {
  DistanceEngine engine;
  GraphReport r;
  engine.fill(g, r);
  return r;
}

}  // namespace fullwiener
