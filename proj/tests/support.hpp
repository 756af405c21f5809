#pragma once

#include "fullwiener/graph.hpp"
#include "fullwiener/planar_code.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef FULLWIENER_TEST_DATA_DIR
#error "FULLWIENER_TEST_DATA_DIR must be defined"
#endif

namespace testsupport {

using fullwiener::FullereneGraph;
using fullwiener::Vertex;
using Lists = std::vector<std::vector<Vertex>>;

inline std::string data_path(const std::string& name) {
  return std::string(FULLWIENER_TEST_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string fixture_bytes(std::size_t n) { return read_file(data_path("c" + std::to_string(n) + ".pc")); }

inline std::vector<fullwiener::PlanarCodeRecord> fixture_records(std::size_t n) {
  std::istringstream in(fixture_bytes(n));
  fullwiener::PlanarCodeReader reader(in);
  std::vector<fullwiener::PlanarCodeRecord> out;
  while (auto r = reader.next_record()) out.push_back(std::move(*r));
  return out;
}

inline std::vector<FullereneGraph> fixture_graphs(std::size_t n) {
  std::vector<FullereneGraph> out;
  for (const auto& r : fixture_records(n)) out.push_back(fullwiener::decode_record(r));
  return out;
}

// Orders of the isomer fixtures with their isomer counts.
inline const std::vector<std::pair<std::size_t, std::size_t>>& fixture_orders() {
  static const std::vector<std::pair<std::size_t, std::size_t>> orders = {
      {20, 1}, {24, 1}, {26, 1}, {28, 2}, {30, 3}, {32, 6}, {34, 6}, {36, 15}, {38, 17}, {40, 40}};
  return orders;
}

inline Lists lists_of(const FullereneGraph& g) {
  Lists out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  return out;
}

// Generalized Petersen graph GP(10,2), drawn by hand; it is the dodecahedron.
// Neighbour order carries no embedding.
inline Lists dodecahedron_lists() {
  Lists adj(20);
  for (Vertex i = 0; i < 10; ++i) {
    adj[i] = {(i + 1) % 10, (i + 9) % 10, i + 10};
    adj[i + 10] = {i, 10 + (i + 2) % 10, 10 + (i + 8) % 10};
  }
  return adj;
}

// Prism over an m-gon: cubic, planar, two m-gonal faces.
inline std::vector<fullwiener::Rotation> prism_rotation(Vertex m) {
  std::vector<fullwiener::Rotation> rot(2 * m);
  for (Vertex i = 0; i < m; ++i) {
    rot[i] = {(i + 1) % m, (i + m - 1) % m, i + m};
    rot[i + m] = {m + (i + m - 1) % m, m + (i + 1) % m, i};
  }
  return rot;
}

// Moebius ladder on 2m vertices: cubic and non-planar for m >= 3.
inline std::vector<fullwiener::Rotation> mobius_ladder_rotation(Vertex m) {
  const Vertex n = 2 * m;
  std::vector<fullwiener::Rotation> rot(n);
  for (Vertex i = 0; i < n; ++i) rot[i] = {(i + 1) % n, (i + n - 1) % n, (i + m) % n};
  return rot;
}

// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<std::uint32_t>> all_pairs(const Lists& adj) {
  const std::size_t n = adj.size();
  constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max() / 4;
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, inf));
  for (std::size_t v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (Vertex u : adj[v]) d[v][u] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Sum over unordered pairs.
inline std::uint64_t pairwise_wiener(const Lists& adj) {
  const auto d = all_pairs(adj);
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) w += d[i][j];
  return w;
}

struct PentagonOracle {
  unsigned parts = 0;
  unsigned isolated = 0;
};

// Union-find over pentagons sharing an edge, from face vertex cycles.
inline PentagonOracle pentagon_oracle(const std::vector<std::vector<Vertex>>& faces) {
  std::vector<std::vector<std::pair<Vertex, Vertex>>> edges;
  for (const auto& f : faces) {
    if (f.size() != 5) continue;
    std::vector<std::pair<Vertex, Vertex>> e;
    for (std::size_t i = 0; i < 5; ++i) e.emplace_back(std::minmax(f[i], f[(i + 1) % 5]));
    edges.push_back(e);
  }
  const std::size_t p = edges.size();
  std::vector<std::size_t> parent(p);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> touched(p, false);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) {
      bool shared = false;
      for (const auto& a : edges[i])
        for (const auto& b : edges[j]) shared = shared || a == b;
      if (shared) {
        parent[find(i)] = find(j);
        touched[i] = touched[j] = true;
      }
    }
  PentagonOracle out;
  for (std::size_t i = 0; i < p; ++i) {
    if (find(i) == i) ++out.parts;
    if (!touched[i]) ++out.isolated;
  }
  return out;
}

// Rotation of the planar dual: one vertex per face, neighbours in tracing order.
inline Lists dual_rotation(const FullereneGraph& g) {
  const auto fs = fullwiener::trace_faces(g);
  Lists dual(fs.size());
  for (std::size_t f = 0; f < fs.size(); ++f) {
    const auto& cyc = fs.faces[f];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const Vertex u = cyc[i];
      const Vertex v = cyc[(i + 1) % cyc.size()];
      dual[f].push_back(fs.dart_face[3 * v + g.slot_of(v, u)]);
    }
  }
  return dual;
}

// Truncation of an embedded graph: each vertex becomes a face.
inline std::vector<fullwiener::Rotation> truncate(const Lists& rot) {
  std::vector<Vertex> base(rot.size() + 1, 0);
  for (std::size_t v = 0; v < rot.size(); ++v) base[v + 1] = base[v] + static_cast<Vertex>(rot[v].size());
  std::vector<fullwiener::Rotation> out(base.back());
  for (Vertex u = 0; u < rot.size(); ++u) {
    const Vertex deg = static_cast<Vertex>(rot[u].size());
    for (Vertex i = 0; i < deg; ++i) {
      const Vertex v = rot[u][i];
      const auto back = std::find(rot[v].begin(), rot[v].end(), u) - rot[v].begin();
      out[base[u] + i] = {base[v] + static_cast<Vertex>(back), base[u] + (i + deg - 1) % deg,
                          base[u] + (i + 1) % deg};
    }
  }
  return out;
}

// Buckminsterfullerene: the truncated icosahedron, built as the truncation of
// the dual of the dodecahedron.
inline FullereneGraph c60_ih(const FullereneGraph& dodecahedron) {
  return FullereneGraph::from_rotation(truncate(dual_rotation(dodecahedron)), "C60-Ih");
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::string to_bytes(const std::vector<std::uint8_t>& v) { return {v.begin(), v.end()}; }

}  // namespace testsupport
