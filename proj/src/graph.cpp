#include "fullwiener/graph.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace fullwiener {

namespace {

std::string vertex_str(std::size_t v) { return "vertex " + std::to_string(v); }

template <class Lists>
std::vector<ValidationFailure> structural_failures(const Lists& lists) {
  std::vector<ValidationFailure> out;
  const std::size_t n = lists.size();

  bool ids_ok = true;
  for (std::size_t v = 0; v < n; ++v) {
    for (Vertex u : lists[v]) {
      if (u >= n) {
        out.push_back({Check::IdRange, vertex_str(v) + " names " + std::to_string(u) +
                                           ", order is " + std::to_string(n)});
        ids_ok = false;
      }
    }
    if (lists[v].size() != 3) {
      out.push_back({Check::Degree,
                     vertex_str(v) + " has degree " + std::to_string(lists[v].size())});
    }
  }

  for (std::size_t v = 0; v < n; ++v) {
    const auto& nb = lists[v];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] == v) out.push_back({Check::SelfLoop, vertex_str(v) + " lists itself"});
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (nb[i] == nb[j] && nb[i] != v) {
          out.push_back({Check::ParallelEdge,
                         vertex_str(v) + " lists " + std::to_string(nb[i]) + " twice"});
        }
      }
    }
  }

  if (ids_ok) {
    for (std::size_t v = 0; v < n; ++v) {
      for (Vertex u : lists[v]) {
        if (std::find(lists[u].begin(), lists[u].end(), static_cast<Vertex>(v)) == lists[u].end()) {
          out.push_back({Check::Asymmetry, vertex_str(v) + " lists " + std::to_string(u) +
                                               " but not vice versa"});
        }
      }
    }

    if (n > 0) {
      std::vector<bool> seen(n, false);
      std::vector<Vertex> stack{0};
      seen[0] = true;
      std::size_t reached = 1;
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : lists[v]) {
          if (!seen[u]) {
            seen[u] = true;
            ++reached;
            stack.push_back(u);
          }
        }
      }
      if (reached != n) {
        out.push_back({Check::Connectivity, "only " + std::to_string(reached) + " of " +
                                                std::to_string(n) + " vertices reachable"});
      }
    }
  }

  if (n % 2 != 0 || n < kMinFullereneOrder || n == 22) {
    out.push_back({Check::Order, "order " + std::to_string(n) +
                                     " is not a fullerene order (even, >= 20, != 22)"});
  }
  return out;
}

[[noreturn]] void throw_for(const ValidationFailure& f) {
  switch (f.check) {
    case Check::IdRange: throw VertexOutOfRange(f.message);
    case Check::Degree: throw DegreeError(f.message);
    case Check::SelfLoop: throw SelfLoopError(f.message);
    case Check::ParallelEdge: throw ParallelEdgeError(f.message);
    case Check::Asymmetry: throw AsymmetryError(f.message);
    case Check::Connectivity: throw DisconnectedError(f.message);
    case Check::Order: throw OrderError(f.message);
    default: throw EmbeddingError(f.message);
  }
}

unsigned slot_in(const Rotation& r, Vertex u) {
  for (unsigned i = 0; i < 3; ++i) {
    if (r[i] == u) return i;
  }
  throw VertexOutOfRange(std::to_string(u) + " is not a neighbour");
}

FaceSet trace_rotation(std::span<const Rotation> rot, bool strict) {
  const std::size_t darts = 3 * rot.size();
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  FaceSet fs;
  fs.dart_face.assign(darts, unset);

  for (std::size_t start = 0; start < darts; ++start) {
    if (fs.dart_face[start] != unset) continue;
    const auto face_id = static_cast<std::uint32_t>(fs.faces.size());
    std::vector<Vertex> face;
    std::size_t d = start;
    do {
      if (fs.dart_face[d] != unset || face.size() > darts) {
        throw EmbeddingError("face walk from dart " + std::to_string(start) + " does not close");
      }
      fs.dart_face[d] = face_id;
      const auto u = static_cast<Vertex>(d / 3);
      const Vertex v = rot[u][d % 3];
      face.push_back(u);
      const unsigned back = slot_in(rot[v], u);
      d = 3 * static_cast<std::size_t>(v) + (back + 1) % 3;
    } while (d != start);

    if (face.size() == 5) {
      ++fs.pentagon_count;
    } else if (face.size() == 6) {
      ++fs.hexagon_count;
    } else if (strict) {
      throw EmbeddingError("face of size " + std::to_string(face.size()) + " through vertex " +
                           std::to_string(face.front()));
    }
    fs.faces.push_back(std::move(face));
  }
  return fs;
}

void add_face_failures(std::span<const Rotation> rot, ValidationReport& report) {
  FaceSet fs;
  try {
    fs = trace_rotation(rot, false);
  } catch (const EmbeddingError& e) {
    report.failures.push_back({Check::Euler, e.what()});
    return;
  }
  const auto n = static_cast<long long>(rot.size());
  const auto f = static_cast<long long>(fs.size());
  report.face_count = fs.size();
  report.pentagon_count = fs.pentagon_count;
  report.hexagon_count = fs.hexagon_count;

  const long long euler = n - 3 * n / 2 + f;
  if (euler != 2) {
    report.failures.push_back({Check::Euler, "V - E + F = " + std::to_string(euler) + " with " +
                                                 std::to_string(f) + " faces; rotation is not planar"});
  }
  const std::size_t other = fs.size() - fs.pentagon_count - fs.hexagon_count;
  if (other != 0) {
    std::ostringstream msg;
    msg << other << " face(s) not of size 5 or 6 (sizes:";
    for (const auto& face : fs.faces) {
      if (face.size() != 5 && face.size() != 6) msg << ' ' << face.size();
    }
    msg << ')';
    report.failures.push_back({Check::FaceSize, msg.str()});
  }
  if (fs.pentagon_count != 12) {
    report.failures.push_back(
        {Check::PentagonCount, std::to_string(fs.pentagon_count) + " pentagons instead of 12"});
  }
}

}  // namespace

const char* to_string(Check check) {
  switch (check) {
    case Check::IdRange: return "id-range";
    case Check::Degree: return "degree";
    case Check::SelfLoop: return "self-loop";
    case Check::ParallelEdge: return "parallel-edge";
    case Check::Asymmetry: return "asymmetry";
    case Check::Connectivity: return "connectivity";
    case Check::Order: return "order";
    case Check::Euler: return "euler";
    case Check::FaceSize: return "face-size";
    case Check::PentagonCount: return "pentagon-count";
  }
  return "unknown";
}

bool ValidationReport::failed(Check check) const {
  return std::any_of(failures.begin(), failures.end(),
                     [check](const ValidationFailure& f) { return f.check == check; });
}

FullereneGraph FullereneGraph::from_adjacency(std::span<const std::vector<Vertex>> lists,
                                              std::string label) {
  const auto failures = structural_failures(lists);
  if (!failures.empty()) throw_for(failures.front());
  std::vector<Rotation> rot(lists.size());
  for (std::size_t v = 0; v < lists.size(); ++v) {
    std::copy(lists[v].begin(), lists[v].end(), rot[v].begin());
  }
  return FullereneGraph(std::move(rot), std::move(label));
}

FullereneGraph FullereneGraph::from_rotation(std::vector<Rotation> rotation, std::string label) {
  const auto failures = structural_failures(rotation);
  if (!failures.empty()) throw_for(failures.front());
  return FullereneGraph(std::move(rotation), std::move(label));
}

unsigned FullereneGraph::slot_of(Vertex v, Vertex u) const {
  if (v >= order()) throw VertexOutOfRange(vertex_str(v) + " out of range");
  return slot_in(rotation_[v], u);
}

FullereneGraph FullereneGraph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != order()) throw VertexOutOfRange("permutation size does not match order");
  std::vector<Rotation> rot(order());
  for (std::size_t v = 0; v < order(); ++v) {
    for (unsigned i = 0; i < 3; ++i) rot[perm[v]][i] = perm[rotation_[v][i]];
  }
  return from_rotation(std::move(rot), label_);
}

FaceSet trace_faces(const FullereneGraph& g, bool strict) {
  return trace_rotation(g.rotation(), strict);
}

ValidationReport validate_adjacency(std::span<const std::vector<Vertex>> lists) {
  ValidationReport report;
  report.order = lists.size();
  report.failures = structural_failures(lists);

  const bool traceable = std::none_of(report.failures.begin(), report.failures.end(), [](const auto& f) {
    return f.check == Check::IdRange || f.check == Check::Degree || f.check == Check::SelfLoop ||
           f.check == Check::ParallelEdge || f.check == Check::Asymmetry;
  });
  if (traceable) {
    std::vector<Rotation> rot(lists.size());
    for (std::size_t v = 0; v < lists.size(); ++v) {
      std::copy(lists[v].begin(), lists[v].end(), rot[v].begin());
    }
    add_face_failures(rot, report);
  }
  return report;
}

ValidationReport validate_fullerene(const FullereneGraph& g) {
  ValidationReport report;
  report.order = g.order();
  report.failures = structural_failures(g.rotation());
  add_face_failures(g.rotation(), report);
  return report;
}

}  // namespace fullwiener
