#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fullwiener {

using Vertex = std::uint32_t;
using Rotation = std::array<Vertex, 3>;

// Smallest fullerene; orders 20 and every even n >= 24 exist.
inline constexpr std::size_t kMinFullereneOrder = 20;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeError : public GraphError {
 public:
  using GraphError::GraphError;
};
class AsymmetryError : public GraphError {
 public:
  using GraphError::GraphError;
};
class SelfLoopError : public GraphError {
 public:
  using GraphError::GraphError;
};
class ParallelEdgeError : public GraphError {
 public:
  using GraphError::GraphError;
};
class DisconnectedError : public GraphError {
 public:
  using GraphError::GraphError;
};
class OrderError : public GraphError {
 public:
  using GraphError::GraphError;
};
class VertexOutOfRange : public GraphError {
 public:
  using GraphError::GraphError;
};
class EmbeddingError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Cubic graph stored as a rotation system: for each vertex the clockwise
/// cyclic order of its three neighbours. Vertex ids are 0-based.
///
/// Construction checks 3-regularity, symmetry, simplicity, connectivity and
/// the fullerene order rule (even, >= 20, != 22). Planarity of the rotation
/// and face sizes are checked separately by validate_fullerene().
class FullereneGraph {
 public:
  static FullereneGraph from_adjacency(std::span<const std::vector<Vertex>> lists,
                                       std::string label = {});
  static FullereneGraph from_rotation(std::vector<Rotation> rotation, std::string label = {});

  std::size_t order() const { return rotation_.size(); }
  std::size_t edge_count() const { return 3 * rotation_.size() / 2; }

  const Rotation& neighbors(Vertex v) const { return rotation_[v]; }
  const std::vector<Rotation>& rotation() const { return rotation_; }
  const std::string& label() const { return label_; }

  /// Slot (0..2) of `u` in the rotation at `v`; u must be a neighbour of v.
  unsigned slot_of(Vertex v, Vertex u) const;
  /// Neighbour following `u` in the rotation at `v`.
  Vertex successor(Vertex v, Vertex u) const { return rotation_[v][(slot_of(v, u) + 1) % 3]; }

  /// Same rotation, vertex v renamed to perm[v].
  FullereneGraph relabeled(std::span<const Vertex> perm) const;

  bool operator==(const FullereneGraph& other) const { return rotation_ == other.rotation_; }

 private:
  explicit FullereneGraph(std::vector<Rotation> rotation, std::string label)
      : rotation_(std::move(rotation)), label_(std::move(label)) {}

  std::vector<Rotation> rotation_;
  std::string label_;
};

/// Faces of a rotation system. A dart is the directed edge v -> neighbors(v)[slot],
/// indexed 3*v + slot.
struct FaceSet {
  std::vector<std::vector<Vertex>> faces;
  std::vector<std::uint32_t> dart_face;
  std::size_t pentagon_count = 0;
  std::size_t hexagon_count = 0;

  std::size_t size() const { return faces.size(); }
};

/// Traces every face by the rule: after dart (u, v) comes (v, w) where w follows u
/// in the rotation at v. With `strict`, a face whose length is not 5 or 6 throws
/// EmbeddingError.
FaceSet trace_faces(const FullereneGraph& g, bool strict = false);

enum class Check {
  IdRange,
  Degree,
  SelfLoop,
  ParallelEdge,
  Asymmetry,
  Connectivity,
  Order,
  Euler,
  FaceSize,
  PentagonCount,
};

const char* to_string(Check check);

struct ValidationFailure {
  Check check;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationFailure> failures;
  std::size_t order = 0;
  std::size_t face_count = 0;
  std::size_t pentagon_count = 0;
  std::size_t hexagon_count = 0;

  bool ok() const { return failures.empty(); }
  bool failed(Check check) const;
};

/// Checks raw neighbour lists and, if they form a simple connected cubic graph,
/// the embedding they define. Collects every failure instead of stopping.
ValidationReport validate_adjacency(std::span<const std::vector<Vertex>> lists);
ValidationReport validate_fullerene(const FullereneGraph& g);

}  // namespace fullwiener
