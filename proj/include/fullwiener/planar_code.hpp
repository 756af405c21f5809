#pragma once

#include "fullwiener/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fullwiener {

/// Planar code, as emitted by fullerene generators:
///
///   [">>planar_code<<"]  optional file header
///   record := n  (adj(1) 0) ... (adj(n) 0)
///
/// where n and every vertex id (1-based, clockwise order) is one byte. A record
/// whose first byte is 0 is "wide": n follows as a little-endian uint16 and every
/// id and terminator in that record is a little-endian uint16.
inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

class CodecError : public std::runtime_error {
 public:
  CodecError(const std::string& what, std::size_t ordinal, std::uint64_t offset);

  std::size_t ordinal() const { return ordinal_; }  // 0-based record index
  std::uint64_t offset() const { return offset_; }  // byte offset of the record start

 private:
  std::size_t ordinal_;
  std::uint64_t offset_;
};

class TruncatedRecord : public CodecError {
 public:
  using CodecError::CodecError;
};
class BadHeader : public CodecError {
 public:
  using CodecError::CodecError;
};
class NonCubicRecord : public CodecError {
 public:
  using CodecError::CodecError;
};
class IdOutOfRange : public CodecError {
 public:
  using CodecError::CodecError;
};
/// Record decoded but the graph violates a structural invariant (order rule,
/// asymmetry, ...). The stream stays at the next record boundary.
class InvalidGraphRecord : public CodecError {
 public:
  using CodecError::CodecError;
};

class OrderTooLargeForNarrow : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// One framed record, undecoded.
struct PlanarCodeRecord {
  std::size_t ordinal = 0;
  std::uint64_t offset = 0;
  bool wide = false;
  std::vector<std::uint8_t> bytes;
};

/// Per-vertex neighbour lists (0-based) without any graph validation beyond
/// id range; NonCubicRecord is not raised here so validators can report it.
std::vector<std::vector<Vertex>> decode_lists(const PlanarCodeRecord& record);

/// Decodes and validates one record.
FullereneGraph decode_record(const PlanarCodeRecord& record);

/// Single-consumer reader. Holds at most one record in memory.
class PlanarCodeReader {
 public:
  explicit PlanarCodeReader(std::istream& in);

  /// Frames the next record; std::nullopt at end of stream.
  std::optional<PlanarCodeRecord> next_record();
  /// Frames and decodes the next record.
  std::optional<FullereneGraph> read_next();

  bool header_present() const { return header_present_; }
  std::size_t records_framed() const { return records_; }
  std::size_t graphs_read() const { return graphs_; }
  std::uint64_t position() const { return pos_; }

 private:
  void consume_header();
  int get_byte();

  std::istream& in_;
  std::vector<std::uint8_t> pending_;  // read-ahead from header sniffing
  bool header_checked_ = false;
  bool header_present_ = false;
  std::size_t records_ = 0;
  std::size_t graphs_ = 0;
  std::uint64_t pos_ = 0;
};

/// Serializes one record. Narrow unless `wide` is set; orders above 255 require wide.
std::vector<std::uint8_t> encode_record(const FullereneGraph& g, bool wide = false);

/// Writes one record and returns the number of bytes written.
std::size_t write_planar_code(const FullereneGraph& g, std::ostream& sink, bool wide = false);
std::size_t write_planar_code_header(std::ostream& sink);

/// Reads every graph of an in-memory buffer.
std::vector<FullereneGraph> read_all(std::span<const std::uint8_t> bytes);

}  // namespace fullwiener
