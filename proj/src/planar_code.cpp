#include "fullwiener/planar_code.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace fullwiener {

namespace {

constexpr std::string_view kLittleEndianHeader = ">>planar_code le<<";
constexpr std::size_t kMaxHeaderLength = 32;

std::string at(std::size_t ordinal, std::uint64_t offset) {
  return " (record " + std::to_string(ordinal) + " at byte " + std::to_string(offset) + ")";
}

}  // namespace

CodecError::CodecError(const std::string& what, std::size_t ordinal, std::uint64_t offset)
    : std::runtime_error(what + at(ordinal, offset)), ordinal_(ordinal), offset_(offset) {}

PlanarCodeReader::PlanarCodeReader(std::istream& in) : in_(in) {}

int PlanarCodeReader::get_byte() {
  if (!pending_.empty()) {
    const int b = pending_.front();
    pending_.erase(pending_.begin());
    ++pos_;
    return b;
  }
  const auto c = in_.rdbuf()->sbumpc();
  if (c == std::char_traits<char>::eof()) return -1;
  ++pos_;
  return static_cast<unsigned char>(c);
}

void PlanarCodeReader::consume_header() {
  header_checked_ = true;
  // ">>planar_code" cannot open a valid record: a narrow record of order 62
  // ('>') never names vertex 112 ('p').
  constexpr std::string_view magic = ">>planar_code";
  auto* buf = in_.rdbuf();
  std::string seen;
  while (seen.size() < magic.size()) {
    const auto c = buf->sgetc();
    if (c == std::char_traits<char>::eof() || static_cast<char>(c) != magic[seen.size()]) break;
    seen.push_back(static_cast<char>(buf->sbumpc()));
  }
  if (seen.size() < magic.size()) {
    pending_.assign(seen.begin(), seen.end());
    return;
  }
  std::string header = seen;
  while (header.size() < kMaxHeaderLength && !header.ends_with("<<")) {
    const auto c = buf->sbumpc();
    if (c == std::char_traits<char>::eof()) break;
    header.push_back(static_cast<char>(c));
  }
  pos_ = header.size();
  if (header != kPlanarCodeHeader && header != kLittleEndianHeader) {
    throw BadHeader("unrecognised header '" + header + "'", 0, 0);
  }
  header_present_ = true;
}

std::optional<PlanarCodeRecord> PlanarCodeReader::next_record() {
  if (!header_checked_) consume_header();

  PlanarCodeRecord rec;
  rec.ordinal = records_;
  rec.offset = pos_;
  const int lead = get_byte();
  if (lead < 0) return std::nullopt;

  auto truncated = [&] {
    return TruncatedRecord("stream ends inside record", rec.ordinal, rec.offset);
  };

  rec.bytes.push_back(static_cast<std::uint8_t>(lead));
  std::size_t order = static_cast<std::size_t>(lead);
  if (lead == 0) {
    rec.wide = true;
    for (int i = 0; i < 2; ++i) {
      const int b = get_byte();
      if (b < 0) throw truncated();
      rec.bytes.push_back(static_cast<std::uint8_t>(b));
    }
    order = rec.bytes[1] | (static_cast<std::size_t>(rec.bytes[2]) << 8);
  }
  rec.bytes.reserve(rec.bytes.size() + (rec.wide ? 8 : 4) * order);

  const std::size_t unit = rec.wide ? 2 : 1;
  std::size_t terminators = 0;
  std::size_t run = 0;
  while (terminators < order) {
    unsigned value = 0;
    for (std::size_t i = 0; i < unit; ++i) {
      const int b = get_byte();
      if (b < 0) throw truncated();
      rec.bytes.push_back(static_cast<std::uint8_t>(b));
      value |= static_cast<unsigned>(b) << (8 * i);
    }
    if (value == 0) {
      ++terminators;
      run = 0;
    } else if (++run > order) {
      // No simple graph has a vertex of degree >= n; the framing is lost.
      throw NonCubicRecord("neighbour list longer than the order", rec.ordinal, rec.offset);
    }
  }
  ++records_;
  return rec;
}

std::vector<std::vector<Vertex>> decode_lists(const PlanarCodeRecord& record) {
  const auto& b = record.bytes;
  const std::size_t unit = record.wide ? 2 : 1;
  std::size_t i = record.wide ? 3 : 1;
  const std::size_t order = record.wide ? (b.at(1) | (static_cast<std::size_t>(b.at(2)) << 8)) : b.at(0);

  std::vector<std::vector<Vertex>> lists(order);
  std::size_t v = 0;
  while (v < order) {
    if (i + unit > b.size()) {
      throw TruncatedRecord("record bytes end early", record.ordinal, record.offset);
    }
    const unsigned value = unit == 1 ? b[i] : (b[i] | (static_cast<unsigned>(b[i + 1]) << 8));
    i += unit;
    if (value == 0) {
      ++v;
      continue;
    }
    if (value > order) {
      throw IdOutOfRange("vertex " + std::to_string(v + 1) + " names " + std::to_string(value) +
                             " but order is " + std::to_string(order),
                         record.ordinal, record.offset);
    }
    lists[v].push_back(static_cast<Vertex>(value - 1));
  }
  return lists;
}

FullereneGraph decode_record(const PlanarCodeRecord& record) {
  const auto lists = decode_lists(record);
  std::vector<Rotation> rot(lists.size());
  for (std::size_t v = 0; v < lists.size(); ++v) {
    if (lists[v].size() != 3) {
      throw NonCubicRecord("vertex " + std::to_string(v + 1) + " has " +
                               std::to_string(lists[v].size()) + " neighbours",
                           record.ordinal, record.offset);
    }
    std::copy(lists[v].begin(), lists[v].end(), rot[v].begin());
  }
  try {
    return FullereneGraph::from_rotation(std::move(rot), "offset:" + std::to_string(record.offset));
  } catch (const GraphError& e) {
    throw InvalidGraphRecord(e.what(), record.ordinal, record.offset);
  }
}

std::optional<FullereneGraph> PlanarCodeReader::read_next() {
  auto rec = next_record();
  if (!rec) return std::nullopt;
  auto g = decode_record(*rec);
  ++graphs_;
  return g;
}

std::vector<std::uint8_t> encode_record(const FullereneGraph& g, bool wide) {
  const std::size_t n = g.order();
  if (n > 0xFFFF) throw OrderTooLargeForNarrow("order " + std::to_string(n) + " exceeds 65535");
  if (!wide && n > 255) {
    throw OrderTooLargeForNarrow("order " + std::to_string(n) + " needs the wide variant");
  }
  std::vector<std::uint8_t> out;
  if (wide) {
    out.reserve(3 + 8 * n);
    auto put16 = [&out](std::size_t x) {
      out.push_back(static_cast<std::uint8_t>(x & 0xFF));
      out.push_back(static_cast<std::uint8_t>(x >> 8));
    };
    out.push_back(0);
    put16(n);
    for (const auto& r : g.rotation()) {
      for (Vertex u : r) put16(u + 1);
      put16(0);
    }
  } else {
    out.reserve(1 + 4 * n);
    out.push_back(static_cast<std::uint8_t>(n));
    for (const auto& r : g.rotation()) {
      for (Vertex u : r) out.push_back(static_cast<std::uint8_t>(u + 1));
      out.push_back(0);
    }
  }
  return out;
}

std::size_t write_planar_code(const FullereneGraph& g, std::ostream& sink, bool wide) {
  const auto bytes = encode_record(g, wide);
  sink.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  return bytes.size();
}

std::size_t write_planar_code_header(std::ostream& sink) {
  sink.write(kPlanarCodeHeader.data(), static_cast<std::streamsize>(kPlanarCodeHeader.size()));
  return kPlanarCodeHeader.size();
}

std::vector<FullereneGraph> read_all(std::span<const std::uint8_t> bytes) {
  std::istringstream in(std::string(bytes.begin(), bytes.end()));
  PlanarCodeReader reader(in);
  std::vector<FullereneGraph> out;
  while (auto g = reader.read_next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace fullwiener
