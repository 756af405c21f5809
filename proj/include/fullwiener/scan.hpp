#pragma once

#include "fullwiener/metrics.hpp"
#include "fullwiener/planar_code.hpp"

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fullwiener {

class ScanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class AllRecordsMalformed : public ScanError {
 public:
  using ScanError::ScanError;
};

using Histogram = std::map<std::uint64_t, std::uint64_t>;

/// A retained graph: its planar-code record and full report.
struct RetainedGraph {
  std::size_t ordinal = 0;
  std::vector<std::uint8_t> planar_code;
  GraphReport report;

  bool operator==(const RetainedGraph&) const = default;
};

/// Aggregate over all scanned graphs of one order.
struct DistributionReport {
  std::size_t order = 0;
  std::uint64_t total = 0;
  Histogram complexity_histogram;  // C_W -> number of graphs

  std::uint32_t max_complexity = 0;       // C_n
  std::uint64_t max_complexity_count = 0; // graphs attaining C_n
  // (W, D) -> count over graphs attaining C_n.
  std::map<std::pair<WienerIndex, Distance>, std::uint64_t> wiener_at_max_complexity;
  Histogram parts_at_max_complexity;     // N_p -> count, graphs attaining C_n
  Histogram isolated_at_max_complexity;  // N_5 -> count, graphs attaining C_n

  WienerIndex max_wiener = 0;  // W_m
  std::uint32_t complexity_of_max_wiener = 0;
  Distance diameter_of_max_wiener = 0;
  std::vector<RetainedGraph> argmax;  // max-W graphs in file order

  Histogram parts_histogram;     // N_p over all graphs
  Histogram isolated_histogram;  // N_5 over all graphs

  std::uint32_t gap() const { return static_cast<std::uint32_t>(order) - max_complexity; }

  void add(const GraphReport& r, std::size_t ordinal, std::span<const std::uint8_t> record,
           std::size_t retain_limit);
  /// Associative and commutative; `retain_limit` caps the merged argmax list.
  void merge(const DistributionReport& other, std::size_t retain_limit);

  bool operator==(const DistributionReport&) const = default;
};

struct MalformedRecord {
  std::size_t ordinal = 0;
  std::uint64_t offset = 0;
  std::string reason;

  bool operator==(const MalformedRecord&) const = default;
};

struct ScanOptions {
  unsigned workers = 1;
  /// Max-W graphs kept per order; ties keep the earliest records.
  std::size_t retain_limit = 1;
  std::size_t batch_size = 256;
  std::size_t queue_batches = 16;
  /// Stop reading after this many records.
  std::size_t max_records = std::numeric_limits<std::size_t>::max();
};

struct ScanResult {
  std::map<std::size_t, DistributionReport> by_order;
  std::uint64_t records = 0;  // framed records, decoded or not
  std::uint64_t decoded = 0;
  std::vector<MalformedRecord> malformed;  // sorted by ordinal

  void merge(const ScanResult& other, std::size_t retain_limit);
  bool operator==(const ScanResult&) const = default;
};

/// Per-graph analysis used by the scan: distances plus pentagon statistics.
GraphReport analyze(const FullereneGraph& g);

/// Reads every record of `in`, analyzes decodable graphs on `options.workers`
/// threads and merges the partial results deterministically. Malformed
/// records are skipped and listed; a truncated tail ends the scan.
/// Throws AllRecordsMalformed when records exist but none decode.
ScanResult scan(std::istream& in, const ScanOptions& options = {});

/// True iff some scanned order has C_n = n.
bool transmission_irregular_check(const ScanResult& result);
bool transmission_irregular_check(const DistributionReport& report);

struct PentagonHistograms {
  Histogram parts;     // N_p -> count
  Histogram isolated;  // N_5 -> count
};

/// Pentagon histograms summed over all orders, optionally restricted to the
/// graphs attaining the maximal complexity of their order.
PentagonHistograms pentagon_histograms(const ScanResult& result, bool only_max_complexity);
PentagonHistograms pentagon_histograms(std::istream& in, bool only_max_complexity,
                                       const ScanOptions& options = {});

// Serialization. Output depends only on the ScanResult, never on scheduling.
void write_summary_csv(const ScanResult& result, std::ostream& out);
void write_histogram_csv(const ScanResult& result, std::ostream& out);
void write_pentagon_csv(const PentagonHistograms& h, std::ostream& out);
void write_wiener_csv(const ScanResult& result, std::ostream& out);
std::string summary_json(const ScanResult& result, int indent = 2);

}  // namespace fullwiener
