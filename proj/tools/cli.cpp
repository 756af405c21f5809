#include "cli.hpp"

#include "fullwiener/families.hpp"
#include "fullwiener/metrics.hpp"
#include "fullwiener/pentagons.hpp"
#include "fullwiener/planar_code.hpp"
#include "fullwiener/scan.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <zlib.h>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

namespace fullwiener::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Pass-through input buffer that keeps a running CRC-32 of everything read.
class Crc32Buf : public std::streambuf {
 public:
  explicit Crc32Buf(std::streambuf* src) : src_(src) {}

  std::uint32_t crc() const { return static_cast<std::uint32_t>(crc_); }
  std::uint64_t bytes() const { return bytes_; }

  void drain() {
    while (underflow() != traits_type::eof()) setg(eback(), egptr(), egptr());
  }

 protected:
  int_type underflow() override {
    if (gptr() < egptr()) return traits_type::to_int_type(*gptr());
    const auto got = src_->sgetn(buf_.data(), static_cast<std::streamsize>(buf_.size()));
    if (got <= 0) return traits_type::eof();
    crc_ = crc32(crc_, reinterpret_cast<const Bytef*>(buf_.data()), static_cast<uInt>(got));
    bytes_ += static_cast<std::uint64_t>(got);
    setg(buf_.data(), buf_.data(), buf_.data() + got);
    return traits_type::to_int_type(*gptr());
  }

 private:
  std::streambuf* src_;
  std::array<char, 1 << 16> buf_{};
  uLong crc_ = crc32(0L, Z_NULL, 0);
  std::uint64_t bytes_ = 0;
};

class Input {
 public:
  Input(const std::string& path, std::istream& stdin_stream) {
    if (path == "-") {
      stream_ = &stdin_stream;
    } else {
      file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
      if (!*file_) throw IoFailure("cannot open input '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::istream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_ = nullptr;
};

class Output {
 public:
  Output(const std::string& path, std::ostream& stdout_stream) {
    if (path.empty() || path == "-") {
      stream_ = &stdout_stream;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw IoFailure("cannot open output '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }
  void finish() {
    stream_->flush();
    if (!*stream_) throw IoFailure("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

unsigned default_workers() {
  if (const char* env = std::getenv("FULLWIENER_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return static_cast<unsigned>(w);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string hex32(std::uint32_t v) {
  std::ostringstream s;
  s << std::hex;
  s.width(8);
  s.fill('0');
  s << v;
  return s.str();
}

// ---------------------------------------------------------------- validate

int cmd_validate(const std::string& input, Streams io) {
  Input in(input, io.in);
  PlanarCodeReader reader(in.get());
  Output out("-", io.out);
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool truncated = false;

  while (true) {
    std::optional<PlanarCodeRecord> rec;
    try {
      rec = reader.next_record();
    } catch (const CodecError& e) {
      out.get() << "record " << e.ordinal() << " @ byte " << e.offset() << ": FAIL [framing] "
                << e.what() << '\n';
      ++failed;
      truncated = true;
      break;
    }
    if (!rec) break;

    std::ostringstream line;
    line << "record " << rec->ordinal << " @ byte " << rec->offset << ": ";
    try {
      const auto lists = decode_lists(*rec);
      const auto report = validate_adjacency(lists);
      line << "n=" << lists.size();
      if (report.ok()) {
        line << " PASS pentagons=" << report.pentagon_count << " hexagons=" << report.hexagon_count;
        ++passed;
      } else {
        line << " FAIL";
        for (const auto& f : report.failures) line << " [" << to_string(f.check) << "] " << f.message << ';';
        ++failed;
      }
    } catch (const CodecError& e) {
      line << "FAIL [decode] " << e.what();
      ++failed;
    }
    out.get() << line.str() << '\n';
  }
  out.get() << passed + failed << " record(s): " << passed << " passed, " << failed << " failed"
            << (truncated ? " (stream truncated)" : "") << '\n';
  out.finish();
  return failed == 0 ? kSuccess : kValidationFailure;
}

// ----------------------------------------------------------------- metrics

struct MetricsOptions {
  std::string input = "-";
  std::string output = "-";
  std::string format = "csv";
  bool per_vertex = false;
  bool pentagons = false;
};

int cmd_metrics(const MetricsOptions& opt, Streams io) {
  Input in(opt.input, io.in);
  Output out(opt.output, io.out);
  PlanarCodeReader reader(in.get());
  DistanceEngine engine;
  bool any_error = false;
  ordered_json rows = ordered_json::array();

  if (opt.format == "csv") {
    if (opt.per_vertex) {
      out.get() << "graph,vertex,tr,ecc\n";
    } else {
      out.get() << (opt.pentagons ? "n,W,C_W,D,N_p,N_5,ipr\n" : "n,W,C_W,D\n");
    }
  }

  while (true) {
    std::optional<PlanarCodeRecord> rec;
    try {
      rec = reader.next_record();
    } catch (const CodecError& e) {
      io.err << "error: " << e.what() << '\n';
      any_error = true;
      break;
    }
    if (!rec) break;

    GraphReport r;
    try {
      const auto g = decode_record(*rec);
      engine.fill(g, r);
      if (opt.pentagons) r.pentagons = pentagon_stats(trace_faces(g, true));
    } catch (const std::exception& e) {
      io.err << "error: record " << rec->ordinal << ": " << e.what() << '\n';
      any_error = true;
      continue;
    }

    if (opt.format == "json") {
      ordered_json j;
      j["record"] = rec->ordinal;
      j["n"] = r.order;
      j["W"] = r.wiener;
      j["C_W"] = r.complexity;
      j["D"] = r.diameter;
      if (r.pentagons) {
        j["N_p"] = r.pentagons->parts;
        j["N_5"] = r.pentagons->isolated;
        j["ipr"] = r.pentagons->ipr;
      }
      if (opt.per_vertex) {
        j["transmissions"] = r.transmissions.transmission;
        j["eccentricities"] = r.transmissions.eccentricity;
      }
      rows.push_back(std::move(j));
    } else if (opt.per_vertex) {
      for (std::size_t v = 0; v < r.order; ++v) {
        out.get() << rec->ordinal << ',' << v << ',' << r.transmissions.transmission[v] << ','
                  << r.transmissions.eccentricity[v] << '\n';
      }
    } else {
      out.get() << r.order << ',' << r.wiener << ',' << r.complexity << ',' << r.diameter;
      if (r.pentagons) {
        out.get() << ',' << r.pentagons->parts << ',' << r.pentagons->isolated << ','
                  << (r.pentagons->ipr ? "true" : "false");
      }
      out.get() << '\n';
    }
  }
  if (opt.format == "json") out.get() << rows.dump(2) << '\n';
  out.finish();
  return any_error ? kValidationFailure : kSuccess;
}

// ------------------------------------------------------------------ family

struct FamilyOptions {
  std::string type;
  std::optional<unsigned> k;
  std::optional<std::uint64_t> n;
  std::string emit = "table";
  std::string output = "-";
  bool wide = false;
  bool header = false;
};

FamilyKind require_kind(const std::string& text) {
  const auto kind = parse_family(text);
  if (!kind) throw UsageError("unknown family type '" + text + "' (expected a, b, c1, c2, d1, d2)");
  return *kind;
}

int cmd_family(const FamilyOptions& opt, Streams io) {
  const FamilyKind kind = require_kind(opt.type);
  if (opt.k.has_value() == opt.n.has_value()) throw UsageError("give exactly one of --k or --n");

  std::uint64_t n = 0;
  if (opt.k) {
    if (kind == FamilyKind::A) {
      n = 10ull * *opt.k;
    } else if (kind == FamilyKind::B) {
      n = 6ull * *opt.k - 4;
    } else {
      throw UsageError("--k is defined for types a and b only; use --n");
    }
  } else {
    n = *opt.n;
  }
  if (!in_family(kind, n)) {
    throw OrderNotInFamily("OrderNotInFamily: order " + std::to_string(n) + " is not in family " +
                           std::string(to_string(kind)));
  }

  Output out(opt.output, io.out);
  if (opt.emit == "table") {
    const auto row = family_row(kind, n);
    out.get() << "n,kind,W,C_W,D\n"
              << row.n << ',' << to_string(row.kind) << ',' << row.wiener << ',' << row.complexity
              << ',' << row.diameter << '\n';
  } else {
    if (kind != FamilyKind::A) {
      throw UsageError("only type a has an explicit constructor; use --emit table for type " +
                       std::string(to_string(kind)));
    }
    const auto g = construct_type_a(static_cast<unsigned>(n / 10));
    if (opt.emit == "planarcode") {
      if (opt.header) write_planar_code_header(out.get());
      write_planar_code(g, out.get(), opt.wide || g.order() > 255);
    } else {
      const auto r = report(g);
      out.get() << "n,W,C_W,D\n"
                << r.order << ',' << r.wiener << ',' << r.complexity << ',' << r.diameter << '\n';
    }
  }
  out.finish();
  return kSuccess;
}

int cmd_family_table(std::uint64_t max_n, const std::string& format, const std::string& output,
                     Streams io) {
  Output out(output, io.out);
  const auto rows = family_table(max_n);
  if (format == "json") {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) {
      j.push_back({{"n", r.n},
                   {"kind", std::string(to_string(r.kind))},
                   {"W", r.wiener},
                   {"C_W", r.complexity},
                   {"D", r.diameter},
                   {"provenance", std::string(to_string(r.provenance))}});
    }
    out.get() << j.dump(2) << '\n';
  } else {
    out.get() << "n,kind,W,C_W,D,provenance\n";
    for (const auto& r : rows) {
      out.get() << r.n << ',' << to_string(r.kind) << ',' << r.wiener << ',' << r.complexity << ','
                << r.diameter << ',' << to_string(r.provenance) << '\n';
    }
  }
  out.finish();
  return kSuccess;
}

// -------------------------------------------------------------------- scan

struct ScanCliOptions {
  std::string input = "-";
  std::string output = "-";
  std::string report = "summary";
  std::string format = "csv";
  std::optional<unsigned> workers;
  std::size_t retain = 1;
  bool keep_all_argmax = false;
  bool only_max_complexity = false;
};

int cmd_scan(const ScanCliOptions& opt, Streams io) {
  Input in(opt.input, io.in);
  Crc32Buf crc(in.get().rdbuf());
  std::istream counted(&crc);

  ScanOptions so;
  so.workers = opt.workers.value_or(default_workers());
  if (so.workers < 1) throw UsageError("--workers must be at least 1");
  so.retain_limit = opt.keep_all_argmax ? std::numeric_limits<std::size_t>::max() : opt.retain;

  ScanResult result = scan(counted, so);
  crc.drain();
  for (const auto& m : result.malformed) {
    io.err << "warning: skipped record " << m.ordinal << " @ byte " << m.offset << ": " << m.reason
           << '\n';
  }

  Output out(opt.output, io.out);
  auto& os = out.get();
  if (opt.report == "argmax") {
    for (const auto& [n, d] : result.by_order) {
      for (const auto& g : d.argmax) {
        os.write(reinterpret_cast<const char*>(g.planar_code.data()),
                 static_cast<std::streamsize>(g.planar_code.size()));
      }
    }
  } else if (opt.format == "json") {
    ordered_json root;
    root["provenance"] = {{"input", opt.input},
                          {"crc32", hex32(crc.crc())},
                          {"bytes", crc.bytes()}};
    const auto body = ordered_json::parse(summary_json(result));
    for (const auto& [key, value] : body.items()) root[key] = value;
    if (opt.report == "pentagons") {
      const auto h = pentagon_histograms(result, opt.only_max_complexity);
      ordered_json p;
      p["only_max_complexity"] = opt.only_max_complexity;
      p["N_p"] = ordered_json::object();
      p["N_5"] = ordered_json::object();
      for (const auto& [k, v] : h.parts) p["N_p"][std::to_string(k)] = v;
      for (const auto& [k, v] : h.isolated) p["N_5"][std::to_string(k)] = v;
      root["pentagons"] = std::move(p);
    }
    os << root.dump(2) << '\n';
  } else if (opt.report == "summary") {
    write_summary_csv(result, os);
  } else if (opt.report == "histogram") {
    write_histogram_csv(result, os);
  } else if (opt.report == "wiener") {
    write_wiener_csv(result, os);
  } else if (opt.report == "pentagons") {
    write_pentagon_csv(pentagon_histograms(result, opt.only_max_complexity), os);
  }
  out.finish();
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Distance invariants and pentagon statistics of fullerene graphs", "fullwiener"};
  app.require_subcommand(1);

  std::string validate_input = "-";
  auto* validate = app.add_subcommand("validate", "Check that every planar-code record is a fullerene graph");
  validate->add_option("input", validate_input, "planar-code file, - for stdin");

  MetricsOptions mo;
  auto* metrics = app.add_subcommand("metrics", "Wiener index, complexity and diameter per graph");
  metrics->add_option("input", mo.input, "planar-code file, - for stdin");
  metrics->add_option("-o,--output", mo.output, "output file, - for stdout");
  metrics->add_option("--format", mo.format)->check(CLI::IsMember({"csv", "json"}));
  metrics->add_flag("--per-vertex", mo.per_vertex, "emit per-vertex transmissions and eccentricities");
  metrics->add_flag("--pentagons", mo.pentagons, "append N_p, N_5 and IPR columns");

  FamilyOptions fo;
  auto* family = app.add_subcommand("family", "Construct or evaluate a nanotubical family member");
  family->add_option("--type", fo.type, "a, b, c1, c2, d1 or d2")->required();
  family->add_option("--k", fo.k, "family parameter (types a and b)");
  family->add_option("--n", fo.n, "order");
  family->add_option("--emit", fo.emit)->check(CLI::IsMember({"planarcode", "metrics", "table"}));
  family->add_option("-o,--output", fo.output, "output file, - for stdout");
  family->add_flag("--wide", fo.wide, "write the 16-bit planar-code variant");
  family->add_flag("--header", fo.header, "prefix planar code with the >>planar_code<< header");

  std::uint64_t max_n = 216;
  std::string table_format = "csv";
  std::string table_output = "-";
  auto* table = app.add_subcommand("family-table", "Closed-form W, C_W, D for every family order");
  table->add_option("--max-n", max_n, "largest order")->required();
  table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("-o,--output", table_output, "output file, - for stdout");

  ScanCliOptions so;
  auto* scan_cmd = app.add_subcommand("scan", "Aggregate complexity and Wiener statistics over a file");
  scan_cmd->add_option("input", so.input, "planar-code file, - for stdin");
  scan_cmd->add_option("-o,--output", so.output, "output file, - for stdout");
  scan_cmd->add_option("--report", so.report)
      ->check(CLI::IsMember({"summary", "histogram", "wiener", "pentagons", "argmax"}));
  scan_cmd->add_option("--format", so.format)->check(CLI::IsMember({"csv", "json"}));
  scan_cmd->add_option("--workers", so.workers, "worker threads (default: hardware concurrency)");
  scan_cmd->add_option("--retain", so.retain, "max-W graphs kept per order")->check(CLI::PositiveNumber);
  scan_cmd->add_flag("--keep-all-argmax", so.keep_all_argmax, "keep every graph attaining W_m");
  scan_cmd->add_flag("--only-max-complexity", so.only_max_complexity,
                     "pentagon report over graphs attaining C_n only");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    io.err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (validate->parsed()) return cmd_validate(validate_input, io);
    if (metrics->parsed()) return cmd_metrics(mo, io);
    if (family->parsed()) return cmd_family(fo, io);
    if (table->parsed()) return cmd_family_table(max_n, table_format, table_output, io);
    if (scan_cmd->parsed()) return cmd_scan(so, io);
  } catch (const UsageError& e) {
    io.err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const FamilyError& e) {
    io.err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IoFailure& e) {
    io.err << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const ScanError& e) {
    io.err << "error: " << e.what() << '\n';
    return dynamic_cast<const AllRecordsMalformed*>(&e) ? kValidationFailure : kIoError;
  } catch (const CodecError& e) {
    io.err << "error: " << e.what() << '\n';
    return kValidationFailure;
  }
  return kUsageError;
}

}  // namespace fullwiener::cli
