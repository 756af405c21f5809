#include "fullwiener/scan.hpp"

#include <json.hpp>

#include <algorithm>
#include <condition_variable>
#include <deque>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <thread>

namespace fullwiener {

namespace {

void add_histograms(Histogram& into, const Histogram& from) {
  for (const auto& [key, count] : from) into[key] += count;
}

void merge_retained(std::vector<RetainedGraph>& into, const std::vector<RetainedGraph>& from,
                    std::size_t limit) {
  into.insert(into.end(), from.begin(), from.end());
  std::sort(into.begin(), into.end(),
            [](const RetainedGraph& a, const RetainedGraph& b) { return a.ordinal < b.ordinal; });
  if (into.size() > limit) into.resize(limit);
}

template <class T>
class BoundedQueue {
 public:
  explicit BoundedQueue(std::size_t capacity) : capacity_(capacity) {}

  void push(T item) {
    std::unique_lock lock(mutex_);
    not_full_.wait(lock, [&] { return items_.size() < capacity_; });
    items_.push_back(std::move(item));
    not_empty_.notify_one();
  }

  std::optional<T> pop() {
    std::unique_lock lock(mutex_);
    not_empty_.wait(lock, [&] { return !items_.empty() || closed_; });
    if (items_.empty()) return std::nullopt;
    T item = std::move(items_.front());
    items_.pop_front();
    not_full_.notify_one();
    return item;
  }

  void close() {
    std::lock_guard lock(mutex_);
    closed_ = true;
    not_empty_.notify_all();
  }

 private:
  std::size_t capacity_;
  std::deque<T> items_;
  bool closed_ = false;
  std::mutex mutex_;
  std::condition_variable not_empty_;
  std::condition_variable not_full_;
};

class Worker {
 public:
  explicit Worker(std::size_t retain_limit) : retain_limit_(retain_limit) {}

  void process(const PlanarCodeRecord& rec) {
    GraphReport r;
    try {
      const auto g = decode_record(rec);
      const auto faces = trace_faces(g);
      const std::size_t n = g.order();
      if (faces.size() != n / 2 + 2 || faces.pentagon_count != 12 ||
          faces.hexagon_count != n / 2 - 10) {
        result.malformed.push_back({rec.ordinal, rec.offset,
                                    "rotation is not a fullerene embedding (" +
                                        std::to_string(faces.size()) + " faces, " +
                                        std::to_string(faces.pentagon_count) + " pentagons)"});
        return;
      }
      engine_.fill(g, r);
      r.pentagons = pentagon_stats(faces);
    } catch (const CodecError& e) {
      result.malformed.push_back({rec.ordinal, rec.offset, e.what()});
      return;
    }
    ++result.decoded;
    auto& dist = result.by_order[r.order];
    dist.add(r, rec.ordinal, rec.bytes, retain_limit_);
  }

  ScanResult result;

 private:
  std::size_t retain_limit_;
  DistanceEngine engine_;
};

}  // namespace

void DistributionReport::add(const GraphReport& r, std::size_t ordinal,
                             std::span<const std::uint8_t> record, std::size_t retain_limit) {
  if (total == 0) order = r.order;
  ++total;
  ++complexity_histogram[r.complexity];

  if (r.complexity > max_complexity) {
    max_complexity = r.complexity;
    max_complexity_count = 0;
    wiener_at_max_complexity.clear();
    parts_at_max_complexity.clear();
    isolated_at_max_complexity.clear();
  }
  if (r.complexity == max_complexity) {
    ++max_complexity_count;
    ++wiener_at_max_complexity[{r.wiener, r.diameter}];
    if (r.pentagons) {
      ++parts_at_max_complexity[r.pentagons->parts];
      ++isolated_at_max_complexity[r.pentagons->isolated];
    }
  }
  if (r.pentagons) {
    ++parts_histogram[r.pentagons->parts];
    ++isolated_histogram[r.pentagons->isolated];
  }

  if (argmax.empty() || r.wiener > max_wiener) {
    argmax.clear();
    max_wiener = r.wiener;
  }
  if (r.wiener == max_wiener) {
    RetainedGraph kept{ordinal, std::vector<std::uint8_t>(record.begin(), record.end()), r};
    merge_retained(argmax, {std::move(kept)}, std::max<std::size_t>(retain_limit, 1));
    complexity_of_max_wiener = argmax.front().report.complexity;
    diameter_of_max_wiener = argmax.front().report.diameter;
  }
}

void DistributionReport::merge(const DistributionReport& other, std::size_t retain_limit) {
  if (other.total == 0) return;
  if (total == 0) {
    *this = other;
    return;
  }
  total += other.total;
  add_histograms(complexity_histogram, other.complexity_histogram);
  add_histograms(parts_histogram, other.parts_histogram);
  add_histograms(isolated_histogram, other.isolated_histogram);

  if (other.max_complexity > max_complexity) {
    max_complexity = other.max_complexity;
    max_complexity_count = other.max_complexity_count;
    wiener_at_max_complexity = other.wiener_at_max_complexity;
    parts_at_max_complexity = other.parts_at_max_complexity;
    isolated_at_max_complexity = other.isolated_at_max_complexity;
  } else if (other.max_complexity == max_complexity) {
    max_complexity_count += other.max_complexity_count;
    for (const auto& [key, count] : other.wiener_at_max_complexity) wiener_at_max_complexity[key] += count;
    add_histograms(parts_at_max_complexity, other.parts_at_max_complexity);
    add_histograms(isolated_at_max_complexity, other.isolated_at_max_complexity);
  }

  if (other.max_wiener > max_wiener) {
    max_wiener = other.max_wiener;
    argmax = other.argmax;
  } else if (other.max_wiener == max_wiener) {
    merge_retained(argmax, other.argmax, std::max<std::size_t>(retain_limit, 1));
  }
  complexity_of_max_wiener = argmax.front().report.complexity;
  diameter_of_max_wiener = argmax.front().report.diameter;
}

void ScanResult::merge(const ScanResult& other, std::size_t retain_limit) {
  for (const auto& [n, dist] : other.by_order) {
    auto& mine = by_order[n];
    mine.merge(dist, retain_limit);
  }
  records += other.records;
  decoded += other.decoded;
  malformed.insert(malformed.end(), other.malformed.begin(), other.malformed.end());
  std::sort(malformed.begin(), malformed.end(),
            [](const MalformedRecord& a, const MalformedRecord& b) { return a.ordinal < b.ordinal; });
}

GraphReport analyze(const FullereneGraph& g) {
  auto r = report(g);
  r.pentagons = pentagon_stats(trace_faces(g, true));
  return r;
}

ScanResult scan(std::istream& in, const ScanOptions& options) {
  const std::size_t retain = std::max<std::size_t>(options.retain_limit, 1);
  const unsigned workers = std::max(options.workers, 1u);
  PlanarCodeReader reader(in);

  ScanResult result;
  std::uint64_t framed = 0;
  std::vector<MalformedRecord> framing_errors;

  // Frames the next record; a framing error ends the stream.
  auto next = [&]() -> std::optional<PlanarCodeRecord> {
    if (framed >= options.max_records) return std::nullopt;
    try {
      auto rec = reader.next_record();
      if (rec) ++framed;
      return rec;
    } catch (const BadHeader&) {
      throw;
    } catch (const CodecError& e) {
      ++framed;
      framing_errors.push_back({e.ordinal(), e.offset(), e.what()});
      return std::nullopt;
    }
  };

  if (workers == 1) {
    Worker w(retain);
    while (auto rec = next()) w.process(*rec);
    result = std::move(w.result);
  } else {
    BoundedQueue<std::vector<PlanarCodeRecord>> queue(std::max<std::size_t>(options.queue_batches, 1));
    std::vector<Worker> pool(workers, Worker(retain));
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> threads;
      threads.reserve(workers);
      for (auto& w : pool) {
        threads.emplace_back([&queue, &w, &failure, &failure_mutex] {
          while (auto batch = queue.pop()) {
            try {
              for (const auto& rec : *batch) w.process(rec);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
            }
          }
        });
      }
      try {
        std::vector<PlanarCodeRecord> batch;
        const std::size_t batch_size = std::max<std::size_t>(options.batch_size, 1);
        while (auto rec = next()) {
          batch.push_back(std::move(*rec));
          if (batch.size() == batch_size) {
            queue.push(std::move(batch));
            batch.clear();
          }
        }
        if (!batch.empty()) queue.push(std::move(batch));
      } catch (...) {
        queue.close();
        throw;
      }
      queue.close();
    }
    if (failure) std::rethrow_exception(failure);
    for (const auto& w : pool) result.merge(w.result, retain);
  }

  if (in.bad()) throw ScanError("I/O error while reading planar code");
  result.records = framed;
  if (!framing_errors.empty()) {
    ScanResult tail;
    tail.malformed = std::move(framing_errors);
    result.merge(tail, retain);
  }
  if (result.records > 0 && result.decoded == 0) {
    throw AllRecordsMalformed("none of the " + std::to_string(result.records) +
                              " records could be decoded");
  }
  return result;
}

bool transmission_irregular_check(const DistributionReport& report) {
  return report.total > 0 && report.max_complexity == report.order;
}

bool transmission_irregular_check(const ScanResult& result) {
  return std::any_of(result.by_order.begin(), result.by_order.end(),
                     [](const auto& kv) { return transmission_irregular_check(kv.second); });
}

PentagonHistograms pentagon_histograms(const ScanResult& result, bool only_max_complexity) {
  PentagonHistograms h;
  for (const auto& [n, dist] : result.by_order) {
    add_histograms(h.parts, only_max_complexity ? dist.parts_at_max_complexity : dist.parts_histogram);
    add_histograms(h.isolated,
                   only_max_complexity ? dist.isolated_at_max_complexity : dist.isolated_histogram);
  }
  return h;
}

PentagonHistograms pentagon_histograms(std::istream& in, bool only_max_complexity,
                                       const ScanOptions& options) {
  return pentagon_histograms(scan(in, options), only_max_complexity);
}

void write_summary_csv(const ScanResult& result, std::ostream& out) {
  out << "n,C_n,g_n,N,W_m,C_W_of_Wm,D_of_Wm\n";
  for (const auto& [n, d] : result.by_order) {
    out << n << ',' << d.max_complexity << ',' << d.gap() << ',' << d.max_complexity_count << ','
        << d.max_wiener << ',' << d.complexity_of_max_wiener << ',' << d.diameter_of_max_wiener
        << '\n';
  }
}

void write_histogram_csv(const ScanResult& result, std::ostream& out) {
  const bool keyed = result.by_order.size() > 1;
  out << (keyed ? "n,C_W,N\n" : "C_W,N\n");
  for (const auto& [n, d] : result.by_order) {
    for (const auto& [cw, count] : d.complexity_histogram) {
      if (keyed) out << n << ',';
      out << cw << ',' << count << '\n';
    }
  }
}

void write_pentagon_csv(const PentagonHistograms& h, std::ostream& out) {
  out << "statistic,value,N\n";
  for (const auto& [v, count] : h.parts) out << "N_p," << v << ',' << count << '\n';
  for (const auto& [v, count] : h.isolated) out << "N_5," << v << ',' << count << '\n';
}

void write_wiener_csv(const ScanResult& result, std::ostream& out) {
  out << "n,C_n,W,D,N\n";
  for (const auto& [n, d] : result.by_order) {
    for (const auto& [wd, count] : d.wiener_at_max_complexity) {
      out << n << ',' << d.max_complexity << ',' << wd.first << ',' << wd.second << ',' << count
          << '\n';
    }
  }
}

std::string summary_json(const ScanResult& result, int indent) {
  using nlohmann::ordered_json;
  auto histogram_json = [](const Histogram& h) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, v] : h) j[std::to_string(k)] = v;
    return j;
  };

  ordered_json reports = ordered_json::array();
  for (const auto& [n, d] : result.by_order) {
    ordered_json r;
    r["n"] = n;
    r["C_n"] = d.max_complexity;
    r["g_n"] = d.gap();
    r["N"] = d.max_complexity_count;
    r["W_m"] = d.max_wiener;
    r["C_W_of_Wm"] = d.complexity_of_max_wiener;
    r["D_of_Wm"] = d.diameter_of_max_wiener;
    r["total"] = d.total;
    r["histogram"] = histogram_json(d.complexity_histogram);
    ordered_json at_max = ordered_json::array();
    for (const auto& [wd, count] : d.wiener_at_max_complexity) {
      at_max.push_back({{"W", wd.first}, {"D", wd.second}, {"count", count}});
    }
    r["wiener_at_C_n"] = std::move(at_max);
    ordered_json kept = ordered_json::array();
    for (const auto& g : d.argmax) {
      kept.push_back({{"ordinal", g.ordinal},
                      {"W", g.report.wiener},
                      {"C_W", g.report.complexity},
                      {"D", g.report.diameter}});
    }
    r["argmax"] = std::move(kept);
    r["N_p_histogram"] = histogram_json(d.parts_histogram);
    r["N_5_histogram"] = histogram_json(d.isolated_histogram);
    r["N_p_at_C_n"] = histogram_json(d.parts_at_max_complexity);
    r["N_5_at_C_n"] = histogram_json(d.isolated_at_max_complexity);
    reports.push_back(std::move(r));
  }

  ordered_json malformed = ordered_json::array();
  for (const auto& m : result.malformed) {
    malformed.push_back({{"ordinal", m.ordinal}, {"offset", m.offset}, {"reason", m.reason}});
  }

  ordered_json root;
  root["records"] = result.records;
  root["decoded"] = result.decoded;
  root["malformed"] = std::move(malformed);
  root["reports"] = std::move(reports);
  return root.dump(indent);
}

}  // namespace fullwiener
