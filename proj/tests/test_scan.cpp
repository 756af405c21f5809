#include "doctest.h"
#include "fullwiener/families.hpp"
#include "fullwiener/scan.hpp"
#include "support.hpp"

#include <json.hpp>

#include <sstream>

using namespace fullwiener;

namespace {

ScanResult scan_bytes(const std::string& bytes, ScanOptions opt = {}) {
  std::istringstream in(bytes);
  return scan(in, opt);
}

ScanResult scan_fixture(std::size_t n, ScanOptions opt = {}) {
  return scan_bytes(testsupport::fixture_bytes(n), opt);
}

std::string serialize(const ScanResult& r) {
  std::ostringstream out;
  write_summary_csv(r, out);
  write_histogram_csv(r, out);
  write_wiener_csv(r, out);
  write_pentagon_csv(pentagon_histograms(r, false), out);
  write_pentagon_csv(pentagon_histograms(r, true), out);
  out << summary_json(r);
  return out.str();
}

std::string mixed_corpus(std::size_t copies, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::ostringstream out;
  write_planar_code_header(out);
  for (std::size_t i = 0; i < copies; ++i) {
    const auto g = construct_type_a(2 + static_cast<unsigned>(i % 6));
    write_planar_code(g.relabeled(testsupport::random_permutation(g.order(), rng)), out, false);
  }
  return out.str();
}

struct Row {
  std::size_t n;
  std::uint32_t c_n;
  std::uint64_t count;
  WienerIndex w_m;
  std::uint32_t c_w;
  Distance d;
  std::map<std::pair<WienerIndex, Distance>, std::uint64_t> at_c_n;
};

}  // namespace

TEST_CASE("small isomer sets reproduce the reference rows") {
  const std::vector<Row> rows = {
      {20, 1, 1, 500, 1, 5, {{{500, 5}, 1}}},
      {24, 2, 1, 804, 2, 5, {{{804, 5}, 1}}},
      {26, 2, 1, 987, 2, 6, {{{987, 6}, 1}}},
      {28, 5, 1, 1198, 5, 6, {{{1198, 6}, 1}}},
      {30, 7, 1, 1435, 3, 6, {{{1431, 6}, 1}}},
      {32, 9, 1, 1696, 3, 7, {{{1688, 6}, 1}}},
      {34, 10, 2, 1978, 10, 7, {{{1973, 7}, 1}, {{1978, 7}, 1}}},
      {36, 14, 1, 2298, 8, 7, {{{2288, 7}, 1}}},
      {38, 18, 1, 2651, 4, 8, {{{2627, 7}, 1}}},
      {40, 19, 1, 3035, 4, 8, {{{3001, 7}, 1}}},
  };
  for (const auto& row : rows) {
    CAPTURE(row.n);
    const auto r = scan_fixture(row.n);
    REQUIRE(r.by_order.size() == 1);
    const auto& d = r.by_order.at(row.n);
    CHECK(d.max_complexity == row.c_n);
    CHECK(d.gap() == row.n - row.c_n);
    CHECK(d.max_complexity_count == row.count);
    CHECK(d.max_wiener == row.w_m);
    CHECK(d.complexity_of_max_wiener == row.c_w);
    CHECK(d.diameter_of_max_wiener == row.d);
    CHECK(d.wiener_at_max_complexity == row.at_c_n);
  }
}

TEST_CASE("isomer counts") {
  for (const auto& [n, count] : testsupport::fixture_orders()) {
    const auto r = scan_fixture(n, {.workers = 2, .batch_size = 3});
    CHECK(r.records == count);
    CHECK(r.decoded == count);
    CHECK(r.by_order.at(n).total == count);
    std::uint64_t sum = 0;
    for (const auto& [c, k] : r.by_order.at(n).complexity_histogram) sum += k;
    CHECK(sum == count);
  }
}

TEST_CASE("empty input") {
  const auto r = scan_bytes("");
  CHECK(r.records == 0);
  CHECK(r.by_order.empty());
  CHECK_FALSE(transmission_irregular_check(r));
  CHECK(pentagon_histograms(r, false).parts.empty());
}

TEST_CASE("malformed records are skipped and counted") {
  std::ostringstream out;
  write_planar_code_header(out);
  write_planar_code(construct_type_a(2), out, false);
  // A 12-prism passes the structural checks but has the wrong faces.
  write_planar_code(FullereneGraph::from_rotation(testsupport::prism_rotation(12)), out, false);
  write_planar_code(construct_type_a(3), out, false);
  auto bytes = out.str();
  const auto clean_size = bytes.size();
  bytes += std::string(1, '\x14') + std::string(10, '\x01');  // truncated tail

  for (unsigned workers : {1u, 3u}) {
    const auto r = scan_bytes(bytes, {.workers = workers, .batch_size = 1});
    CHECK(r.records == 4);
    CHECK(r.decoded == 2);
    REQUIRE(r.malformed.size() == 2);
    CHECK(r.malformed[0].ordinal == 1);
    CHECK(r.malformed[1].ordinal == 3);
    CHECK(r.malformed[1].offset == clean_size);
    CHECK(r.decoded + r.malformed.size() == r.records);
    CHECK(r.by_order.size() == 2);
  }
}

TEST_CASE("all records malformed") {
  std::ostringstream out;
  write_planar_code(FullereneGraph::from_rotation(testsupport::prism_rotation(12)), out, false);
  CHECK_THROWS_AS(scan_bytes(out.str()), AllRecordsMalformed);
}

TEST_CASE("bad header aborts the scan") {
  CHECK_THROWS_AS(scan_bytes(">>planar_code xx<<"), BadHeader);
}

TEST_CASE("max_records stops early") {
  const auto r = scan_fixture(40, {.max_records = 5});
  CHECK(r.records == 5);
  CHECK(r.by_order.at(40).total == 5);
}

TEST_CASE("transmission irregular check") {
  for (const auto& [n, count] : testsupport::fixture_orders())
    CHECK_FALSE(transmission_irregular_check(scan_fixture(n)));
  DistributionReport synthetic;
  synthetic.order = 30;
  synthetic.total = 1;
  synthetic.max_complexity = 30;
  CHECK(transmission_irregular_check(synthetic));
}

TEST_CASE("pentagon histograms") {
  const auto h20 = pentagon_histograms(scan_fixture(20), false);
  CHECK(h20.parts == Histogram{{1, 1}});
  CHECK(h20.isolated == Histogram{{0, 1}});

  std::ostringstream out;
  for (unsigned k = 3; k <= 6; ++k) write_planar_code(construct_type_a(k), out, false);
  std::istringstream in(out.str());
  const auto h = pentagon_histograms(in, false);
  CHECK(h.parts == Histogram{{2, 4}});
  CHECK(h.isolated == Histogram{{0, 4}});

  const auto r40 = scan_fixture(40);
  const auto all = pentagon_histograms(r40, false);
  const auto top = pentagon_histograms(r40, true);
  std::uint64_t n_all = 0, n_top = 0;
  for (const auto& [k, c] : all.parts) n_all += c;
  for (const auto& [k, c] : top.parts) n_top += c;
  CHECK(n_all == 40);
  CHECK(n_top == r40.by_order.at(40).max_complexity_count);
}

TEST_CASE("retained arg-max graphs reproduce their metrics") {
  for (const auto& [n, count] : testsupport::fixture_orders()) {
    const auto r = scan_fixture(n);
    for (const auto& kept : r.by_order.at(n).argmax) {
      PlanarCodeRecord rec{kept.ordinal, 0, false, kept.planar_code};
      const auto again = analyze(decode_record(rec));
      CHECK(again.wiener == r.by_order.at(n).max_wiener);
      CHECK(again.complexity == kept.report.complexity);
      CHECK(again.diameter == kept.report.diameter);
    }
  }
}

TEST_CASE("arg-max ties keep the earliest records") {
  const auto g = construct_type_a(4);
  std::ostringstream out;
  write_planar_code(construct_type_a(3), out, false);
  for (int i = 0; i < 5; ++i) write_planar_code(g, out, false);
  const auto bytes = out.str();
  for (unsigned workers : {1u, 4u}) {
    const auto one = scan_bytes(bytes, {.workers = workers, .retain_limit = 1, .batch_size = 1});
    REQUIRE(one.by_order.at(40).argmax.size() == 1);
    CHECK(one.by_order.at(40).argmax[0].ordinal == 1);
    const auto all = scan_bytes(bytes, {.workers = workers, .retain_limit = 100, .batch_size = 1});
    const auto& kept = all.by_order.at(40).argmax;
    REQUIRE(kept.size() == 5);
    for (std::size_t i = 0; i < kept.size(); ++i) CHECK(kept[i].ordinal == i + 1);
  }
}

TEST_CASE("property: merge is associative and commutative") {
  std::vector<std::pair<GraphReport, std::vector<std::uint8_t>>> items;
  for (const auto& n : {28u, 30u, 32u, 34u})
    for (const auto& g : testsupport::fixture_graphs(n)) items.emplace_back(analyze(g), encode_record(g, false));

  auto part = [&](std::size_t lo, std::size_t hi) {
    ScanResult r;
    for (std::size_t i = lo; i < hi; ++i) {
      r.by_order[items[i].first.order].add(items[i].first, i, items[i].second, 3);
      ++r.decoded;
    }
    return r;
  };
  const auto whole = part(0, items.size());
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<std::size_t> pick(0, items.size());
    std::size_t a = pick(rng), b = pick(rng);
    if (a > b) std::swap(a, b);
    const auto x = part(0, a), y = part(a, b), z = part(b, items.size());

    ScanResult left = x;
    left.merge(y, 3);
    left.merge(z, 3);
    ScanResult yz = y;
    yz.merge(z, 3);
    ScanResult right = x;
    right.merge(yz, 3);
    ScanResult reversed = z;
    reversed.merge(x, 3);
    reversed.merge(y, 3);

    CHECK(left == whole);
    CHECK(right == whole);
    CHECK(reversed == whole);
  }
}

TEST_CASE("property: output does not depend on worker count") {
  const auto bytes = mixed_corpus(1200, 99) + "";
  const auto reference = scan_bytes(bytes, {.workers = 1});
  const auto ref_text = serialize(reference);
  for (unsigned workers : {2u, 3u, 8u}) {
    for (std::size_t batch : {1u, 7u, 256u}) {
      const auto r = scan_bytes(bytes, {.workers = workers, .batch_size = batch, .queue_batches = 2});
      CHECK(r == reference);
      CHECK(serialize(r) == ref_text);
    }
  }
}

TEST_CASE("csv and json layout") {
  const auto r = scan_fixture(30);
  std::ostringstream summary;
  write_summary_csv(r, summary);
  CHECK(summary.str() == "n,C_n,g_n,N,W_m,C_W_of_Wm,D_of_Wm\n30,7,23,1,1435,3,6\n");

  std::ostringstream hist;
  write_histogram_csv(r, hist);
  CHECK(hist.str().rfind("C_W,N\n", 0) == 0);

  std::ostringstream mixed;
  write_histogram_csv(scan_bytes(mixed_corpus(12, 1)), mixed);
  CHECK(mixed.str().rfind("n,C_W,N\n", 0) == 0);

  const auto j = nlohmann::json::parse(summary_json(r));
  CHECK(j.is_object());
}
