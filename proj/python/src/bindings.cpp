#include "fullwiener/families.hpp"
#include "fullwiener/graph.hpp"
#include "fullwiener/metrics.hpp"
#include "fullwiener/pentagons.hpp"
#include "fullwiener/planar_code.hpp"
#include "fullwiener/scan.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace fullwiener;

namespace {

std::span<const std::uint8_t> as_span(const std::string& bytes) {
  return {reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()};
}

py::bytes to_bytes(const std::vector<std::uint8_t>& v) {
  return {reinterpret_cast<const char*>(v.data()), v.size()};
}

py::dict report_dict(const GraphReport& r) {
  py::dict d;
  d["n"] = r.order;
  d["W"] = r.wiener;
  d["C_W"] = r.complexity;
  d["D"] = r.diameter;
  d["transmissions"] = r.transmissions.transmission;
  d["eccentricities"] = r.transmissions.eccentricity;
  if (r.pentagons) {
    d["N_p"] = r.pentagons->parts;
    d["N_5"] = r.pentagons->isolated;
    d["ipr"] = r.pentagons->ipr;
  }
  return d;
}

py::dict row_dict(const FamilyRow& r) {
  py::dict d;
  d["n"] = r.n;
  d["kind"] = std::string(to_string(r.kind));
  d["W"] = r.wiener;
  d["C_W"] = r.complexity;
  d["D"] = r.diameter;
  d["provenance"] = std::string(to_string(r.provenance));
  return d;
}

FamilyKind kind_of(const std::string& text) {
  const auto k = parse_family(text);
  if (!k) throw FamilyError("unknown family type '" + text + "'");
  return *k;
}

}  // namespace

PYBIND11_MODULE(_fullwiener, m) {
  m.doc() = "Distance invariants and pentagon statistics of fullerene graphs";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<CodecError>(m, "CodecError", PyExc_ValueError);
  py::register_exception<NotTwelvePentagons>(m, "NotTwelvePentagons", PyExc_ValueError);
  py::register_exception<ScanError>(m, "ScanError", PyExc_RuntimeError);

  py::class_<FullereneGraph>(m, "FullereneGraph")
      .def_static(
          "from_adjacency",
          [](const std::vector<std::vector<Vertex>>& lists, const std::string& label) {
            return FullereneGraph::from_adjacency(lists, label);
          },
          py::arg("lists"), py::arg("label") = "")
      .def_static(
          "from_planar_code",
          [](const py::bytes& data) {
            auto graphs = read_all(as_span(std::string(data)));
            if (graphs.size() != 1) throw py::value_error("expected exactly one planar-code record");
            return graphs.front();
          },
          py::arg("data"))
      .def_property_readonly("order", &FullereneGraph::order)
      .def_property_readonly("label", &FullereneGraph::label)
      .def("neighbors",
           [](const FullereneGraph& g, Vertex v) {
             if (v >= g.order()) throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range");
             const auto& r = g.neighbors(v);
             return std::vector<Vertex>(r.begin(), r.end());
           })
      .def("rotation",
           [](const FullereneGraph& g) {
             std::vector<std::vector<Vertex>> out;
             for (const auto& r : g.rotation()) out.emplace_back(r.begin(), r.end());
             return out;
           })
      .def(
          "to_planar_code",
          [](const FullereneGraph& g, bool wide) { return to_bytes(encode_record(g, wide)); },
          py::arg("wide") = false)
      .def("__len__", &FullereneGraph::order)
      .def("__eq__", [](const FullereneGraph& a, const FullereneGraph& b) { return a == b; })
      .def("__repr__", [](const FullereneGraph& g) {
        return "<FullereneGraph n=" + std::to_string(g.order()) + ">";
      });

  m.def(
      "read_planar_code",
      [](const py::bytes& data) { return read_all(as_span(std::string(data))); }, py::arg("data"),
      "Decode every record of a planar-code byte string.");

  m.def(
      "validate",
      [](const FullereneGraph& g) {
        const auto rep = validate_fullerene(g);
        py::dict d;
        d["ok"] = rep.ok();
        d["pentagons"] = rep.pentagon_count;
        d["hexagons"] = rep.hexagon_count;
        py::list failures;
        for (const auto& f : rep.failures) failures.append(py::make_tuple(to_string(f.check), f.message));
        d["failures"] = failures;
        return d;
      },
      py::arg("graph"));

  m.def("report", [](const FullereneGraph& g) { return report_dict(analyze(g)); }, py::arg("graph"),
        "W, C_W, D, per-vertex transmissions and pentagon statistics.");
  m.def("wiener_index", &wiener_index, py::arg("graph"));
  m.def("wiener_complexity", &wiener_complexity, py::arg("graph"));
  m.def("diameter", &diameter, py::arg("graph"));
  m.def("bfs_distances", &bfs_distances, py::arg("graph"), py::arg("source"));
  m.def(
      "pentagon_stats",
      [](const FullereneGraph& g) {
        const auto s = pentagon_stats(trace_faces(g, true));
        py::dict d;
        d["N_p"] = s.parts;
        d["N_5"] = s.isolated;
        d["ipr"] = s.ipr;
        return d;
      },
      py::arg("graph"));

  m.def("construct_type_a", &construct_type_a, py::arg("k"));
  m.def(
      "family_row", [](const std::string& kind, std::uint64_t n) { return row_dict(family_row(kind_of(kind), n)); },
      py::arg("kind"), py::arg("n"));
  m.def(
      "family_table",
      [](std::uint64_t max_n) {
        py::list out;
        for (const auto& r : family_table(max_n)) out.append(row_dict(r));
        return out;
      },
      py::arg("max_n"));
  m.def(
      "classify_order",
      [](std::uint64_t n) {
        std::vector<std::string> out;
        for (auto k : classify_order(n)) out.emplace_back(to_string(k));
        return out;
      },
      py::arg("n"));

  m.def(
      "scan_json",
      [](const py::bytes& data, unsigned workers, std::size_t retain) {
        const std::string bytes = data;
        ScanResult result;
        {
          py::gil_scoped_release release;
          std::istringstream in(bytes);
          ScanOptions opt;
          opt.workers = workers;
          opt.retain_limit = retain;
          result = scan(in, opt);
        }
        return summary_json(result, -1);
      },
      py::arg("data"), py::arg("workers") = 1, py::arg("retain") = 1);
}
