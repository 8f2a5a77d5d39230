#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sdnb/construct.hpp"
#include "sdnb/ortho_group.hpp"
#include "sdnb/search.hpp"
#include "sdnb/serialize.hpp"

namespace py = pybind11;
using namespace sdnb;

PYBIND11_MODULE(_sdnb, m) {
  m.doc() = "Self-dual normal bases of F_{q^n}/F_q: construction, solution-group "
            "enumeration, and minimum-complexity search";

  py::register_exception<nonexistence_error>(m, "NonexistenceError", PyExc_ValueError);
  py::register_exception<unsupported_error>(m, "UnsupportedError", PyExc_ValueError);
  py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
  py::register_exception<internal_error>(m, "InternalError", PyExc_RuntimeError);

  m.def("existence_check", &existence_check, py::arg("q"), py::arg("n"),
        "True when a self-dual normal basis of F_{q^n}/F_q exists");

  m.def(
      "construct",
      [](u64 q, u64 n) {
        SdnbCertificate cert = construct(q, n);
        cert.complexity = complexity(cert.gamma, *cert.ctx_n);
        return certificate_to_json(cert);
      },
      py::arg("q"), py::arg("n"),
      "Build and verify a generator; returns the certificate as JSON");

  m.def(
      "verify",
      [](const std::string& json) {
        try {
          certificate_from_json(json);
          return true;
        } catch (const domain_error&) {
          return false;
        }
      },
      py::arg("certificate_json"), "Parse and re-verify a certificate");

  m.def(
      "complexity",
      [](const std::string& json) {
        SdnbCertificate cert = certificate_from_json(json);
        return complexity(cert.gamma, *cert.ctx_n);
      },
      py::arg("certificate_json"),
      "Number of nonzero entries of the trace matrix of the certified basis");

  m.def(
      "count", [](u64 q, u64 n) { return predicted_cardinality(q, n).to_string(); },
      py::arg("q"), py::arg("n"),
      "Cardinality of the solution group of v * conjugate(v) = 1, as a decimal string");

  m.def(
      "search",
      [](u64 q, u64 n, u64 shard_index, u64 shard_count, bool histogram) {
        SearchOptions opt;
        opt.shard_index = shard_index;
        opt.shard_count = shard_count;
        opt.histogram = histogram;
        return report_to_json(search_min(construct(q, n), opt));
      },
      py::arg("q"), py::arg("n"), py::arg("shard_index") = 0, py::arg("shard_count") = 1,
      py::arg("histogram") = false, "Minimum complexity over the orbit; returns a JSON report");

  m.def(
      "merge_reports",
      [](const std::string& a, const std::string& b) {
        return report_to_json(merge_reports(report_from_json(a), report_from_json(b)));
      },
      py::arg("report_a"), py::arg("report_b"), "Combine disjoint shard reports");
}
