#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "liegauge/json_io.hpp"
#include "liegauge/parser.hpp"

namespace py = pybind11;
using namespace liegauge;

namespace {

std::vector<Scalar> parse_scalars(const std::vector<std::string>& parts) {
    std::vector<Scalar> out;
    for (const auto& p : parts) out.push_back(parse_scalar(p));
    return out;
}

} // namespace

PYBIND11_MODULE(liegauge, m) {
    m.doc() = "exact gauge reduction and normal forms for classical-group "
              "connection matrices";
    m.attr("__version__") = "0.1.0";

    m.def("roots_json",
          [](const std::string& type, int rank) {
              return roots_json(group_type_from_str(type), rank).dump();
          },
          py::arg("type"), py::arg("rank"),
          "positive system, Cartan matrix and gamma chain as a JSON string");

    m.def("basis_json",
          [](const std::string& type, int rank) {
              return basis_json(group_type_from_str(type), rank).dump();
          },
          py::arg("type"), py::arg("rank"), "basis matrices as a JSON string");

    m.def("theorem1_scalar",
          [](const std::string& type, int rank) {
              return expand_theorem1(group_type_from_str(type), rank).str();
          },
          py::arg("type"), py::arg("rank"),
          "the expanded scalar equation in the expression grammar");

    m.def("theorem1_json",
          [](const std::string& type, int rank, bool matrix, bool verify) {
              Theorem1Options opts;
              opts.type = group_type_from_str(type);
              opts.rank = rank;
              opts.emit_scalar = true;
              opts.emit_matrix = matrix;
              opts.verify = verify;
              return theorem1_json(opts).dump();
          },
          py::arg("type"), py::arg("rank"), py::arg("matrix") = false,
          py::arg("verify") = false,
          "scalar equation, optional system matrix and certificate summary");

    m.def("parameter_matrix_json",
          [](const std::string& type, int rank) {
              return mat_to_json(build_parameter_matrix(group_type_from_str(type), rank).matrix())
                  .dump();
          },
          py::arg("type"), py::arg("rank"));

    m.def("reduce_json",
          [](const std::string& request) { return reduce_json(json::parse(request)).dump(); },
          py::arg("request"),
          "reduce a connection matrix to normal form; input and output are "
          "JSON strings");

    m.def("mitschi_singer_json",
          [](const std::string& type, int rank, const std::vector<std::string>& h) {
              return mitschi_singer_json(group_type_from_str(type), rank, parse_scalars(h))
                  .dump();
          },
          py::arg("type"), py::arg("rank"), py::arg("h"));

    m.def("genericity_json",
          [](int rank, const std::string& f, const std::string& g,
             const std::vector<std::string>& a) {
              return genericity_json(rank, f, g, a).dump();
          },
          py::arg("rank"), py::arg("f"), py::arg("g"), py::arg("a"));

    m.def("expr_canonical",
          [](const std::string& s) { return parse_expr(s).str(); }, py::arg("expr"),
          "parse an expression and print its canonical form");

    m.def("selftest",
          [](int max_rank) {
              std::ostringstream os;
              bool ok = run_selftest(os, max_rank, false);
              return py::make_tuple(ok, os.str());
          },
          py::arg("max_rank") = 2, "run the invariant suites; returns (ok, report)");
}
