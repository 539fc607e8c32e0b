// JSON-in, JSON-out bindings over the core library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fusionbench/category.hpp"
#include "fusionbench/cli.hpp"
#include "fusionbench/errors.hpp"
#include "fusionbench/exact_factorization.hpp"
#include "fusionbench/grading.hpp"
#include "fusionbench/matched_pair.hpp"
#include "fusionbench/serialize.hpp"

namespace py = pybind11;
using namespace fusionbench;

namespace {

FusionRing ring(const std::string& s) { return ring_from_json(parse_text(s)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

    m.def("validate_ring", [](const std::string& s) { return dump(to_json(validate_fusion_ring(ring(s)))); },
          py::arg("ring_json"));
    m.def("universal_grading", [](const std::string& s) { return dump(to_json(universal_grading(ring(s)))); },
          py::arg("ring_json"));
    m.def("fpdim", [](const std::string& s) { return fpdim_ring(ring(s)); }, py::arg("ring_json"));
    m.def(
        "nilpotency",
        [](const std::string& s) {
            Nilpotency n = is_nilpotent(ring(s));
            return py::make_tuple(n.nilpotent, n.depth);
        },
        py::arg("ring_json"));
    m.def(
        "bicrossed",
        [](const std::string& s) { return dump(to_json(ring_bicrossed(matched_pair_from_json(parse_text(s))))); },
        py::arg("matched_pair_json"));
    m.def(
        "factorize",
        [](const std::string& s, const std::vector<int>& A, const std::vector<int>& C) {
            FusionRing R = ring(s);
            auto fc = check_exact_factorization(R, A, C);
            if (!fc.factorization) throw ValidationError("not an exact factorization: " + fc.report.first_failure(), fc.report);
            return dump(to_json(canonical_matched_pair(*fc.factorization)));
        },
        py::arg("ring_json"), py::arg("A"), py::arg("C"));
    m.def(
        "pentagon",
        [](const std::string& s, double tol) { return dump(to_json(check_pentagon(category_from_json(parse_text(s)), tol))); },
        py::arg("category_json"), py::arg("tol") = kDefaultTolerance);
    m.def(
        "triangle",
        [](const std::string& s, double tol) { return dump(to_json(check_triangle(category_from_json(parse_text(s)), tol))); },
        py::arg("category_json"), py::arg("tol") = kDefaultTolerance);
    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command line front end; returns (exit_code, stdout, stderr).");
}
