#include "nct/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace nct;

namespace {

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

json from_py(const py::object& o) { return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>()); }

FiniteGroup group(const std::string& name) {
    auto g = FiniteGroup::parse(name);
    if (!g) throw py::value_error("unknown group '" + name + "'");
    return *g;
}

SectorComplex sector(const std::string& g, const std::string& element) {
    FiniteGroup fg = group(g);
    auto k = parse_element(fg, element);
    if (!k) throw py::value_error("unknown element '" + element + "'");
    return SectorComplex::make(fg, *k);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hochschild and cyclic homology of the noncommutative torus crossed with Z2, Z3, Z4, Z6";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<InconclusiveError>(m, "InconclusiveError", PyExc_RuntimeError);
    py::register_exception<StructuralError>(m, "StructuralError", PyExc_RuntimeError);
    py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_RuntimeError);

    py::class_<Scalar>(m, "Scalar")
        .def(py::init<long>())
        .def_static("parse", &Scalar::parse)
        .def_static("t_power", &Scalar::t_power)
        .def("__add__", &Scalar::operator+)
        .def("__sub__", py::overload_cast<const Scalar&>(&Scalar::operator-, py::const_))
        .def("__mul__", &Scalar::operator*)
        .def("__truediv__", &Scalar::operator/)
        .def("__neg__", py::overload_cast<>(&Scalar::operator-, py::const_))
        .def("__eq__", &Scalar::operator==)
        .def("__str__", &Scalar::pretty)
        .def("__repr__", [](const Scalar& s) { return "Scalar('" + s.pretty() + "')"; })
        .def("is_zero", &Scalar::is_zero);

    py::class_<TorusElement>(m, "TorusElement")
        .def(py::init<>())
        .def_static("monomial", [](int n, int mm, const Scalar& c) { return TorusElement::monomial(c, {n, mm}); },
                    py::arg("n"), py::arg("m"), py::arg("c") = Scalar(1))
        .def("__add__", &TorusElement::operator+)
        .def("__sub__", py::overload_cast<const TorusElement&>(&TorusElement::operator-, py::const_))
        .def("__mul__", &TorusElement::operator*)
        .def("__eq__", &TorusElement::operator==)
        .def("__str__", &TorusElement::str)
        .def("__len__", &TorusElement::size)
        .def("coeff", [](const TorusElement& a, int n, int mm) { return a.coeff({n, mm}); })
        .def("to_json", [](const TorusElement& a) { return to_py(to_json(a)); })
        .def_static("from_json", [](const py::object& o) { return torus_from_json(from_py(o)); });

    m.def("apply_generator", [](const std::string& g, const TorusElement& a) { return apply(generator(group(g)), a); });
    m.def("twisted_b2", [](const std::string& g, const std::string& e, const TorusElement& a) {
        return twisted_b2(sector(g, e), a);
    });
    m.def("twisted_b1", [](const std::string& g, const std::string& e, const TorusElement& a1, const TorusElement& a2) {
        return twisted_b1(sector(g, e), a1, a2);
    });
    m.def("sector", [](const std::string& g, const std::string& e, int degree, int radius) {
        return to_py(sector_json(sector(g, e), degree, {radius}));
    }, py::arg("group"), py::arg("element"), py::arg("degree"), py::arg("radius") = 6);
    m.def("table", [](const std::string& g, std::vector<int> boxes) {
        HomologyReport r = full_report(group(g), boxes);
        json j = to_json(r);
        j["comparison"] = to_json(compare_to_reference(r));
        return to_py(j);
    }, py::arg("group"), py::arg("boxes") = default_schedule());
    m.def("reduce", [](const py::object& solution, long budget) {
        KernelSolution sol = solution_from_json(from_py(solution));
        return to_py(to_json(reduce_to_zero(sol, budget), sol));
    }, py::arg("solution"), py::arg("budget") = -1);
    m.def("diagram", [](const py::object& solution, const std::string& format) {
        KernelDiagram d = build_diagram(solution_from_json(from_py(solution)));
        if (format == "dot") return py::object(py::str(to_dot(d)));
        if (format == "svg") return py::object(py::str(to_svg(d)));
        if (format == "json") return to_py(to_json(d));
        throw py::value_error("format must be dot, svg or json");
    }, py::arg("solution"), py::arg("format") = "dot");
    m.def("equation_diagram", [](const std::string& g, const std::string& e, int n, int mm) {
        return to_dot(equation_diagram(sector(g, e), {n, mm}));
    });
}
