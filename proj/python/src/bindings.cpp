#include "steencob/binomial.hpp"
#include "steencob/charclass.hpp"
#include "steencob/cli.hpp"
#include "steencob/cobordism.hpp"
#include "steencob/error.hpp"
#include "steencob/json_io.hpp"
#include "steencob/parser.hpp"
#include "steencob/steenrod.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace steencob;

namespace {

using Exponents = std::vector<std::vector<int>>;

Exponents terms_of(const SteenrodElement& e)
{
    Exponents out;
    for (const auto& m : e.terms())
        out.push_back(m.exponents());
    return out;
}

SteenrodElement element_of(const Exponents& terms)
{
    SteenrodElement e;
    for (const auto& t : terms)
        e.toggle(SqMonomial(t));
    return e;
}

std::vector<std::string> class_strings(const ManifoldModel& m, bool wu)
{
    std::vector<std::string> out;
    for (const auto& c : m.components())
        out.push_back(to_string(wu ? wu_classes(c) : sw_total(c), c.ring));
    return out;
}

Exponents monomials_of(const ClassExpression& e)
{
    Exponents out;
    for (const auto& p : e.monomials())
        out.push_back(p.parts);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Steenrod squares, Stiefel-Whitney numbers and unoriented cobordism";
    m.attr("__version__") = STEENCOB_VERSION;

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", error.ptr());
    py::register_exception<UnsupportedDimension>(m, "UnsupportedDimension", error.ptr());
    auto invalid = py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", invalid.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", invalid.ptr());

    m.def("binom_mod_p", &binom_mod_p, py::arg("n"), py::arg("k"), py::arg("p"));

    m.def(
        "adem_reduce", [](const std::string& word) { return to_string(adem_reduce(parse_steenrod(word))); },
        py::arg("word"), "Admissible normal form of a Steenrod word, as text.");
    m.def(
        "adem_reduce_terms", [](const Exponents& terms) { return terms_of(adem_reduce(element_of(terms))); },
        py::arg("terms"), "Admissible normal form of a sum of exponent sequences.");
    m.def(
        "adem_expand", [](int i, int j) { return terms_of(adem_expand(i, j)); }, py::arg("i"), py::arg("j"));
    m.def(
        "multiply",
        [](const Exponents& a, const Exponents& b) { return terms_of(multiply(element_of(a), element_of(b))); },
        py::arg("a"), py::arg("b"));
    m.def(
        "admissible_basis",
        [](int n) {
            Exponents out;
            for (const auto& b : admissible_basis(n))
                out.push_back(b.exponents());
            return out;
        },
        py::arg("n"));

    py::class_<ManifoldModel>(m, "Manifold")
        .def(py::init([](const std::string& expr) { return evaluate(parse_manifold(expr)); }), py::arg("expr"))
        .def_property_readonly("label", &ManifoldModel::label)
        .def_property_readonly("dimension", &ManifoldModel::dimension)
        .def_property_readonly("components", [](const ManifoldModel& x) { return x.components().size(); })
        .def_property_readonly("euler", [](const ManifoldModel& x) { return euler_characteristic(x); })
        .def("sw_classes", [](const ManifoldModel& x) { return class_strings(x, false); })
        .def("wu_classes", [](const ManifoldModel& x) { return class_strings(x, true); })
        .def("sw_numbers",
             [](const ManifoldModel& x) {
                 std::vector<std::pair<std::vector<int>, int>> out;
                 const auto numbers = all_sw_numbers(x);
                 for (const auto& [p, v] : numbers.entries())
                     out.emplace_back(p.parts, v ? 1 : 0);
                 return out;
             })
        .def("sw_number", [](const ManifoldModel& x, std::vector<int> p) {
            return static_cast<int>(sw_number(x, make_partition(std::move(p))));
        })
        .def("is_null_cobordant", [](const ManifoldModel& x) { return is_null_cobordant(x); })
        .def("classify", [](const ManifoldModel& x) { return monomials_of(classify(x)); })
        .def("to_json",
             [](const ManifoldModel& x) {
                 json out = json::array();
                 for (const auto& c : x.components())
                     out.push_back(to_json(c));
                 return out.dump();
             })
        .def("__mul__", [](const ManifoldModel& a, const ManifoldModel& b) { return product(a, b); })
        .def("__add__", [](const ManifoldModel& a, const ManifoldModel& b) { return disjoint_union(a, b); })
        .def("__repr__", [](const ManifoldModel& x) { return "Manifold('" + x.label() + "')"; });

    m.def(
        "are_cobordant", [](const ManifoldModel& a, const ManifoldModel& b) { return are_cobordant(a, b); },
        py::arg("a"), py::arg("b"));
    m.def("dold_generator", &dold_generator, py::arg("i"));
    m.def("omega_dim", &omega_dim, py::arg("n"));
    m.def(
        "nondyadic_partitions",
        [](int n) {
            Exponents out;
            for (const auto& p : nondyadic_partitions(n))
                out.push_back(p.parts);
            return out;
        },
        py::arg("n"));
    m.def(
        "bordism_of_space_dim",
        [](const std::vector<long long>& betti, int p) { return bordism_of_space_dim(betti, p); },
        py::arg("betti"), py::arg("degree"));
    m.def(
        "weak_integral_bordism_dim",
        [](const std::vector<long long>& betti, int d) { return weak_integral_bordism_dim(betti, d); },
        py::arg("betti"), py::arg("degree"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line front end; returns (exit code, stdout, stderr).");
}
