#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "quartic/exact.hpp"
#include "quartic/landen_numeric.hpp"
#include "quartic/landen_symbolic.hpp"
#include "quartic/quadrature.hpp"

namespace py = pybind11;

namespace {

using namespace quartic;

py::int_ to_py_int(const Integer& z) { return py::int_(py::str(z.get_str())); }

Rational rational_from_object(py::handle o) {
    if (py::isinstance<py::str>(o)) return Rational::from_string(o.cast<std::string>());
    // ints and fractions.Fraction both carry numerator/denominator
    if (py::hasattr(o, "numerator") && py::hasattr(o, "denominator")) {
        auto n = py::str(o.attr("numerator")).cast<std::string>();
        auto d = py::str(o.attr("denominator")).cast<std::string>();
        return Rational::from_string(n) / Rational::from_string(d);
    }
    throw py::type_error("cannot convert to Rational");
}

Polynomial polynomial_from_coeffs(const std::vector<Rational>& coeffs) {
    return Polynomial(std::vector<Rational>(coeffs));
}

std::vector<Rational> coeff_list(const Polynomial& p) {
    return std::vector<Rational>(p.coeffs());
}

IntegrandSpec make_spec(std::function<double(double)> f, Domain domain, double rel_tol,
                        double abs_tol, int max_subintervals) {
    IntegrandSpec spec;
    spec.f = std::move(f);
    spec.domain = domain;
    spec.rel_tol = rel_tol;
    spec.abs_tol = abs_tol;
    spec.max_subintervals = max_subintervals;
    return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact and numeric tools for symmetric quartic integrals and their "
              "Landen transformations";

    py::register_exception<SingularStepError>(m, "SingularStepError", PyExc_ArithmeticError);
    py::register_exception<DivergenceError>(m, "DivergenceError", PyExc_ArithmeticError);
    py::register_exception<AccuracyError>(m, "AccuracyError", PyExc_ArithmeticError);

    py::class_<Rational>(m, "Rational")
        .def(py::init<>())
        .def(py::init(&rational_from_object), py::arg("value"))
        .def(py::init([](py::int_ num, py::int_ den) {
                 return rational_from_object(num) / rational_from_object(den);
             }),
             py::arg("num"), py::arg("den"))
        .def_property_readonly("num", [](const Rational& r) { return to_py_int(r.num()); })
        .def_property_readonly("den", [](const Rational& r) { return to_py_int(r.den()); })
        .def("as_fraction",
             [](const Rational& r) {
                 auto fraction = py::module_::import("fractions").attr("Fraction");
                 return fraction(to_py_int(r.num()), to_py_int(r.den()));
             })
        .def("__float__", &Rational::to_double)
        .def("__str__", &Rational::to_string)
        .def("__repr__", [](const Rational& r) { return "Rational('" + r.to_string() + "')"; })
        .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; }, py::is_operator())
        .def("__lt__", [](const Rational& a, const Rational& b) { return a < b; }, py::is_operator())
        .def("__le__", [](const Rational& a, const Rational& b) { return a <= b; }, py::is_operator())
        .def("__neg__", [](const Rational& a) { return -a; })
        .def("__add__", [](const Rational& a, const Rational& b) { return a + b; }, py::is_operator())
        .def("__sub__", [](const Rational& a, const Rational& b) { return a - b; }, py::is_operator())
        .def("__mul__", [](const Rational& a, const Rational& b) { return a * b; }, py::is_operator())
        .def("__truediv__", [](const Rational& a, const Rational& b) { return a / b; },
             py::is_operator())
        .def("__hash__", [](const Rational& r) { return py::hash(py::str(r.to_string())); });
    py::implicitly_convertible<py::int_, Rational>();
    py::implicitly_convertible<py::str, Rational>();

    py::class_<PiRational>(m, "PiRational")
        .def(py::init<Rational, int>(), py::arg("q"), py::arg("pi_power"))
        .def_readonly("q", &PiRational::q)
        .def_readonly("pi_power", &PiRational::pi_power)
        .def("__float__", &PiRational::to_double)
        .def("__str__", &PiRational::to_string)
        .def("__repr__", [](const PiRational& v) { return "PiRational('" + v.to_string() + "')"; })
        .def("__eq__", [](const PiRational& a, const PiRational& b) { return a == b; },
             py::is_operator());

    py::class_<RationalFunction>(m, "RationalFunction")
        .def(py::init<>())
        .def(py::init([](const std::vector<Rational>& num, const std::vector<Rational>& den) {
                 return RationalFunction(polynomial_from_coeffs(num), polynomial_from_coeffs(den));
             }),
             py::arg("num"), py::arg("den"))
        .def_property_readonly("num", [](const RationalFunction& f) { return coeff_list(f.num()); })
        .def_property_readonly("den", [](const RationalFunction& f) { return coeff_list(f.den()); })
        .def("__call__", [](const RationalFunction& f, double x) { return f(x); }, py::arg("x"))
        .def("__call__", [](const RationalFunction& f, const Rational& x) { return f(x); },
             py::arg("x"))
        .def("is_even", &RationalFunction::is_even)
        .def("__str__", [](const RationalFunction& f) { return f.to_string(); })
        .def("__repr__", [](const RationalFunction& f) { return f.to_string(); })
        .def("__eq__", [](const RationalFunction& a, const RationalFunction& b) { return a == b; },
             py::is_operator());

    m.def("binomial", [](long n, long k) { return to_py_int(binomial(n, k)); }, py::arg("n"),
          py::arg("k"));
    m.def("quartic_coefficient", &quartic_coefficient, py::arg("m"), py::arg("l"));
    m.def("quartic_coefficient_oracle", &quartic_coefficient_oracle, py::arg("m"), py::arg("l"));
    m.def("quartic_polynomial", [](int m) { return coeff_list(quartic_polynomial(m)); },
          py::arg("m"));
    m.def("landen_numerator", [](int m) { return coeff_list(landen_numerator(m)); }, py::arg("m"));
    m.def("quartic_value", &quartic_value, py::arg("a"), py::arg("m"));
    m.def("quartic_value_exact", &quartic_value_exact, py::arg("a"), py::arg("m"));
    m.def("quartic_value_hypergeometric", &quartic_value_hypergeometric, py::arg("a"),
          py::arg("m"));
    m.def("quartic_value_landen_route", &quartic_value_landen_route, py::arg("a"), py::arg("m"));
    m.def("sqrt_quartic", &sqrt_quartic, py::arg("a"), py::arg("b"));
    m.def("check_phi_identity", &check_phi_identity, py::arg("m"), py::arg("phi"));
    m.def("check_recurrence", &check_recurrence, py::arg("m"), py::arg("phi"));
    m.def("hypergeometric_2f1_terminating", &hypergeometric_2f1_terminating, py::arg("neg_m"),
          py::arg("b"), py::arg("c"), py::arg("z"));
    m.def("beta_half_integer", &beta_half_integer, py::arg("x"), py::arg("y"));
    m.def("even_moment", &even_moment, py::arg("k"), py::arg("m"));

    m.def("landen_transform", &landen_transform, py::arg("f"));
    m.def("landen_transform_general", &landen_transform_general, py::arg("f"));
    m.def("quartic_integrand", &quartic_integrand, py::arg("a"), py::arg("m"));
    m.def("quartic_transformed", &quartic_transformed, py::arg("a"), py::arg("m"));
    m.def("cot_multiple", &cot_multiple, py::arg("m"));

    py::class_<ConvergenceReport>(m, "ConvergenceReport")
        .def_readonly("iterations", &ConvergenceReport::iterations)
        .def_readonly("error_trace", &ConvergenceReport::error_trace)
        .def_readonly("estimated_order", &ConvergenceReport::estimated_order)
        .def_readonly("final_value", &ConvergenceReport::final_value)
        .def_readonly("converged", &ConvergenceReport::converged)
        .def_readonly("warnings", &ConvergenceReport::warnings);

    py::class_<QuadraticState>(m, "QuadraticState")
        .def(py::init<double, double, double>(), py::arg("a"), py::arg("b"), py::arg("c"))
        .def_readwrite("a", &QuadraticState::a)
        .def_readwrite("b", &QuadraticState::b)
        .def_readwrite("c", &QuadraticState::c);

    py::class_<SexticState>(m, "SexticState")
        .def(py::init<double, double, double, double, double>(), py::arg("a"), py::arg("b"),
             py::arg("c"), py::arg("d"), py::arg("e"))
        .def_readwrite("a", &SexticState::a)
        .def_readwrite("b", &SexticState::b)
        .def_readwrite("c", &SexticState::c)
        .def_readwrite("d", &SexticState::d)
        .def_readwrite("e", &SexticState::e);

    m.def("agm", &agm, py::arg("a"), py::arg("b"), py::arg("rel_tol") = 1e-15);
    m.def("elliptic_integral", &elliptic_integral, py::arg("a"), py::arg("b"));
    m.def("landen_step", py::overload_cast<const QuadraticState&>(&landen_step), py::arg("state"));
    m.def("landen_step", py::overload_cast<const SexticState&, bool>(&landen_step),
          py::arg("state"), py::arg("printed_d_map") = false);
    m.def("landen_iterate", py::overload_cast<QuadraticState, double>(&landen_iterate),
          py::arg("state"), py::arg("tol") = 1e-12);
    m.def("landen_iterate", py::overload_cast<SexticState, double, bool>(&landen_iterate),
          py::arg("state"), py::arg("tol") = 1e-12, py::arg("printed_d_map") = false);
    m.def("estimate_order", &estimate_order, py::arg("errors"));

    py::class_<QuadratureResult>(m, "QuadratureResult")
        .def_readonly("value", &QuadratureResult::value)
        .def_readonly("error_estimate", &QuadratureResult::error_estimate);

    py::class_<CheckPair>(m, "CheckPair")
        .def_readonly("lhs", &CheckPair::lhs)
        .def_readonly("rhs", &CheckPair::rhs);

    m.def("vanishing_odd_moment", &vanishing_odd_moment, py::arg("a"), py::arg("m"), py::arg("j"));
    m.def("ramanujan_master_pair", &ramanujan_master_pair, py::arg("a"), py::arg("m"));
    m.def("sqrt_derivative_pair", &sqrt_derivative_pair, py::arg("a"), py::arg("c"));

    m.def(
        "integrate",
        [](std::function<double(double)> f, double lo, double hi, double rel_tol, double abs_tol,
           int max_subintervals) {
            return integrate(make_spec(std::move(f), Finite{lo, hi}, rel_tol, abs_tol,
                                       max_subintervals));
        },
        py::arg("f"), py::arg("lo"), py::arg("hi"), py::arg("rel_tol") = 1e-10,
        py::arg("abs_tol") = 0.0, py::arg("max_subintervals") = 1 << 20);
    m.def(
        "integrate_half_line",
        [](std::function<double(double)> f, double rel_tol, double abs_tol, int max_subintervals) {
            return integrate(make_spec(std::move(f), HalfLine{}, rel_tol, abs_tol,
                                       max_subintervals));
        },
        py::arg("f"), py::arg("rel_tol") = 1e-10, py::arg("abs_tol") = 0.0,
        py::arg("max_subintervals") = 1 << 20);
    m.def(
        "integrate_whole_line",
        [](std::function<double(double)> f, double rel_tol, double abs_tol, int max_subintervals) {
            return integrate(make_spec(std::move(f), WholeLine{}, rel_tol, abs_tol,
                                       max_subintervals));
        },
        py::arg("f"), py::arg("rel_tol") = 1e-10, py::arg("abs_tol") = 0.0,
        py::arg("max_subintervals") = 1 << 20);
}
