// Python bindings for the exact Riccati solver. Exact values cross the
// boundary as strings ("p/q") or JSON-shaped dicts, never as floats.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "riccati/fuzz.hpp"
#include "riccati/parse.hpp"
#include "riccati/serialize.hpp"

namespace py = pybind11;
using namespace riccati;

namespace {

py::object json_to_py(const Json& j) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

RiccatiEq poly_eq_from_strings(const std::string& a, const std::string& b0,
                               const std::string& b1, const std::string& b2) {
    auto or_zero = [](const std::string& s) {
        return s.empty() ? Poly() : parse_poly_expr(s);
    };
    return RiccatiEq::make(parse_poly_expr(a), or_zero(b0), or_zero(b1),
                           parse_poly_expr(b2));
}

TrigRiccatiEq trig_eq_from_strings(const std::string& A, const std::string& B0,
                                   const std::string& B1, const std::string& B2) {
    auto or_zero = [](const std::string& s) {
        return s.empty() ? TrigPoly() : parse_trig_expr(s);
    };
    return TrigRiccatiEq::make(parse_trig_expr(A), or_zero(B0), or_zero(B1),
                               parse_trig_expr(B2));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact polynomial and trigonometric Riccati equation solver";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            if (e.code() == Errc::syntax_error) {
                PyErr_SetString(PyExc_ValueError, e.what());
            } else {
                PyErr_SetString(PyExc_RuntimeError, e.what());
            }
        }
    });

    m.def(
        "solve_poly",
        [](const std::string& a, const std::string& b0, const std::string& b1,
           const std::string& b2, const std::vector<std::string>& seeds) {
            RiccatiEq eq = poly_eq_from_strings(a, b0, b1, b2);
            std::vector<Poly> parsed;
            for (const auto& s : seeds) parsed.push_back(parse_poly_expr(s));
            return json_to_py(poly_report(eq, solve_all(eq, parsed)));
        },
        py::arg("a"), py::arg("b0") = "", py::arg("b1") = "", py::arg("b2") = "",
        py::arg("seeds") = std::vector<std::string>{},
        "Enumerate all polynomial solutions of a(x) y' = b0 + b1 y + b2 y^2.");

    m.def(
        "solve_trig",
        [](const std::string& A, const std::string& B0, const std::string& B1,
           const std::string& B2, const std::vector<std::string>& seeds) {
            TrigRiccatiEq eq = trig_eq_from_strings(A, B0, B1, B2);
            std::vector<TrigPoly> parsed;
            for (const auto& s : seeds) parsed.push_back(parse_trig_expr(s));
            return json_to_py(trig_report(eq, solve_all_trig(eq, parsed)));
        },
        py::arg("A"), py::arg("B0") = "", py::arg("B1") = "", py::arg("B2") = "",
        py::arg("seeds") = std::vector<std::string>{},
        "Enumerate all trigonometric polynomial solutions of A Y' = B0 + B1 Y + B2 Y^2.");

    m.def(
        "verify_poly",
        [](const std::string& a, const std::string& b0, const std::string& b1,
           const std::string& b2, const std::string& y) {
            return verify_solution(poly_eq_from_strings(a, b0, b1, b2),
                                   parse_poly_expr(y));
        },
        py::arg("a"), py::arg("b0"), py::arg("b1"), py::arg("b2"), py::arg("y"));

    m.def(
        "verify_trig",
        [](const std::string& A, const std::string& B0, const std::string& B1,
           const std::string& B2, const std::string& Y) {
            return verify_trig_solution(trig_eq_from_strings(A, B0, B1, B2),
                                        parse_trig_expr(Y));
        },
        py::arg("A"), py::arg("B0"), py::arg("B1"), py::arg("B2"), py::arg("Y"));

    m.def(
        "gen_extremal_poly",
        [](int eta, int j, const std::vector<std::string>& roots) {
            std::vector<Rational> rs;
            for (const auto& r : roots) rs.push_back(Rational::from_string(r));
            auto [eq, sols] = gen_extremal(eta, j, rs);
            return json_to_py(poly_report(eq, sols));
        },
        py::arg("eta"), py::arg("j"), py::arg("roots"));

    m.def(
        "gen_extremal_trig",
        [](int eta, int k, const std::vector<std::string>& cs, const std::string& d1,
           const std::string& d2) {
            std::vector<Rational> parsed;
            for (const auto& c : cs) parsed.push_back(Rational::from_string(c));
            auto [eq, sols] = gen_extremal_trig(eta, k, parsed,
                                                Rational::from_string(d1),
                                                Rational::from_string(d2));
            return json_to_py(trig_report(eq, sols));
        },
        py::arg("eta"), py::arg("k"), py::arg("c"), py::arg("d1") = "1",
        py::arg("d2") = "-1");

    m.def(
        "cross_ratio",
        [](const std::string& y1, const std::string& y2, const std::string& y3,
           const std::string& y4) {
            return cross_ratio(parse_poly_expr(y1), parse_poly_expr(y2),
                               parse_poly_expr(y3), parse_poly_expr(y4))
                .to_string();
        },
        py::arg("y1"), py::arg("y2"), py::arg("y3"), py::arg("y4"),
        "The constant cross ratio of four distinct solutions of one equation.");

    m.def("parse_poly", [](const std::string& src) {
        return json_to_py(poly_to_json(parse_poly_expr(src)));
    });
    m.def("poly_to_str",
          [](const py::object& coeffs) {
              py::object dumps = py::module_::import("json").attr("dumps");
              Json j = Json::parse(dumps(coeffs).cast<std::string>());
              return to_string(poly_from_json(j));
          });
    m.def("parse_trig", [](const std::string& src) {
        return json_to_py(trig_to_json(parse_trig_expr(src)));
    });
    m.def("trig_to_str", [](const py::object& obj) {
        py::object dumps = py::module_::import("json").attr("dumps");
        Json j = Json::parse(dumps(obj).cast<std::string>());
        return to_string(trig_from_json(j));
    });

    m.def(
        "phi_forward",
        [](const std::string& src) {
            return json_to_py(ratform_to_json(phi_forward(parse_trig_expr(src))));
        },
        "Half-angle image f(x)/(1+x^2)^nu of a trigonometric polynomial.");
    m.def(
        "phi_inverse",
        [](const py::object& numerator, int nu) {
            py::object dumps = py::module_::import("json").attr("dumps");
            Json j = Json::parse(dumps(numerator).cast<std::string>());
            return json_to_py(trig_to_json(phi_inverse(RatForm(poly_from_json(j), nu))));
        },
        py::arg("numerator"), py::arg("nu"));

    m.def(
        "sample_csv",
        [](const std::string& A, const std::string& B0, const std::string& B1,
           const std::string& B2, int n) {
            TrigRiccatiEq eq = trig_eq_from_strings(A, B0, B1, B2);
            return sample_curves_csv(eq, solve_all_trig(eq), n);
        },
        py::arg("A"), py::arg("B0"), py::arg("B1"), py::arg("B2"), py::arg("n") = 361);

    m.def(
        "fuzz",
        [](const std::string& kind, int count, int max_eta, std::uint64_t seed) {
            FuzzReport r = kind == "trig" ? fuzz_trig(count, max_eta, seed)
                                          : fuzz_poly(count, max_eta, seed);
            py::dict d;
            d["kind"] = kind;
            d["count"] = r.count;
            d["max_eta"] = r.max_eta;
            d["seed"] = r.seed;
            d["violations"] = r.violations;
            d["incomplete"] = r.incomplete;
            d["solutions_total"] = r.solutions_total;
            d["max_solutions_seen"] = r.max_solutions_seen;
            return d;
        },
        py::arg("kind") = "poly", py::arg("count") = 100, py::arg("max_eta") = 3,
        py::arg("seed") = 0);

    m.attr("__version__") = "1.0.0";
}
