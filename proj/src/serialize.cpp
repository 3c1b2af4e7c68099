#include "riccati/serialize.hpp"

#include <cmath>
#include <cstdio>

#include "riccati/parse.hpp"

namespace riccati {

Json rational_to_json(const Rational& r) { return r.to_string(); }

Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    if (p.is_zero()) {
        arr.push_back("0");
        return arr;
    }
    for (const Rational& c : p.coeffs()) arr.push_back(c.to_string());
    return arr;
}

Json trig_to_json(const TrigPoly& t) {
    Json j;
    j["a0"] = t.constant_term().to_string();
    Json cs = Json::array(), ss = Json::array();
    for (int k = 1; k <= t.degree(); ++k) {
        cs.push_back(t.cos_coeff(k).to_string());
        ss.push_back(t.sin_coeff(k).to_string());
    }
    j["cos"] = std::move(cs);
    j["sin"] = std::move(ss);
    return j;
}

Json ratform_to_json(const RatForm& r) {
    Json j;
    j["numerator"] = poly_to_json(r.numerator());
    j["nu"] = r.nu();
    return j;
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) {
        raise(Errc::bad_parameters, "expected a rational as string or integer");
    }
    return Rational::from_string(j.get<std::string>());
}

Poly poly_from_json(const Json& j) {
    if (j.is_string()) return parse_poly_expr(j.get<std::string>());
    if (!j.is_array()) {
        raise(Errc::bad_parameters, "expected a polynomial expression or array");
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const Json& c : j) coeffs.push_back(rational_from_json(c));
    return Poly(std::move(coeffs));
}

TrigPoly trig_from_json(const Json& j) {
    if (j.is_string()) return parse_trig_expr(j.get<std::string>());
    if (!j.is_object()) {
        raise(Errc::bad_parameters,
              "expected a trig expression or an {a0, cos, sin} object");
    }
    Rational a0 = j.contains("a0") ? rational_from_json(j.at("a0")) : Rational();
    std::vector<Rational> cs, ss;
    if (j.contains("cos")) {
        for (const Json& c : j.at("cos")) cs.push_back(rational_from_json(c));
    }
    if (j.contains("sin")) {
        for (const Json& c : j.at("sin")) ss.push_back(rational_from_json(c));
    }
    return TrigPoly(std::move(a0), std::move(cs), std::move(ss));
}

Json equation_to_json(const RiccatiEq& eq) {
    Json j;
    j["a"] = poly_to_json(eq.a);
    j["b0"] = poly_to_json(eq.b0);
    j["b1"] = poly_to_json(eq.b1);
    j["b2"] = poly_to_json(eq.b2);
    return j;
}

Json equation_to_json(const TrigRiccatiEq& eq) {
    Json j;
    j["A"] = trig_to_json(eq.A);
    j["B0"] = trig_to_json(eq.B0);
    j["B1"] = trig_to_json(eq.B1);
    j["B2"] = trig_to_json(eq.B2);
    return j;
}

EquationSpec EquationSpec::from_json(const Json& j) {
    EquationSpec spec;
    if (!j.is_object() || !j.contains("kind")) {
        raise(Errc::bad_parameters, "equation spec needs a \"kind\" field");
    }
    spec.kind = j.at("kind").get<std::string>();
    auto field = [&](const char* lower, const char* upper) -> const Json& {
        if (j.contains(lower)) return j.at(lower);
        if (j.contains(upper)) return j.at(upper);
        raise(Errc::bad_parameters,
              std::string("equation spec is missing the ") + lower + " coefficient");
    };
    if (spec.kind == "poly") {
        spec.poly_eq = RiccatiEq::make(
            poly_from_json(field("a", "A")), poly_from_json(field("b0", "B0")),
            poly_from_json(field("b1", "B1")), poly_from_json(field("b2", "B2")));
        if (j.contains("seeds")) {
            for (const Json& s : j.at("seeds")) spec.poly_seeds.push_back(poly_from_json(s));
        }
        if (j.contains("candidates")) {
            for (const Json& s : j.at("candidates")) {
                spec.poly_candidates.push_back(poly_from_json(s));
            }
        }
    } else if (spec.kind == "trig") {
        spec.trig_eq = TrigRiccatiEq::make(
            trig_from_json(field("a", "A")), trig_from_json(field("b0", "B0")),
            trig_from_json(field("b1", "B1")), trig_from_json(field("b2", "B2")));
        if (j.contains("seeds")) {
            for (const Json& s : j.at("seeds")) spec.trig_seeds.push_back(trig_from_json(s));
        }
        if (j.contains("candidates")) {
            for (const Json& s : j.at("candidates")) {
                spec.trig_candidates.push_back(trig_from_json(s));
            }
        }
    } else {
        raise(Errc::bad_parameters, "kind must be \"poly\" or \"trig\"");
    }
    return spec;
}

namespace {

Json solution_entry(const PolySolution& s) {
    Json j;
    j["poly"] = poly_to_json(s.y);
    j["degree"] = s.y.degree();
    j["provenance"] = provenance_name(s.provenance);
    if (s.closure_c) j["c"] = s.closure_c->to_string();
    return j;
}

Json solution_entry(const TrigSolution& s) {
    Json j;
    j["trig"] = trig_to_json(s.Y);
    j["x_form"] = ratform_to_json(s.x_form);
    j["degree"] = s.Y.degree();
    j["provenance"] = provenance_name(s.provenance);
    if (s.closure_c) j["c"] = s.closure_c->to_string();
    return j;
}

Provenance provenance_from_name(const std::string& name) {
    if (name == "seeded") return Provenance::seeded;
    if (name == "base-search") return Provenance::base_search;
    if (name == "closure") return Provenance::closure;
    raise(Errc::bad_parameters, "unknown provenance tag '" + name + "'");
}

std::optional<Rational> closure_c_from(const Json& j) {
    if (!j.contains("c")) return std::nullopt;
    return rational_from_json(j.at("c"));
}

}  // namespace

Json poly_report(const RiccatiEq& eq, const SolutionSet& sols,
                 std::optional<double> elapsed_ms) {
    Json j;
    j["kind"] = "poly";
    j["equation"] = equation_to_json(eq);
    j["eta"] = eq.eta;
    j["degree_bound"] = degree_bound(eq);
    j["bound"] = eq.eta >= 1 ? eq.eta + 1 : 2;
    j["count"] = sols.size();
    j["bound_ok"] = sols.size() <= static_cast<std::size_t>(eq.eta >= 1 ? eq.eta + 1 : 2);
    j["complete_over_rationals"] = sols.complete_over_rationals;
    Json list = Json::array();
    for (const auto& s : sols.entries()) list.push_back(solution_entry(s));
    j["solutions"] = std::move(list);
    if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
    return j;
}

Json trig_report(const TrigRiccatiEq& eq, const TrigSolutionSet& sols,
                 std::optional<double> elapsed_ms) {
    int cap = eq.eta >= 2 ? 2 * eq.eta : (eq.eta == 1 ? 3 : 2);
    Json j;
    j["kind"] = "trig";
    j["equation"] = equation_to_json(eq);
    j["eta"] = eq.eta;
    j["degree_bound"] = trig_degree_bound(eq);
    j["bound"] = cap;
    j["count"] = sols.size();
    j["bound_ok"] = sols.size() <= static_cast<std::size_t>(cap);
    j["complete_over_rationals"] = sols.complete_over_rationals;
    Json list = Json::array();
    for (const auto& s : sols.entries()) list.push_back(solution_entry(s));
    j["solutions"] = std::move(list);
    if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
    return j;
}

PolyReportData poly_report_from_json(const Json& j) {
    PolyReportData data{
        RiccatiEq::make(poly_from_json(j.at("equation").at("a")),
                        poly_from_json(j.at("equation").at("b0")),
                        poly_from_json(j.at("equation").at("b1")),
                        poly_from_json(j.at("equation").at("b2"))),
        SolutionSet{}};
    data.sols.complete_over_rationals = j.at("complete_over_rationals").get<bool>();
    for (const Json& s : j.at("solutions")) {
        data.sols.insert(poly_from_json(s.at("poly")),
                         provenance_from_name(s.at("provenance").get<std::string>()),
                         closure_c_from(s));
    }
    return data;
}

TrigReportData trig_report_from_json(const Json& j) {
    TrigReportData data{
        TrigRiccatiEq::make(trig_from_json(j.at("equation").at("A")),
                            trig_from_json(j.at("equation").at("B0")),
                            trig_from_json(j.at("equation").at("B1")),
                            trig_from_json(j.at("equation").at("B2"))),
        TrigSolutionSet{}};
    data.sols.complete_over_rationals = j.at("complete_over_rationals").get<bool>();
    for (const Json& s : j.at("solutions")) {
        data.sols.insert(trig_from_json(s.at("trig")),
                         provenance_from_name(s.at("provenance").get<std::string>()),
                         closure_c_from(s));
    }
    return data;
}

std::string sample_curves_csv(const TrigRiccatiEq& eq, const TrigSolutionSet& sols,
                              int n) {
    if (n < 2) raise(Errc::bad_grid, "need at least two grid points");
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    std::string out = "theta,A";
    for (std::size_t i = 1; i <= sols.size(); ++i) {
        out += ",Y" + std::to_string(i);
    }
    out += "\r\n";
    char buf[64];
    auto fmt = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return std::string(buf);
    };
    for (int row = 0; row < n; ++row) {
        double theta = kTwoPi * row / (n - 1);
        out += fmt(theta);
        out += ',';
        out += fmt(eq.A.eval(theta));
        for (const auto& s : sols.entries()) {
            out += ',';
            out += fmt(s.Y.eval(theta));
        }
        out += "\r\n";
    }
    return out;
}

}  // namespace riccati
