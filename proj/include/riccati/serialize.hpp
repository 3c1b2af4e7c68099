#ifndef RICCATI_SERIALIZE_HPP
#define RICCATI_SERIALIZE_HPP

#include <optional>
#include <string>

#include "json.hpp"
#include "riccati/riccati_poly.hpp"
#include "riccati/riccati_trig.hpp"

namespace riccati {

using Json = nlohmann::ordered_json;

// scalar / polynomial encodings: rationals as "p/q" strings, polynomials
// as ascending coefficient arrays, trig polynomials as {a0, cos, sin}
Json rational_to_json(const Rational& r);
Json poly_to_json(const Poly& p);
Json trig_to_json(const TrigPoly& t);
Json ratform_to_json(const RatForm& r);

Rational rational_from_json(const Json& j);
/// Accepts a coefficient array or an expression string.
Poly poly_from_json(const Json& j);
/// Accepts an {a0, cos, sin} object or an expression string.
TrigPoly trig_from_json(const Json& j);

Json equation_to_json(const RiccatiEq& eq);
Json equation_to_json(const TrigRiccatiEq& eq);

/// EquationSpec: {"kind": "poly"|"trig", coefficient fields, optional
/// "seeds" and "candidates" arrays}. Coefficients accept both channels
/// (text expressions and structured JSON) with identical semantics.
struct EquationSpec {
    std::string kind;
    std::optional<RiccatiEq> poly_eq;
    std::optional<TrigRiccatiEq> trig_eq;
    std::vector<Poly> poly_seeds;
    std::vector<TrigPoly> trig_seeds;
    std::vector<Poly> poly_candidates;
    std::vector<TrigPoly> trig_candidates;

    static EquationSpec from_json(const Json& j);
};

/// Machine-readable solve reports; stable field order, exact values.
Json poly_report(const RiccatiEq& eq, const SolutionSet& sols,
                 std::optional<double> elapsed_ms = std::nullopt);
Json trig_report(const TrigRiccatiEq& eq, const TrigSolutionSet& sols,
                 std::optional<double> elapsed_ms = std::nullopt);

/// Round-trip readers for the reports above (exact field recovery).
struct PolyReportData {
    RiccatiEq eq;
    SolutionSet sols;
};
struct TrigReportData {
    TrigRiccatiEq eq;
    TrigSolutionSet sols;
};
PolyReportData poly_report_from_json(const Json& j);
TrigReportData trig_report_from_json(const Json& j);

/// theta,A,Y1..Yk rows over n uniform samples of [0, 2pi], 12 significant
/// digits, CRLF line ends. Throws BadGrid for n < 2.
std::string sample_curves_csv(const TrigRiccatiEq& eq, const TrigSolutionSet& sols,
                              int n);

}  // namespace riccati

#endif
