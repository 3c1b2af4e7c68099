#include "doctest.h"

#include <random>

#include "riccati/parse.hpp"
#include "riccati/serialize.hpp"
#include "test_support.hpp"

using namespace testsupport;
using namespace riccati;

TEST_CASE("scalar and polynomial encodings") {
    CHECK(rational_to_json(Rational(-3, 2)) == Json("-3/2"));
    CHECK(poly_to_json(ipoly({1, 0, 1})) == Json::array({"1", "0", "1"}));
    CHECK(poly_to_json(Poly()) == Json::array({"0"}));
    Json t = trig_to_json(TrigPoly::cosine(2, Rational(1, 2)));
    CHECK(t["a0"] == "0");
    CHECK(t["cos"] == Json::array({"0", "1/2"}));
    CHECK(t["sin"] == Json::array({"0", "0"}));
}

TEST_CASE("json accepts both input channels") {
    CHECK(poly_from_json(Json("x^2+1")) == ipoly({1, 0, 1}));
    CHECK(poly_from_json(Json::array({"1", "0", "1"})) == ipoly({1, 0, 1}));
    CHECK(trig_from_json(Json("cos(t)")) == TrigPoly::cosine(1));
    Json obj;
    obj["a0"] = "1";
    obj["cos"] = Json::array({"1"});
    obj["sin"] = Json::array({"0"});
    CHECK(trig_from_json(obj) ==
          TrigPoly::constant(Rational(1)) + TrigPoly::cosine(1));
}

TEST_CASE("equation spec round trip") {
    Json spec_json = Json::parse(R"({
        "kind": "poly",
        "a": "x",
        "b0": ["0"],
        "b1": "2-x^2",
        "b2": ["1"],
        "seeds": ["x^2"]
    })");
    EquationSpec spec = EquationSpec::from_json(spec_json);
    REQUIRE(spec.poly_eq.has_value());
    CHECK(spec.poly_eq->eta == 2);
    REQUIRE(spec.poly_seeds.size() == 1);
    CHECK(spec.poly_seeds[0] == ipoly({0, 0, 1}));
    CHECK_THROWS_AS(EquationSpec::from_json(Json::parse(R"({"kind":"what"})")), Error);
    CHECK_THROWS_AS(EquationSpec::from_json(Json::parse(R"({"kind":"poly","a":"x"})")),
                    Error);
}

TEST_CASE("poly report round trips exactly") {
    RiccatiEq eq = RiccatiEq::make(parse_poly_expr("x"), Poly(),
                                   parse_poly_expr("2-x^2"), parse_poly_expr("1"));
    SolutionSet sols = solve_all(eq);
    Json report = poly_report(eq, sols);
    PolyReportData parsed = poly_report_from_json(report);
    Json again = poly_report(parsed.eq, parsed.sols);
    CHECK(report == again);
}

TEST_CASE("trig report round trips exactly") {
    TrigRiccatiEq eq = TrigRiccatiEq::make(parse_trig_expr("sin(t)"), TrigPoly(),
                                           parse_trig_expr("2cos(t)"),
                                           parse_trig_expr("-1"));
    TrigSolutionSet sols = solve_all_trig(eq);
    Json report = trig_report(eq, sols);
    TrigReportData parsed = trig_report_from_json(report);
    Json again = trig_report(parsed.eq, parsed.sols);
    CHECK(report == again);
}

TEST_CASE("report round trip on random solved equations") {
    std::mt19937_64 rng(5511);
    int solved = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Poly a = random_nonzero_poly(rng, 2, 3, 1);
        Poly b1 = random_poly(rng, 2, 3, 1);
        Poly b2 = random_nonzero_poly(rng, 2, 3, 1);
        RiccatiEq eq = RiccatiEq::make(a, Poly(), b1, b2);
        SolutionSet sols = solve_all(eq);
        Json report = poly_report(eq, sols);
        PolyReportData parsed = poly_report_from_json(report);
        CHECK(poly_report(parsed.eq, parsed.sols) == report);
        if (sols.size() > 0) ++solved;
    }
    CHECK(solved > 0);
}

TEST_CASE("csv sampling") {
    TrigRiccatiEq eq = TrigRiccatiEq::make(parse_trig_expr("sin(t)"), TrigPoly(),
                                           parse_trig_expr("2cos(t)"),
                                           parse_trig_expr("-1"));
    TrigSolutionSet sols = solve_all_trig(eq);
    std::string csv = sample_curves_csv(eq, sols, 361);
    // header + 361 rows, CRLF line ends
    std::size_t rows = 0;
    for (std::size_t i = 0; i + 1 < csv.size(); ++i) {
        if (csv[i] == '\r' && csv[i + 1] == '\n') ++rows;
    }
    CHECK(rows == 362);
    CHECK(csv.rfind("theta,A,Y1,Y2,Y3", 0) == 0);
    CHECK_THROWS_AS(sample_curves_csv(eq, sols, 1), Error);
}

TEST_CASE("csv endpoint values") {
    // Y2 = 10 + 16 cos + 10 cos(2t) evaluates to 36 at theta = 0
    TrigRiccatiEq eq = TrigRiccatiEq::make(
        parse_trig_expr("5sin(t)+8sin(2t)+5sin(3t)"), TrigPoly(),
        parse_trig_expr("2+6cos(t)+18cos(2t)+10cos(3t)"), parse_trig_expr("-1"));
    TrigSolutionSet sols = solve_all_trig(eq);
    std::string csv = sample_curves_csv(eq, sols, 5);
    CHECK(csv.substr(0, csv.find("\r\n")) == "theta,A,Y1,Y2,Y3,Y4,Y5,Y6");
    std::string first_row = csv.substr(csv.find("\r\n") + 2);
    first_row = first_row.substr(0, first_row.find("\r\n"));
    // the last column is the canonical-order maximum, Y2 of the fixture
    CHECK(first_row.substr(first_row.rfind(',') + 1) == "36");
}
