#include "doctest.h"

#include "riccati/factor.hpp"
#include "riccati/riccati_trig.hpp"
#include "test_support.hpp"

using namespace testsupport;
using namespace riccati;

namespace {

TrigPoly tp(long a0, std::initializer_list<long> cs, std::initializer_list<long> ss) {
    std::vector<Rational> cos_coeffs, sin_coeffs;
    for (long v : cs) cos_coeffs.emplace_back(v);
    for (long v : ss) sin_coeffs.emplace_back(v);
    return TrigPoly(Rational(a0), std::move(cos_coeffs), std::move(sin_coeffs));
}

// Degree-3 equation with six trigonometric polynomial solutions:
// A = 5 sin t + 8 sin 2t + 5 sin 3t, B1 = 2 + 6 cos t + 18 cos 2t + 10 cos 3t,
// B2 = -1, B0 = 0.
TrigRiccatiEq six_solution_fixture() {
    TrigPoly A = tp(0, {0, 0, 0}, {5, 8, 5});
    TrigPoly B1 = tp(2, {6, 18, 10}, {0, 0, 0});
    return TrigRiccatiEq::make(A, TrigPoly(), B1, TrigPoly::constant(Rational(-1)));
}

std::vector<TrigPoly> six_solutions() {
    return {
        TrigPoly(),
        tp(10, {16, 10}, {0, 0}),
        tp(1, {-2, 1}, {0, 3}),
        tp(1, {-2, 1}, {0, -3}),
        tp(-3, {-2, 5}, {-8, -5}),
        tp(-3, {-2, 5}, {8, 5}),
    };
}

// sin t Y' = 2 cos t Y - Y^2: three solutions {0, 1 + cos t, -1 + cos t}.
TrigRiccatiEq eta1_fixture() {
    return TrigRiccatiEq::make(TrigPoly::sine(1), TrigPoly(),
                               TrigPoly::cosine(1, Rational(2)),
                               TrigPoly::constant(Rational(-1)));
}

}  // namespace

TEST_CASE("construction validates and caches the x side") {
    TrigRiccatiEq eq = six_solution_fixture();
    CHECK(eq.eta == 3);
    CHECK(eq.xa.nu() == 3);
    // Phi(A) = 8x(x^2-1)(x^2-9) / (1+x^2)^3
    Poly expected = Rational(8) * (Poly::x() * ipoly({-1, 0, 1}) * ipoly({-9, 0, 1}));
    CHECK(eq.xa.numerator() == expected);
    CHECK(eq.xb2.numerator() == ipoly({-1}));
    CHECK_THROWS_AS(TrigRiccatiEq::make(TrigPoly(), TrigPoly(), TrigPoly(),
                                        TrigPoly::constant(Rational(1))),
                    Error);
    CHECK_THROWS_AS(TrigRiccatiEq::make(TrigPoly::sine(1), TrigPoly(), TrigPoly(),
                                        TrigPoly()),
                    Error);
}

TEST_CASE("trig degree bound") {
    CHECK(trig_degree_bound(six_solution_fixture()) == 3);
    CHECK(trig_degree_bound(eta1_fixture()) == 1);
    // deg B2 = eta leaves only constant candidates
    TrigRiccatiEq flat = TrigRiccatiEq::make(TrigPoly::sine(1), TrigPoly(), TrigPoly(),
                                             TrigPoly::cosine(1));
    CHECK(trig_degree_bound(flat) == 0);
}

TEST_CASE("verify_trig_solution on the fixture") {
    TrigRiccatiEq eq = six_solution_fixture();
    for (const TrigPoly& y : six_solutions()) {
        CAPTURE(y.degree());
        CHECK(verify_trig_solution(eq, y));
    }
    CHECK_FALSE(verify_trig_solution(eq, TrigPoly::cosine(1)));
    CHECK(verify_trig_solution(eq, TrigPoly()));  // B0 = 0
    TrigRiccatiEq with_b0 =
        TrigRiccatiEq::make(TrigPoly::sine(1), TrigPoly::constant(Rational(1)),
                            TrigPoly(), TrigPoly::constant(Rational(1)));
    CHECK_FALSE(verify_trig_solution(with_b0, TrigPoly()));
}

TEST_CASE("reduce_trig translates the solution set") {
    TrigRiccatiEq eq = six_solution_fixture();
    TrigPoly y2 = tp(10, {16, 10}, {0, 0});
    TrigRiccatiEq red = reduce_trig(eq, y2);
    CHECK(red.B0.is_zero());
    CHECK(red.A == eq.A);
    CHECK(red.B2 == eq.B2);
    CHECK(red.eta <= eq.eta);
    for (const TrigPoly& y : six_solutions()) {
        CHECK(verify_trig_solution(red, y - y2));
    }
    CHECK_THROWS_AS(reduce_trig(eq, TrigPoly::cosine(1)), Error);
}

TEST_CASE("transport identity vanishes exactly on solutions") {
    TrigRiccatiEq eq = six_solution_fixture();
    for (const TrigPoly& y : six_solutions()) {
        if (y.is_zero()) continue;
        RatForm form = phi_forward(y);
        XSideIdentity id = transport_to_x(eq, form.nu());
        CHECK(id.residual(form.numerator()).is_zero());
    }
    XSideIdentity id = transport_to_x(eq, 2);
    CHECK_FALSE(id.residual(ipoly({1, 2})).is_zero());
}

TEST_CASE("transport at level zero is a plain polynomial residual") {
    TrigRiccatiEq eq = eta1_fixture();
    XSideIdentity id = transport_to_x(eq, 0);
    CHECK(id.m == 0);
    // constant solutions would satisfy a_mul * 0 = b1_mul w + b2_mul w^2
    CHECK(id.residual(Poly()) == Poly());
}

TEST_CASE("the eta=1 fixture admits w = (1+x^2) +- (1-x^2) at level 1") {
    TrigRiccatiEq eq = eta1_fixture();
    XSideIdentity id = transport_to_x(eq, 1);
    CHECK(id.residual(ipoly({2})).is_zero());         // 1 + cos t has image 2/(1+x^2)
    CHECK(id.residual(ipoly({0, 0, -2})).is_zero());  // -1 + cos t has image -2x^2/(1+x^2)
    CHECK_FALSE(id.residual(ipoly({0, 2})).is_zero());
}

TEST_CASE("trig base search finds the eta=1 pair") {
    TrigBaseSearch base = trig_base_solutions(eta1_fixture());
    REQUIRE(base.found.size() == 2);
    TrigPoly plus = TrigPoly::constant(Rational(1)) + TrigPoly::cosine(1);
    TrigPoly minus = TrigPoly::constant(Rational(-1)) + TrigPoly::cosine(1);
    CHECK(base.found[0].degree() == 1);
    CHECK(base.found[1].degree() == 1);
    CHECK((base.found[0] == plus || base.found[1] == plus));
    CHECK((base.found[0] == minus || base.found[1] == minus));
}

TEST_CASE("trig base search finds an equal-degree pair on the fixture") {
    TrigBaseSearch base = trig_base_solutions(six_solution_fixture());
    REQUIRE(base.found.size() == 2);
    CHECK(base.found[0].degree() == 2);
    CHECK(base.found[1].degree() == 2);
    auto sols = six_solutions();
    for (const TrigPoly& y : base.found) {
        CHECK(std::find(sols.begin(), sols.end(), y) != sols.end());
    }
}

TEST_CASE("closure recovers all six fixture solutions") {
    TrigRiccatiEq eq = six_solution_fixture();
    TrigBaseSearch base = trig_base_solutions(eq);
    REQUIRE(base.found.size() == 2);
    TrigSolutionSet set = trig_closure(eq, base.found[0], base.found[1]);
    CHECK(set.size() == 6);
    for (const TrigPoly& y : six_solutions()) CHECK(set.contains(y));
    // phi round trip on the cached x-forms
    for (const auto& e : set.entries()) {
        CHECK(phi_inverse(e.x_form) == e.Y);
    }
}

TEST_CASE("closure errors") {
    TrigRiccatiEq eq = eta1_fixture();
    TrigPoly plus = TrigPoly::constant(Rational(1)) + TrigPoly::cosine(1);
    CHECK_THROWS_AS(trig_closure(eq, plus, plus), Error);
    CHECK_THROWS_AS(trig_closure(eq, plus, TrigPoly::cosine(1)), Error);
}

TEST_CASE("solve_all_trig on the six-solution fixture") {
    TrigRiccatiEq eq = six_solution_fixture();
    TrigSolutionSet set = solve_all_trig(eq);
    CHECK(set.size() == 6);
    CHECK(set.complete_over_rationals);
    for (const TrigPoly& y : six_solutions()) CHECK(set.contains(y));
}

TEST_CASE("solve_all_trig on the eta=1 fixture") {
    TrigSolutionSet set = solve_all_trig(eta1_fixture());
    REQUIRE(set.size() == 3);
    CHECK(set.contains(TrigPoly()));
    CHECK(set.contains(TrigPoly::constant(Rational(1)) + TrigPoly::cosine(1)));
    CHECK(set.contains(TrigPoly::constant(Rational(-1)) + TrigPoly::cosine(1)));
}

TEST_CASE("solve_all_trig with seeds and degree bounds") {
    TrigRiccatiEq eq = six_solution_fixture();
    TrigPoly y3 = tp(1, {-2, 1}, {0, 3});
    TrigSolutionSet seeded = solve_all_trig(eq, {y3});
    CHECK(seeded.size() == 6);
    bool marked = false;
    for (const auto& e : seeded.entries()) {
        CHECK(e.Y.degree() <= trig_degree_bound(eq));
        if (e.Y == y3) marked = e.provenance == Provenance::seeded;
    }
    CHECK(marked);
    CHECK_THROWS_AS(solve_all_trig(eq, {TrigPoly::cosine(2)}), Error);
}

TEST_CASE("gen_extremal_trig produces k+3 certified solutions") {
    SUBCASE("eta=2, k=1") {
        auto [eq, set] = gen_extremal_trig(2, 1, {Rational(0)}, Rational(1), Rational(-1));
        CHECK(eq.eta == 2);
        CHECK(set.size() == 4);
        for (const auto& e : set.entries()) CHECK(verify_trig_solution(eq, e.Y));
    }
    SUBCASE("eta=3, k=3 attains the sharp count") {
        auto [eq, set] = gen_extremal_trig(
            3, 3, {Rational(2), Rational(3), Rational(4)}, Rational(1), Rational(-1));
        CHECK(set.size() == 6);
        TrigSolutionSet resolved = solve_all_trig(eq);
        CHECK(resolved.trig_polys() == set.trig_polys());
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(gen_extremal_trig(1, 1, {Rational(0)}, Rational(1), Rational(-1)),
                        Error);
        CHECK_THROWS_AS(gen_extremal_trig(2, 2, {Rational(0), Rational(2)}, Rational(1),
                                          Rational(-1)),
                        Error);
        CHECK_THROWS_AS(gen_extremal_trig(2, 1, {Rational(1)}, Rational(1), Rational(-1)),
                        Error);
        CHECK_THROWS_AS(gen_extremal_trig(3, 2, {Rational(0), Rational(0)}, Rational(1),
                                          Rational(-1)),
                        Error);
    }
}

TEST_CASE("closure from a distinct-degree seed pair") {
    // equation built to carry cos t (degree 1) and cos 2t (degree 2):
    // A = Y1 Y2 (Y2 - Y1), B1 = Y1' Y2^2 - Y2' Y1^2, B2 = Y1 Y2' - Y2 Y1'
    TrigPoly y1 = TrigPoly::cosine(1);
    TrigPoly y2 = TrigPoly::cosine(2);
    TrigPoly A = y1 * y2 * (y2 - y1);
    TrigPoly B1 = y1.derivative() * (y2 * y2) - y2.derivative() * (y1 * y1);
    TrigPoly B2 = y1 * y2.derivative() - y2 * y1.derivative();
    TrigRiccatiEq eq = TrigRiccatiEq::make(A, TrigPoly(), B1, B2);
    REQUIRE(verify_trig_solution(eq, y1));
    REQUIRE(verify_trig_solution(eq, y2));

    TrigSolutionSet closed = trig_closure(eq, y1, y2);
    CHECK(closed.contains(TrigPoly()));
    CHECK(closed.contains(y1));
    CHECK(closed.contains(y2));
    // the full pipeline agrees with the direct closure from this pair
    TrigSolutionSet resolved = solve_all_trig(eq);
    CHECK(resolved.trig_polys() == closed.trig_polys());
}

TEST_CASE("the unique degree-raising closure parameter is found") {
    // seeds with numerators x^2+x+1 and x^2-x+1 over (1+x^2): at c = 1/2
    // the denominator combination is exactly 1+x^2, so the family contains
    // one solution of degree 2 above the seed degree 1
    TrigPoly y1 = phi_inverse(RatForm(ipoly({1, 1, 1}), 1));
    TrigPoly y2 = phi_inverse(RatForm(ipoly({1, -1, 1}), 1));
    TrigPoly A = y1 * y2 * (y2 - y1);
    TrigPoly B1 = y1.derivative() * (y2 * y2) - y2.derivative() * (y1 * y1);
    TrigPoly B2 = y1 * y2.derivative() - y2 * y1.derivative();
    TrigRiccatiEq eq = TrigRiccatiEq::make(A, TrigPoly(), B1, B2);
    REQUIRE(verify_trig_solution(eq, y1));
    REQUIRE(verify_trig_solution(eq, y2));

    TrigSolutionSet closed = trig_closure(eq, y1, y2);
    TrigPoly raised = phi_inverse(RatForm(ipoly({1, 1, 1}) * ipoly({1, -1, 1}), 2));
    CHECK(closed.contains(raised));
    CHECK(raised.degree() == 2);
    int above_seed_degree = 0;
    for (const auto& e : closed.entries()) {
        if (e.Y.degree() > 1) ++above_seed_degree;
    }
    CHECK(above_seed_degree == 1);
    bool tagged = false;
    for (const auto& e : closed.entries()) {
        if (e.Y == raised) tagged = e.closure_c == Rational(1, 2);
    }
    CHECK(tagged);
}

TEST_CASE("lemma-10 support: solution numerators factor through a") {
    TrigRiccatiEq eq = six_solution_fixture();
    TrigSolutionSet set = solve_all_trig(eq);
    for (const auto& e : set.entries()) {
        if (e.Y.is_zero() || e.Y.is_constant()) continue;
        for (const auto& [f, mult] : factor_irreducible(e.x_form.numerator()).factors) {
            (void)mult;
            CHECK(f.divides(eq.xa.numerator()));
        }
    }
}
