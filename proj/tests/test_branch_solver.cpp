#include "doctest.h"

#include "riccati/branch_solver.hpp"
#include "test_support.hpp"

using namespace testsupport;
using riccati::BranchSolveResult;
using riccati::MultiPoly;
using riccati::resultant_in;
using riccati::solve_rational_system;

namespace {

MultiPoly var(int n, int i) { return MultiPoly::variable(n, i); }
MultiPoly cst(int n, long v) { return MultiPoly::constant(n, Rational(v)); }

}  // namespace

TEST_CASE("single quadratic equation branches on both roots") {
    // u^2 - 3u + 2 = 0 -> u in {1, 2}
    MultiPoly eq = var(1, 0) * var(1, 0) - cst(1, 3) * var(1, 0) + cst(1, 2);
    BranchSolveResult r = solve_rational_system({eq}, 1);
    REQUIRE(r.assignments.size() == 2);
    CHECK(!r.incomplete);
}

TEST_CASE("irrational roots yield no rational branch") {
    // u^2 - 2 = 0
    MultiPoly eq = var(1, 0) * var(1, 0) - cst(1, 2);
    BranchSolveResult r = solve_rational_system({eq}, 1);
    CHECK(r.assignments.empty());
    CHECK(!r.incomplete);
}

TEST_CASE("triangular system resolves top down") {
    // u0^2 = 4, u1 = u0 + 1 (as u1 - u0 - 1 = 0 once u0 known)
    MultiPoly e1 = var(2, 0) * var(2, 0) - cst(2, 4);
    MultiPoly e2 = var(2, 1) - var(2, 0) - cst(2, 1);
    BranchSolveResult r = solve_rational_system({e1, e2}, 2);
    REQUIRE(r.assignments.size() == 2);
    for (const auto& a : r.assignments) {
        CHECK(a[1] == a[0] + Rational(1));
    }
}

TEST_CASE("inconsistent system dies") {
    MultiPoly e1 = var(1, 0) - cst(1, 1);
    MultiPoly e2 = var(1, 0) - cst(1, 2);
    BranchSolveResult r = solve_rational_system({e1, e2}, 1);
    CHECK(r.assignments.empty());
}

TEST_CASE("coupled quadratics fall back to resultants") {
    // u^2 + v^2 = 5, u*v = 2 -> (u,v) in {(1,2),(2,1),(-1,-2),(-2,-1)}
    MultiPoly e1 = var(2, 0) * var(2, 0) + var(2, 1) * var(2, 1) - cst(2, 5);
    MultiPoly e2 = var(2, 0) * var(2, 1) - cst(2, 2);
    BranchSolveResult r = solve_rational_system({e1, e2}, 2);
    REQUIRE(r.assignments.size() == 4);
    for (const auto& a : r.assignments) {
        CHECK(a[0] * a[0] + a[1] * a[1] == Rational(5));
        CHECK(a[0] * a[1] == Rational(2));
    }
}

TEST_CASE("three coupled unknowns still enumerate") {
    // u + v + w = 6, u*v = 2w, w^2 = 4  (w = 2: uv=4, u+v=4 -> u=v=2;
    //                                    w = -2: uv=-4, u+v=8 -> irrational)
    MultiPoly e1 = var(3, 0) + var(3, 1) + var(3, 2) - cst(3, 6);
    MultiPoly e2 = var(3, 0) * var(3, 1) - cst(3, 2) * var(3, 2);
    MultiPoly e3 = var(3, 2) * var(3, 2) - cst(3, 4);
    BranchSolveResult r = solve_rational_system({e3, e1, e2}, 3);
    REQUIRE(r.assignments.size() == 1);
    CHECK(r.assignments[0] == std::vector<Rational>{Rational(2), Rational(2), Rational(2)});
}

TEST_CASE("resultant eliminates the chosen variable") {
    // res_v(u - v, v^2 - 4) = u^2 - 4
    MultiPoly a = var(2, 0) - var(2, 1);
    MultiPoly b = var(2, 1) * var(2, 1) - cst(2, 4);
    MultiPoly res = resultant_in(a, b, 1);
    Poly uni = res.as_univariate(0);
    CHECK(uni.monic() == ipoly({-4, 0, 1}).monic());
}

TEST_CASE("symbolic univariate plumbing matches concrete arithmetic") {
    Poly p = ipoly({1, 2, 3});
    Poly q = ipoly({-1, 0, 1});
    auto sp = riccati::sym_from_poly(p, 1);
    auto sq = riccati::sym_from_poly(q, 1);
    auto prod = riccati::sym_mul(sp, sq);
    Poly expect = p * q;
    REQUIRE(static_cast<int>(prod.size()) == expect.degree() + 1);
    for (std::size_t i = 0; i < prod.size(); ++i) {
        CHECK(prod[i].constant_value() == expect.coeff(static_cast<int>(i)));
    }
    auto d = riccati::sym_derivative(sp);
    CHECK(d[1].constant_value() == Rational(6));
}
