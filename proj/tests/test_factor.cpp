#include "doctest.h"

#include <random>

#include "riccati/factor.hpp"
#include "test_support.hpp"

using namespace testsupport;
using riccati::Error;
using riccati::FactorList;
using riccati::factor_irreducible;
using riccati::is_irreducible;
using riccati::rational_roots;
using riccati::rational_roots_with_multiplicity;

namespace {

Poly recombine(const FactorList& fl) {
    Poly p = Poly::constant(fl.lead);
    for (const auto& [f, mult] : fl.factors) {
        p = p * f.pow(static_cast<unsigned>(mult));
    }
    return p;
}

}  // namespace

TEST_CASE("factor fixed examples") {
    // x^4 - 1 = (x-1)(x+1)(x^2+1)
    FactorList fl = factor_irreducible(ipoly({-1, 0, 0, 0, 1}));
    REQUIRE(fl.factors.size() == 3);
    CHECK(fl.lead == Rational(1));
    CHECK(recombine(fl) == ipoly({-1, 0, 0, 0, 1}));

    // x^2 + 1 stays whole
    fl = factor_irreducible(ipoly({1, 0, 1}));
    REQUIRE(fl.factors.size() == 1);
    CHECK(fl.factors[0].first == ipoly({1, 0, 1}));
    CHECK(fl.factors[0].second == 1);

    // -(x-1)^2 (x-2), the extremal-family shape at eta=2, j=2
    Poly p = Poly::constant(Rational(-1)) * ipoly({-1, 1}).pow(2) * ipoly({-2, 1});
    fl = factor_irreducible(p);
    CHECK(fl.lead == Rational(-1));
    REQUIRE(fl.factors.size() == 2);
    CHECK(fl.factors[0] == std::pair<Poly, int>(ipoly({-2, 1}), 1));
    CHECK(fl.factors[1] == std::pair<Poly, int>(ipoly({-1, 1}), 2));
}

TEST_CASE("factor rejects zero") {
    CHECK_THROWS_AS(factor_irreducible(Poly()), Error);
    CHECK_THROWS_AS(rational_roots(Poly()), Error);
}

TEST_CASE("constants factor trivially") {
    FactorList fl = factor_irreducible(ipoly({7}));
    CHECK(fl.lead == Rational(7));
    CHECK(fl.factors.empty());
}

TEST_CASE("rational roots examples") {
    CHECK(rational_roots(ipoly({1, -3, 2})) ==
          std::vector<Rational>{Rational(1, 2), Rational(1)});
    CHECK(rational_roots(ipoly({1, 0, 1})).empty());
    CHECK(rational_roots(ipoly({0, -1, 0, 1})) ==
          std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});
    auto with_mult = rational_roots_with_multiplicity(ipoly({-1, 1}).pow(3) * ipoly({0, 1}));
    REQUIRE(with_mult.size() == 2);
    CHECK(with_mult[0] == std::pair<Rational, int>(Rational(0), 1));
    CHECK(with_mult[1] == std::pair<Rational, int>(Rational(1), 3));
}

TEST_CASE("bigger composite with repeated and quadratic factors") {
    // 6 (x^2+x+1)^2 (2x-1) (x-3)^3 x^2
    Poly p = Poly::constant(Rational(6)) * ipoly({1, 1, 1}).pow(2) *
             ipoly({-1, 2}) * ipoly({-3, 1}).pow(3) * ipoly({0, 1}).pow(2);
    FactorList fl = factor_irreducible(p);
    CHECK(recombine(fl) == p);
    CHECK(fl.lead == Rational(12));  // 6 * 2 from making 2x-1 monic
    bool found_quadratic = false;
    for (const auto& [f, mult] : fl.factors) {
        CHECK(is_irreducible(f));
        if (f == ipoly({1, 1, 1})) {
            found_quadratic = true;
            CHECK(mult == 2);
        }
    }
    CHECK(found_quadratic);
}

TEST_CASE("random products recombine exactly") {
    std::mt19937_64 rng(123321);
    for (int trial = 0; trial < 60; ++trial) {
        Poly p = random_nonzero_poly(rng, 4, 5, 3);
        Poly q = random_nonzero_poly(rng, 3, 5, 3);
        Poly prod = p * q;
        if (trial % 3 == 0) prod = prod * p;  // force repeated content
        FactorList fl = factor_irreducible(prod);
        CHECK(recombine(fl) == prod);
        for (const auto& [f, mult] : fl.factors) {
            CHECK(mult >= 1);
            CHECK(f.leading().is_one());
            // irreducible factors of degree >= 2 have no rational roots
            if (f.degree() >= 2) CHECK(rational_roots(f).empty());
            // re-factoring an irreducible factor returns itself
            FactorList refl = factor_irreducible(f);
            REQUIRE(refl.factors.size() == 1);
            CHECK(refl.factors[0].first == f);
            CHECK(refl.factors[0].second == 1);
        }
    }
}

TEST_CASE("high degree cyclotomic-style input") {
    // x^12 - 1 factors into cyclotomics of degrees 1,1,2,2,2,4
    std::vector<Rational> c(13, Rational(0));
    c[0] = Rational(-1);
    c[12] = Rational(1);
    FactorList fl = factor_irreducible(Poly(c));
    CHECK(recombine(fl) == Poly(c));
    int total = 0;
    for (const auto& [f, mult] : fl.factors) total += f.degree() * mult;
    CHECK(total == 12);
    CHECK(fl.factors.size() == 6);
}
