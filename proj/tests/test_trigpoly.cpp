#include "doctest.h"

#include <cmath>
#include <random>

#include "riccati/trigpoly.hpp"
#include "test_support.hpp"

using namespace testsupport;
using namespace riccati;

namespace {

TrigPoly random_trig(std::mt19937_64& rng, int max_degree) {
    int deg = static_cast<int>(rng() % static_cast<unsigned long>(max_degree + 1));
    std::vector<Rational> cs, ss;
    for (int k = 0; k < deg; ++k) {
        cs.push_back(testsupport::random_rational(rng, 5, 3));
        ss.push_back(testsupport::random_rational(rng, 5, 3));
    }
    return TrigPoly(testsupport::random_rational(rng, 5, 3), std::move(cs), std::move(ss));
}

}  // namespace

TEST_CASE("normalization and degree") {
    TrigPoly t(Rational(1), {Rational(0)}, {Rational(0)});
    CHECK(t.degree() == 0);
    CHECK(t.is_constant());
    CHECK(TrigPoly::sine(2).degree() == 2);
    CHECK(TrigPoly().is_zero());
}

TEST_CASE("product-to-sum multiplication") {
    TrigPoly c1 = TrigPoly::cosine(1);
    TrigPoly sq = c1 * c1;  // cos^2 = 1/2 + cos(2t)/2
    CHECK(sq.constant_term() == Rational(1, 2));
    CHECK(sq.cos_coeff(2) == Rational(1, 2));
    CHECK(sq.cos_coeff(1) == Rational(0));
    CHECK(sq.degree() == 2);

    TrigPoly s1 = TrigPoly::sine(1);
    TrigPoly ssq = s1 * s1;  // sin^2 = 1/2 - cos(2t)/2
    CHECK(ssq.constant_term() == Rational(1, 2));
    CHECK(ssq.cos_coeff(2) == Rational(-1, 2));
    CHECK((sq + ssq) == TrigPoly::constant(Rational(1)));

    TrigPoly cross = s1 * c1;  // sin cos = sin(2t)/2
    CHECK(cross.sin_coeff(2) == Rational(1, 2));
    CHECK(cross.constant_term() == Rational(0));
}

TEST_CASE("derivative preserves degree and follows the harmonic rule") {
    TrigPoly c2 = TrigPoly::cosine(2);
    TrigPoly d = c2.derivative();  // -2 sin(2t)
    CHECK(d.sin_coeff(2) == Rational(-2));
    CHECK(d.degree() == 2);
    CHECK(TrigPoly::constant(Rational(5)).derivative().is_zero());

    std::mt19937_64 rng(1122);
    for (int trial = 0; trial < 100; ++trial) {
        TrigPoly p = random_trig(rng, 5);
        if (!p.is_constant()) CHECK(p.derivative().degree() == p.degree());
        TrigPoly q = random_trig(rng, 4);
        // product rule in the trig ring
        CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
        if (!p.is_zero() && !q.is_zero()) {
            CHECK((p * q).degree() == p.degree() + q.degree());
        }
    }
}

TEST_CASE("the section-1 coefficient function has degree 3") {
    TrigPoly a = TrigPoly::sine(1, Rational(5)) + TrigPoly::sine(2, Rational(8)) +
                 TrigPoly::sine(3, Rational(5));
    CHECK(a.degree() == 3);
}

TEST_CASE("phi maps the generators to the book substitution") {
    RatForm c = phi_forward(TrigPoly::cosine(1));
    CHECK(c.nu() == 1);
    CHECK(c.numerator() == ipoly({1, 0, -1}));  // (1 - x^2)/(1+x^2)

    RatForm s = phi_forward(TrigPoly::sine(1));
    CHECK(s.nu() == 1);
    CHECK(s.numerator() == ipoly({0, 2}));  // 2x/(1+x^2)

    RatForm squared = phi_forward(TrigPoly::cosine(1) * TrigPoly::cosine(1));
    CHECK(squared.nu() == 2);
    CHECK(squared.numerator() == ipoly({1, 0, -1}) * ipoly({1, 0, -1}));

    RatForm constant = phi_forward(TrigPoly::constant(Rational(7)));
    CHECK(constant.nu() == 0);
    CHECK(constant.numerator() == ipoly({7}));
}

TEST_CASE("phi_inverse maps the substitution back") {
    CHECK(phi_inverse(RatForm(ipoly({0, 2}), 1)) == TrigPoly::sine(1));
    CHECK(phi_inverse(RatForm(ipoly({1, 0, -1}), 1)) == TrigPoly::cosine(1));
    // 2/(1+x^2) = 1 + cos t
    TrigPoly one_plus_cos = phi_inverse(RatForm(ipoly({2}), 1));
    CHECK(one_plus_cos == TrigPoly::constant(Rational(1)) + TrigPoly::cosine(1));
}

TEST_CASE("phi_inverse validates its input") {
    CHECK_THROWS_AS(phi_inverse(RatForm(ipoly({0, 0, 0, 1}), 1)), Error);  // deg > 2nu
    // a numerator with the 1+x^2 factor at nu = 0 cannot be stripped
    CHECK_THROWS_AS(phi_inverse(RatForm(ipoly({1, 0, 1}), 0)), Error);
}

TEST_CASE("ratform constructor strips common powers") {
    Poly t = ipoly({1, 0, 1});
    RatForm r(t * ipoly({0, 2}), 2);
    CHECK(r.nu() == 1);
    CHECK(r.numerator() == ipoly({0, 2}));
    RatForm z(Poly(), 5);
    CHECK(z.nu() == 0);
    CHECK(z.is_zero());
}

TEST_CASE("phi round trip on random trig polynomials") {
    std::mt19937_64 rng(20250101);
    for (int trial = 0; trial < 1000; ++trial) {
        TrigPoly p = random_trig(rng, 6);
        RatForm image = phi_forward(p);
        // Lemma-6 shape: nu = degree, numerator coprime with 1+x^2,
        // numerator degree at most 2 nu
        CHECK(image.nu() == p.degree());
        CHECK(image.is_trig_image());
        CHECK(image.numerator().degree() <= 2 * image.nu());
        TrigPoly back = phi_inverse(image);
        CHECK(back == p);
    }
}

TEST_CASE("phi_forward inverts phi_inverse on valid forms") {
    std::mt19937_64 rng(44556677);
    int done = 0;
    for (int trial = 0; trial < 2000 && done < 500; ++trial) {
        int nu = static_cast<int>(rng() % 5) + 1;
        Poly num = testsupport::random_poly(rng, 2 * nu, 5, 3);
        if (num.is_zero()) continue;
        RatForm r(num, nu);
        if (r.nu() != nu) continue;  // the constructor stripped a 1+x^2 factor
        CHECK(phi_forward(phi_inverse(r)) == r);
        ++done;
    }
    CHECK(done == 500);
}

TEST_CASE("phi is a ring morphism") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        TrigPoly p = random_trig(rng, 4);
        TrigPoly q = random_trig(rng, 4);
        CHECK(phi_forward(p + q) == phi_forward(p) + phi_forward(q));
        CHECK(phi_forward(p * q) == phi_forward(p) * phi_forward(q));
    }
}

TEST_CASE("derivative transport agrees with the trig derivative") {
    CHECK(phi_derivative_transport(phi_forward(TrigPoly::cosine(1))) ==
          phi_forward(TrigPoly::sine(1, Rational(-1))));
    CHECK(phi_derivative_transport(phi_forward(TrigPoly::constant(Rational(3))))
              .is_zero());
    std::mt19937_64 rng(777111);
    for (int trial = 0; trial < 200; ++trial) {
        TrigPoly p = random_trig(rng, 5);
        CHECK(phi_derivative_transport(phi_forward(p)) ==
              phi_forward(p.derivative()));
    }
}

TEST_CASE("float evaluation is plot-grade only") {
    CHECK(trig_eval(TrigPoly::cosine(1), {0.0})[0] == doctest::Approx(1.0));
    CHECK(trig_eval(TrigPoly::sine(1), {3.14159265358979323846 / 2})[0] ==
          doctest::Approx(1.0).epsilon(1e-12));
    // Y2 of the section-1 example at theta = 0: 10 + 16 + 10
    TrigPoly y2 = TrigPoly::constant(Rational(10)) + TrigPoly::cosine(1, Rational(16)) +
                  TrigPoly::cosine(2, Rational(10));
    CHECK(trig_eval(y2, {0.0})[0] == doctest::Approx(36.0));
}
