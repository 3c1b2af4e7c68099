#ifndef RICCATI_POLY_HPP
#define RICCATI_POLY_HPP

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <utility>
#include <vector>

#include "riccati/rational.hpp"

namespace riccati {

/// Dense univariate polynomial over Rational, coefficients in ascending
/// degree order with no trailing zeros. The zero polynomial is the empty
/// coefficient vector; degree() reports -1 for it.
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<Rational> ascending)
        : c_(ascending) { normalize(); }
    explicit Poly(std::vector<Rational> ascending)
        : c_(std::move(ascending)) { normalize(); }

    static Poly constant(Rational value);
    static Poly x();
    /// coeff * x^degree
    static Poly monomial(int degree, Rational coeff);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of x^i; zero beyond the stored range.
    const Rational& coeff(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);

    Poly pow(unsigned e) const;
    Poly derivative() const;
    Rational eval(const Rational& at) const;
    /// p(scale*x + shift), expanded exactly.
    Poly compose_linear(const Rational& scale, const Rational& shift) const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    /// Exact quotient; throws NotDivisible when the remainder is nonzero.
    Poly exact_div(const Poly& divisor) const;
    Poly mod(const Poly& divisor) const { return divmod(divisor).second; }

    bool divides(const Poly& dividend) const;

    Poly monic() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    /// Canonical order used for deduplicated solution lists:
    /// by degree, then ascending coefficient sequence.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

  private:
    void normalize();
    std::vector<Rational> c_;
};

/// Monic greatest common divisor. gcd(p, 0) = monic(p); both inputs zero
/// is UndefinedGcd.
Poly poly_gcd(const Poly& p, const Poly& q);

/// Extended Euclid: returns (g, s, t) with s*p + t*q = g, g monic.
struct ExtGcd {
    Poly g, s, t;
};
ExtGcd poly_ext_gcd(const Poly& p, const Poly& q);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace riccati

#endif
