#ifndef RICCATI_TRIGPOLY_HPP
#define RICCATI_TRIGPOLY_HPP

#include <compare>
#include <iosfwd>
#include <vector>

#include "riccati/poly.hpp"

namespace riccati {

/// Real trigonometric polynomial a0 + sum_k (cos_k cos(k t) + sin_k sin(k t))
/// held as exact Fourier coefficients. Normalized so the top harmonic pair
/// is not both zero; the degree is the number of stored harmonics.
class TrigPoly {
  public:
    TrigPoly() = default;
    TrigPoly(Rational a0, std::vector<Rational> cos_coeffs,
             std::vector<Rational> sin_coeffs);

    static TrigPoly constant(Rational value);
    static TrigPoly cosine(int k, Rational coeff = Rational(1));
    static TrigPoly sine(int k, Rational coeff = Rational(1));

    int degree() const { return static_cast<int>(cos_.size()); }
    bool is_zero() const { return cos_.empty() && a0_.is_zero(); }
    bool is_constant() const { return cos_.empty(); }

    const Rational& constant_term() const { return a0_; }
    /// Coefficient of cos(k t) / sin(k t); zero outside the stored range.
    const Rational& cos_coeff(int k) const;
    const Rational& sin_coeff(int k) const;
    const std::vector<Rational>& cos_coeffs() const { return cos_; }
    const std::vector<Rational>& sin_coeffs() const { return sin_; }

    TrigPoly operator-() const;
    TrigPoly& operator+=(const TrigPoly& o);
    TrigPoly& operator-=(const TrigPoly& o);
    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
    friend TrigPoly operator*(const Rational& s, const TrigPoly& t);

    /// Derivative with respect to the angle; degree is preserved for
    /// nonconstant input.
    TrigPoly derivative() const;

    double eval(double theta) const;

    friend bool operator==(const TrigPoly& a, const TrigPoly& b) {
        return a.a0_ == b.a0_ && a.cos_ == b.cos_ && a.sin_ == b.sin_;
    }
    /// Canonical order: degree, then a0, then cos/sin coefficient pairs.
    friend std::strong_ordering operator<=>(const TrigPoly& a, const TrigPoly& b);

  private:
    void normalize();
    Rational a0_;
    std::vector<Rational> cos_;  // index k-1 holds the cos(k t) coefficient
    std::vector<Rational> sin_;
};

/// Reduced image f(x)/(1+x^2)^nu of a trigonometric polynomial under the
/// tangent half-angle substitution. The constructor strips common 1+x^2
/// powers so gcd(numerator, 1+x^2) = 1 whenever nu > 0.
class RatForm {
  public:
    RatForm() : nu_(0) {}
    RatForm(Poly numerator, int nu);

    const Poly& numerator() const { return num_; }
    int nu() const { return nu_; }
    bool is_zero() const { return num_.is_zero(); }

    /// True when the form is the image of a trigonometric polynomial:
    /// deg(numerator) <= 2 nu and no 1+x^2 factor survives.
    bool is_trig_image() const;

    RatForm operator-() const;
    friend RatForm operator+(const RatForm& a, const RatForm& b);
    friend RatForm operator-(const RatForm& a, const RatForm& b);
    friend RatForm operator*(const RatForm& a, const RatForm& b);

    friend bool operator==(const RatForm& a, const RatForm& b) {
        return a.nu_ == b.nu_ && a.num_ == b.num_;
    }

  private:
    Poly num_;
    int nu_;
};

/// The polynomial 1 + x^2.
const Poly& one_plus_x2();

/// Image of a trigonometric polynomial in R(x); the returned form has
/// nu = degree of the input.
RatForm phi_forward(const TrigPoly& t);

/// Inverse image. Throws NotReduced when the numerator shares a factor
/// with 1+x^2 and NotATrigPoly when deg(numerator) > 2 nu.
TrigPoly phi_inverse(const RatForm& r);

/// Image of the angle-derivative: ((1+x^2)/2) d/dx applied to the form,
/// reduced back to canonical shape.
RatForm phi_derivative_transport(const RatForm& r);

/// Float evaluation for plotting output only.
std::vector<double> trig_eval(const TrigPoly& t, const std::vector<double>& theta_grid);

std::ostream& operator<<(std::ostream& os, const TrigPoly& t);

}  // namespace riccati

#endif
