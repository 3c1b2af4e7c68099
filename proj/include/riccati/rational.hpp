#ifndef RICCATI_RATIONAL_HPP
#define RICCATI_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "riccati/error.hpp"

namespace riccati {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator. Canonical zero is 0/1. Backed by GMP.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose
    Rational(long n, long d);
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p", "-p" or "p/q". Throws syntax_error on anything else.
    static Rational from_string(std::string_view text);

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_negative() const { return sgn(v_) < 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational reciprocal() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.v_ == b.v_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;

    double to_double() const { return v_.get_d(); }

    /// Exact square root when the value is the square of a rational;
    /// nullopt otherwise (including all negative inputs).
    std::optional<Rational> sqrt_if_square() const;

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace riccati

#endif
