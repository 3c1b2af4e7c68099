#ifndef RICCATI_PARSE_HPP
#define RICCATI_PARSE_HPP

#include <string>
#include <string_view>

#include "riccati/poly.hpp"
#include "riccati/trigpoly.hpp"

namespace riccati {

/// Grammar: integer/rational literals ("3", "3/2"), the variable x,
/// + - * ^, implicit multiplication ("2x", "(x-1)(x-2)"), parentheses.
/// Whitespace-insensitive. Syntax errors carry the byte offset.
Poly parse_poly_expr(std::string_view src);

/// Adds cos(k t) / sin(k t) atoms with integer harmonic k >= 1; the angle
/// variable is t or theta. Products and powers of trig atoms normalize to
/// Fourier form.
TrigPoly parse_trig_expr(std::string_view src);

/// Canonical printers; parse(print(v)) == v.
std::string to_string(const Rational& r);
std::string to_string(const Poly& p);
std::string to_string(const TrigPoly& t);

}  // namespace riccati

#endif
