#ifndef RICCATI_FACTOR_HPP
#define RICCATI_FACTOR_HPP

#include <utility>
#include <vector>

#include "riccati/poly.hpp"

namespace riccati {

/// Complete factorization over the rationals:
/// input = lead * product of factor^multiplicity, factors monic irreducible,
/// pairwise distinct, sorted canonically.
struct FactorList {
    Rational lead;
    std::vector<std::pair<Poly, int>> factors;
};

FactorList factor_irreducible(const Poly& p);

/// All rational roots, each listed once, ascending. UndefinedRoots for the
/// zero polynomial.
std::vector<Rational> rational_roots(const Poly& p);

std::vector<std::pair<Rational, int>> rational_roots_with_multiplicity(const Poly& p);

/// True for polynomials of degree >= 1 that are irreducible over Q.
bool is_irreducible(const Poly& p);

}  // namespace riccati

#endif
