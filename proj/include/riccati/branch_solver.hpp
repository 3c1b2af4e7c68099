#ifndef RICCATI_BRANCH_SOLVER_HPP
#define RICCATI_BRANCH_SOLVER_HPP

#include <map>
#include <optional>
#include <vector>

#include "riccati/poly.hpp"

namespace riccati {

/// Sparse multivariate polynomial over Rational in a fixed number of
/// unknowns. Used to express residual-coefficient systems whose rational
/// solutions are enumerated by branch elimination.
class MultiPoly {
  public:
    explicit MultiPoly(int nvars) : nvars_(nvars) {}
    static MultiPoly constant(int nvars, Rational c);
    static MultiPoly variable(int nvars, int var);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const Rational& s) const;

    MultiPoly substituted(int var, const Rational& value) const;

    /// Unknowns actually appearing, ascending.
    std::vector<int> variables() const;
    int degree_in(int var) const;
    /// View as univariate in `var`; only valid when no other unknown appears.
    Poly as_univariate(int var) const;
    /// Coefficients of powers of `var`, each free of `var`, ascending.
    std::vector<MultiPoly> coefficients_in(int var) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator<(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ < b.terms_;
    }

  private:
    void insert(const std::vector<int>& expo, const Rational& c);
    std::map<std::vector<int>, Rational> terms_;
    int nvars_;
};

/// Resultant of a and b with respect to `var` (Sylvester determinant).
/// Both must have positive degree in `var`.
MultiPoly resultant_in(const MultiPoly& a, const MultiPoly& b, int var);

struct BranchSolveResult {
    /// Complete assignments, one Rational per unknown, in discovery order.
    std::vector<std::vector<Rational>> assignments;
    /// Set when some branch could not be resolved exactly over Q; the
    /// assignments found are still valid, the enumeration may miss others.
    bool incomplete = false;
};

/// Enumerates the rational solutions of {eq = 0 for each eq}. Branch order:
/// equations are consumed in the given order (callers pass residual
/// coefficients from the highest x-degree down); univariate equations are
/// solved exactly (discriminant square test for quadratics, factorization
/// above that); stuck multivariate states fall back to pairwise resultant
/// elimination for up to 3 unknowns and are otherwise flagged incomplete.
BranchSolveResult solve_rational_system(std::vector<MultiPoly> eqs, int nvars);

/// Dense univariate polynomial in x whose coefficients are MultiPoly
/// values in the unknowns; ascending order. Plumbing shared by the
/// coefficient-sweep searches.
using SymPoly = std::vector<MultiPoly>;

SymPoly sym_from_poly(const Poly& p, int nvars);
SymPoly sym_add(const SymPoly& a, const SymPoly& b);
SymPoly sym_sub(const SymPoly& a, const SymPoly& b);
SymPoly sym_mul(const SymPoly& a, const SymPoly& b);
SymPoly sym_derivative(const SymPoly& a);

}  // namespace riccati

#endif
