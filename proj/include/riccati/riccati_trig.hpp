#ifndef RICCATI_RICCATI_TRIG_HPP
#define RICCATI_RICCATI_TRIG_HPP

#include <optional>
#include <vector>

#include "riccati/riccati_poly.hpp"
#include "riccati/trigpoly.hpp"

namespace riccati {

/// A(t) Y' = B0(t) + B1(t) Y + B2(t) Y^2 over trigonometric polynomials.
/// The x_side cache holds the half-angle images a/(1+x^2)^alpha etc., where
/// all divisibility reasoning happens; construction rejects A = 0 and B2 = 0.
struct TrigRiccatiEq {
    TrigPoly A, B0, B1, B2;
    int eta = 0;
    RatForm xa, xb0, xb1, xb2;

    static TrigRiccatiEq make(TrigPoly A, TrigPoly B0, TrigPoly B1, TrigPoly B2);
};

struct TrigSolution {
    TrigPoly Y;
    RatForm x_form;  // phi image cache
    Provenance provenance = Provenance::base_search;
    std::optional<Rational> closure_c;
};

class TrigSolutionSet {
  public:
    bool insert(TrigPoly y, Provenance prov, std::optional<Rational> c = std::nullopt);
    bool contains(const TrigPoly& y) const;
    std::size_t size() const { return entries_.size(); }
    const std::vector<TrigSolution>& entries() const { return entries_; }
    std::vector<TrigPoly> trig_polys() const;

    bool complete_over_rationals = true;

  private:
    std::vector<TrigSolution> entries_;  // canonical TrigPoly order
};

/// eta - deg B2, capping the degree of every trigonometric solution.
int trig_degree_bound(const TrigRiccatiEq& eq);

/// Exact Fourier-side substitution check.
bool verify_trig_solution(const TrigRiccatiEq& eq, const TrigPoly& Y);

/// Translate by a certified solution Y0: B0 becomes 0, B1 becomes
/// B1 + 2 B2 Y0. Throws NotASolution.
TrigRiccatiEq reduce_trig(const TrigRiccatiEq& eq, const TrigPoly& Y0);

/// The polynomial identity a candidate numerator w of Y = w/(1+x^2)^m must
/// satisfy, with every (1+x^2) power cleared. residual(w) == 0 exactly when
/// phi_inverse(w/(1+x^2)^m) solves the equation.
struct XSideIdentity {
    int m = 0;
    Poly a_mul;   // a * (1+x^2)^{L-alpha-m}
    Poly b0_mul;  // 2 b0 * (1+x^2)^{L-beta0}
    Poly b1_mul;  // 2 b1 * (1+x^2)^{L-beta1-m}
    Poly b2_mul;  // 2 b2 * (1+x^2)^{L-beta2-2m}

    Poly residual(const Poly& w) const;
};

XSideIdentity transport_to_x(const TrigRiccatiEq& eq, int m);

struct TrigBaseSearch {
    std::vector<TrigPoly> found;
    bool incomplete = false;
};

/// Up to two nonzero certified solutions of a reduced equation, preferring
/// a pair of equal degree. Method A' scans constant multiples of monic
/// factor products of the x-side a(x) (every solution numerator factors
/// through a); Method B' is the undetermined-numerator sweep.
TrigBaseSearch trig_base_solutions(const TrigRiccatiEq& eq_reduced);

/// All solutions generated by two distinct nonzero certified seeds through
/// the x-side family g t1 t2 / ((1+x^2)^{eta1} s_c). Candidate parameters:
/// the roots of g, the unique c with (1+x^2) | s_c (the one possibly
/// higher-degree solution), and the constant-combination c. Asserts the
/// 2 eta count bound.
TrigSolutionSet trig_closure(const TrigRiccatiEq& eq_reduced, const TrigPoly& Y1,
                             const TrigPoly& Y2);

/// Pipeline mirroring the polynomial solver: seed or sweep, reduce, find a
/// base pair, close, translate back, check the count bound (2 eta for
/// eta >= 2, 3 for eta = 1).
TrigSolutionSet solve_all_trig(const TrigRiccatiEq& eq,
                               const std::vector<TrigPoly>& seeds = {});

/// Equation of degree eta with exactly k+3 trigonometric solutions:
/// A is the inverse image of 2 (x-d1)(x-d2) g / (1+x^2)^eta with
/// g = prod (x - c_i) and B2 = -1; the solutions read off the closure
/// family at c = 0, 1, (c_i - d2)/(d1 - d2).
std::pair<TrigRiccatiEq, TrigSolutionSet> gen_extremal_trig(
    int eta, int k, const std::vector<Rational>& c_list, const Rational& d1,
    const Rational& d2);

}  // namespace riccati

#endif
