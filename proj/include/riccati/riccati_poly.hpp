#ifndef RICCATI_RICCATI_POLY_HPP
#define RICCATI_RICCATI_POLY_HPP

#include <optional>
#include <vector>

#include "riccati/poly.hpp"

namespace riccati {

/// a(x) y' = b0(x) + b1(x) y + b2(x) y^2 with rational polynomial data.
/// eta caches the maximum coefficient degree. Construction rejects a = 0
/// (DegenerateEquation) and b2 = 0 (LinearEquation).
struct RiccatiEq {
    Poly a, b0, b1, b2;
    int eta = 0;

    static RiccatiEq make(Poly a, Poly b0, Poly b1, Poly b2);
};

enum class Provenance { seeded, base_search, closure };
const char* provenance_name(Provenance p);

struct PolySolution {
    Poly y;
    Provenance provenance = Provenance::base_search;
    std::optional<Rational> closure_c;
};

/// Deduplicated, canonically ordered list of certified solutions.
class SolutionSet {
  public:
    bool insert(Poly y, Provenance prov, std::optional<Rational> c = std::nullopt);
    bool contains(const Poly& y) const;
    std::size_t size() const { return entries_.size(); }
    const std::vector<PolySolution>& entries() const { return entries_; }
    std::vector<Poly> polys() const;

    bool complete_over_rationals = true;

  private:
    std::vector<PolySolution> entries_;  // sorted by (degree, coefficients)
};

/// eta - deg b2, the degree cap for every polynomial solution.
int degree_bound(const RiccatiEq& eq);

/// Exact substitution check: a y' - b0 - b1 y - b2 y^2 = 0.
bool verify_solution(const RiccatiEq& eq, const Poly& y);

/// Translate by a known solution y0, producing the equivalent equation with
/// b0 = 0 and b1 replaced by b1 + 2 b2 y0. Throws NotASolution.
RiccatiEq reduce_equation(const RiccatiEq& eq, const Poly& y0);

struct BaseSearch {
    std::vector<Poly> found;  // nonzero certified solutions, canonical order
    bool incomplete = false;
};

/// Nonzero solutions of a reduced equation (b0 = 0), at most max_found.
/// Method A scans constant multiples of monic products of irreducible
/// factors of a; Method B is the undetermined-coefficient sweep. A's
/// results are a subset of B's.
BaseSearch base_solutions(const RiccatiEq& eq_reduced, int max_found = 2);

/// Full Method-B enumeration over all candidate degrees (the brute-force
/// route used both inside base_solutions and as the closure oracle).
BaseSearch sweep_solutions(const RiccatiEq& eq, int max_degree);

/// All solutions reachable from two distinct nonzero certified solutions
/// of a reduced equation via the constant-cross-ratio family. Candidate
/// parameters come from the roots of gcd(y1, y2) plus the constant-
/// denominator value. Throws DegenerateSeedPair when y1 = y2.
SolutionSet closure_solutions(const RiccatiEq& eq_reduced, const Poly& y1,
                              const Poly& y2);

/// Full pipeline: seed or sweep for a first solution, reduce, search a
/// base pair, close, translate back. Asserts the solution-count bound
/// (eta+1 for eta >= 1, else 2) and throws BoundViolation if it ever
/// fails -- that would be an implementation bug, not a valid outcome.
SolutionSet solve_all(const RiccatiEq& eq, const std::vector<Poly>& seeds = {});

/// The constant ((y4-y1)(y3-y2)) / ((y3-y1)(y4-y2)) shared by any four
/// distinct solutions of one Riccati equation.
Rational cross_ratio(const Poly& y1, const Poly& y2, const Poly& y3, const Poly& y4);

/// Family with exactly j polynomial solutions at degree eta:
/// a = -(x-r1)^{eta+2-j} (x-r2)...(x-r_{j-1}), b1 = a', b2 = 1, b0 = 0;
/// the solutions are 0 and -a/(x-r_i).
std::pair<RiccatiEq, SolutionSet> gen_extremal(int eta, int j,
                                               const std::vector<Rational>& roots);

}  // namespace riccati

#endif
