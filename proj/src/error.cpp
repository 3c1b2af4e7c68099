#include "riccati/error.hpp"

namespace riccati {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::not_divisible: return "NotDivisible";
        case Errc::zero_divisor: return "ZeroDivisor";
        case Errc::undefined_gcd: return "UndefinedGcd";
        case Errc::undefined_roots: return "UndefinedRoots";
        case Errc::cannot_factor_zero: return "CannotFactorZero";
        case Errc::bad_modulus: return "BadModulus";
        case Errc::linear_equation: return "LinearEquation";
        case Errc::degenerate_equation: return "DegenerateEquation";
        case Errc::not_a_solution: return "NotASolution";
        case Errc::degenerate_seed_pair: return "DegenerateSeedPair";
        case Errc::degenerate_quadruple: return "DegenerateQuadruple";
        case Errc::not_solutions_of_same_equation: return "NotSolutionsOfSameEquation";
        case Errc::bad_parameters: return "BadParameters";
        case Errc::bound_violation: return "BoundViolation";
        case Errc::not_reduced: return "NotReduced";
        case Errc::not_a_trig_poly: return "NotATrigPoly";
        case Errc::syntax_error: return "SyntaxError";
        case Errc::bad_grid: return "BadGrid";
    }
    return "UnknownError";
}

}  // namespace riccati
