#ifndef RICCATI_RESIDUE_HPP
#define RICCATI_RESIDUE_HPP

#include <optional>

#include "riccati/poly.hpp"

namespace riccati {

/// Element of the residue field Q[x]/(modulus), modulus monic irreducible.
/// The stored value is always reduced below the modulus degree.
class ResidueElem {
  public:
    /// Throws BadModulus unless the modulus is monic and irreducible.
    ResidueElem(Poly modulus, const Poly& value);

    const Poly& modulus() const { return modulus_; }
    const Poly& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    ResidueElem operator+(const ResidueElem& o) const;
    ResidueElem operator-(const ResidueElem& o) const;
    ResidueElem operator*(const ResidueElem& o) const;
    ResidueElem inverse() const;  // ZeroDivisor on zero

    friend bool operator==(const ResidueElem& a, const ResidueElem& b) {
        return a.modulus_ == b.modulus_ && a.value_ == b.value_;
    }

  private:
    ResidueElem() = default;
    Poly modulus_;
    Poly value_;
};

/// Solves c*u + v = 0 in Q[x]/(modulus) for a scalar c. Returns the scalar
/// when the unique field solution is a rational constant, nullopt when the
/// field solution is non-constant or no solution exists. BadModulus for a
/// non-monic or reducible modulus.
std::optional<Rational> residue_solve_scalar(const Poly& u, const Poly& v,
                                             const Poly& modulus);

}  // namespace riccati

#endif
