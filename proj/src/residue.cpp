#include "riccati/residue.hpp"

#include "riccati/factor.hpp"

namespace riccati {

namespace {

void check_modulus(const Poly& modulus) {
    if (modulus.degree() < 1) {
        raise(Errc::bad_modulus, "modulus must have degree at least 1");
    }
    if (!modulus.leading().is_one()) {
        raise(Errc::bad_modulus, "modulus must be monic");
    }
    if (!is_irreducible(modulus)) {
        raise(Errc::bad_modulus, "modulus must be irreducible over the rationals");
    }
}

}  // namespace

ResidueElem::ResidueElem(Poly modulus, const Poly& value) {
    check_modulus(modulus);
    modulus_ = std::move(modulus);
    value_ = value.mod(modulus_);
}

ResidueElem ResidueElem::operator+(const ResidueElem& o) const {
    ResidueElem r;
    r.modulus_ = modulus_;
    r.value_ = (value_ + o.value_).mod(modulus_);
    return r;
}

ResidueElem ResidueElem::operator-(const ResidueElem& o) const {
    ResidueElem r;
    r.modulus_ = modulus_;
    r.value_ = (value_ - o.value_).mod(modulus_);
    return r;
}

ResidueElem ResidueElem::operator*(const ResidueElem& o) const {
    ResidueElem r;
    r.modulus_ = modulus_;
    r.value_ = (value_ * o.value_).mod(modulus_);
    return r;
}

ResidueElem ResidueElem::inverse() const {
    if (value_.is_zero()) raise(Errc::zero_divisor, "inverse of zero residue");
    ExtGcd eg = poly_ext_gcd(value_, modulus_);
    // modulus irreducible and value nonzero reduced, so the gcd is 1
    ResidueElem r;
    r.modulus_ = modulus_;
    r.value_ = (eg.g.leading().reciprocal() * eg.s).mod(modulus_);
    return r;
}

std::optional<Rational> residue_solve_scalar(const Poly& u, const Poly& v,
                                             const Poly& modulus) {
    check_modulus(modulus);
    Poly ubar = u.mod(modulus);
    Poly vbar = v.mod(modulus);
    if (ubar.is_zero()) return std::nullopt;  // no unique scalar either way
    ResidueElem uu(modulus, ubar);
    ResidueElem vv(modulus, vbar);
    ResidueElem c = vv * uu.inverse();
    Poly neg = -c.value();
    if (neg.degree() > 0) return std::nullopt;
    return neg.coeff(0);
}

}  // namespace riccati
