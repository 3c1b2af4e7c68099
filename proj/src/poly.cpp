#include "riccati/poly.hpp"

#include <algorithm>
#include <ostream>

namespace riccati {

namespace {
const Rational kZero{};
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(Rational value) {
    Poly p;
    if (!value.is_zero()) p.c_.push_back(std::move(value));
    return p;
}

Poly Poly::x() { return monomial(1, Rational(1)); }

Poly Poly::monomial(int degree, Rational coeff) {
    Poly p;
    if (coeff.is_zero()) return p;
    p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational());
    p.c_.back() = std::move(coeff);
    return p;
}

const Rational& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.normalize();
    return r;
}

Poly operator*(const Rational& s, const Poly& p) {
    if (s.is_zero()) return Poly();
    Poly r(p);
    for (auto& c : r.c_) c *= s;
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly result = Poly::constant(Rational(1));
    Poly base(*this);
    while (e != 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

Poly Poly::derivative() const {
    Poly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        r.c_[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    }
    r.normalize();
    return r;
}

Rational Poly::eval(const Rational& at) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

Poly Poly::compose_linear(const Rational& scale, const Rational& shift) const {
    Poly arg{shift, scale};
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * arg + Poly::constant(*it);
    }
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) raise(Errc::zero_divisor, "division by zero polynomial");
    Poly rem(*this);
    Poly quot;
    int dd = divisor.degree();
    if (rem.degree() >= dd) {
        quot.c_.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, Rational());
    }
    Rational lead_inv = divisor.leading().reciprocal();
    while (!rem.is_zero() && rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        Rational factor = rem.leading() * lead_inv;
        quot.c_[static_cast<std::size_t>(shift)] = factor;
        for (std::size_t i = 0; i < divisor.c_.size(); ++i) {
            rem.c_[static_cast<std::size_t>(shift) + i] -= factor * divisor.c_[i];
        }
        rem.normalize();
    }
    quot.normalize();
    return {std::move(quot), std::move(rem)};
}

Poly Poly::exact_div(const Poly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) raise(Errc::not_divisible, "polynomial division left a remainder");
    return q;
}

bool Poly::divides(const Poly& dividend) const {
    if (is_zero()) return dividend.is_zero();
    return dividend.divmod(*this).second.is_zero();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return leading().reciprocal() * *this;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        auto c = a.c_[i] <=> b.c_[i];
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) {
        raise(Errc::undefined_gcd, "gcd of two zero polynomials");
    }
    Poly a = p, b = q;
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
        if (!b.is_zero()) b = b.monic();  // keep coefficient growth in check
    }
    return a.monic();
}

ExtGcd poly_ext_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) {
        raise(Errc::undefined_gcd, "gcd of two zero polynomials");
    }
    Poly r0 = p, r1 = q;
    Poly s0 = Poly::constant(Rational(1)), s1;
    Poly t0, t1 = Poly::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [qt, rem] = r0.divmod(r1);
        Poly s2 = s0 - qt * s1;
        Poly t2 = t0 - qt * t1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Rational inv = r0.leading().reciprocal();
    return {inv * r0, inv * s0, inv * t0};
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& c = p.coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << (c.is_negative() ? " - " : " + ");
        else if (c.is_negative()) os << "-";
        Rational mag = c.abs();
        if (i == 0 || !mag.is_one()) os << mag.to_string();
        if (i > 0) {
            if (!mag.is_one()) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os;
}

}  // namespace riccati
