#include "riccati/trigpoly.hpp"

#include <cmath>
#include <ostream>

namespace riccati {

namespace {

const Rational kZero{};

// Gaussian rationals, internal to the half-angle conversions. Laurent
// coefficients of e^{ik t} live here; everything projects back to the
// real cos/sin basis at the end.
struct GaussRat {
    Rational re, im;
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {a.re + b.re, a.im + b.im};
}

GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussRat scale(const GaussRat& a, const Rational& s) { return {a.re * s, a.im * s}; }

using GPoly = std::vector<GaussRat>;  // dense, ascending

GPoly gmul(const GPoly& a, const GPoly& b) {
    GPoly r(a.size() + b.size() - 1, GaussRat{});
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = r[i + j] + a[i] * b[j];
        }
    }
    return r;
}

// Laurent coefficients f_{-nu}..f_{nu} of the trig polynomial, stored at
// indices 0..2nu: f_k = (cos_k - i sin_k)/2 and f_{-k} its conjugate.
GPoly to_laurent(const TrigPoly& t) {
    int nu = t.degree();
    GPoly f(static_cast<std::size_t>(2 * nu) + 1, GaussRat{});
    f[static_cast<std::size_t>(nu)] = {t.constant_term(), Rational()};
    Rational half(1, 2);
    for (int k = 1; k <= nu; ++k) {
        Rational re = t.cos_coeff(k) * half;
        Rational im = -(t.sin_coeff(k) * half);
        f[static_cast<std::size_t>(nu + k)] = {re, im};
        f[static_cast<std::size_t>(nu - k)] = {re, -im};
    }
    return f;
}

// Inverse of to_laurent for a centered Laurent vector of odd size.
TrigPoly from_laurent(const GPoly& f) {
    int nu = static_cast<int>(f.size() / 2);
    Rational a0 = f[static_cast<std::size_t>(nu)].re;
    std::vector<Rational> cs(static_cast<std::size_t>(nu));
    std::vector<Rational> ss(static_cast<std::size_t>(nu));
    Rational two(2);
    for (int k = 1; k <= nu; ++k) {
        cs[static_cast<std::size_t>(k - 1)] = two * f[static_cast<std::size_t>(nu + k)].re;
        ss[static_cast<std::size_t>(k - 1)] = -(two * f[static_cast<std::size_t>(nu + k)].im);
    }
    return TrigPoly(std::move(a0), std::move(cs), std::move(ss));
}

}  // namespace

// ---------------------------------------------------------------------
// TrigPoly
// ---------------------------------------------------------------------

TrigPoly::TrigPoly(Rational a0, std::vector<Rational> cos_coeffs,
                   std::vector<Rational> sin_coeffs)
    : a0_(std::move(a0)), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
    std::size_t n = std::max(cos_.size(), sin_.size());
    cos_.resize(n);
    sin_.resize(n);
    normalize();
}

void TrigPoly::normalize() {
    while (!cos_.empty() && cos_.back().is_zero() && sin_.back().is_zero()) {
        cos_.pop_back();
        sin_.pop_back();
    }
}

TrigPoly TrigPoly::constant(Rational value) {
    TrigPoly t;
    t.a0_ = std::move(value);
    return t;
}

TrigPoly TrigPoly::cosine(int k, Rational coeff) {
    TrigPoly t;
    if (k == 0) return constant(std::move(coeff));
    t.cos_.resize(static_cast<std::size_t>(k));
    t.sin_.resize(static_cast<std::size_t>(k));
    t.cos_.back() = std::move(coeff);
    t.normalize();
    return t;
}

TrigPoly TrigPoly::sine(int k, Rational coeff) {
    TrigPoly t;
    if (k == 0) return t;
    t.cos_.resize(static_cast<std::size_t>(k));
    t.sin_.resize(static_cast<std::size_t>(k));
    t.sin_.back() = std::move(coeff);
    t.normalize();
    return t;
}

const Rational& TrigPoly::cos_coeff(int k) const {
    if (k < 1 || k > degree()) return kZero;
    return cos_[static_cast<std::size_t>(k - 1)];
}

const Rational& TrigPoly::sin_coeff(int k) const {
    if (k < 1 || k > degree()) return kZero;
    return sin_[static_cast<std::size_t>(k - 1)];
}

TrigPoly TrigPoly::operator-() const {
    TrigPoly r(*this);
    r.a0_ = -r.a0_;
    for (auto& c : r.cos_) c = -c;
    for (auto& c : r.sin_) c = -c;
    return r;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
    a0_ += o.a0_;
    if (o.cos_.size() > cos_.size()) {
        cos_.resize(o.cos_.size());
        sin_.resize(o.sin_.size());
    }
    for (std::size_t i = 0; i < o.cos_.size(); ++i) {
        cos_[i] += o.cos_[i];
        sin_[i] += o.sin_[i];
    }
    normalize();
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) { return *this += -o; }

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    if (a.is_zero() || b.is_zero()) return TrigPoly();
    // convolve the Laurent coefficients; the top complex coefficients are
    // nonzero, so deg(ab) = deg a + deg b
    return from_laurent(gmul(to_laurent(a), to_laurent(b)));
}

TrigPoly operator*(const Rational& s, const TrigPoly& t) {
    if (s.is_zero()) return TrigPoly();
    TrigPoly r(t);
    r.a0_ *= s;
    for (auto& c : r.cos_) c *= s;
    for (auto& c : r.sin_) c *= s;
    return r;
}

TrigPoly TrigPoly::derivative() const {
    TrigPoly r;
    r.cos_.resize(cos_.size());
    r.sin_.resize(sin_.size());
    for (std::size_t i = 0; i < cos_.size(); ++i) {
        Rational k(static_cast<long>(i) + 1);
        r.cos_[i] = k * sin_[i];
        r.sin_[i] = -(k * cos_[i]);
    }
    r.normalize();
    return r;
}

double TrigPoly::eval(double theta) const {
    double acc = a0_.to_double();
    for (std::size_t i = 0; i < cos_.size(); ++i) {
        double k = static_cast<double>(i + 1);
        acc += cos_[i].to_double() * std::cos(k * theta);
        acc += sin_[i].to_double() * std::sin(k * theta);
    }
    return acc;
}

std::strong_ordering operator<=>(const TrigPoly& a, const TrigPoly& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    if (auto c = a.a0_ <=> b.a0_; c != std::strong_ordering::equal) return c;
    for (std::size_t i = 0; i < a.cos_.size(); ++i) {
        if (auto c = a.cos_[i] <=> b.cos_[i]; c != std::strong_ordering::equal) return c;
        if (auto c = a.sin_[i] <=> b.sin_[i]; c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------
// RatForm and the isomorphism
// ---------------------------------------------------------------------

const Poly& one_plus_x2() {
    static const Poly t{Rational(1), Rational(0), Rational(1)};
    return t;
}

RatForm::RatForm(Poly numerator, int nu) : num_(std::move(numerator)), nu_(nu) {
    if (nu < 0) raise(Errc::bad_parameters, "negative denominator exponent");
    if (num_.is_zero()) {
        nu_ = 0;
        return;
    }
    while (nu_ > 0) {
        auto [q, r] = num_.divmod(one_plus_x2());
        if (!r.is_zero()) break;
        num_ = std::move(q);
        --nu_;
    }
}

bool RatForm::is_trig_image() const {
    if (num_.is_zero()) return true;
    if (num_.degree() > 2 * nu_) return false;
    if (nu_ == 0) return num_.degree() == 0;
    return true;  // the constructor already stripped all 1+x^2 factors
}

RatForm RatForm::operator-() const {
    RatForm r;
    r.num_ = -num_;
    r.nu_ = nu_;
    return r;
}

RatForm operator+(const RatForm& a, const RatForm& b) {
    int m = std::max(a.nu_, b.nu_);
    Poly num = a.num_ * one_plus_x2().pow(static_cast<unsigned>(m - a.nu_)) +
               b.num_ * one_plus_x2().pow(static_cast<unsigned>(m - b.nu_));
    return RatForm(std::move(num), m);
}

RatForm operator-(const RatForm& a, const RatForm& b) { return a + (-b); }

RatForm operator*(const RatForm& a, const RatForm& b) {
    return RatForm(a.num_ * b.num_, a.nu_ + b.nu_);
}

RatForm phi_forward(const TrigPoly& t) {
    if (t.is_zero()) return RatForm();
    int nu = t.degree();
    GPoly f = to_laurent(t);
    // numerator = sum_k f_k (1+ix)^{nu+k} (1-ix)^{nu-k}
    std::size_t n = static_cast<std::size_t>(2 * nu);
    std::vector<GPoly> plus_pow(n + 1), minus_pow(n + 1);
    plus_pow[0] = {GaussRat{Rational(1), Rational()}};
    minus_pow[0] = {GaussRat{Rational(1), Rational()}};
    GPoly plus = {GaussRat{Rational(1), Rational()}, GaussRat{Rational(), Rational(1)}};
    GPoly minus = {GaussRat{Rational(1), Rational()}, GaussRat{Rational(), Rational(-1)}};
    for (std::size_t i = 1; i <= n; ++i) {
        plus_pow[i] = gmul(plus_pow[i - 1], plus);
        minus_pow[i] = gmul(minus_pow[i - 1], minus);
    }
    GPoly acc(n + 1, GaussRat{});
    for (std::size_t i = 0; i <= n; ++i) {
        if (f[i].is_zero()) continue;
        GPoly term = gmul(plus_pow[i], minus_pow[n - i]);
        for (std::size_t j = 0; j < term.size(); ++j) {
            acc[j] = acc[j] + f[i] * term[j];
        }
    }
    std::vector<Rational> real(acc.size());
    for (std::size_t j = 0; j < acc.size(); ++j) {
        // conjugate pairing keeps the numerator real
        real[j] = acc[j].re;
    }
    return RatForm(Poly(std::move(real)), nu);
}

TrigPoly phi_inverse(const RatForm& r) {
    if (r.is_zero()) return TrigPoly();
    const Poly& f = r.numerator();
    int nu = r.nu();
    if (f.degree() > 2 * nu) {
        raise(Errc::not_a_trig_poly,
              "numerator degree exceeds twice the denominator exponent");
    }
    if (nu > 0 || f.degree() > 0) {
        if (f.mod(one_plus_x2()).is_zero()) {
            raise(Errc::not_reduced, "numerator shares a factor with 1+x^2");
        }
    }
    // substitute x = -i(z-1)/(z+1):
    //   P(z) = sum_j f_j (-i)^j (z-1)^j (z+1)^{2nu-j},  F = P(z) / (4^nu z^nu)
    std::size_t n = static_cast<std::size_t>(2 * nu);
    std::vector<GPoly> zm_pow(n + 1), zp_pow(n + 1);
    zm_pow[0] = {GaussRat{Rational(1), Rational()}};
    zp_pow[0] = {GaussRat{Rational(1), Rational()}};
    GPoly zm = {GaussRat{Rational(-1), Rational()}, GaussRat{Rational(1), Rational()}};
    GPoly zp = {GaussRat{Rational(1), Rational()}, GaussRat{Rational(1), Rational()}};
    for (std::size_t i = 1; i <= n; ++i) {
        zm_pow[i] = gmul(zm_pow[i - 1], zm);
        zp_pow[i] = gmul(zp_pow[i - 1], zp);
    }
    GPoly acc(n + 1, GaussRat{});
    GaussRat ipow{Rational(1), Rational()};  // (-i)^j
    for (std::size_t j = 0; j <= n; ++j) {
        const Rational& fj = f.coeff(static_cast<int>(j));
        if (!fj.is_zero()) {
            GPoly term = gmul(zm_pow[j], zp_pow[n - j]);
            GaussRat factor = scale(ipow, fj);
            for (std::size_t t = 0; t < term.size(); ++t) {
                acc[t] = acc[t] + factor * term[t];
            }
        }
        ipow = ipow * GaussRat{Rational(), Rational(-1)};
    }
    Rational four_nu(1);
    for (int i = 0; i < nu; ++i) four_nu *= Rational(4);
    Rational s = four_nu.reciprocal();
    for (auto& g : acc) g = scale(g, s);
    return from_laurent(acc);
}

RatForm phi_derivative_transport(const RatForm& r) {
    if (r.is_zero()) return RatForm();
    const Poly& f = r.numerator();
    Rational two_nu(2L * r.nu());
    Poly g = f.derivative() * one_plus_x2() -
             two_nu * (Poly::x() * f);
    g = Rational(1, 2) * g;
    return RatForm(std::move(g), r.nu());
}

std::vector<double> trig_eval(const TrigPoly& t, const std::vector<double>& theta_grid) {
    std::vector<double> out;
    out.reserve(theta_grid.size());
    for (double theta : theta_grid) out.push_back(t.eval(theta));
    return out;
}

std::ostream& operator<<(std::ostream& os, const TrigPoly& t) {
    bool any = false;
    auto emit = [&](const Rational& c, int k, bool is_cos) {
        if (c.is_zero()) return;
        if (any) {
            os << (c.is_negative() ? " - " : " + ");
        } else if (c.is_negative()) {
            os << "-";
        }
        Rational mag = c.abs();
        if (!mag.is_one()) os << mag.to_string() << "*";
        os << (is_cos ? "cos(" : "sin(");
        if (k != 1) os << k;
        os << "t)";
        any = true;
    };
    if (!t.constant_term().is_zero()) {
        os << t.constant_term().to_string();
        any = true;
    }
    for (int k = 1; k <= t.degree(); ++k) {
        emit(t.cos_coeff(k), k, true);
        emit(t.sin_coeff(k), k, false);
    }
    if (!any) os << "0";
    return os;
}

}  // namespace riccati
