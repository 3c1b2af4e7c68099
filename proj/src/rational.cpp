#include "riccati/rational.hpp"

#include <cctype>
#include <ostream>

namespace riccati {

Rational::Rational(long n, long d) {
    if (d == 0) raise(Errc::zero_divisor, "rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) raise(Errc::zero_divisor, "rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    auto fail = [&](std::size_t pos) -> Rational {
        throw Error(Errc::syntax_error,
                    "invalid rational literal '" + std::string(text) + "'", pos);
    };
    if (text.empty()) return fail(0);
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') ++i;
    std::size_t digits_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_begin) return fail(i);
    mpz_class num(std::string(text.substr(0, i)), 10);
    if (i == text.size()) return Rational(num, mpz_class(1));
    if (text[i] != '/') return fail(i);
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) return fail(i);
    mpz_class den(std::string(text.substr(den_begin)), 10);
    if (den == 0) raise(Errc::zero_divisor, "rational with zero denominator");
    return Rational(num, den);
}

Rational Rational::reciprocal() const {
    if (is_zero()) raise(Errc::zero_divisor, "reciprocal of zero");
    return Rational(v_.get_den(), v_.get_num());
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) raise(Errc::zero_divisor, "division by zero rational");
    v_ /= o.v_;
    return *this;
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::optional<Rational> Rational::sqrt_if_square() const {
    if (is_negative()) return std::nullopt;
    if (is_zero()) return Rational();
    const mpz_class& num = v_.get_num();
    const mpz_class& den = v_.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace riccati
