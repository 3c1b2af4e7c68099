#ifndef RICCATI_TEST_SUPPORT_HPP
#define RICCATI_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "riccati/poly.hpp"

namespace testsupport {

using riccati::Poly;
using riccati::Rational;

// Small deterministic generators for property-style tests.
inline Rational random_rational(std::mt19937_64& rng, long max_abs = 9,
                                long max_den = 4) {
    long num = static_cast<long>(rng() % (2 * max_abs + 1)) - max_abs;
    long den = static_cast<long>(rng() % static_cast<unsigned long>(max_den)) + 1;
    return Rational(num, den);
}

inline Poly random_poly(std::mt19937_64& rng, int max_degree, long max_abs = 9,
                        long max_den = 4) {
    int deg = static_cast<int>(rng() % static_cast<unsigned long>(max_degree + 1));
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) c.push_back(random_rational(rng, max_abs, max_den));
    return Poly(std::move(c));
}

inline Poly random_nonzero_poly(std::mt19937_64& rng, int max_degree,
                                long max_abs = 9, long max_den = 4) {
    for (;;) {
        Poly p = random_poly(rng, max_degree, max_abs, max_den);
        if (!p.is_zero()) return p;
    }
}

// Convenience: integer-coefficient polynomial from ascending ints.
inline Poly ipoly(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return Poly(std::move(c));
}

}  // namespace testsupport

#endif
