#include "riccati/factor.hpp"

#include <algorithm>
#include <random>

namespace riccati {

namespace {

// ---------------------------------------------------------------------
// Integer polynomials: std::vector<mpz_class>, ascending, no trailing 0.
// ---------------------------------------------------------------------

using ZPoly = std::vector<mpz_class>;

void znormalize(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    znormalize(r);
    return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), mpz_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    znormalize(r);
    return r;
}

mpz_class zcontent(const ZPoly& f) {
    mpz_class g(0);
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;  // nonnegative
}

// Exact division test over Z; quotient written when it divides.
bool zdivide_exact(const ZPoly& num, const ZPoly& den, ZPoly& quot) {
    if (den.empty()) return false;
    ZPoly rem = num;
    quot.assign(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, mpz_class(0));
    while (zdeg(rem) >= zdeg(den)) {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(),
                    rem.back().get_mpz_t(), den.back().get_mpz_t());
        if (r != 0) return false;
        int shift = zdeg(rem) - zdeg(den);
        quot[static_cast<std::size_t>(shift)] = q;
        for (std::size_t i = 0; i < den.size(); ++i) {
            rem[static_cast<std::size_t>(shift) + i] -= q * den[i];
        }
        znormalize(rem);
        if (rem.empty()) break;
    }
    if (!rem.empty()) return false;
    znormalize(quot);
    return true;
}

Poly zpoly_to_poly(const ZPoly& f) {
    std::vector<Rational> c;
    c.reserve(f.size());
    for (const auto& z : f) c.emplace_back(z, mpz_class(1));
    return Poly(std::move(c));
}

// Scales a nonzero rational polynomial to a primitive integer polynomial
// with positive leading coefficient. Returns the integer polynomial; the
// discarded rational scale is irrelevant for factor extraction.
ZPoly to_primitive(const Poly& p) {
    mpz_class den_lcm(1);
    for (const auto& c : p.coeffs()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    }
    ZPoly f;
    f.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        f.push_back(c.numerator() * (den_lcm / c.denominator()));
    }
    znormalize(f);
    mpz_class cont = zcontent(f);
    if (f.back() < 0) cont = -cont;
    for (auto& c : f) c /= cont;
    return f;
}

// ---------------------------------------------------------------------
// Arithmetic mod m (m prime or prime power), coefficients in [0, m).
// ---------------------------------------------------------------------

ZPoly mreduce(const ZPoly& f, const mpz_class& m) {
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        mpz_mod(r[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
    }
    znormalize(r);
    return r;
}

ZPoly mmul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    return mreduce(zmul(a, b), m);
}

ZPoly msub(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    return mreduce(zsub(a, b), m);
}

ZPoly mscale(const ZPoly& a, const mpz_class& s, const mpz_class& m) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_class t = a[i] * s;
        mpz_mod(r[i].get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    }
    znormalize(r);
    return r;
}

mpz_class minv(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
        raise(Errc::bad_parameters, "non-invertible element in modular arithmetic");
    }
    return r;
}

ZPoly mmonic(const ZPoly& f, const mpz_class& m) {
    if (f.empty()) return f;
    return mscale(f, minv(f.back(), m), m);
}

// Division by a monic divisor mod m.
void mdivmod(const ZPoly& num, const ZPoly& den, const mpz_class& m,
             ZPoly& quot, ZPoly& rem) {
    rem = num;
    quot.clear();
    if (zdeg(rem) >= zdeg(den)) {
        quot.assign(static_cast<std::size_t>(zdeg(rem) - zdeg(den)) + 1, mpz_class(0));
    }
    while (zdeg(rem) >= zdeg(den)) {
        int shift = zdeg(rem) - zdeg(den);
        mpz_class factor = rem.back();
        quot[static_cast<std::size_t>(shift)] = factor;
        for (std::size_t i = 0; i < den.size(); ++i) {
            mpz_class t = rem[static_cast<std::size_t>(shift) + i] - factor * den[i];
            mpz_mod(rem[static_cast<std::size_t>(shift) + i].get_mpz_t(),
                    t.get_mpz_t(), m.get_mpz_t());
        }
        znormalize(rem);
    }
    znormalize(quot);
}

ZPoly mmod(const ZPoly& a, const ZPoly& modpoly, const mpz_class& m) {
    ZPoly q, r;
    mdivmod(a, modpoly, m, q, r);
    return r;
}

ZPoly mgcd(ZPoly a, ZPoly b, const mpz_class& p) {
    while (!b.empty()) {
        ZPoly r = mmod(a, mmonic(b, p), p);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return mmonic(a, p);
}

ZPoly mderiv(const ZPoly& f, const mpz_class& m) {
    ZPoly r;
    if (f.size() <= 1) return r;
    r.resize(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) {
        mpz_class t = f[i] * static_cast<long>(i);
        mpz_mod(r[i - 1].get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    }
    znormalize(r);
    return r;
}

ZPoly mpow_mod(ZPoly base, mpz_class e, const ZPoly& modpoly, const mpz_class& p) {
    ZPoly result{mpz_class(1)};
    base = mmod(base, modpoly, p);
    while (e > 0) {
        if (mpz_tstbit(e.get_mpz_t(), 0)) {
            result = mmod(mmul(result, base, p), modpoly, p);
        }
        base = mmod(mmul(base, base, p), modpoly, p);
        e >>= 1;
    }
    return result;
}

// Extended Euclid mod p; returns s with s*a = g mod b ... we only need the
// inverse of a modulo the monic polynomial mod_poly.
ZPoly minv_poly(const ZPoly& a, const ZPoly& mod_poly, const mpz_class& p) {
    ZPoly r0 = mod_poly, r1 = mmod(a, mod_poly, p);
    ZPoly t0, t1{mpz_class(1)};
    while (!r1.empty()) {
        ZPoly q, rem;
        mdivmod(r0, mmonic(r1, p), p, q, rem);
        q = mscale(q, minv(r1.back(), p), p);
        ZPoly t2 = msub(t0, mmul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (zdeg(r0) != 0) raise(Errc::bad_parameters, "modular inverse does not exist");
    return mscale(t0, minv(r0[0], p), p);
}

// ---------------------------------------------------------------------
// Factorization of a squarefree primitive integer polynomial.
// ---------------------------------------------------------------------

// Distinct-degree then equal-degree (Cantor-Zassenhaus) splitting mod p.
void edf(const ZPoly& g, int d, const mpz_class& p, std::mt19937_64& rng,
         std::vector<ZPoly>& out) {
    if (zdeg(g) == d) {
        out.push_back(g);
        return;
    }
    mpz_class exponent;
    mpz_pow_ui(exponent.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    exponent = (exponent - 1) / 2;
    const unsigned long pl = p.get_ui();
    for (;;) {
        ZPoly r(static_cast<std::size_t>(zdeg(g)), mpz_class(0));
        for (auto& c : r) c = static_cast<unsigned long>(rng() % pl);
        znormalize(r);
        if (r.empty()) continue;
        ZPoly s = mpow_mod(r, exponent, g, p);
        if (s.empty()) s.resize(1, mpz_class(0));
        s[0] = (s[0] - 1) % p;
        if (s[0] < 0) s[0] += p;
        znormalize(s);
        if (s.empty()) continue;
        ZPoly t = mgcd(s, g, p);
        if (zdeg(t) <= 0 || zdeg(t) >= zdeg(g)) continue;
        ZPoly q, rem;
        mdivmod(g, t, p, q, rem);
        edf(t, d, p, rng, out);
        edf(q, d, p, rng, out);
        return;
    }
}

std::vector<ZPoly> factor_mod_p(const ZPoly& f, const mpz_class& p) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::vector<ZPoly> out;
    ZPoly v = mmonic(mreduce(f, p), p);
    ZPoly h{mpz_class(0), mpz_class(1)};  // x
    int d = 0;
    while (zdeg(v) >= 2 * (d + 1)) {
        ++d;
        h = mpow_mod(h, p, v, p);
        ZPoly hx = h;
        if (hx.size() < 2) hx.resize(2, mpz_class(0));
        hx[1] = (hx[1] - 1) % p;
        if (hx[1] < 0) hx[1] += p;
        znormalize(hx);
        ZPoly g = hx.empty() ? v : mgcd(hx, v, p);
        if (zdeg(g) > 0) {
            edf(g, d, p, rng, out);
            ZPoly q, rem;
            mdivmod(v, g, p, q, rem);
            v = q;
            h = mmod(h, v, p);
        }
    }
    if (zdeg(v) > 0) out.push_back(v);
    return out;
}

mpz_class select_prime(const ZPoly& f) {
    mpz_class p(2);
    for (;;) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (f.back() % p == 0) continue;
        ZPoly fp = mreduce(f, p);
        ZPoly d = mderiv(fp, p);
        if (d.empty()) continue;
        if (zdeg(mgcd(fp, d, p)) == 0) return p;
    }
}

// Coefficient bound for l*g with g any integer factor of f: 2^n * |f|_2 * |l|.
mpz_class factor_bound(const ZPoly& f) {
    mpz_class norm2(0);
    for (const auto& c : f) norm2 += c * c;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    root += 1;
    mpz_class b = root * abs(f.back());
    mpz_class two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(zdeg(f)));
    return b * two_n;
}

// Linear multifactor Hensel lift of f = lc * prod(gs) from mod p to mod p^k.
void hensel_lift(const ZPoly& f, const mpz_class& p, int k, std::vector<ZPoly>& gs) {
    const std::size_t r = gs.size();
    mpz_class l = f.back();
    mpz_class linv = minv(mpz_class(l % p) < 0 ? mpz_class(l % p + p) : mpz_class(l % p), p);

    std::vector<ZPoly> sigma(r);
    for (std::size_t i = 0; i < r; ++i) {
        ZPoly prod{mpz_class(1)};
        for (std::size_t j = 0; j < r; ++j) {
            if (j != i) prod = mmod(mmul(prod, gs[j], p), gs[i], p);
        }
        sigma[i] = minv_poly(prod, gs[i], p);
    }

    mpz_class mod_step = p;  // p^step
    for (int step = 1; step < k; ++step) {
        mpz_class mod_next = mod_step * p;
        ZPoly prod{mpz_class(1)};
        for (const auto& g : gs) prod = mmul(prod, g, mod_next);
        prod = mscale(prod, l, mod_next);
        ZPoly e = msub(mreduce(f, mod_next), prod, mod_next);
        // e is divisible by p^step by the lift invariant
        ZPoly ebar(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) ebar[i] = e[i] / mod_step;
        znormalize(ebar);
        ebar = mscale(mreduce(ebar, p), linv, p);
        for (std::size_t i = 0; i < r; ++i) {
            ZPoly delta = mmod(mmul(sigma[i], ebar, p), mreduce(gs[i], p), p);
            for (std::size_t j = 0; j < delta.size(); ++j) {
                if (gs[i].size() <= j) gs[i].resize(j + 1, mpz_class(0));
                gs[i][j] = (gs[i][j] + mod_step * delta[j]) % mod_next;
            }
            znormalize(gs[i]);
        }
        mod_step = mod_next;
    }
}

ZPoly symmetric(const ZPoly& f, const mpz_class& m) {
    ZPoly r = f;
    mpz_class half = m / 2;
    for (auto& c : r) {
        if (c > half) c -= m;
    }
    znormalize(r);
    return r;
}

ZPoly zprimitive(ZPoly f) {
    if (f.empty()) return f;
    mpz_class cont = zcontent(f);
    if (f.back() < 0) cont = -cont;
    for (auto& c : f) c /= cont;
    return f;
}

// Zassenhaus: factor a squarefree primitive integer polynomial with
// positive leading coefficient into primitive irreducible integer factors.
std::vector<ZPoly> factor_squarefree_z(ZPoly f) {
    std::vector<ZPoly> result;
    if (zdeg(f) <= 0) return result;
    if (zdeg(f) == 1) {
        result.push_back(f);
        return result;
    }

    mpz_class p = select_prime(f);
    std::vector<ZPoly> modular = factor_mod_p(f, p);
    if (modular.size() == 1) {
        result.push_back(f);
        return result;
    }

    mpz_class bound = 2 * factor_bound(f) + 1;
    int k = 1;
    mpz_class pk = p;
    while (pk < bound) {
        pk *= p;
        ++k;
    }
    hensel_lift(f, p, k, modular);

    std::vector<std::size_t> live(modular.size());
    for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;

    std::size_t s = 1;
    while (2 * s <= live.size()) {
        // all index subsets of size s, lexicographic
        std::vector<std::size_t> pick(s);
        for (std::size_t i = 0; i < s; ++i) pick[i] = i;
        bool removed = false;
        for (;;) {
            ZPoly cand{f.back()};
            for (std::size_t i : pick) cand = mmul(cand, modular[live[i]], pk);
            cand = zprimitive(symmetric(cand, pk));
            ZPoly quot;
            if (zdeg(cand) >= 1 && zdivide_exact(f, cand, quot)) {
                result.push_back(cand);
                f = zprimitive(quot);
                std::vector<std::size_t> next_live;
                for (std::size_t i = 0; i < live.size(); ++i) {
                    if (std::find(pick.begin(), pick.end(), i) == pick.end()) {
                        next_live.push_back(live[i]);
                    }
                }
                live = std::move(next_live);
                removed = true;
                break;
            }
            // advance combination
            std::size_t j = s;
            while (j > 0) {
                --j;
                if (pick[j] != live.size() - s + j) break;
                if (j == 0) { j = s; break; }
            }
            if (j == s) break;
            ++pick[j];
            for (std::size_t t = j + 1; t < s; ++t) pick[t] = pick[t - 1] + 1;
        }
        if (!removed) ++s;
    }
    if (zdeg(f) >= 1) result.push_back(zprimitive(f));
    return result;
}

// Yun's squarefree decomposition for a monic rational polynomial.
std::vector<std::pair<Poly, int>> squarefree_monic(const Poly& f) {
    std::vector<std::pair<Poly, int>> parts;
    Poly fp = f.derivative();
    Poly g = poly_gcd(f, fp);
    Poly c = f.exact_div(g);
    Poly d = fp.exact_div(g) - c.derivative();
    int i = 1;
    while (!(c.degree() == 0)) {
        Poly part = poly_gcd(c, d);
        if (part.degree() > 0) parts.emplace_back(part, i);
        c = c.exact_div(part);
        d = d.exact_div(part) - c.derivative();
        ++i;
    }
    return parts;
}

}  // namespace

FactorList factor_irreducible(const Poly& p) {
    if (p.is_zero()) raise(Errc::cannot_factor_zero, "cannot factor the zero polynomial");
    FactorList out;
    out.lead = p.leading();
    if (p.degree() == 0) return out;

    Poly work = p.monic();

    // powers of x split off first
    int xmult = 0;
    while (work.coeff(0).is_zero()) {
        work = work.exact_div(Poly::x());
        ++xmult;
    }
    if (xmult > 0) out.factors.emplace_back(Poly::x(), xmult);

    if (work.degree() > 0) {
        for (const auto& [sf, mult] : squarefree_monic(work)) {
            ZPoly zf = to_primitive(sf);
            for (const auto& zfac : factor_squarefree_z(zf)) {
                out.factors.emplace_back(zpoly_to_poly(zfac).monic(), mult);
            }
        }
    }

    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) {
                  if (a.first != b.first) return a.first < b.first;
                  return a.second < b.second;
              });
    return out;
}

std::vector<Rational> rational_roots(const Poly& p) {
    if (p.is_zero()) raise(Errc::undefined_roots, "roots of the zero polynomial");
    std::vector<Rational> roots;
    for (const auto& [r, mult] : rational_roots_with_multiplicity(p)) {
        (void)mult;
        roots.push_back(r);
    }
    return roots;
}

std::vector<std::pair<Rational, int>> rational_roots_with_multiplicity(const Poly& p) {
    if (p.is_zero()) raise(Errc::undefined_roots, "roots of the zero polynomial");
    std::vector<std::pair<Rational, int>> roots;
    if (p.degree() < 1) return roots;
    for (const auto& [factor, mult] : factor_irreducible(p).factors) {
        if (factor.degree() == 1) roots.emplace_back(-factor.coeff(0), mult);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool is_irreducible(const Poly& p) {
    if (p.degree() < 1) return false;
    FactorList fl = factor_irreducible(p);
    return fl.factors.size() == 1 && fl.factors.front().second == 1;
}

}  // namespace riccati
