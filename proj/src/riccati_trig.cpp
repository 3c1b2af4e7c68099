#include "riccati/riccati_trig.hpp"

#include <algorithm>

#include "riccati/branch_solver.hpp"
#include "riccati/factor.hpp"
#include "riccati/residue.hpp"

namespace riccati {

TrigRiccatiEq TrigRiccatiEq::make(TrigPoly A, TrigPoly B0, TrigPoly B1, TrigPoly B2) {
    if (A.is_zero()) raise(Errc::degenerate_equation, "A must not be zero");
    if (B2.is_zero()) {
        raise(Errc::linear_equation, "B2 = 0 gives a linear equation");
    }
    TrigRiccatiEq eq;
    eq.eta = std::max({A.degree(), B0.degree(), B1.degree(), B2.degree()});
    eq.xa = phi_forward(A);
    eq.xb0 = phi_forward(B0);
    eq.xb1 = phi_forward(B1);
    eq.xb2 = phi_forward(B2);
    eq.A = std::move(A);
    eq.B0 = std::move(B0);
    eq.B1 = std::move(B1);
    eq.B2 = std::move(B2);
    return eq;
}

bool TrigSolutionSet::insert(TrigPoly y, Provenance prov, std::optional<Rational> c) {
    TrigSolution entry{std::move(y), RatForm(), prov, std::move(c)};
    entry.x_form = phi_forward(entry.Y);
    auto pos = std::lower_bound(entries_.begin(), entries_.end(), entry,
                                [](const TrigSolution& l, const TrigSolution& r) {
                                    return l.Y < r.Y;
                                });
    if (pos != entries_.end() && pos->Y == entry.Y) return false;
    entries_.insert(pos, std::move(entry));
    return true;
}

bool TrigSolutionSet::contains(const TrigPoly& y) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const TrigSolution& s) { return s.Y == y; });
}

std::vector<TrigPoly> TrigSolutionSet::trig_polys() const {
    std::vector<TrigPoly> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.Y);
    return out;
}

int trig_degree_bound(const TrigRiccatiEq& eq) {
    if (eq.B2.is_zero()) raise(Errc::linear_equation, "degree bound needs B2 != 0");
    return eq.eta - eq.B2.degree();
}

bool verify_trig_solution(const TrigRiccatiEq& eq, const TrigPoly& Y) {
    TrigPoly res = eq.A * Y.derivative() - eq.B0 - eq.B1 * Y - eq.B2 * (Y * Y);
    return res.is_zero();
}

TrigRiccatiEq reduce_trig(const TrigRiccatiEq& eq, const TrigPoly& Y0) {
    if (!verify_trig_solution(eq, Y0)) {
        raise(Errc::not_a_solution, "reduction seed does not satisfy the equation");
    }
    return TrigRiccatiEq::make(eq.A, TrigPoly(),
                               eq.B1 + Rational(2) * (eq.B2 * Y0), eq.B2);
}

namespace {

void check_trig_count_bound(int eta, std::size_t count) {
    std::size_t cap;
    if (eta >= 2) {
        cap = static_cast<std::size_t>(2 * eta);
    } else if (eta == 1) {
        cap = 3;
    } else {
        cap = 2;  // constant equations carry at most two constant solutions
    }
    if (count > cap) {
        raise(Errc::bound_violation,
              "found " + std::to_string(count) +
                  " trigonometric solutions, cap is " + std::to_string(cap));
    }
}

// Monic products of irreducible factors with total degree <= cap.
void divisor_products(const std::vector<Poly>& factors, std::size_t index,
                      const Poly& acc, int cap, std::vector<Poly>& out) {
    if (index == factors.size()) {
        out.push_back(acc);
        return;
    }
    Poly cur = acc;
    for (;;) {
        divisor_products(factors, index + 1, cur, cap, out);
        cur = cur * factors[index];
        if (cur.degree() > cap) break;
    }
}

// Candidate solution from a numerator w at level m; returns true when the
// certified trig polynomial was appended.
bool certify_numerator(const TrigRiccatiEq& eq, const Poly& w, int m,
                       std::vector<TrigPoly>& out) {
    RatForm form(w, m);
    if (!form.is_trig_image()) return false;
    TrigPoly cand = phi_inverse(form);
    if (!verify_trig_solution(eq, cand)) return false;
    if (std::find(out.begin(), out.end(), cand) == out.end()) {
        out.push_back(cand);
        return true;
    }
    return false;
}

// Method B' at one level: numerators of degree <= 2m with undetermined
// coefficients, fed through the cleared identity.
std::vector<TrigPoly> trig_sweep_at_level(const TrigRiccatiEq& eq, int m,
                                          bool& incomplete) {
    XSideIdentity id = transport_to_x(eq, m);
    int nvars = 2 * m + 1;
    SymPoly w(static_cast<std::size_t>(nvars), MultiPoly(nvars));
    for (int i = 0; i < nvars; ++i) {
        w[static_cast<std::size_t>(i)] = MultiPoly::variable(nvars, i);
    }
    SymPoly t = sym_from_poly(one_plus_x2(), nvars);
    SymPoly wdot_t = sym_mul(sym_derivative(w), t);
    SymPoly shift = sym_mul(sym_from_poly(
                                Poly::monomial(1, Rational(2L * m)), nvars),
                            w);
    SymPoly res = sym_mul(sym_from_poly(id.a_mul, nvars), sym_sub(wdot_t, shift));
    res = sym_sub(res, sym_from_poly(id.b0_mul, nvars));
    res = sym_sub(res, sym_mul(sym_from_poly(id.b1_mul, nvars), w));
    res = sym_sub(res, sym_mul(sym_from_poly(id.b2_mul, nvars), sym_mul(w, w)));
    std::vector<MultiPoly> eqs(res.rbegin(), res.rend());
    BranchSolveResult solved = solve_rational_system(std::move(eqs), nvars);
    incomplete = incomplete || solved.incomplete;
    std::vector<TrigPoly> out;
    for (const auto& assignment : solved.assignments) {
        std::vector<Rational> coeffs(assignment.begin(), assignment.end());
        certify_numerator(eq, Poly(std::move(coeffs)), m, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Method A' at one level: w = lambda * mhat with mhat a monic product of
// irreducible factors of the x-side a(x); complete for reduced equations
// since every solution numerator factors through a.
std::vector<TrigPoly> trig_divisor_search_at_level(const TrigRiccatiEq& eq, int m) {
    XSideIdentity id = transport_to_x(eq, m);
    std::vector<Poly> irreducibles;
    for (const auto& [f, mult] : factor_irreducible(eq.xa.numerator()).factors) {
        (void)mult;
        irreducibles.push_back(f);
    }
    std::vector<Poly> products;
    divisor_products(irreducibles, 0, Poly::constant(Rational(1)), 2 * m, products);
    std::vector<TrigPoly> out;
    for (const Poly& mhat : products) {
        // residual(lambda mhat) = lambda P - lambda^2 Q
        Poly p = id.a_mul * (mhat.derivative() * one_plus_x2() -
                             Poly::monomial(1, Rational(2L * m)) * mhat) -
                 id.b1_mul * mhat;
        Poly q = id.b2_mul * (mhat * mhat);
        if (p.is_zero() || q.is_zero()) continue;
        if (!q.divides(p)) continue;
        Poly lambda = p.exact_div(q);
        if (lambda.degree() != 0) continue;
        certify_numerator(eq, lambda.coeff(0) * mhat, m, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Poly XSideIdentity::residual(const Poly& w) const {
    Poly transported = w.derivative() * one_plus_x2() -
                       Poly::monomial(1, Rational(2L * m)) * w;
    return a_mul * transported - b0_mul - b1_mul * w - b2_mul * (w * w);
}

XSideIdentity transport_to_x(const TrigRiccatiEq& eq, int m) {
    if (m < 0 || m > trig_degree_bound(eq)) {
        raise(Errc::bad_parameters, "transport level outside the degree bound");
    }
    int alpha = eq.xa.nu();
    int beta0 = eq.xb0.nu();
    int beta1 = eq.xb1.nu();
    int beta2 = eq.xb2.nu();
    int L = std::max({alpha + m, beta0, beta1 + m, beta2 + 2 * m});
    const Poly& t = one_plus_x2();
    XSideIdentity id;
    id.m = m;
    id.a_mul = eq.xa.numerator() * t.pow(static_cast<unsigned>(L - alpha - m));
    Poly two = Poly::constant(Rational(2));
    id.b0_mul = two * eq.xb0.numerator() * t.pow(static_cast<unsigned>(L - beta0));
    id.b1_mul = two * eq.xb1.numerator() * t.pow(static_cast<unsigned>(L - beta1 - m));
    id.b2_mul = two * eq.xb2.numerator() * t.pow(static_cast<unsigned>(L - beta2 - 2 * m));
    return id;
}

TrigBaseSearch trig_base_solutions(const TrigRiccatiEq& eq_reduced) {
    if (!eq_reduced.B0.is_zero()) {
        raise(Errc::bad_parameters, "base search requires a reduced equation (B0 = 0)");
    }
    int bound = trig_degree_bound(eq_reduced);
    TrigBaseSearch out;
    std::vector<TrigPoly> all;
    for (int m = 0; m <= bound; ++m) {
        std::vector<TrigPoly> level = trig_divisor_search_at_level(eq_reduced, m);
        // Method B' cross-checks the divisor route on the same level; its
        // stuck states do not make the search incomplete because the
        // divisor enumeration already covers every rational solution.
        bool sweep_incomplete = false;
        for (TrigPoly& y : trig_sweep_at_level(eq_reduced, m, sweep_incomplete)) {
            if (std::find(level.begin(), level.end(), y) == level.end()) {
                level.push_back(std::move(y));
            }
        }
        std::sort(level.begin(), level.end());
        for (const TrigPoly& y : level) {
            if (y.is_zero()) continue;
            if (std::find(all.begin(), all.end(), y) == all.end()) all.push_back(y);
        }
        // an equal-degree pair at the lowest level that has one
        std::vector<TrigPoly> at_level;
        for (const TrigPoly& y : all) {
            if (y.degree() == m) at_level.push_back(y);
        }
        if (at_level.size() >= 2) {
            out.found = {at_level[0], at_level[1]};
            return out;
        }
    }
    std::sort(all.begin(), all.end());
    if (all.size() > 2) all.resize(2);
    out.found = std::move(all);
    return out;
}

TrigSolutionSet trig_closure(const TrigRiccatiEq& eq_reduced, const TrigPoly& Y1,
                             const TrigPoly& Y2) {
    if (Y1 == Y2) raise(Errc::degenerate_seed_pair, "closure needs two distinct seeds");
    if (Y1.is_zero() || Y2.is_zero()) {
        raise(Errc::degenerate_seed_pair, "closure seeds must be nonzero");
    }
    if (!verify_trig_solution(eq_reduced, Y1) || !verify_trig_solution(eq_reduced, Y2)) {
        raise(Errc::not_a_solution, "closure seed does not satisfy the equation");
    }

    RatForm r1 = phi_forward(Y1);
    RatForm r2 = phi_forward(Y2);
    if (r1.nu() > r2.nu()) std::swap(r1, r2);
    int eta1 = r1.nu();
    int delta = r2.nu() - eta1;

    Poly g = poly_gcd(r1.numerator(), r2.numerator());
    Poly ty1 = r1.numerator().exact_div(g);
    Poly ty2 = r2.numerator().exact_div(g);
    const Poly& t = one_plus_x2();
    Poly t1 = ty1 * t.pow(static_cast<unsigned>(delta));
    Poly t2 = ty2;
    Poly diff = t1 - t2;

    std::vector<Rational> candidates{Rational(0), Rational(1)};
    auto push = [&](const Rational& c) {
        if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) {
            candidates.push_back(c);
        }
    };
    if (g.degree() >= 1) {
        for (const auto& [p, mult] : factor_irreducible(g).factors) {
            (void)mult;
            if (auto c = residue_solve_scalar(diff, t2, p)) push(*c);
        }
    }
    // the unique c with (1+x^2) | s_c, solved in Q[x]/(x^2+1); this is the
    // only candidate that can raise the degree above eta1
    if (auto c = residue_solve_scalar(diff, t2, t)) push(*c);
    // the unique c making s_c a nonzero constant
    if (diff.degree() >= 1) {
        int k = diff.degree();
        Rational c0 = -(t2.coeff(k) / diff.coeff(k));
        if ((t2 + c0 * diff).degree() <= 0) push(c0);
    }

    TrigSolutionSet set;
    set.insert(TrigPoly(), Provenance::base_search);
    Poly numerator = g * ty1 * ty2;
    int raised_degree = 0;
    for (const Rational& c : candidates) {
        Poly sc = t2 + c * diff;
        if (sc.is_zero()) continue;
        int sigma = 0;
        while (!sc.is_constant()) {
            auto [q, r] = sc.divmod(t);
            if (!r.is_zero()) break;
            sc = std::move(q);
            ++sigma;
        }
        if (!sc.divides(numerator)) continue;
        Poly v = numerator.exact_div(sc);
        RatForm form(v, eta1 + sigma);
        if (!form.is_trig_image()) continue;
        TrigPoly cand = phi_inverse(form);
        if (!verify_trig_solution(eq_reduced, cand)) continue;
        if (set.insert(std::move(cand), Provenance::closure, c) && sigma > 0) {
            ++raised_degree;
        }
    }
    if (raised_degree > 1) {
        raise(Errc::bound_violation,
              "more than one closure solution above the seed degree");
    }
    check_trig_count_bound(eq_reduced.eta, set.size());
    return set;
}

TrigSolutionSet solve_all_trig(const TrigRiccatiEq& eq,
                               const std::vector<TrigPoly>& seeds) {
    int bound = trig_degree_bound(eq);
    bool incomplete = false;

    std::vector<TrigPoly> known = seeds;
    for (const TrigPoly& s : known) {
        if (!verify_trig_solution(eq, s)) {
            raise(Errc::not_a_solution, "provided seed does not satisfy the equation");
        }
    }
    std::sort(known.begin(), known.end());
    known.erase(std::unique(known.begin(), known.end()), known.end());

    bool user_seeded = !known.empty();
    if (known.empty()) {
        for (int m = 0; m <= bound && known.empty(); ++m) {
            known = trig_sweep_at_level(eq, m, incomplete);
        }
        if (known.empty()) {
            TrigSolutionSet empty;
            empty.complete_over_rationals = !incomplete;
            return empty;
        }
    }

    const TrigPoly Y0 = known.front();
    TrigRiccatiEq reduced = reduce_trig(eq, Y0);
    // The reduced search is complete over the rationals: every nonzero
    // solution numerator factors through the x-side a(x) (divisor method),
    // and closure from two certified seeds covers the rest.
    incomplete = false;

    std::vector<TrigPoly> pool;
    for (std::size_t i = 1; i < known.size(); ++i) pool.push_back(known[i] - Y0);
    if (pool.size() < 2) {
        TrigBaseSearch base = trig_base_solutions(reduced);
        for (TrigPoly& w : base.found) {
            if (std::find(pool.begin(), pool.end(), w) == pool.end()) {
                pool.push_back(std::move(w));
            }
        }
    }
    std::sort(pool.begin(), pool.end());

    // prefer an equal-degree pair from the pool
    std::size_t first = 0, second = 0;
    bool have_pair = false;
    for (std::size_t i = 0; i < pool.size() && !have_pair; ++i) {
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            if (pool[i].degree() == pool[j].degree()) {
                first = i;
                second = j;
                have_pair = true;
                break;
            }
        }
    }
    if (!have_pair && pool.size() >= 2) {
        first = 0;
        second = 1;
        have_pair = true;
    }

    TrigSolutionSet reduced_set;
    if (have_pair) {
        reduced_set = trig_closure(reduced, pool[first], pool[second]);
    } else {
        reduced_set.insert(TrigPoly(), Provenance::base_search);
        for (TrigPoly& w : pool) reduced_set.insert(std::move(w), Provenance::base_search);
        // a reduced equation with under two nonzero solutions is fully
        // enumerated by the divisor search, so nothing was missed
    }

    TrigSolutionSet out;
    out.complete_over_rationals = !incomplete;
    for (const auto& entry : reduced_set.entries()) {
        TrigPoly y = entry.Y + Y0;
        Provenance prov = entry.provenance;
        std::optional<Rational> c = entry.closure_c;
        if (user_seeded && std::find(seeds.begin(), seeds.end(), y) != seeds.end()) {
            prov = Provenance::seeded;
            c.reset();
        } else if (entry.Y.is_zero() ||
                   (prov == Provenance::closure && (entry.closure_c == Rational(0) ||
                                                    entry.closure_c == Rational(1)))) {
            prov = Provenance::base_search;
            c.reset();
        }
        if (!verify_trig_solution(eq, y)) {
            raise(Errc::bound_violation, "internal certification failed after translation");
        }
        out.insert(std::move(y), prov, std::move(c));
    }
    check_trig_count_bound(eq.eta, out.size());
    return out;
}

std::pair<TrigRiccatiEq, TrigSolutionSet> gen_extremal_trig(
    int eta, int k, const std::vector<Rational>& c_list, const Rational& d1,
    const Rational& d2) {
    if (eta < 2) raise(Errc::bad_parameters, "eta must be at least 2");
    if (k < 1 || k > 2 * eta - 3) raise(Errc::bad_parameters, "k must lie in 1..2*eta-3");
    if (static_cast<int>(c_list.size()) != k) {
        raise(Errc::bad_parameters, "need exactly k closure constants");
    }
    if (d1 == d2) raise(Errc::bad_parameters, "d1 and d2 must differ");
    for (std::size_t i = 0; i < c_list.size(); ++i) {
        if (c_list[i] == d1 || c_list[i] == d2) {
            raise(Errc::bad_parameters, "closure constants must differ from d1, d2");
        }
        for (std::size_t j = i + 1; j < c_list.size(); ++j) {
            if (c_list[i] == c_list[j]) {
                raise(Errc::bad_parameters, "closure constants must be distinct");
            }
        }
    }

    const Poly& t = one_plus_x2();
    Poly g = Poly::constant(Rational(1));
    for (const Rational& ci : c_list) g = g * Poly{-ci, Rational(1)};
    Poly xd1{-d1, Rational(1)};
    Poly xd2{-d2, Rational(1)};

    Poly a_num = Rational(2) * (xd1 * xd2 * g);
    Poly h1 = t * Poly{-(d1 + d2), Rational(2)} -
              Rational(2L * (eta - 1)) * (Poly::x() * xd1 * xd2);
    Poly h2 = t * xd1 * xd2;
    Poly b1_num = g * h1 + g.derivative() * h2;

    TrigPoly A = phi_inverse(RatForm(a_num, eta));
    TrigPoly B1 = phi_inverse(RatForm(b1_num, eta));
    TrigRiccatiEq eq = TrigRiccatiEq::make(A, TrigPoly(), B1,
                                           TrigPoly::constant(Rational(-1)));

    TrigSolutionSet set;
    set.insert(TrigPoly(), Provenance::seeded);
    auto add = [&](const Poly& numerator) {
        TrigPoly y = phi_inverse(RatForm(numerator, eta - 1));
        if (!verify_trig_solution(eq, y)) {
            raise(Errc::bound_violation, "extremal family member failed certification");
        }
        set.insert(std::move(y), Provenance::seeded);
    };
    add(g * xd1);
    add(g * xd2);
    for (const Rational& ci : c_list) {
        Poly numerator = (g * xd1 * xd2).exact_div(Poly{-ci, Rational(1)});
        add(numerator);
    }
    if (set.size() != static_cast<std::size_t>(k) + 3) {
        raise(Errc::bound_violation, "extremal family has the wrong cardinality");
    }
    return {std::move(eq), std::move(set)};
}

}  // namespace riccati
