#include "riccati/riccati_poly.hpp"

#include <algorithm>

#include "riccati/branch_solver.hpp"
#include "riccati/factor.hpp"
#include "riccati/residue.hpp"

namespace riccati {

RiccatiEq RiccatiEq::make(Poly a, Poly b0, Poly b1, Poly b2) {
    if (a.is_zero()) raise(Errc::degenerate_equation, "a(x) must not be zero");
    if (b2.is_zero()) {
        raise(Errc::linear_equation, "b2(x) = 0 gives a linear equation");
    }
    RiccatiEq eq;
    eq.eta = std::max({a.degree(), b0.degree(), b1.degree(), b2.degree()});
    eq.a = std::move(a);
    eq.b0 = std::move(b0);
    eq.b1 = std::move(b1);
    eq.b2 = std::move(b2);
    return eq;
}

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::seeded: return "seeded";
        case Provenance::base_search: return "base-search";
        case Provenance::closure: return "closure";
    }
    return "?";
}

bool SolutionSet::insert(Poly y, Provenance prov, std::optional<Rational> c) {
    PolySolution entry{std::move(y), prov, std::move(c)};
    auto pos = std::lower_bound(entries_.begin(), entries_.end(), entry,
                                [](const PolySolution& l, const PolySolution& r) {
                                    return l.y < r.y;
                                });
    if (pos != entries_.end() && pos->y == entry.y) return false;
    entries_.insert(pos, std::move(entry));
    return true;
}

bool SolutionSet::contains(const Poly& y) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const PolySolution& s) { return s.y == y; });
}

std::vector<Poly> SolutionSet::polys() const {
    std::vector<Poly> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.y);
    return out;
}

int degree_bound(const RiccatiEq& eq) {
    if (eq.b2.is_zero()) raise(Errc::linear_equation, "degree bound needs b2 != 0");
    return eq.eta - eq.b2.degree();
}

namespace {

Poly residual(const RiccatiEq& eq, const Poly& y) {
    return eq.a * y.derivative() - eq.b0 - eq.b1 * y - eq.b2 * (y * y);
}

void check_count_bound(const RiccatiEq& eq, std::size_t count) {
    std::size_t cap = eq.eta >= 1 ? static_cast<std::size_t>(eq.eta) + 1 : 2;
    if (count > cap) {
        raise(Errc::bound_violation,
              "found " + std::to_string(count) + " polynomial solutions, cap is " +
                  std::to_string(cap));
    }
}

// Monic products of irreducible factors of a, total degree <= cap. The
// multiplicity of each factor in a solution may exceed its multiplicity
// in a, so only the degree cap limits the exponents.
void enumerate_divisor_products(const std::vector<Poly>& factors, std::size_t index,
                                const Poly& acc, int cap, std::vector<Poly>& out) {
    if (index == factors.size()) {
        out.push_back(acc);
        return;
    }
    const Poly& f = factors[index];
    Poly cur = acc;
    for (int e = 0; cur.degree() <= cap; ++e) {
        enumerate_divisor_products(factors, index + 1, cur, cap, out);
        cur = cur * f;
    }
}

}  // namespace

bool verify_solution(const RiccatiEq& eq, const Poly& y) {
    return residual(eq, y).is_zero();
}

RiccatiEq reduce_equation(const RiccatiEq& eq, const Poly& y0) {
    if (!verify_solution(eq, y0)) {
        raise(Errc::not_a_solution, "reduction seed does not satisfy the equation");
    }
    return RiccatiEq::make(eq.a, Poly(),
                           eq.b1 + Rational(2) * (eq.b2 * y0), eq.b2);
}

namespace {

// One sweep level: candidates of exact shape sum_{i<=delta} u_i x^i.
std::vector<Poly> sweep_at_degree(const RiccatiEq& eq, int delta, bool& incomplete) {
    int nvars = delta + 1;
    SymPoly y(static_cast<std::size_t>(nvars), MultiPoly(nvars));
    for (int i = 0; i <= delta; ++i) {
        y[static_cast<std::size_t>(i)] = MultiPoly::variable(nvars, i);
    }
    SymPoly res = sym_mul(sym_from_poly(eq.a, nvars), sym_derivative(y));
    res = sym_sub(res, sym_from_poly(eq.b0, nvars));
    res = sym_sub(res, sym_mul(sym_from_poly(eq.b1, nvars), y));
    res = sym_sub(res, sym_mul(sym_from_poly(eq.b2, nvars), sym_mul(y, y)));
    // coefficient equations, highest x-degree first
    std::vector<MultiPoly> eqs(res.rbegin(), res.rend());
    BranchSolveResult solved = solve_rational_system(std::move(eqs), nvars);
    incomplete = incomplete || solved.incomplete;
    std::vector<Poly> out;
    for (const auto& assignment : solved.assignments) {
        std::vector<Rational> coeffs(assignment.begin(), assignment.end());
        Poly cand(std::move(coeffs));
        if (!verify_solution(eq, cand)) continue;
        if (std::find(out.begin(), out.end(), cand) == out.end()) {
            out.push_back(std::move(cand));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

BaseSearch sweep_solutions(const RiccatiEq& eq, int max_degree) {
    BaseSearch out;
    std::vector<Poly> seen;
    for (int delta = 0; delta <= max_degree; ++delta) {
        for (Poly& cand : sweep_at_degree(eq, delta, out.incomplete)) {
            if (std::find(seen.begin(), seen.end(), cand) == seen.end()) {
                seen.push_back(std::move(cand));
            }
        }
    }
    std::sort(seen.begin(), seen.end());
    out.found = std::move(seen);
    return out;
}

BaseSearch base_solutions(const RiccatiEq& eq_reduced, int max_found) {
    if (!eq_reduced.b0.is_zero()) {
        raise(Errc::bad_parameters, "base search requires a reduced equation (b0 = 0)");
    }
    int cap = degree_bound(eq_reduced);
    std::vector<Poly> found;

    // Method A: zeros of nonzero solutions are zeros of a, so candidate
    // solutions are constant multiples of monic factor products of a.
    std::vector<Poly> irreducibles;
    for (const auto& [f, mult] : factor_irreducible(eq_reduced.a).factors) {
        (void)mult;
        irreducibles.push_back(f);
    }
    std::vector<Poly> products;
    enumerate_divisor_products(irreducibles, 0, Poly::constant(Rational(1)), cap,
                               products);
    for (const Poly& m : products) {
        Poly num = eq_reduced.a * m.derivative() - eq_reduced.b1 * m;
        Poly den = eq_reduced.b2 * m * m;
        if (num.is_zero()) continue;
        if (!den.divides(num)) continue;
        Poly lambda = num.exact_div(den);
        if (lambda.degree() != 0) continue;
        Poly cand = lambda.coeff(0) * m;
        if (!verify_solution(eq_reduced, cand)) continue;
        if (std::find(found.begin(), found.end(), cand) == found.end()) {
            found.push_back(cand);
        }
    }

    // Method B: full coefficient sweep; A's results are a subset.
    BaseSearch sweep = sweep_solutions(eq_reduced, cap);
    for (const Poly& cand : sweep.found) {
        if (cand.is_zero()) continue;
        if (std::find(found.begin(), found.end(), cand) == found.end()) {
            found.push_back(cand);
        }
    }

    std::sort(found.begin(), found.end());
    if (static_cast<int>(found.size()) > max_found) {
        found.resize(static_cast<std::size_t>(max_found));
    }
    return {std::move(found), sweep.incomplete};
}

SolutionSet closure_solutions(const RiccatiEq& eq_reduced, const Poly& y1,
                              const Poly& y2) {
    if (y1 == y2) raise(Errc::degenerate_seed_pair, "closure needs two distinct seeds");
    if (y1.is_zero() || y2.is_zero()) {
        raise(Errc::degenerate_seed_pair, "closure seeds must be nonzero");
    }
    if (!verify_solution(eq_reduced, y1) || !verify_solution(eq_reduced, y2)) {
        raise(Errc::not_a_solution, "closure seed does not satisfy the equation");
    }

    Poly g = poly_gcd(y1, y2);
    Poly t1 = y1.exact_div(g);
    Poly t2 = y2.exact_div(g);
    Poly diff = t1 - t2;

    std::vector<Rational> candidates{Rational(0), Rational(1)};
    auto push = [&](const Rational& c) {
        if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) {
            candidates.push_back(c);
        }
    };

    // one candidate per irreducible factor of g (Lemma-5 style root values)
    if (g.degree() >= 1) {
        for (const auto& [p, mult] : factor_irreducible(g).factors) {
            (void)mult;
            if (auto c = residue_solve_scalar(diff, t2, p)) push(*c);
        }
    }

    // the unique c making c t1 + (1-c) t2 constant, when consistent
    if (diff.degree() >= 1) {
        int k = diff.degree();
        Rational c0 = -(t2.coeff(k) / diff.coeff(k));
        bool consistent = true;
        Poly combo = t2 + c0 * diff;
        if (combo.degree() > 0) consistent = false;
        if (consistent) push(c0);
    }

    SolutionSet set;
    set.insert(Poly(), Provenance::base_search);
    Poly numerator = g * t1 * t2;
    for (const Rational& c : candidates) {
        Poly rc = t2 + c * diff;
        if (rc.is_zero()) continue;
        if (!rc.divides(numerator)) continue;
        Poly cand = numerator.exact_div(rc);
        if (!verify_solution(eq_reduced, cand)) continue;
        set.insert(std::move(cand), Provenance::closure, c);
    }
    check_count_bound(eq_reduced, set.size());
    return set;
}

SolutionSet solve_all(const RiccatiEq& eq, const std::vector<Poly>& seeds) {
    int cap = degree_bound(eq);
    bool incomplete = false;

    // known solutions of the original equation, canonical order
    std::vector<Poly> known = seeds;
    for (const Poly& s : known) {
        if (!verify_solution(eq, s)) {
            raise(Errc::not_a_solution, "provided seed does not satisfy the equation");
        }
    }
    std::sort(known.begin(), known.end());
    known.erase(std::unique(known.begin(), known.end()), known.end());

    bool user_seeded = !known.empty();
    if (known.empty()) {
        // sweep for a first solution, lowest degree first
        for (int delta = 0; delta <= cap && known.empty(); ++delta) {
            known = sweep_at_degree(eq, delta, incomplete);
        }
        if (known.empty()) {
            SolutionSet empty;
            empty.complete_over_rationals = !incomplete;
            return empty;
        }
    }

    const Poly y0 = known.front();
    RiccatiEq reduced = reduce_equation(eq, y0);
    // From here on the enumeration is complete over the rationals: the
    // divisor search covers every nonzero reduced solution (each of its
    // irreducible factors divides a), and the closure family covers
    // everything once two of them are certified.
    incomplete = false;

    // translate the other known solutions into the reduced frame
    std::vector<Poly> base_pair;
    for (std::size_t i = 1; i < known.size() && base_pair.size() < 2; ++i) {
        base_pair.push_back(known[i] - y0);
    }
    if (base_pair.size() < 2) {
        BaseSearch base = base_solutions(reduced, 2);
        for (const Poly& w : base.found) {
            if (base_pair.size() >= 2) break;
            if (std::find(base_pair.begin(), base_pair.end(), w) == base_pair.end()) {
                base_pair.push_back(w);
            }
        }
    }

    SolutionSet reduced_set;
    if (base_pair.size() >= 2) {
        reduced_set = closure_solutions(reduced, base_pair[0], base_pair[1]);
    } else {
        reduced_set.insert(Poly(), Provenance::base_search);
        for (const Poly& w : base_pair) reduced_set.insert(w, Provenance::base_search);
    }

    SolutionSet out;
    out.complete_over_rationals = !incomplete;
    for (const auto& entry : reduced_set.entries()) {
        Poly y = entry.y + y0;
        Provenance prov = entry.provenance;
        std::optional<Rational> c = entry.closure_c;
        if (user_seeded &&
            std::find(seeds.begin(), seeds.end(), y) != seeds.end()) {
            prov = Provenance::seeded;
            c.reset();
        } else if (entry.y.is_zero() || (prov == Provenance::closure &&
                                         (entry.closure_c == Rational(0) ||
                                          entry.closure_c == Rational(1)))) {
            // the reduction origin and the two seeds come from the search
            prov = Provenance::base_search;
            c.reset();
        }
        if (!verify_solution(eq, y)) {
            raise(Errc::bound_violation, "internal certification failed after translation");
        }
        out.insert(std::move(y), prov, std::move(c));
    }
    check_count_bound(eq, out.size());
    return out;
}

Rational cross_ratio(const Poly& y1, const Poly& y2, const Poly& y3, const Poly& y4) {
    const Poly* ys[4] = {&y1, &y2, &y3, &y4};
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (*ys[i] == *ys[j]) {
                raise(Errc::degenerate_quadruple, "cross ratio needs distinct solutions");
            }
        }
    }
    Poly num = (y4 - y1) * (y3 - y2);
    Poly den = (y3 - y1) * (y4 - y2);
    if (!den.divides(num)) {
        raise(Errc::not_solutions_of_same_equation,
              "cross ratio does not reduce to a constant");
    }
    Poly q = num.exact_div(den);
    if (q.degree() > 0) {
        raise(Errc::not_solutions_of_same_equation,
              "cross ratio does not reduce to a constant");
    }
    return q.coeff(0);
}

std::pair<RiccatiEq, SolutionSet> gen_extremal(int eta, int j,
                                               const std::vector<Rational>& roots) {
    if (eta < 1) raise(Errc::bad_parameters, "eta must be at least 1");
    if (j < 2 || j > eta + 1) {
        raise(Errc::bad_parameters, "j must lie in 2..eta+1");
    }
    if (static_cast<int>(roots.size()) < j - 1) {
        raise(Errc::bad_parameters, "need at least j-1 roots");
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t k = i + 1; k < roots.size(); ++k) {
            if (roots[i] == roots[k]) raise(Errc::bad_parameters, "roots must be distinct");
        }
    }

    Poly a = Poly{-roots[0], Rational(1)}.pow(static_cast<unsigned>(eta + 2 - j));
    for (int i = 2; i <= j - 1; ++i) {
        a = a * Poly{-roots[static_cast<std::size_t>(i - 1)], Rational(1)};
    }
    a = -a;

    RiccatiEq eq = RiccatiEq::make(a, Poly(), a.derivative(),
                                   Poly::constant(Rational(1)));

    SolutionSet set;
    set.insert(Poly(), Provenance::seeded);
    for (int i = 1; i <= j - 1; ++i) {
        Poly divisor{-roots[static_cast<std::size_t>(i - 1)], Rational(1)};
        Poly yi = (-a).exact_div(divisor);
        if (!verify_solution(eq, yi)) {
            raise(Errc::bound_violation, "extremal family member failed certification");
        }
        set.insert(std::move(yi), Provenance::seeded);
    }
    if (set.size() != static_cast<std::size_t>(j)) {
        raise(Errc::bound_violation, "extremal family has the wrong cardinality");
    }
    return {std::move(eq), std::move(set)};
}

}  // namespace riccati
