#include "riccati/fuzz.hpp"

#include <random>

namespace riccati {

namespace {

// Small integer coefficients in [-3, 3]; degrees uniform up to max_degree.
Poly random_poly(std::mt19937_64& rng, int max_degree) {
    int deg = static_cast<int>(rng() % static_cast<unsigned long>(max_degree + 1));
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) {
        c.emplace_back(static_cast<long>(rng() % 7) - 3);
    }
    return Poly(std::move(c));
}

Poly random_nonzero_poly(std::mt19937_64& rng, int max_degree) {
    for (;;) {
        Poly p = random_poly(rng, max_degree);
        if (!p.is_zero()) return p;
    }
}

TrigPoly random_trig(std::mt19937_64& rng, int max_degree) {
    int deg = static_cast<int>(rng() % static_cast<unsigned long>(max_degree + 1));
    std::vector<Rational> cs, ss;
    for (int k = 0; k < deg; ++k) {
        cs.emplace_back(static_cast<long>(rng() % 7) - 3);
        ss.emplace_back(static_cast<long>(rng() % 7) - 3);
    }
    return TrigPoly(Rational(static_cast<long>(rng() % 7) - 3), std::move(cs),
                    std::move(ss));
}

TrigPoly random_nonzero_trig(std::mt19937_64& rng, int max_degree) {
    for (;;) {
        TrigPoly t = random_trig(rng, max_degree);
        if (!t.is_zero()) return t;
    }
}

}  // namespace

FuzzReport fuzz_poly(int count, int max_eta, std::uint64_t seed) {
    FuzzReport report;
    report.count = count;
    report.max_eta = max_eta;
    report.seed = seed;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        RiccatiEq eq = RiccatiEq::make(random_nonzero_poly(rng, max_eta),
                                       random_poly(rng, max_eta),
                                       random_poly(rng, max_eta),
                                       random_nonzero_poly(rng, max_eta));
        try {
            SolutionSet sols = solve_all(eq);
            if (!sols.complete_over_rationals) ++report.incomplete;
            report.solutions_total += static_cast<int>(sols.size());
            report.max_solutions_seen =
                std::max(report.max_solutions_seen, static_cast<int>(sols.size()));
            std::size_t cap = eq.eta >= 1 ? static_cast<std::size_t>(eq.eta) + 1 : 2;
            if (sols.size() > cap) ++report.violations;
            for (const auto& e : sols.entries()) {
                if (!verify_solution(eq, e.y)) ++report.violations;
                if (e.y.degree() > degree_bound(eq)) ++report.violations;
            }
        } catch (const Error& err) {
            if (err.code() == Errc::bound_violation) ++report.violations;
            else throw;
        }
    }
    return report;
}

FuzzReport fuzz_trig(int count, int max_eta, std::uint64_t seed) {
    FuzzReport report;
    report.count = count;
    report.max_eta = max_eta;
    report.seed = seed;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        TrigRiccatiEq eq = TrigRiccatiEq::make(random_nonzero_trig(rng, max_eta),
                                               random_trig(rng, max_eta),
                                               random_trig(rng, max_eta),
                                               random_nonzero_trig(rng, max_eta));
        try {
            TrigSolutionSet sols = solve_all_trig(eq);
            if (!sols.complete_over_rationals) ++report.incomplete;
            report.solutions_total += static_cast<int>(sols.size());
            report.max_solutions_seen =
                std::max(report.max_solutions_seen, static_cast<int>(sols.size()));
            std::size_t cap = eq.eta >= 2 ? static_cast<std::size_t>(2 * eq.eta)
                                          : (eq.eta == 1 ? 3 : 2);
            if (sols.size() > cap) ++report.violations;
            for (const auto& e : sols.entries()) {
                if (!verify_trig_solution(eq, e.Y)) ++report.violations;
                if (e.Y.degree() > trig_degree_bound(eq)) ++report.violations;
            }
        } catch (const Error& err) {
            if (err.code() == Errc::bound_violation) ++report.violations;
            else throw;
        }
    }
    return report;
}

}  // namespace riccati
