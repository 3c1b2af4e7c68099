#include "riccati/branch_solver.hpp"

#include <algorithm>

#include "riccati/factor.hpp"

namespace riccati {

// ---------------------------------------------------------------------
// MultiPoly
// ---------------------------------------------------------------------

MultiPoly MultiPoly::constant(int nvars, Rational c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(std::vector<int>(nvars, 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int var) {
    MultiPoly p(nvars);
    std::vector<int> e(nvars, 0);
    e[static_cast<std::size_t>(var)] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational();
    return terms_.begin()->second;
}

void MultiPoly::insert(const std::vector<int>& expo, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(expo);
    if (it == terms_.end()) {
        terms_.emplace(expo, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) insert(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) insert(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.nvars_);
    std::vector<int> e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.insert(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& s) const {
    MultiPoly r(nvars_);
    if (s.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
}

MultiPoly MultiPoly::substituted(int var, const Rational& value) const {
    MultiPoly r(nvars_);
    std::vector<int> e;
    for (const auto& [expo, c] : terms_) {
        int k = expo[static_cast<std::size_t>(var)];
        Rational scaled = c;
        for (int i = 0; i < k; ++i) scaled *= value;
        e = expo;
        e[static_cast<std::size_t>(var)] = 0;
        r.insert(e, scaled);
    }
    return r;
}

std::vector<int> MultiPoly::variables() const {
    std::vector<bool> seen(static_cast<std::size_t>(nvars_), false);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) seen[i] = true;
        }
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (seen[i]) out.push_back(static_cast<int>(i));
    }
    return out;
}

int MultiPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
    return d;
}

Poly MultiPoly::as_univariate(int var) const {
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree_in(var)) + 1);
    for (const auto& [e, c] : terms_) {
        coeffs[static_cast<std::size_t>(e[static_cast<std::size_t>(var)])] += c;
    }
    return Poly(std::move(coeffs));
}

std::vector<MultiPoly> MultiPoly::coefficients_in(int var) const {
    std::vector<MultiPoly> out(static_cast<std::size_t>(degree_in(var)) + 1,
                               MultiPoly(nvars_));
    std::vector<int> e;
    for (const auto& [expo, c] : terms_) {
        int k = expo[static_cast<std::size_t>(var)];
        e = expo;
        e[static_cast<std::size_t>(var)] = 0;
        out[static_cast<std::size_t>(k)].insert(e, c);
    }
    return out;
}

// ---------------------------------------------------------------------
// Resultant via memoized minor expansion of the Sylvester matrix.
// ---------------------------------------------------------------------

namespace {

MultiPoly det_minor(const std::vector<std::vector<MultiPoly>>& m, unsigned colmask,
                    std::size_t row, std::map<unsigned, MultiPoly>& memo, int nvars) {
    if (row == m.size()) return MultiPoly::constant(nvars, Rational(1));
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    MultiPoly acc(nvars);
    int sign = 1;
    for (std::size_t col = 0; col < m.size(); ++col) {
        unsigned bit = 1u << col;
        if (colmask & bit) continue;
        if (!m[row][col].is_zero()) {
            MultiPoly sub = det_minor(m, colmask | bit, row + 1, memo, nvars);
            MultiPoly term = m[row][col] * sub;
            if (sign < 0) term = -term;
            acc += term;
        }
        sign = -sign;
    }
    memo.emplace(colmask, acc);
    return acc;
}

}  // namespace

MultiPoly resultant_in(const MultiPoly& a, const MultiPoly& b, int var) {
    int da = a.degree_in(var);
    int db = b.degree_in(var);
    if (da < 1 || db < 1) {
        raise(Errc::bad_parameters, "resultant requires positive degrees in the variable");
    }
    auto ac = a.coefficients_in(var);
    auto bc = b.coefficients_in(var);
    std::size_t n = static_cast<std::size_t>(da + db);
    std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, MultiPoly(a.nvars())));
    for (int row = 0; row < db; ++row) {  // shifted copies of a
        for (int j = 0; j <= da; ++j) {
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] =
                ac[static_cast<std::size_t>(da - j)];
        }
    }
    for (int row = 0; row < da; ++row) {  // shifted copies of b
        for (int j = 0; j <= db; ++j) {
            m[static_cast<std::size_t>(db + row)][static_cast<std::size_t>(row + j)] =
                bc[static_cast<std::size_t>(db - j)];
        }
    }
    std::map<unsigned, MultiPoly> memo;
    return det_minor(m, 0, 0, memo, a.nvars());
}

// ---------------------------------------------------------------------
// Branch elimination
// ---------------------------------------------------------------------

namespace {

// Rational roots of a univariate equation; quadratics go through the
// discriminant square test, anything higher through factorization.
std::vector<Rational> equation_roots(const Poly& p) {
    std::vector<Rational> roots;
    if (p.degree() == 1) {
        roots.push_back(-(p.coeff(0) / p.coeff(1)));
    } else if (p.degree() == 2) {
        const Rational& a = p.coeff(2);
        const Rational& b = p.coeff(1);
        const Rational& c = p.coeff(0);
        Rational disc = b * b - Rational(4) * a * c;
        if (auto root = disc.sqrt_if_square()) {
            Rational twoa = Rational(2) * a;
            roots.push_back((-b + *root) / twoa);
            if (!root->is_zero()) roots.push_back((-b - *root) / twoa);
        }
    } else {
        roots = rational_roots(p);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

struct Dfs {
    static constexpr int kAugmentBudget = 3;
    static constexpr std::size_t kStashCap = 4;

    int nvars;
    BranchSolveResult result;

    void run(std::vector<MultiPoly> eqs, std::vector<std::optional<Rational>> assign,
             int augment_rounds) {
        // drop satisfied equations, stop on contradictions
        std::vector<MultiPoly> live;
        live.reserve(eqs.size());
        for (auto& e : eqs) {
            if (e.is_zero()) continue;
            if (e.is_constant()) return;  // nonzero constant: dead branch
            live.push_back(std::move(e));
        }

        if (live.empty()) {
            emit(assign);
            return;
        }

        // first equation with a single unresolved unknown, in given order
        for (std::size_t i = 0; i < live.size(); ++i) {
            auto vars = live[i].variables();
            if (vars.size() != 1) continue;
            int var = vars.front();
            Poly uni = live[i].as_univariate(var);
            for (const Rational& root : equation_roots(uni)) {
                std::vector<MultiPoly> next;
                next.reserve(live.size() - 1);
                for (std::size_t j = 0; j < live.size(); ++j) {
                    if (j == i) continue;
                    next.push_back(live[j].substituted(var, root));
                }
                auto next_assign = assign;
                next_assign[static_cast<std::size_t>(var)] = root;
                // substitution is progress; the augmentation budget resets
                run(std::move(next), std::move(next_assign), kAugmentBudget);
            }
            return;
        }

        // stuck: every remaining equation is multivariate
        std::vector<bool> present(static_cast<std::size_t>(nvars), false);
        for (const auto& e : live) {
            for (int v : e.variables()) present[static_cast<std::size_t>(v)] = true;
        }
        int unresolved = static_cast<int>(std::count(present.begin(), present.end(), true));
        if (unresolved > 3 || augment_rounds <= 0) {
            result.incomplete = true;
            return;
        }

        // Pairwise resultant elimination. Every common rational zero of a
        // pair annihilates their resultant, so a resultant is a sound
        // consequence: a nonzero constant kills the branch, a univariate
        // one feeds straight back into root branching, anything else is
        // stashed (capped) for one more round.
        std::vector<MultiPoly> stash;
        for (int var = 0; var < nvars; ++var) {
            if (!present[static_cast<std::size_t>(var)]) continue;
            for (std::size_t i = 0; i < live.size(); ++i) {
                for (std::size_t j = i + 1; j < live.size(); ++j) {
                    int di = live[i].degree_in(var);
                    int dj = live[j].degree_in(var);
                    if (di < 1 || dj < 1 || di + dj > 8) continue;
                    MultiPoly res = resultant_in(live[i], live[j], var);
                    if (res.is_zero()) continue;
                    if (res.is_constant()) return;  // no common zero exists
                    if (res.variables().size() == 1) {
                        live.push_back(std::move(res));
                        run(std::move(live), std::move(assign), augment_rounds);
                        return;
                    }
                    if (stash.size() < kStashCap &&
                        std::find(live.begin(), live.end(), res) == live.end() &&
                        std::find(stash.begin(), stash.end(), res) == stash.end()) {
                        stash.push_back(std::move(res));
                    }
                }
            }
        }
        if (stash.empty()) {
            result.incomplete = true;
            return;
        }
        for (MultiPoly& e : stash) live.push_back(std::move(e));
        run(std::move(live), std::move(assign), augment_rounds - 1);
    }

    void emit(const std::vector<std::optional<Rational>>& assign) {
        std::vector<Rational> full(static_cast<std::size_t>(nvars));
        for (int v = 0; v < nvars; ++v) {
            if (assign[static_cast<std::size_t>(v)]) {
                full[static_cast<std::size_t>(v)] = *assign[static_cast<std::size_t>(v)];
            } else {
                // unconstrained unknown: a whole family satisfies the system;
                // report the zero representative and flag the enumeration
                result.incomplete = true;
            }
        }
        if (std::find(result.assignments.begin(), result.assignments.end(), full) ==
            result.assignments.end()) {
            result.assignments.push_back(std::move(full));
        }
    }
};

}  // namespace

BranchSolveResult solve_rational_system(std::vector<MultiPoly> eqs, int nvars) {
    Dfs dfs;
    dfs.nvars = nvars;
    dfs.run(std::move(eqs),
            std::vector<std::optional<Rational>>(static_cast<std::size_t>(nvars)),
            Dfs::kAugmentBudget);
    return dfs.result;
}

// ---------------------------------------------------------------------
// Symbolic univariate plumbing
// ---------------------------------------------------------------------

namespace {
void sym_normalize(SymPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}
}  // namespace

SymPoly sym_from_poly(const Poly& p, int nvars) {
    SymPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(MultiPoly::constant(nvars, c));
    return out;
}

SymPoly sym_add(const SymPoly& a, const SymPoly& b) {
    if (a.empty()) return b;
    SymPoly out = a;
    if (b.size() > out.size()) out.resize(b.size(), MultiPoly(a.front().nvars()));
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    sym_normalize(out);
    return out;
}

SymPoly sym_sub(const SymPoly& a, const SymPoly& b) {
    if (b.empty()) return a;
    int nvars = b.front().nvars();
    SymPoly out = a;
    if (b.size() > out.size()) out.resize(b.size(), MultiPoly(nvars));
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    sym_normalize(out);
    return out;
}

SymPoly sym_mul(const SymPoly& a, const SymPoly& b) {
    if (a.empty() || b.empty()) return {};
    int nvars = a.front().nvars();
    SymPoly out(a.size() + b.size() - 1, MultiPoly(nvars));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    sym_normalize(out);
    return out;
}

SymPoly sym_derivative(const SymPoly& a) {
    if (a.size() <= 1) return {};
    SymPoly out(a.size() - 1, MultiPoly(a.front().nvars()));
    for (std::size_t i = 1; i < a.size(); ++i) {
        out[i - 1] = a[i].scaled(Rational(static_cast<long>(i)));
    }
    sym_normalize(out);
    return out;
}

}  // namespace riccati
