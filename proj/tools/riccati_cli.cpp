// riccati: exact solver for polynomial and trigonometric-polynomial
// Riccati differential equations.
//
// Exit codes: 0 success, 1 domain error, 2 parse/usage error,
// 3 internal bound violation.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "riccati/fuzz.hpp"
#include "riccati/parse.hpp"
#include "riccati/serialize.hpp"

namespace {

using namespace riccati;
using Clock = std::chrono::steady_clock;

struct PolyEqOptions {
    std::string a, b0, b1, b2;
    std::vector<std::string> seeds;
    bool from_stdin = false;
    mutable std::vector<Poly> spec_candidates;

    void attach(CLI::App* cmd, bool with_seeds = true, bool with_stdin = true) {
        cmd->add_option("--a", a, "coefficient a(x), e.g. \"-(x-1)*(x-2)\"");
        cmd->add_option("--b0", b0, "coefficient b0(x); defaults to 0");
        cmd->add_option("--b1", b1, "coefficient b1(x); defaults to 0");
        cmd->add_option("--b2", b2, "coefficient b2(x)");
        if (with_seeds) {
            cmd->add_option("--seed-solution", seeds,
                            "known polynomial solution (repeatable)");
        }
        if (with_stdin) {
            cmd->add_flag("--stdin", from_stdin, "read an EquationSpec JSON from stdin");
        }
    }

    RiccatiEq build(std::vector<Poly>& out_seeds) const {
        if (from_stdin) {
            Json j = Json::parse(std::cin);
            EquationSpec spec = EquationSpec::from_json(j);
            if (spec.kind != "poly") {
                raise(Errc::bad_parameters, "stdin spec kind must be \"poly\"");
            }
            out_seeds = spec.poly_seeds;
            spec_candidates = spec.poly_candidates;
            return *spec.poly_eq;
        }
        auto or_zero = [](const std::string& s) {
            return s.empty() ? Poly() : parse_poly_expr(s);
        };
        for (const std::string& s : seeds) out_seeds.push_back(parse_poly_expr(s));
        return RiccatiEq::make(or_zero(a), or_zero(b0), or_zero(b1), or_zero(b2));
    }
};

struct TrigEqOptions {
    std::string A, B0, B1, B2;
    std::vector<std::string> seeds;
    bool from_stdin = false;
    mutable std::vector<TrigPoly> spec_candidates;

    void attach(CLI::App* cmd, bool with_seeds = true, bool with_stdin = true) {
        cmd->add_option("--A", A, "coefficient A(t), e.g. \"5sin(t)+8sin(2t)+5sin(3t)\"");
        cmd->add_option("--B0", B0, "coefficient B0(t); defaults to 0");
        cmd->add_option("--B1", B1, "coefficient B1(t); defaults to 0");
        cmd->add_option("--B2", B2, "coefficient B2(t)");
        if (with_seeds) {
            cmd->add_option("--seed-solution", seeds,
                            "known trigonometric solution (repeatable)");
        }
        if (with_stdin) {
            cmd->add_flag("--stdin", from_stdin, "read an EquationSpec JSON from stdin");
        }
    }

    TrigRiccatiEq build(std::vector<TrigPoly>& out_seeds) const {
        if (from_stdin) {
            Json j = Json::parse(std::cin);
            EquationSpec spec = EquationSpec::from_json(j);
            if (spec.kind != "trig") {
                raise(Errc::bad_parameters, "stdin spec kind must be \"trig\"");
            }
            out_seeds = spec.trig_seeds;
            spec_candidates = spec.trig_candidates;
            return *spec.trig_eq;
        }
        auto or_zero = [](const std::string& s) {
            return s.empty() ? TrigPoly() : parse_trig_expr(s);
        };
        for (const std::string& s : seeds) out_seeds.push_back(parse_trig_expr(s));
        return TrigRiccatiEq::make(or_zero(A), or_zero(B0), or_zero(B1), or_zero(B2));
    }
};

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(Rational::from_string(item));
    }
    return out;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int dispatch(int argc, char** argv) {
    CLI::App app{"exact polynomial and trigonometric Riccati solver"};
    app.require_subcommand(1);

    bool timing = false;
    app.add_flag("--timing", timing, "include elapsed_ms in reports");

    // ---- solve-poly ----
    auto* solve_poly_cmd = app.add_subcommand(
        "solve-poly", "enumerate all polynomial solutions of a(x) y' = b0 + b1 y + b2 y^2");
    PolyEqOptions sp;
    sp.attach(solve_poly_cmd);

    // ---- solve-trig ----
    auto* solve_trig_cmd = app.add_subcommand(
        "solve-trig",
        "enumerate all trigonometric polynomial solutions of A(t) Y' = B0 + B1 Y + B2 Y^2");
    TrigEqOptions st;
    st.attach(solve_trig_cmd);

    // ---- verify ----
    auto* verify_cmd =
        app.add_subcommand("verify", "certify candidate solutions by substitution");
    std::string verify_kind = "poly";
    verify_cmd->add_option("--kind", verify_kind, "poly or trig")->check(
        CLI::IsMember({"poly", "trig"}));
    PolyEqOptions vp;
    TrigEqOptions vt;
    std::vector<std::string> candidates;
    vp.attach(verify_cmd, false);
    vt.attach(verify_cmd, false, false);
    verify_cmd->callback([&] { vt.from_stdin = vp.from_stdin; });
    verify_cmd->add_option("--y", candidates, "candidate solution (repeatable)");

    // ---- gen-extremal-poly ----
    auto* gep = app.add_subcommand("gen-extremal-poly",
                                   "equation of degree eta with exactly j solutions");
    int gep_eta = 0, gep_j = 0;
    std::string gep_roots;
    gep->add_option("--eta", gep_eta)->required();
    gep->add_option("--j", gep_j)->required();
    gep->add_option("--roots", gep_roots, "comma-separated distinct rationals")->required();

    // ---- gen-extremal-trig ----
    auto* get = app.add_subcommand("gen-extremal-trig",
                                   "equation of degree eta with exactly k+3 solutions");
    int get_eta = 0, get_k = 0;
    std::string get_c, get_d1 = "1", get_d2 = "-1";
    get->add_option("--eta", get_eta)->required();
    get->add_option("--k", get_k)->required();
    get->add_option("--c", get_c, "comma-separated closure constants")->required();
    get->add_option("--d1", get_d1);
    get->add_option("--d2", get_d2);

    // ---- cross-ratio ----
    auto* cr = app.add_subcommand("cross-ratio",
                                  "constant cross ratio of four polynomial solutions");
    std::vector<std::string> cr_y(4);
    cr->add_option("--y1", cr_y[0])->required();
    cr->add_option("--y2", cr_y[1])->required();
    cr->add_option("--y3", cr_y[2])->required();
    cr->add_option("--y4", cr_y[3])->required();
    PolyEqOptions cr_eq;
    cr_eq.attach(cr, false);

    // ---- sample ----
    auto* sample_cmd = app.add_subcommand(
        "sample", "CSV of A and every solution over a uniform theta grid");
    TrigEqOptions sm;
    sm.attach(sample_cmd);
    int sample_n = 361;
    sample_cmd->add_option("--n", sample_n, "grid size (>= 2)");

    // ---- fuzz ----
    auto* fuzz_cmd = app.add_subcommand(
        "fuzz", "random equations: check count bounds, certification, degree caps");
    std::string fuzz_kind = "poly";
    int fuzz_count = 100, fuzz_max_eta = 3;
    std::int64_t fuzz_seed = -1;
    fuzz_cmd->add_option("--kind", fuzz_kind)->check(CLI::IsMember({"poly", "trig"}));
    fuzz_cmd->add_option("--count", fuzz_count);
    fuzz_cmd->add_option("--max-eta", fuzz_max_eta);
    fuzz_cmd->add_option("--seed", fuzz_seed, "RNG seed; falls back to RICCATI_FUZZ_SEED");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems count as parse errors
    }

    if (solve_poly_cmd->parsed()) {
        std::vector<Poly> seeds;
        RiccatiEq eq = sp.build(seeds);
        auto t0 = Clock::now();
        SolutionSet sols = solve_all(eq, seeds);
        std::optional<double> ms;
        if (timing) ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        print_json(poly_report(eq, sols, ms));
        return 0;
    }

    if (solve_trig_cmd->parsed()) {
        std::vector<TrigPoly> seeds;
        TrigRiccatiEq eq = st.build(seeds);
        auto t0 = Clock::now();
        TrigSolutionSet sols = solve_all_trig(eq, seeds);
        std::optional<double> ms;
        if (timing) ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        print_json(trig_report(eq, sols, ms));
        return 0;
    }

    if (verify_cmd->parsed()) {
        Json out;
        out["kind"] = verify_kind;
        Json checks = Json::array();
        if (verify_kind == "poly") {
            std::vector<Poly> ignored;
            RiccatiEq eq = vp.build(ignored);
            std::vector<Poly> ys = vp.spec_candidates;
            for (const std::string& s : candidates) ys.push_back(parse_poly_expr(s));
            out["equation"] = equation_to_json(eq);
            for (const Poly& y : ys) {
                Json c;
                c["candidate"] = poly_to_json(y);
                c["solution"] = verify_solution(eq, y);
                checks.push_back(std::move(c));
            }
        } else {
            std::vector<TrigPoly> ignored;
            TrigRiccatiEq eq = vt.build(ignored);
            std::vector<TrigPoly> ys = vt.spec_candidates;
            for (const std::string& s : candidates) ys.push_back(parse_trig_expr(s));
            out["equation"] = equation_to_json(eq);
            for (const TrigPoly& y : ys) {
                Json c;
                c["candidate"] = trig_to_json(y);
                c["solution"] = verify_trig_solution(eq, y);
                checks.push_back(std::move(c));
            }
        }
        out["results"] = std::move(checks);
        print_json(out);
        return 0;
    }

    if (gep->parsed()) {
        auto [eq, sols] = gen_extremal(gep_eta, gep_j, parse_rational_list(gep_roots));
        Json j = poly_report(eq, sols);
        j["j"] = gep_j;
        print_json(j);
        return 0;
    }

    if (get->parsed()) {
        auto [eq, sols] =
            gen_extremal_trig(get_eta, get_k, parse_rational_list(get_c),
                              Rational::from_string(get_d1), Rational::from_string(get_d2));
        Json j = trig_report(eq, sols);
        j["k"] = get_k;
        print_json(j);
        return 0;
    }

    if (cr->parsed()) {
        std::vector<Poly> ys;
        for (const std::string& s : cr_y) ys.push_back(parse_poly_expr(s));
        if (!cr_eq.a.empty()) {
            std::vector<Poly> ignored;
            RiccatiEq eq = cr_eq.build(ignored);
            for (const Poly& y : ys) {
                if (!verify_solution(eq, y)) {
                    raise(Errc::not_a_solution,
                          "cross-ratio input is not a solution of the given equation");
                }
            }
        }
        Json j;
        j["cross_ratio"] = cross_ratio(ys[0], ys[1], ys[2], ys[3]).to_string();
        print_json(j);
        return 0;
    }

    if (sample_cmd->parsed()) {
        std::vector<TrigPoly> seeds;
        TrigRiccatiEq eq = sm.build(seeds);
        TrigSolutionSet sols = solve_all_trig(eq, seeds);
        std::cout << sample_curves_csv(eq, sols, sample_n);
        return 0;
    }

    if (fuzz_cmd->parsed()) {
        std::uint64_t seed = 0;
        if (fuzz_seed >= 0) {
            seed = static_cast<std::uint64_t>(fuzz_seed);
        } else if (const char* env = std::getenv("RICCATI_FUZZ_SEED")) {
            seed = std::strtoull(env, nullptr, 10);
        }
        FuzzReport report = fuzz_kind == "poly"
                                ? fuzz_poly(fuzz_count, fuzz_max_eta, seed)
                                : fuzz_trig(fuzz_count, fuzz_max_eta, seed);
        Json j;
        j["kind"] = fuzz_kind;
        j["count"] = report.count;
        j["max_eta"] = report.max_eta;
        j["seed"] = report.seed;
        j["violations"] = report.violations;
        j["incomplete"] = report.incomplete;
        j["solutions_total"] = report.solutions_total;
        j["max_solutions_seen"] = report.max_solutions_seen;
        j["summary"] = std::to_string(report.violations) + " violations in " +
                       std::to_string(report.count) + " equations";
        print_json(j);
        return report.violations == 0 ? 0 : 3;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const riccati::Error& e) {
        std::cerr << "riccati: " << e.what() << "\n";
        switch (e.code()) {
            case riccati::Errc::syntax_error: return 2;
            case riccati::Errc::bound_violation: return 3;
            default: return 1;
        }
    } catch (const riccati::Json::parse_error& e) {
        std::cerr << "riccati: JSON parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "riccati: " << e.what() << "\n";
        return 1;
    }
}
