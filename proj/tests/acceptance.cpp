// Acceptance suite: one scenario per criterion, one pass/fail line each.
// Everything is exact rational arithmetic, so every comparison is equality.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "bfun/cli.hpp"
#include "bfun/multiplier.hpp"
#include "bfun/newton2d.hpp"
#include "bfun/parse.hpp"
#include "bfun/snc_bounds.hpp"

using namespace bfun;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
               .count() /
           1000.0;
}

MPoly one(unsigned n) { return MPoly::constant(n, Rational(1)); }

BFunction roots(std::initializer_list<Rational> rs) { return BFunction::from_roots(rs); }

// ---- shared corpus ------------------------------------------------------

struct GridEntry {
    std::vector<unsigned> a;
    std::vector<unsigned> b;
    BFunction oracle_b;
};

std::vector<GridEntry> solve_monomial_grid() {
    std::vector<GridEntry> grid;
    auto add = [&](std::vector<unsigned> a, std::vector<unsigned> b) {
        unsigned n = static_cast<unsigned>(a.size());
        MPoly f = MPoly::monomial(n, Exponents(a.begin(), a.end()), Rational(1));
        MPoly g = MPoly::monomial(n, Exponents(b.begin(), b.end()), Rational(1));
        BFunction bf = solve_bfunction(f, g, monomial_oracle_bounds(a)).b;
        grid.push_back(GridEntry{std::move(a), std::move(b), std::move(bf)});
    };
    for (unsigned a1 = 1; a1 <= 5; ++a1)
        for (unsigned b1 = 0; b1 <= 3; ++b1) add({a1}, {b1});
    for (unsigned a1 = 0; a1 <= 5; ++a1)
        for (unsigned a2 = 0; a2 + a1 <= 5; ++a2) {
            if (a1 + a2 == 0) continue;
            for (unsigned b1 = 0; b1 <= 3; ++b1)
                for (unsigned b2 = 0; b2 + b1 <= 3; ++b2) add({a1, a2}, {b1, b2});
        }
    return grid;
}

struct CorpusEntry {
    std::string name;
    MPoly f;
    ResolutionData res;
    BFunction oracle_b; // for g = 1, default bounds
};

std::vector<CorpusEntry> solve_corpus() {
    std::vector<CorpusEntry> out;
    auto identity_table = [](std::vector<unsigned> a, bool reduced) {
        ResolutionData res;
        for (size_t i = 0; i < a.size(); ++i)
            res.divisors.push_back(DivisorRecord{"axis" + std::to_string(i + 1),
                                                 a[i], 0, 0, false});
        res.reduced = reduced;
        res.strict_transform_smooth = false;
        return res;
    };
    auto add = [&](std::string name, MPoly f, ResolutionData res) {
        BFunction b = solve_bfunction(f, one(f.nvars())).b;
        out.push_back(CorpusEntry{std::move(name), std::move(f), std::move(res), std::move(b)});
    };
    add("x", MPoly::variable(1, 0), identity_table({1}, true));
    add("x^2", parse_mpoly("x^2", 1), identity_table({2}, false));
    add("x*y", parse_mpoly("x*y", 2), resolution_from_newton(parse_mpoly("x*y", 2), {0, 0}));
    add("x^2+y^3", parse_mpoly("x^2+y^3", 2),
        resolution_from_newton(parse_mpoly("x^2+y^3", 2), {0, 0}));
    add("x^2+y^2", parse_mpoly("x^2+y^2", 2),
        resolution_from_newton(parse_mpoly("x^2+y^2", 2), {0, 0}));
    add("x^2+x*y+2y^2", parse_mpoly("x^2+x*y+2y^2", 2),
        resolution_from_newton(parse_mpoly("x^2+x*y+2y^2", 2), {0, 0}));
    return out;
}

// ---- criteria ------------------------------------------------------------

bool criterion1_oracle_exactness(double& elapsed) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    ok &= solve_bfunction(MPoly::variable(1, 0), one(1)).b == roots({Rational(-1)});
    ok &= solve_bfunction(parse_mpoly("x^2", 1), one(1)).b ==
          roots({Rational(-1), Rational(-1, 2)});
    BFunction xy = solve_bfunction(parse_mpoly("x*y", 2), one(2)).b;
    BFunction xy_expected;
    xy_expected.add_root(Rational(-1), 2);
    ok &= xy == xy_expected;
    ok &= solve_bfunction(parse_mpoly("x^2+y^3", 2), one(2)).b ==
          roots({Rational(-1), Rational(-5, 6), Rational(-7, 6)});
    elapsed = seconds_since(t0);
    ok &= elapsed < 60.0;
    return ok;
}

bool criterion2_monomial_divisibility(const std::vector<GridEntry>& grid, int& checked,
                                      int& attained) {
    checked = 0;
    attained = 0;
    for (const auto& e : grid) {
        BFunction bound = monomial_bound_m0(MonomialData(e.a, e.b, 0));
        if (!e.oracle_b.divides(bound)) return false;
        if (e.oracle_b == bound) ++attained; // equality, not just divisibility
        ++checked;
    }
    return true;
}

bool criterion3_lct_equality(const std::vector<GridEntry>& grid, int& checked) {
    checked = 0;
    for (const auto& e : grid) {
        ResolutionData res;
        for (size_t i = 0; i < e.a.size(); ++i)
            res.divisors.push_back(
                DivisorRecord{"axis" + std::to_string(i + 1), e.a[i], 0, e.b[i], false});
        if (e.oracle_b.largest_root() != -lct_g(res)) return false;
        ++checked;
    }
    // the cusp with monomial twists, resolution data from the Newton fan
    MPoly f = parse_mpoly("x^2+y^3", 2);
    for (std::pair<unsigned, unsigned> gexp :
         {std::pair<unsigned, unsigned>{0, 0}, {1, 0}, {0, 1}}) {
        MPoly g = MPoly::monomial(2, {gexp.first, gexp.second}, Rational(1));
        BFunction b = solve_bfunction(f, g).b;
        ResolutionData res = resolution_from_newton(f, gexp);
        if (b.largest_root() != -lct_g(res)) return false;
        ++checked;
    }
    return true;
}

bool criterion4_candidate_containment(const std::vector<CorpusEntry>& corpus, int& checked) {
    checked = 0;
    for (const auto& e : corpus) {
        for (const auto& [root, mult] : e.oracle_b.roots()) {
            if (!lichtin_contains(e.res, root)) return false;
            ++checked;
        }
        const bool exceptional_only = e.res.reduced && e.res.strict_transform_smooth;
        for (unsigned m = 0; m <= 2; ++m) {
            BFunction upper = sandwich_for_shifted(e.oracle_b, m).upper;
            for (const auto& [root, mult] : upper.roots()) {
                bool negative_integer = root < 0 && is_integer(root);
                if (!negative_integer &&
                    !candidate_roots_g1_contains(e.res, m, exceptional_only, root))
                    return false;
                ++checked;
            }
        }
    }
    return true;
}

bool criterion5_correspondence(double& elapsed, int& solves) {
    auto t0 = std::chrono::steady_clock::now();
    MonomialOracleCache cache;
    for (int j = 1; j <= 6; ++j) {
        BudurSaitoReport rep = budur_saito_check({2, 3}, Rational(j, 6), 3, cache);
        if (!rep.symmetric_difference.empty()) return false;
    }
    solves = static_cast<int>(cache.size());
    elapsed = seconds_since(t0);
    return elapsed < 600.0 && solves == 16;
}

bool criterion6_min_exponent(const std::vector<CorpusEntry>& corpus) {
    auto find = [&](const std::string& name) -> const CorpusEntry& {
        for (const auto& e : corpus)
            if (e.name == name) return e;
        throw Error("corpus entry missing");
    };
    const CorpusEntry& cusp = find("x^2+y^3");
    if (min_exponent_lower_bound(cusp.res) != Rational(5, 6)) return false;
    if (min_exponent_from_bfunction(cusp.oracle_b) != Rational(5, 6)) return false;
    if (!saito_criterion_check(cusp.oracle_b, cusp.res)) return false;

    const CorpusEntry& conic = find("x^2+y^2");
    if (min_exponent_lower_bound(conic.res) != Rational(1)) return false;
    if (min_exponent_from_bfunction(conic.oracle_b) != Rational(1)) return false;
    return true;
}

bool criterion7_property_suites(const std::vector<CorpusEntry>& corpus) {
    // scalar invariance under 20 random nonzero rational scalings
    MPoly f = parse_mpoly("x^2+y^3", 2);
    BFunction base = solve_bfunction(f, one(2)).b;
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> numer(-9, 9);
    std::uniform_int_distribution<int> denom(1, 9);
    int done = 0;
    while (done < 20) {
        int cp = numer(rng), dp = numer(rng);
        if (cp == 0 || dp == 0) continue;
        Rational c = make_rational(cp, denom(rng));
        Rational d = make_rational(dp, denom(rng));
        if (solve_bfunction(c * f, d * one(2)).b != base) return false;
        ++done;
    }

    // fan regularity and lct invariance under one extra subdivision ray
    for (const auto& e : corpus) {
        if (e.f.nvars() != 2) continue;
        NewtonPolygon2D np = newton_polygon(e.f);
        std::vector<RayVector> rays = quadrant_fan_rays(np);
        for (size_t i = 0; i + 1 < rays.size(); ++i) {
            long long det =
                rays[i].first * rays[i + 1].second - rays[i].second * rays[i + 1].first;
            if (det != 1) return false;
        }
        if (!is_squarefree(e.f)) continue;
        ResolutionData res = resolution_from_newton(e.f, {0, 0});
        Rational lct = lct_g(res);
        for (size_t i = 0; i + 1 < rays.size(); ++i) {
            RayVector mid{rays[i].first + rays[i + 1].first,
                          rays[i].second + rays[i + 1].second};
            ResolutionData finer = res;
            finer.divisors.push_back(interior_ray_record(np, mid, {0, 0}));
            if (lct_g(finer) != lct) return false;
        }
    }

    // multiplier membership is monotone on a 50-point rational grid
    ResolutionData snc;
    snc.divisors = {DivisorRecord{"x", 2, 0, 1, false}, DivisorRecord{"y", 3, 0, 2, false}};
    bool seen_false = false;
    for (int i = 1; i <= 50; ++i) {
        bool member = multiplier_membership(snc, Rational(i, 25));
        if (seen_false && member) return false;
        if (!member) seen_false = true;
    }

    return jumping_numbers_snc({2, 3}, Rational(1)) ==
           std::vector<Rational>{Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1)};
}

std::string full_cli_battery() {
    const char* problems[] = {
        R"({"command":"solve-b","payload":{"vars":2,"f":"x^2+y^3","g":"1"}})",
        R"({"command":"solve-b","payload":{"vars":1,"f":"x^2","g":"x"}})",
        R"({"command":"snc-bound","payload":{"a":[2,3],"b":[0,0],"variant":"m0"}})",
        R"json({"command":"candidates","payload":{"family":"g1","m":0,"ell_max":2,"exceptional_only":true,
            "resolution":{"divisors":[{"label":"ray(3,2)","a":6,"k":4,"b":0,"exceptional":true},
                                      {"label":"st","a":1,"k":0,"b":0,"exceptional":false}],
                          "reduced":true,"strict_transform_smooth":true}}})json",
        R"({"command":"lct","payload":{"resolution":{"divisors":[
            {"label":"x","a":2,"k":0,"b":0,"exceptional":false},
            {"label":"y","a":3,"k":0,"b":0,"exceptional":false}],
            "reduced":false,"strict_transform_smooth":false}}})",
        R"({"command":"membership","payload":{"lambda":"9/10","resolution":{"divisors":[
            {"label":"x","a":2,"k":0,"b":1,"exceptional":false},
            {"label":"y","a":3,"k":0,"b":2,"exceptional":false}],
            "reduced":false,"strict_transform_smooth":false}}})",
        R"({"command":"jumps","payload":{"a":[2,3],"T":"1"}})",
        R"({"command":"budur-saito","payload":{"a":[2,3],"alpha":"1/2","cap":2}})",
        R"({"command":"min-exponent","payload":{"roots":["-1","-5/6","-7/6"]}})",
        R"({"command":"newton-resolve","payload":{"f":"x^2+y^3","g":[1,0]}})",
    };
    std::ostringstream out;
    for (const char* p : problems) {
        Report rep = run(parse_problem(Json::parse(p)));
        out << rep.doc.dump(2) << "\n" << rep.text << "\n";
    }
    return out.str();
}

bool criterion8_determinism() {
    std::string first = full_cli_battery();
    std::string second = full_cli_battery();
    if (first != second) return false;
    const char* path1 = "/tmp/bfun_acceptance_run1.txt";
    const char* path2 = "/tmp/bfun_acceptance_run2.txt";
    {
        std::ofstream(path1) << first;
        std::ofstream(path2) << second;
    }
    std::ifstream f1(path1), f2(path2);
    std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    return s1 == s2 && !s1.empty();
}

} // namespace

int main() {
    try {
        double t1 = 0;
        bool ok1 = criterion1_oracle_exactness(t1);
        report(1, "oracle exactness on x, x^2, xy, x^2+y^3 at default bounds", ok1,
               "elapsed " + std::to_string(t1) + "s, limit 60s");

        std::vector<GridEntry> grid = solve_monomial_grid();
        int checked = 0, attained = 0;
        bool ok2 = criterion2_monomial_divisibility(grid, checked, attained);
        report(2, "oracle divides the closed-form monomial bound on the full grid", ok2,
               std::to_string(checked) + " pairs, bound attained with equality on " +
                   std::to_string(attained));

        bool ok3 = criterion3_lct_equality(grid, checked);
        report(3, "largest oracle root equals minus the log canonical threshold", ok3,
               std::to_string(checked) + " cases");

        std::vector<CorpusEntry> corpus = solve_corpus();
        bool ok4 = criterion4_candidate_containment(corpus, checked);
        report(4, "all roots lie in the log-resolution candidate sets", ok4,
               std::to_string(checked) + " roots");

        double t5 = 0;
        int solves = 0;
        bool ok5 = criterion5_correspondence(t5, solves);
        report(5, "V-filtration matches the multiplier ideals for x^2 y^3", ok5,
               std::to_string(solves) + " cached solves, elapsed " + std::to_string(t5) +
                   "s, limit 600s");

        report(6, "minimal-exponent lower bound is attained on the corpus",
               criterion6_min_exponent(corpus));

        report(7, "property suites: scalar invariance, fan regularity, monotonicity, jumps",
               criterion7_property_suites(corpus));

        report(8, "byte-identical reports across consecutive full runs",
               criterion8_determinism());
    } catch (const std::exception& e) {
        std::cout << "[FAIL] unexpected exception: " << e.what() << std::endl;
        ++failures;
    }
    if (failures == 0) {
        std::cout << "acceptance: all criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) failed" << std::endl;
    return 1;
}
