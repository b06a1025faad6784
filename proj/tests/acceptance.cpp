// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "support.hpp"

using namespace bq;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok) {
    std::cout << "criterion " << criterion << " (" << what << "): "
              << (ok ? "PASS" : "FAIL") << "\n";
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string run_cli(const std::string& args) {
    const std::string out_file = "acceptance_cli_out.tmp";
    const std::string cmd = std::string(CLI_BIN) + " " + args + " > " + out_file;
    if (std::system(cmd.c_str()) != 0) return "<nonzero exit>";
    std::ifstream in(out_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::remove(out_file.c_str());
    return ss.str();
}

// 1. All published algebras validate; Alexander construction valid for every
//    unit triple with N in 2..8.
void criterion1() {
    const auto t0 = Clock::now();
    bool ok = true;
    try {
        support::load_algebra("algebras/x1.alg");
        support::load_algebra("algebras/x2.alg");
        support::load_algebra("algebras/x3.alg");
        support::load_algebra("algebras/o2.alg");
        for (int N = 2; N <= 8 && ok; ++N)
            for (int d = 1; d < N; ++d)
                for (int s = 1; s < N; ++s)
                    for (int n = 1; n < N; ++n) {
                        if (std::gcd(d, N) != 1 || std::gcd(s, N) != 1 ||
                            std::gcd(n, N) != 1)
                            continue;
                        alexander_biquasile(N, d, s, n);
                    }
    } catch (const std::exception& e) {
        std::cerr << "  " << e.what() << "\n";
        ok = false;
    }
    ok = ok && seconds_since(t0) < 1.0;
    report(1, "axiom verification", ok);
}

// 2. 6_1 -> 49 via backtracking and the SNF path; torus+sphere -> 343.
void criterion2() {
    const auto t0 = Clock::now();
    bool ok = true;
    try {
        const auto six = support::load_diagram("6_1.mgd");
        const auto Z7 = alexander_biquasile(7, 2, 3, 4);
        ok = ok && count_colorings(six, Z7) == 49;
        ok = ok && count_solutions_linear(build_linear_system(six, 7, 2, 3, 4)) == 49;
        ok = ok && count_colorings(support::load_diagram("torus_sphere.mgd"), Z7) == 343;
    } catch (const std::exception& e) {
        std::cerr << "  " << e.what() << "\n";
        ok = false;
    }
    ok = ok && seconds_since(t0) < 1.0;
    report(2, "worked example 49 / 343", ok);
}

// 3. The 3x14 invariant table, including the zero at (X_3, 10_1^1).
void criterion3() {
    const auto t0 = Clock::now();
    bool ok = true;
    try {
        std::vector<MarkedGraphDiagram> corpus;
        for (const auto& f : support::all_fixture_files())
            if (f.starts_with("table/")) corpus.push_back(support::load_diagram(f));
        const auto t = invariant_table(
            corpus, {{"X_1", support::load_algebra("algebras/x1.alg")},
                     {"X_2", support::load_algebra("algebras/x2.alg")},
                     {"X_3", support::load_algebra("algebras/x3.alg")}});
        const std::vector<std::vector<std::int64_t>> expected = {
            {9, 9, 27, 9, 27, 9, 9, 27, 9, 27, 9, 3, 9, 27},
            {9, 27, 9, 27, 3, 27, 9, 9, 9, 9, 27, 3, 27, 81},
            {9, 27, 9, 27, 9, 27, 9, 9, 9, 9, 27, 0, 27, 81}};
        ok = t.counts == expected;
    } catch (const std::exception& e) {
        std::cerr << "  " << e.what() << "\n";
        ok = false;
    }
    ok = ok && seconds_since(t0) < 10.0;
    report(3, "3x14 table reproduction", ok);
}

// 4. Orientation sensitivity of 9_1^{0,1}.
void criterion4() {
    bool ok = true;
    try {
        const auto fwd = support::load_diagram("table/06_9_1_0_1.mgd");
        const auto rev = support::load_diagram("9_1_0_1_rev.mgd");
        const std::vector<std::int64_t> want_fwd = {9, 27, 27}, want_rev = {3, 9, 0};
        const std::vector<std::string> files = {"algebras/x1.alg", "algebras/x2.alg",
                                                "algebras/x3.alg"};
        for (int i = 0; i < 3; ++i) {
            const auto X = support::load_algebra(files[i]);
            ok = ok && counting_invariant(fwd, X) == want_fwd[i];
            ok = ok && counting_invariant(rev, X) == want_rev[i];
        }
    } catch (const std::exception& e) {
        std::cerr << "  " << e.what() << "\n";
        ok = false;
    }
    report(4, "orientation sensitivity (9,27,27) vs (3,9,0)", ok);
}

// 5. The enhanced invariant strings through the CLI.
void criterion5() {
    const std::string tail = " " + support::fixture_path("algebras/o2.alg") + " " +
                             support::fixture_path("weights/phi.wt");
    const bool ok =
        run_cli("invariant " + support::fixture_path("cobordism_l.mgd") + tail) == "4u+4\n" &&
        run_cli("invariant " + support::fixture_path("hopf_l2a1.mgd") + tail) == "4\n";
    report(5, "Boltzmann example 4u+4 vs 4", ok);
}

// 6. Backtracking = oracle = SNF across fixtures and algebra families.
//    Oracle comparisons are budget-limited; the SNF path covers every
//    Alexander algebra on every fixture.
void criterion6() {
    bool ok = true;
    long comparisons = 0;
    try {
        std::vector<MarkedGraphDiagram> fixtures;
        for (const auto& f : support::all_fixture_files())
            fixtures.push_back(support::load_diagram(f));

        std::vector<Biquasile> small;
        for (int order = 1; order <= 3; ++order)
            enumerate_biquasiles(order, [&](const Biquasile& b) { small.push_back(b); });

        auto space = [](const MarkedGraphDiagram& d, int n) {
            long double s = 1;
            for (int r = 0; r < d.region_count; ++r) s *= n;
            return s;
        };
        auto mismatch = [&](const MarkedGraphDiagram& d, const char* lhs, std::int64_t a,
                            const char* rhs, std::int64_t b) {
            if (a == b) return;
            std::cerr << "  " << d.name << ": " << lhs << " " << a << " != " << rhs
                      << " " << b << "\n";
            ok = false;
        };
        for (const auto& d : fixtures)
            for (const auto& X : small) {
                if (space(d, X.order()) > 6561) continue;
                mismatch(d, "backtracking", count_colorings(d, X), "oracle",
                         oracle_count(d, X, kDefaultSchema, 6561));
                ++comparisons;
            }
        // full-depth oracle spot checks with the published order-3 algebras
        for (const char* a : {"algebras/x1.alg", "algebras/x2.alg", "algebras/x3.alg",
                              "algebras/o2.alg"}) {
            const auto X = support::load_algebra(a);
            for (const auto& d : fixtures) {
                mismatch(d, "backtracking", count_colorings(d, X), "oracle",
                         oracle_count(d, X, kDefaultSchema, 1'000'000));
                ++comparisons;
            }
        }
        for (int N = 2; N <= 7; ++N)
            for (int dp = 1; dp < N; ++dp)
                for (int sp = 1; sp < N; ++sp)
                    for (int np = 1; np < N; ++np) {
                        if (std::gcd(dp, N) != 1 || std::gcd(sp, N) != 1 ||
                            std::gcd(np, N) != 1)
                            continue;
                        const auto X = alexander_biquasile(N, dp, sp, np);
                        for (const auto& d : fixtures) {
                            const auto c = count_colorings(d, X);
                            mismatch(d, "backtracking", c, "snf",
                                     count_solutions_linear(
                                         build_linear_system(d, N, dp, sp, np)));
                            if (space(d, N) <= 6561)
                                mismatch(d, "backtracking", c, "oracle",
                                         oracle_count(d, X, kDefaultSchema, 6561));
                            ++comparisons;
                        }
                    }
    } catch (const std::exception& e) {
        std::cerr << "  " << e.what() << "\n";
        ok = false;
    }
    report(6, "oracle equivalence (" + std::to_string(comparisons) + " comparisons)", ok);
}

// 7. Theorem-backed properties: (a) closed-fixture enhancement triviality,
//    (b) cobordism inclusion, (c) equivalent-pair invariance.
void criterion7() {
    bool ok_a = true, ok_b = true, ok_c = true;
    try {
        const std::vector<std::string> cobordisms = {"cobordism_l.mgd", "hopf_l2a1.mgd",
                                                     "hopf_l2a1_kink.mgd"};
        auto is_closed = [&](const std::string& f) {
            return std::find(cobordisms.begin(), cobordisms.end(), f) == cobordisms.end();
        };

        // valid-weight families: nullspace bases of the axiom relations
        std::vector<std::pair<Biquasile, std::vector<BoltzmannWeight>>> families;
        for (const char* a : {"algebras/x1.alg", "algebras/x2.alg", "algebras/x3.alg"}) {
            const auto X = support::load_algebra(a);
            for (int m : {3, 5}) families.emplace_back(X, support::weight_basis(X, m));
        }
        {
            const auto O2 = support::load_algebra("algebras/o2.alg");
            families.emplace_back(O2, support::weight_basis(O2, 5));
        }

        // (a) closed fixtures: every valid weight gives a trivial monomial
        for (const auto& f : support::all_fixture_files()) {
            if (!is_closed(f)) continue;
            const auto d = support::load_diagram(f);
            for (const auto& [X, basis] : families)
                for (const auto& w : basis) {
                    const auto e = enhanced_invariant(d, X, w);
                    for (const auto& [val, cnt] : e.multiset)
                        if (val != 0) {
                            std::cerr << "  nontrivial enhancement on " << f << "\n";
                            ok_a = false;
                        }
                    if (e.cardinality() != count_colorings(d, X)) ok_a = false;
                }
        }

        // (b) inclusion into both resolutions on every fixture
        std::vector<Biquasile> algebras = {support::load_algebra("algebras/x1.alg"),
                                           support::load_algebra("algebras/x2.alg"),
                                           support::load_algebra("algebras/x3.alg"),
                                           support::load_algebra("algebras/o2.alg"),
                                           alexander_biquasile(5, 1, 1, 1),
                                           alexander_biquasile(7, 2, 3, 4)};
        for (const auto& f : support::all_fixture_files()) {
            const auto d = support::load_diagram(f);
            for (const auto& X : algebras)
                if (!cobordism_inclusion_check(d, X, zero_weight(X.order(), 5))) {
                    std::cerr << "  inclusion fails on " << f << "\n";
                    ok_b = false;
                }
            for (const auto& [X, basis] : families)
                for (const auto& w : basis)
                    if (!cobordism_inclusion_check(d, X, w)) {
                        std::cerr << "  inclusion fails on " << f << " (valid weight)\n";
                        ok_b = false;
                    }
        }
        {
            const auto phi = support::load_weight("weights/phi.wt");
            const auto O2 = support::load_algebra("algebras/o2.alg");
            for (const auto& f : cobordisms)
                ok_b = ok_b && cobordism_inclusion_check(support::load_diagram(f), O2, phi);
        }

        // (c) equivalent pairs, including a stabilized pair
        const std::vector<std::pair<std::string, std::string>> pairs = {
            {"table/01_2_1.mgd", "2_1_kink.mgd"},
            {"hopf_l2a1.mgd", "hopf_l2a1_kink.mgd"},
            {"torus.mgd", "torus_stab.mgd"}};
        for (const auto& [a, b] : pairs) {
            const auto d1 = support::load_diagram(a);
            const auto d2 = support::load_diagram(b);
            for (const auto& X : algebras)
                if (count_colorings(d1, X) != count_colorings(d2, X)) {
                    std::cerr << "  counts differ for " << a << " vs " << b << "\n";
                    ok_c = false;
                }
            for (const auto& [X, basis] : families)
                for (const auto& w : basis)
                    if (!(enhanced_invariant(d1, X, w) == enhanced_invariant(d2, X, w))) {
                        std::cerr << "  enhancements differ for " << a << " vs " << b << "\n";
                        ok_c = false;
                    }
        }
    } catch (const std::exception& e) {
        std::cerr << "  " << e.what() << "\n";
        ok_a = ok_b = ok_c = false;
    }
    report(7, "theorem-backed properties (triviality, inclusion, invariance)",
           ok_a && ok_b && ok_c);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    return failures == 0 ? 0 : 1;
}
