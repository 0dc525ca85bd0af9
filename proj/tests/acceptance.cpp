// Acceptance suite: one pass/fail line per criterion, exit = failure count.
// Usage: acceptance <geodex-binary> <golden-dir>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "geodex/geodex.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace geodex;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail << "\n";
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
}

std::string run_cli(const std::string& bin, const std::string& args, int& exit_code) {
    fs::path out = fs::temp_directory_path() / "geodex_accept_out.txt";
    std::string cmd = bin + " " + args + " > " + out.string() + " 2> /dev/null";
    int status = std::system(cmd.c_str());
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::string text = slurp(out);
    fs::remove(out);
    return text;
}

const std::map<long, std::vector<long>> kSection2Lists = {
    {3, {2, 20, 146, 902, 1028, 6320, 7202}},
    {4, {3, 7, 87, 171, 472, 2647}},
    {5, {4, 84, 114}},
    {6, {2, 3, 5, 7, 11, 23, 32, 51, 203, 347, 1095, 3323, 3767, 4903, 9563}},
    {7, {6, 76, 118, 2568}},
    {8, {3, 7, 9, 15, 87, 463, 1171}},
    {9, {2, 8, 68}},
    {10, {3, 4, 7, 9, 15, 19, 39, 79, 555, 1069, 2314, 2986, 4659}},
    {11, {10}},
    {12, {2, 3, 5, 7, 11, 13, 23, 55, 91, 163, 236, 1235, 1356}},
};

}  // namespace

int main(int argc, char** argv) {
    const std::string bin = argc > 1 ? argv[1] : "";
    const fs::path golden = argc > 2 ? argv[2] : "";

    // 1. Divisibility table reproduction: d in [3,12], k in [2,10000],
    //    exact equality with the published lists, under 2 minutes.
    {
        auto t0 = std::chrono::steady_clock::now();
        auto hits = scan_type1_divisibility(3, 12, 2, 10000);
        double dt = seconds_since(t0);
        std::map<long, std::vector<long>> by_d;
        for (auto [d, k] : hits) by_d[d].push_back(k);
        bool ok = by_d == kSection2Lists && dt < 120.0;
        std::string detail = "scan-div tables exact, " + std::to_string(dt) + "s";
        if (!bin.empty() && !golden.empty()) {
            int code = 0;
            std::string cli_out = run_cli(bin, "scan-div -d 3..12 -k 2..10000", code);
            bool bytes_ok = code == 0 && cli_out == slurp(golden / "scan_div_full.txt");
            ok = ok && bytes_ok;
            detail += bytes_ok ? ", golden bytes identical" : ", GOLDEN MISMATCH";
        }
        report(1, ok, detail);
    }

    // 2. VT feasibility: exactly {(3,2),(6,2),(9,2),(12,2),(6,3),(10,3)},
    //    under 10 minutes.
    {
        auto t0 = std::chrono::steady_clock::now();
        auto hits = scan_vt_feasible(3, 12, 2, 10000);
        double dt = seconds_since(t0);
        std::vector<std::pair<long, long>> expect{{3, 2}, {6, 2}, {6, 3}, {9, 2}, {10, 3}, {12, 2}};
        bool ok = hits == expect && dt < 600.0;
        std::string detail = "scan-vt set exact, " + std::to_string(dt) + "s";
        if (!bin.empty() && !golden.empty()) {
            int code = 0;
            std::string cli_out = run_cli(bin, "scan-vt -d 3..12 -k 2..10000", code);
            bool bytes_ok = code == 0 && cli_out == slurp(golden / "scan_vt_full.txt");
            ok = ok && bytes_ok;
            detail += bytes_ok ? ", golden bytes identical" : ", GOLDEN MISMATCH";
        }
        report(2, ok, detail);
    }

    // 3. Table 1: nontrivial divisors of d^2+d+2 for d = 4..7.
    {
        bool ok = nontrivial_divisors(22) == std::vector<long>{2, 11, 22} &&
                  nontrivial_divisors(32) == std::vector<long>{2, 4, 8, 16, 32} &&
                  nontrivial_divisors(44) == std::vector<long>{2, 4, 11, 22, 44} &&
                  nontrivial_divisors(58) == std::vector<long>{2, 29, 58};
        report(3, ok, "Table 1 divisor lists exact");
    }

    // 4. k=2 engine worked cases, under 1 second.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;

        PermutationVector pv6;
        pv6.m[4] = 11;
        auto r6 = k2_charpoly(6, pv6);
        ok = ok && r6.verdict == Verdict::Feasible && r6.a_pair->first == 10 && r6.a_pair->second == 1;
        auto tc6 = k2_type_counts(6, *r6.spectrum);
        ok = ok && tc6.trace3 == 240 && tc6.alpha == 20 && tc6.beta == 24;

        PermutationVector pv7;
        pv7.m[2] = 1;
        pv7.m[4] = 14;
        auto r7 = k2_charpoly(7, pv7);
        ok = ok && r7.verdict == Verdict::Feasible && r7.a_pair->first == 15 && r7.a_pair->second == 0;
        auto tc7 = k2_type_counts(7, *r7.spectrum);
        ok = ok && tc7.trace3 == 378 && tc7.alpha == 30 && tc7.beta == 28;

        PermutationVector pv22;
        pv22.m[22] = 2;
        auto r22 = k2_charpoly(6, pv22);
        ok = ok && r22.verdict == Verdict::Infeasible && r22.has_reason(Condition::NonIntegralExponent);

        for (long omega : {4L, 8L, 16L}) {
            PermutationVector pv5;
            pv5.m[omega] = 32 / omega;
            auto r5 = k2_charpoly(5, pv5);
            ok = ok && r5.verdict == Verdict::Infeasible && r5.has_reason(Condition::NonIntegralExponent);
        }
        double dt = seconds_since(t0);
        ok = ok && dt < 1.0;
        report(4, ok, "k=2 engine a/trace/type values exact, " + std::to_string(dt) + "s");
    }

    // 5. k2_enumerate_cases all-Infeasible for d = 4..7, under 10 seconds.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (long d = 4; d <= 7; ++d)
            for (const auto& rep : k2_enumerate_cases(d)) ok = ok && rep.verdict == Verdict::Infeasible;
        double dt = seconds_since(t0);
        ok = ok && dt < 10.0;
        report(5, ok, "k=2 case engine closes d=4..7, " + std::to_string(dt) + "s");
    }

    // 6. degree3_nonexistence flags exactly {3, 15, 63} on [2,100], under 5 s.
    {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<long> flagged;
        for (long k = 2; k <= 100; ++k)
            if (degree3_nonexistence(k).verdict == Verdict::Infeasible) flagged.push_back(k);
        double dt = seconds_since(t0);
        bool ok = flagged == std::vector<long>{3, 15, 63} && dt < 5.0;
        report(6, ok, "degree-3 arithmetic verdicts exact, " + std::to_string(dt) + "s");
    }

    // 7. two_outlier_regular_feasible Infeasible on all of [2,100]^2, under 1 s.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (long d = 2; d <= 100; ++d)
            for (long k = 2; k <= 100; ++k)
                ok = ok && two_outlier_regular_feasible(d, k).verdict == Verdict::Infeasible;
        double dt = seconds_since(t0);
        ok = ok && dt < 1.0;
        report(7, ok, "2-outlier-regular infeasible everywhere, " + std::to_string(dt) + "s");
    }

    // 8. Spectrum lemma vs exact determinants for every cycle type on n <= 8,
    //    under 30 seconds.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (int n = 1; n <= 8 && ok; ++n)
            for (const auto& parts : oracle::partitions(n)) {
                auto perm = oracle::permutation_of_type(parts);
                PermutationVector pv;
                for (int p : parts) ++pv.m[p];
                if (charpoly_j_minus_p(pv).expand() != oracle::charpoly_cofactor(oracle::j_minus_p(perm))) {
                    ok = false;
                    break;
                }
            }
        double dt = seconds_since(t0);
        ok = ok && dt < 30.0;
        report(8, ok, "J-P charpoly equals cofactor determinants on all n<=8 cycle types, " +
                          std::to_string(dt) + "s");
    }

    // 9. Search: (1,k) k=2..6 finds exactly the (k+2)-cycle; (2,2) exhausts
    //    empty; combined under 5 minutes. (3,2) with the theorem-backed prune
    //    within the budget (GEODEX_ACCEPT_32_BUDGET nodes, 0 = unlimited);
    //    if the budget is exceeded the result is conditional, not a proof.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (int k = 2; k <= 6; ++k) {
            SearchConfig cfg;
            cfg.d = 1;
            cfg.k = k;
            auto r = search_excess_one(cfg);
            ok = ok && r.exhausted && r.found.size() == 1 &&
                 canonical_form(r.found[0]) == canonical_form(Digraph::cycle(k + 2));
        }
        {
            SearchConfig cfg;
            cfg.d = 2;
            cfg.k = 2;
            auto r = search_excess_one(cfg);
            ok = ok && r.exhausted && r.found.empty();
        }
        double small_dt = seconds_since(t0);
        ok = ok && small_dt < 300.0;

        SearchConfig cfg32;
        cfg32.d = 3;
        cfg32.k = 2;
        if (const char* env = std::getenv("GEODEX_ACCEPT_32_BUDGET")) cfg32.node_budget = std::strtoull(env, nullptr, 10);
        auto r32 = search_excess_one(cfg32);
        std::string detail;
        if (r32.exhausted && r32.found.empty()) {
            detail = "(1,k) and (2,2) exact; (3,2) exhausted with zero results (proof), nodes=" +
                     std::to_string(r32.nodes);
            // the theorem-backed prune is also cross-checked with the toggle off
            SearchConfig plain32 = cfg32;
            plain32.prune_common_out_neighbour = false;
            plain32.prune_outlier_transposition = false;
            auto bare = search_excess_one(plain32);
            if (bare.exhausted)
                detail += "; prune-off rerun exhausted too (found=" + std::to_string(bare.found.size()) + ")";
            ok = ok && (!bare.exhausted || bare.found.empty());
        } else if (r32.found.empty()) {
            detail = "(1,k) and (2,2) exact; (3,2) CONDITIONAL: no counterexample within budget of " +
                     std::to_string(cfg32.node_budget) + " nodes (not a proof)";
        } else {
            ok = false;
            detail = "(3,2) search returned a digraph, contradicting the theorem";
        }
        report(9, ok, detail + ", " + std::to_string(seconds_since(t0)) + "s total");
    }

    // 10. Property suites (the full versions run in the unit suites; the
    //     load-bearing identities are re-run here).
    {
        bool ok = true;
        for (int k = 2; k <= 6; ++k) {
            auto g = Digraph::cycle(k + 2);
            auto o = outlier_map(g, k);
            ok = ok && verify_path_identity(g, k, o);
            ok = ok && outlier_map(g.converse(), k).perm == o.perm.inverse();
            for (int r = 1; r <= k; ++r) ok = ok && closed_walk_trace(g, r) == 0;
        }
        for (int d = 1; d <= 5; ++d) {
            auto ps = power_sums(x_pow_minus_one(d), 10);
            for (int r = 1; r <= 10; ++r) ok = ok && ps[static_cast<std::size_t>(r - 1)] == (r % d == 0 ? d : 0);
        }
        {
            std::mt19937 rng(1234);
            for (int trial = 0; trial < 10; ++trial) {
                auto g = oracle::random_digraph(8, 0.3, rng);
                auto form = canonical_form(g);
                auto perm = oracle::random_permutation(8, rng);
                ok = ok && canonical_form(oracle::relabel(g, perm)) == form;
            }
        }
        report(10, ok, "walk identity, duality, trace-zero, Newton, canonical invariance");
    }

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criterion(s) failing")
              << "\n";
    return failures;
}
