// Release gate. Each numbered criterion prints exactly one PASS/FAIL line;
// the process exits nonzero if any criterion fails. argv[1] must be the
// path to the spinmult CLI binary (used by the determinism criterion).

#include "spinmult/cartan.hpp"
#include "spinmult/common.hpp"
#include "spinmult/levi.hpp"
#include "spinmult/oracle.hpp"
#include "spinmult/rootsys.hpp"
#include "spinmult/twoblock.hpp"
#include "spinmult/verify.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

using namespace spinmult;

namespace {

int g_failures = 0;

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void report(int index, const std::string& what, bool ok, long long elapsed_ms,
            const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << ": criterion " << index << " - " << what << " ("
              << elapsed_ms << " ms)";
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

Composition ones(int n) {
    return Composition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Count oracle_count(const WeightCounts& counts, const Weight& w) {
    const auto it = counts.find(w.doubled());
    return it == counts.end() ? Count(0) : it->second;
}

// Criterion 1: the full small-rank table, by both methods, under a second.
void criterion_1() {
    struct Row {
        int n;
        std::vector<int> parts;
        long long expected;
    };
    const std::vector<Row> table = {
        {3, {2, 1}, 1},          {3, {1, 1, 1}, 2},
        {4, {3, 2, 1}, 1},       {4, {3, 1, 1, 1}, 2},
        {4, {2, 2, 2}, 2},       {4, {2, 2, 1, 1}, 4},
        {5, {4, 3, 2, 1}, 1},    {5, {4, 3, 1, 1, 1}, 2},
        {5, {4, 2, 2, 2}, 2},    {5, {4, 2, 2, 1, 1}, 4},
        {5, {3, 3, 3, 1}, 2},    {5, {3, 3, 2, 2}, 4},
        {5, {3, 3, 2, 1, 1}, 8}, {5, {3, 2, 2, 2, 1}, 14},
        {5, {2, 2, 2, 2, 2}, 24},
    };
    const auto start = Clock::now();
    CartanMemo memo;  // fresh cache so the timing bound is honest
    bool ok = true;
    std::string detail;
    for (const Row& row : table) {
        const SpinPartition lp(Partition(row.parts), row.n);
        const Count a = n_lambda_inductive(lp, memo);
        const Count b = n_lambda_tableaux(lp);
        if (a != row.expected || b != row.expected) {
            ok = false;
            detail = "lambda=" + format_partition(lp.lambda) + " inductive=" + a.str() +
                     " tableaux=" + b.str() + " expected=" + std::to_string(row.expected);
            break;
        }
    }
    const long long elapsed = ms_since(start);
    if (ok && elapsed >= 1000) {
        ok = false;
        detail = "exceeded the 1 s budget";
    }
    report(1, "15-entry table for n <= 5 by both methods in under 1 s", ok, elapsed, detail);
}

// Criterion 2: zero-weight count 2640 at n = 7, confirmed by enumerating
// all 2^21 root subsets.
void criterion_2() {
    const auto start = Clock::now();
    const SpinPartition lp(Partition({3, 3, 3, 3, 3, 3, 3}), 7);
    CartanMemo memo;
    bool ok = true;
    std::string detail;

    const Count inductive = n_lambda_inductive(lp, memo);
    const Count tableaux = n_lambda_tableaux(lp);
    if (inductive != 2640 || tableaux != 2640) {
        ok = false;
        detail = "inductive=" + inductive.str() + " tableaux=" + tableaux.str();
    } else {
        const Count brute = brute_multiplicity(build_context(ones(7)), mu_of_partition(lp));
        if (brute != 2640) {
            ok = false;
            detail = "oracle=" + brute.str();
        }
    }
    const long long elapsed = ms_since(start);
    if (ok && elapsed >= 60000) {
        ok = false;
        detail = "exceeded the 60 s budget";
    }
    report(2, "zero weight at n=7 equals 2640 by both methods and the 2^21-subset oracle", ok,
           elapsed, detail);
}

// Criterion 3: two-block fixtures, including the worked matrix-to-tableau
// conversion, bit for bit.
void criterion_3() {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;

    const Count named = count_margin_matrices(
        MarginPair(3, 3, Partition({3, 2, 1}), Partition({2, 2, 2})));
    if (named != 3) {
        ok = false;
        detail = "count((3,2,1),(2,2,2))=" + named.str();
    }

    if (ok) {
        const MarginPair zero = margins_of_weight(2, 2, Weight({0, 0, 0, 0}));
        const Count c = count_margin_matrices(zero);
        if (c != 2) {
            ok = false;
            detail = "zero-weight count for p=q=2 is " + c.str();
        }
    }

    if (ok) {
        const BinMatrix worked(std::vector<std::vector<int>>{{0, 1, 1, 1, 0, 0},
                                                             {1, 1, 0, 0, 0, 1},
                                                             {0, 0, 1, 0, 1, 0},
                                                             {0, 0, 0, 1, 0, 0},
                                                             {1, 0, 0, 0, 0, 0}});
        const RowTableau expected{{{2, 3, 4}, {1, 2, 6}, {3, 5}, {4}, {1}}};
        if (!(matrix_to_tableau(worked) == expected)) {
            ok = false;
            detail = "matrix-to-tableau conversion differs from the worked example";
        }
    }
    report(3, "two-block fixtures: count 3, zero-weight count 2, worked conversion", ok,
           ms_since(start), detail);
}

// Criterion 4: the oracle-equivalence sweeps at full contracted scope.
void criterion_4() {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;

    std::vector<CheckResult> checks = verify_levi(6);
    const std::vector<CheckResult> cartan_checks = verify_cartan(6);
    const std::vector<CheckResult> maxparab_checks = verify_maxparab(7);
    checks.insert(checks.end(), cartan_checks.begin(), cartan_checks.end());
    checks.insert(checks.end(), maxparab_checks.begin(), maxparab_checks.end());
    long long cases = 0;
    for (const CheckResult& c : checks) {
        cases += c.cases;
        if (!c.passed && ok) {
            ok = false;
            detail = c.name + ": " + c.detail;
        }
    }
    const long long elapsed = ms_since(start);
    if (ok && elapsed >= 120000) {
        ok = false;
        detail = "exceeded the 120 s budget";
    }
    report(4,
           "oracle sweeps (levi n<=6, cartan n<=6, two-block p+q<=7), " +
               std::to_string(cases) + " cases",
           ok, elapsed, detail);
}

// Criterion 5: the quantified property suites.
void criterion_5() {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;
    const auto fail = [&](const std::string& d) {
        if (ok) {
            ok = false;
            detail = d;
        }
    };

    // saturation <=> multiplicity one <=> Weyl-orbit membership, n <= 5
    for (int n = 2; n <= 5 && ok; ++n) {
        const LeviContext ctx = build_context(ones(n));
        const WeightCounts counts = enumerate_weight_counts(ctx);
        const std::uint64_t total = std::uint64_t{1} << ctx.root_count();
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            const RootSubset a{bits};
            const Weight w = mu_of_subset(ctx, a);
            const bool saturated = is_saturated(ctx, a);
            const bool mult_one = oracle_count(counts, w) == 1;
            const bool orbit = in_weyl_orbit_of_rho(n, w);
            if (saturated != mult_one || saturated != orbit) {
                fail("saturation triple fails at n=" + std::to_string(n) +
                     " bits=" + std::to_string(bits));
                break;
            }
        }
    }

    // support characterization and parity, n <= 6
    for (int n = 2; n <= 6 && ok; ++n) {
        const Partition top = staircase(n);
        for (const Partition& lam : partitions_of(static_cast<long long>(n) * (n - 1) / 2, n)) {
            const SpinPartition lp(lam, n);
            const Count v = n_lambda_inductive(lp);
            if ((v != 0) != in_support(lp))
                fail("support mismatch at lambda=" + format_partition(lam));
            if (lam != top && v % 2 != 0)
                fail("odd count off the staircase at lambda=" + format_partition(lam));
        }
    }

    // negation/block symmetry and total mass over every context, n <= 6
    for (int n = 2; n <= 6 && ok; ++n)
        for (const Composition& comp : canonical_compositions(n)) {
            const LeviContext ctx = build_context(comp);
            const WeightCounts counts = enumerate_weight_counts(ctx);
            Count total = 0;
            for (const auto& [d, cnt] : counts) {
                const Weight w{std::vector<int>(d)};
                total += cnt;
                if (oracle_count(counts, w.negated()) != cnt ||
                    oracle_count(counts, normalize_weight(ctx, w)) != cnt) {
                    fail("symmetry fails at composition=" + format_composition(comp) +
                         " weight=" + format_weight(w));
                    break;
                }
            }
            if (total != pow2(ctx.root_count()))
                fail("mass fails at composition=" + format_composition(comp));
            if (!ok) break;
        }

    // choice of marked row is free, n <= 6
    for (int n = 2; n <= 6 && ok; ++n)
        for (const Partition& lam : partitions_of(static_cast<long long>(n) * (n - 1) / 2, n)) {
            const SpinPartition lp(lam, n);
            const Count base = n_lambda_inductive(lp);
            for (int p = 1; p <= n; ++p)
                if (n_lambda_inductive(lp, p) != base) {
                    fail("marked row changes the count at lambda=" + format_partition(lam) +
                         " p=" + std::to_string(p));
                    break;
                }
            if (!ok) break;
        }

    // single-box staircase shifts match the oracle, n <= 6
    for (int n = 2; n <= 6 && ok; ++n) {
        const WeightCounts counts = enumerate_weight_counts(build_context(ones(n)));
        for (int i = 1; i < n && ok; ++i)
            for (int j = i + 2; j <= n; ++j) {
                const RhoShift s = rho_shift_mult(n, i, j);
                if (oracle_count(counts, mu_of_partition(s.lambda)) != s.mult)
                    fail("shift mismatch at n=" + std::to_string(n) + " i=" + std::to_string(i) +
                         " j=" + std::to_string(j));
            }
    }

    // split formula against the recursion, all valid pairs with m+p <= 7
    if (ok) {
        const SplitResult worked = split_n_lambda(Partition({2, 2, 1, 1}), Partition({1, 1, 1}));
        if (worked.lambda.lambda != Partition({5, 5, 4, 4, 1, 1, 1}) || worked.n_lambda != 8)
            fail("worked split instance is off: lambda=" + format_partition(worked.lambda.lambda) +
                 " count=" + worked.n_lambda.str());
    }
    for (int m = 1; m <= 6 && ok; ++m)
        for (int p = 1; m + p <= 7 && ok; ++p)
            for (const Partition& mu : partitions_of(static_cast<long long>(m) * (m - 1) / 2, m)) {
                for (const Partition& pi :
                     partitions_of(static_cast<long long>(p) * (p - 1) / 2, p)) {
                    if (pi.at(0) > p + mu.at(m - 1)) continue;
                    const SplitResult r = split_n_lambda(mu, pi);
                    if (r.n_lambda != n_lambda_inductive(r.lambda)) {
                        fail("split mismatch at mu=" + format_partition(mu) +
                             " pi=" + format_partition(pi));
                        break;
                    }
                }
                if (!ok) break;
            }

    report(5, "property suites (saturation, support, parity, symmetry, mass, marked row, "
              "shifts, splits)",
           ok, ms_since(start), detail);
}

// Criterion 6: byte-identical reruns of the JSON table.
std::pair<int, std::string> capture(const std::string& command) {
    std::FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return {-1, ""};
    std::string output;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    const int status = pclose(pipe);
    return {status, output};
}

void criterion_6(const std::string& cli) {
    const auto start = Clock::now();
    const std::string command = "'" + cli + "' table cartan --n 5 --json 2>/dev/null";
    const auto [status1, first] = capture(command);
    const auto [status2, second] = capture(command);
    bool ok = status1 == 0 && status2 == 0 && !first.empty() && first == second;
    std::string detail;
    if (!ok)
        detail = "statuses " + std::to_string(status1) + "/" + std::to_string(status2) +
                 ", outputs " + (first == second ? "equal" : "differ");
    report(6, "two runs of `table cartan --n 5 --json` are byte-identical", ok, ms_since(start),
           detail);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-spinmult-cli>" << std::endl;
        return 2;
    }
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6(argv[1]);
    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all 6 criteria passed" << std::endl;
    return 0;
}
