#pragma once

// Cross-validation sweeps: every counting method is replayed against the
// exhaustive subset oracle (and against the structural theorems) over
// exhaustive small-rank scopes. The CLI `verify` subcommand and the
// release gate both run these, so the check names and iteration orders
// are deterministic.

#include "spinmult/cartan.hpp"
#include "spinmult/common.hpp"
#include "spinmult/levi.hpp"
#include "spinmult/oracle.hpp"
#include "spinmult/rootsys.hpp"
#include "spinmult/twoblock.hpp"

#include <map>
#include <string>
#include <vector>

namespace spinmult {

struct CheckResult {
    std::string name;
    long long cases = 0;
    bool passed = true;
    std::string detail;  // first counterexample; empty when passed

    CheckResult() = default;
    explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}
};

namespace detail {

inline void fail_check(CheckResult& c, const std::string& counterexample) {
    if (c.passed) {
        c.passed = false;
        c.detail = counterexample;
    }
}

// Distinct reorderings of a value list (multinomial coefficient).
inline Count multiset_permutations(const std::vector<int>& values) {
    std::map<int, int> mult;
    for (int v : values) ++mult[v];
    Count r = 1;
    for (std::size_t i = 2; i <= values.size(); ++i) r *= i;
    for (const auto& [value, m] : mult)
        for (int i = 2; i <= m; ++i) r /= i;
    return r;
}

// Distinct weights in the orbit of w under coordinate permutations within
// each block.
inline Count block_orbit_size(const LeviContext& ctx, const Weight& w) {
    Count r = 1;
    std::size_t pos = 0;
    for (int c : ctx.comp.parts()) {
        const std::vector<int> block(w.doubled().begin() + static_cast<long>(pos),
                                     w.doubled().begin() + static_cast<long>(pos + c));
        r *= multiset_permutations(block);
        pos += static_cast<std::size_t>(c);
    }
    return r;
}

} // namespace detail

// Block recursion vs oracle for every canonical composition of each n:
// per-weight agreement, total mass, and the negation/normalization
// symmetries of the raw counts.
inline std::vector<CheckResult> verify_levi(int n_max, int guard = kDefaultOracleBound) {
    std::vector<CheckResult> out;
    for (int n = 2; n <= n_max; ++n) {
        CheckResult agree{"levi n=" + std::to_string(n) + " recursion equals oracle"};
        CheckResult mass{"levi n=" + std::to_string(n) + " counts sum to 2^|roots|"};
        CheckResult sym{"levi n=" + std::to_string(n) + " negation and block symmetry"};
        for (const Composition& comp : canonical_compositions(n)) {
            const LeviContext ctx = build_context(comp);
            const WeightCounts counts = enumerate_weight_counts(ctx, guard);
            Count total = 0;
            for (const auto& [d, cnt] : counts) {
                const Weight w{std::vector<int>(d)};
                total += cnt;
                ++agree.cases;
                const Count engine = mult_levi(comp, w);
                if (engine != cnt)
                    detail::fail_check(agree, "composition=" + format_composition(comp) +
                                                  " weight=" + format_weight(w) + " engine=" +
                                                  engine.str() + " oracle=" + cnt.str());
                ++sym.cases;
                const auto neg = counts.find(w.negated().doubled());
                const auto nrm = counts.find(normalize_weight(ctx, w).doubled());
                if (neg == counts.end() || neg->second != cnt || nrm == counts.end() ||
                    nrm->second != cnt)
                    detail::fail_check(sym, "composition=" + format_composition(comp) +
                                                " weight=" + format_weight(w));
            }
            ++mass.cases;
            if (total != pow2(ctx.root_count()))
                detail::fail_check(mass, "composition=" + format_composition(comp) + " total=" +
                                             total.str() + " expected=2^" +
                                             std::to_string(ctx.root_count()));
        }
        out.push_back(std::move(agree));
        out.push_back(std::move(mass));
        out.push_back(std::move(sym));
    }
    return out;
}

// Cartan case: both partition methods vs the oracle over every partition
// of C(n,2) with at most n parts, plus the structural properties (support,
// parity, choice of marked row, staircase shifts, block splitting).
inline std::vector<CheckResult> verify_cartan(int n_max, int guard = kDefaultOracleBound) {
    std::vector<CheckResult> out;
    for (int n = 2; n <= n_max; ++n) {
        const std::string tag = "cartan n=" + std::to_string(n) + " ";
        CheckResult agree{tag + "both methods equal oracle"};
        CheckResult support{tag + "support and parity"};
        CheckResult rows{tag + "marked row is free"};
        CheckResult shift{tag + "staircase shift formula"};
        CheckResult split{tag + "split formula"};

        const LeviContext ctx = build_context(Composition(std::vector<int>(
            static_cast<std::size_t>(n), 1)));
        const WeightCounts counts = enumerate_weight_counts(ctx, guard);
        const Partition top = staircase(n);

        for (const Partition& lam : partitions_of(static_cast<long long>(n) * (n - 1) / 2, n)) {
            const SpinPartition lp(lam, n);
            const auto it = counts.find(mu_of_partition(lp).doubled());
            const Count expected = it == counts.end() ? Count(0) : it->second;
            const Count inductive = n_lambda_inductive(lp);

            ++agree.cases;
            if (inductive != expected || n_lambda_tableaux(lp) != expected)
                detail::fail_check(agree, "lambda=" + format_partition(lam) + " inductive=" +
                                              inductive.str() + " tableaux=" +
                                              n_lambda_tableaux(lp).str() + " oracle=" +
                                              expected.str());
            ++support.cases;
            if ((inductive != 0) != in_support(lp) ||
                (lam != top && inductive % 2 != 0))
                detail::fail_check(support, "lambda=" + format_partition(lam) + " value=" +
                                                inductive.str());
            ++rows.cases;
            for (int p = 1; p <= n; ++p)
                if (n_lambda_inductive(lp, p) != inductive)
                    detail::fail_check(rows, "lambda=" + format_partition(lam) +
                                                 " p=" + std::to_string(p));
        }

        for (int i = 1; i < n; ++i)
            for (int j = i + 2; j <= n; ++j) {
                const RhoShift s = rho_shift_mult(n, i, j);
                const auto it = counts.find(mu_of_partition(s.lambda).doubled());
                ++shift.cases;
                if (it == counts.end() || it->second != s.mult)
                    detail::fail_check(shift, "i=" + std::to_string(i) + " j=" +
                                                  std::to_string(j));
            }

        for (int m = 1; m < n; ++m) {
            const int p = n - m;
            for (const Partition& mu : partitions_of(static_cast<long long>(m) * (m - 1) / 2, m))
                for (const Partition& pi :
                     partitions_of(static_cast<long long>(p) * (p - 1) / 2, p)) {
                    if (pi.at(0) > p + mu.at(m - 1)) continue;
                    const SplitResult r = split_n_lambda(mu, pi);
                    ++split.cases;
                    if (r.n_lambda != n_lambda_inductive(r.lambda))
                        detail::fail_check(split, "mu=" + format_partition(mu) +
                                                      " pi=" + format_partition(pi));
                }
        }

        out.push_back(std::move(agree));
        out.push_back(std::move(support));
        out.push_back(std::move(rows));
        out.push_back(std::move(shift));
        out.push_back(std::move(split));
    }
    return out;
}

// Two-block case for every p+q up to the bound: the margin DP, the tableau
// enumeration, and the oracle must agree for both block orientations, and
// the counts weighted by block-orbit sizes must exhaust all 2^{pq} subsets.
inline std::vector<CheckResult> verify_maxparab(int s_max, int guard = kDefaultOracleBound) {
    std::vector<CheckResult> out;
    for (int s = 2; s <= s_max; ++s)
        for (int p = 1; 2 * p <= s; ++p) {
            const int q = s - p;
            const std::string tag =
                "maxparab p=" + std::to_string(p) + " q=" + std::to_string(q) + " ";
            CheckResult agree{tag + "count equals tableaux and oracle"};
            CheckResult mass{tag + "weighted counts exhaust subsets"};

            const LeviContext ctx = build_context(Composition({p, q}));
            const WeightCounts counts = enumerate_weight_counts(ctx, guard);

            Count total = 0;
            for (int m = 0; m <= p * q; ++m)
                for (const Partition& a : partitions_of(m, p, q))
                    for (const Partition& b : partitions_of(m, q, p)) {
                        const MarginPair mp(p, q, a, b);
                        const Weight mu = mu_of_margins(mp);
                        const Count c = count_margin_matrices(mp);
                        const auto it = counts.find(mu.doubled());
                        const Count expected = it == counts.end() ? Count(0) : it->second;

                        ++agree.cases;
                        if (c != expected || Count(row_tableaux(mp).size()) != c)
                            detail::fail_check(agree, "alpha=" + format_partition(a) +
                                                          " beta=" + format_partition(b) +
                                                          " count=" + c.str() + " oracle=" +
                                                          expected.str());
                        total += c * detail::block_orbit_size(ctx, mu);

                        if (p != q) {
                            // the mirrored orientation h(q,p): its weight is the
                            // block swap of a weight of h(p,q)
                            const MarginPair swapped(q, p, b, a);
                            const std::vector<int> d = mu_of_margins(swapped).doubled();
                            std::vector<int> back(d.begin() + q, d.end());
                            back.insert(back.end(), d.begin(), d.begin() + q);
                            const auto st = counts.find(back);
                            const Count mirrored = st == counts.end() ? Count(0) : st->second;
                            const Count sc = count_margin_matrices(swapped);
                            ++agree.cases;
                            if (mirrored != sc || Count(row_tableaux(swapped).size()) != sc)
                                detail::fail_check(agree, "alpha=" + format_partition(b) +
                                                              " beta=" + format_partition(a) +
                                                              " (mirrored orientation)");
                        }
                    }
            ++mass.cases;
            if (total != pow2(p * q))
                detail::fail_check(mass, "total=" + total.str() + " expected=2^" +
                                             std::to_string(p * q));
            out.push_back(std::move(agree));
            out.push_back(std::move(mass));
        }
    return out;
}

} // namespace spinmult
