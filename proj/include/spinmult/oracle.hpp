#pragma once

// Exhaustive ground truth. Every subset A of the cross-block positive roots
// realizes the spin weight mu(A) = (sum of roots outside A minus sum of
// roots inside A) / 2; the multiplicity of a weight is the number of
// subsets realizing it. Enumeration walks the 2^m masks in Gray-code order
// so each step updates two doubled coordinates.

#include "spinmult/common.hpp"
#include "spinmult/rootsys.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

namespace spinmult {

// Subset of ctx.cross_roots; bit r refers to cross_roots[r].
struct RootSubset {
    std::uint64_t bits = 0;

    bool contains(int r) const { return (bits >> r) & 1u; }
};

inline constexpr int kDefaultOracleBound = 30;

using WeightCounts = std::map<std::vector<int>, Count>;

namespace detail {

inline void check_oracle_guard(const LeviContext& ctx, int guard) {
    const int m = ctx.root_count();
    if (m > guard) throw oracle_bound_error(m, guard);
    if (m > 62) throw oracle_bound_error(m, 62);
}

// Doubled coordinates of mu(empty set): each root (i, j) contributes
// +1 at i and -1 at j.
inline std::vector<int> mu_empty_doubled(const LeviContext& ctx) {
    std::vector<int> d(static_cast<std::size_t>(ctx.n), 0);
    for (auto [i, j] : ctx.cross_roots) {
        ++d[static_cast<std::size_t>(i)];
        --d[static_cast<std::size_t>(j)];
    }
    return d;
}

} // namespace detail

inline Weight mu_of_subset(const LeviContext& ctx, RootSubset a) {
    const int m = ctx.root_count();
    if (m < 64 && (a.bits >> m) != 0)
        throw std::invalid_argument("subset has bits beyond the root count");
    std::vector<int> d = detail::mu_empty_doubled(ctx);
    for (int r = 0; r < m; ++r) {
        if (!a.contains(r)) continue;
        auto [i, j] = ctx.cross_roots[static_cast<std::size_t>(r)];
        d[static_cast<std::size_t>(i)] -= 2;
        d[static_cast<std::size_t>(j)] += 2;
    }
    return Weight(std::move(d));
}

// #{A : mu(A) = w}, by full enumeration. Exact equality of coordinate
// vectors; weights outside the spin support simply count zero.
inline Count brute_multiplicity(const LeviContext& ctx, const Weight& w,
                                int guard = kDefaultOracleBound) {
    if (w.n() != ctx.n)
        throw std::invalid_argument("weight length does not match context");
    detail::check_oracle_guard(ctx, guard);

    const int m = ctx.root_count();
    std::vector<int> cur = detail::mu_empty_doubled(ctx);
    const std::vector<int>& target = w.doubled();

    Count hits = cur == target ? 1 : 0;
    std::uint64_t bits = 0;
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t k = 1; k < total; ++k) {
        const int r = std::countr_zero(k);
        auto [i, j] = ctx.cross_roots[static_cast<std::size_t>(r)];
        bits ^= std::uint64_t{1} << r;
        if ((bits >> r) & 1u) {
            cur[static_cast<std::size_t>(i)] -= 2;
            cur[static_cast<std::size_t>(j)] += 2;
        } else {
            cur[static_cast<std::size_t>(i)] += 2;
            cur[static_cast<std::size_t>(j)] -= 2;
        }
        if (cur == target) ++hits;
    }
    return hits;
}

// Complete weight -> count map over all 2^m subsets, keyed by raw doubled
// coordinates (no symmetry folding; counts sum to 2^m).
inline WeightCounts enumerate_weight_counts(const LeviContext& ctx,
                                            int guard = kDefaultOracleBound) {
    detail::check_oracle_guard(ctx, guard);

    const int m = ctx.root_count();
    std::vector<int> cur = detail::mu_empty_doubled(ctx);

    WeightCounts counts;
    ++counts[cur];
    std::uint64_t bits = 0;
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t k = 1; k < total; ++k) {
        const int r = std::countr_zero(k);
        auto [i, j] = ctx.cross_roots[static_cast<std::size_t>(r)];
        bits ^= std::uint64_t{1} << r;
        if ((bits >> r) & 1u) {
            cur[static_cast<std::size_t>(i)] -= 2;
            cur[static_cast<std::size_t>(j)] += 2;
        } else {
            cur[static_cast<std::size_t>(i)] += 2;
            cur[static_cast<std::size_t>(j)] -= 2;
        }
        ++counts[cur];
    }
    return counts;
}

// Saturation (Cartan case only): A and its complement are both closed under
// root addition. In type A the only root-sum pattern is
// (e_i - e_j) + (e_j - e_l) = e_i - e_l.
inline bool is_saturated(const LeviContext& ctx, RootSubset a) {
    if (!ctx.is_cartan())
        throw std::domain_error("saturation is defined only for the Cartan context (all blocks size 1)");
    const int n = ctx.n;
    // root index of (i, j), from the fixed lex order
    std::vector<int> idx(static_cast<std::size_t>(n * n), -1);
    for (int r = 0; r < ctx.root_count(); ++r) {
        auto [i, j] = ctx.cross_roots[static_cast<std::size_t>(r)];
        idx[static_cast<std::size_t>(i * n + j)] = r;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = j + 1; l < n; ++l) {
                const bool ab = a.contains(idx[static_cast<std::size_t>(i * n + j)]);
                const bool bc = a.contains(idx[static_cast<std::size_t>(j * n + l)]);
                const bool ac = a.contains(idx[static_cast<std::size_t>(i * n + l)]);
                if (ab && bc && !ac) return false;
                if (!ab && !bc && ac) return false;
            }
    return true;
}

// Weyl orbit of rho for sl(n) is all coordinate permutations, so membership
// is a multiset test against (n-1, n-3, ..., -(n-1)).
inline bool in_weyl_orbit_of_rho(int n, const Weight& w) {
    if (w.n() != n)
        throw std::invalid_argument("weight length does not match n");
    std::vector<int> sorted(w.doubled());
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    for (int i = 0; i < n; ++i)
        if (sorted[static_cast<std::size_t>(i)] != n - 1 - 2 * i) return false;
    return true;
}

} // namespace spinmult
