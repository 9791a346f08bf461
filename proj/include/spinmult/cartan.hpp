#pragma once

// The Cartan case (all blocks of size one). Dominant spin weights of sl(n)
// correspond to partitions of n(n-1)/2 with at most n parts dominated by
// the staircase; multiplicities N_lambda are computed two independent ways:
//
//  * inductively, by removing a p-marking (the whole p-th row plus
//    rightmost boxes of distinct other rows, n-1 boxes in total) and
//    recursing on the leftover shape;
//  * by enumerating spin tableaux and summing their binomial labels.
//
// Two closed-form special cases (block-diagonal splitting and the
// one-box shift of the staircase) round out the module.

#include "spinmult/common.hpp"
#include "spinmult/rootsys.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace spinmult {

struct SpinPartition {
    Partition lambda;
    int n;

    SpinPartition(Partition l, int n_rows) : lambda(std::move(l)), n(n_rows) {
        if (n < 1) throw std::invalid_argument("spin partition needs n >= 1");
        if (lambda.size() > n)
            throw std::invalid_argument("spin partition has more than n parts");
        const long long boxes = static_cast<long long>(n) * (n - 1) / 2;
        if (lambda.sum() != boxes)
            throw std::invalid_argument("spin partition of sl(" + std::to_string(n) +
                                        ") must have " + std::to_string(boxes) + " boxes, got " +
                                        std::to_string(lambda.sum()));
    }
};

// Nonzero multiplicity is equivalent to dominance below the staircase.
inline bool in_support(const SpinPartition& lp) {
    return dominance_leq(lp.lambda, staircase(lp.n));
}

// All partitions with nonzero multiplicity, descending lexicographic,
// staircase first.
inline std::vector<Partition> support_partitions(int n) {
    std::vector<Partition> out;
    const Partition top = staircase(n);
    for (const Partition& p : partitions_of(static_cast<long long>(n) * (n - 1) / 2, n))
        if (dominance_leq(p, top)) out.push_back(p);
    return out;
}

inline Weight mu_of_partition(const SpinPartition& lp) {
    std::vector<int> d(static_cast<std::size_t>(lp.n));
    for (int i = 0; i < lp.n; ++i)
        d[static_cast<std::size_t>(i)] = 2 * lp.lambda.at(i) - (lp.n - 1);
    return Weight(std::move(d));
}

inline SpinPartition partition_of_dominant_weight(int n, const Weight& w) {
    if (w.n() != n) throw std::invalid_argument("weight length does not match n");
    std::vector<int> parts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int d = w.doubled()[static_cast<std::size_t>(i)];
        if (i > 0 && d > w.doubled()[static_cast<std::size_t>(i - 1)])
            throw std::invalid_argument("weight is not dominant");
        const int u = d + (n - 1);
        if (u % 2 != 0 || u < 0 || u > 2 * (n - 1))
            throw std::invalid_argument("weight is not of spin-partition form");
        parts[static_cast<std::size_t>(i)] = u / 2;
    }
    return SpinPartition(Partition(std::move(parts)), n);
}

struct Marking {
    Partition shape;  // leftover partition after removing the marked boxes
    Count ways;       // number of distinct extra-row choices producing it
};

namespace detail {

// Markings of lam (stripped parts, n rows total) for the 1-based row p:
// remove all of row p plus the rightmost box of `need` = n-1-lam_p other
// nonempty rows. Rows of equal length are interchangeable, so choices are
// made per length-group with binomial weights. Results are aggregated by
// leftover shape, descending lexicographic.
inline std::vector<std::pair<std::vector<int>, Count>>
markings_impl(const std::vector<int>& lam, int n, int p) {
    auto len = [&](int i) {
        return i < static_cast<int>(lam.size()) ? lam[static_cast<std::size_t>(i)] : 0;
    };

    std::vector<std::pair<std::vector<int>, Count>> out;
    const int lam_p = len(p - 1);
    if (lam_p > n - 1) return out;
    const int need = n - 1 - lam_p;

    std::vector<std::pair<int, int>> groups;  // (row length, row count), lengths descending
    for (int i = 0; i < n; ++i) {
        if (i == p - 1) continue;
        const int row_len = len(i);
        if (row_len == 0) continue;
        if (!groups.empty() && groups.back().first == row_len)
            ++groups.back().second;
        else
            groups.emplace_back(row_len, 1);
    }
    int eligible = 0;
    for (const auto& [row_len, cnt] : groups) eligible += cnt;
    if (need > eligible) return out;

    std::map<std::vector<int>, Count> agg;
    std::vector<int> ks(groups.size(), 0);

    auto emit = [&]() {
        std::vector<int> shape;
        Count ways = 1;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            const auto [row_len, cnt] = groups[g];
            const int k = ks[g];
            for (int r = 0; r < cnt - k; ++r) shape.push_back(row_len);
            if (row_len > 1)
                for (int r = 0; r < k; ++r) shape.push_back(row_len - 1);
            ways *= binomial(cnt, k);
        }
        agg[std::move(shape)] += ways;
    };

    auto rec = [&](auto&& self, std::size_t g, int remaining) -> void {
        if (g == groups.size()) {
            if (remaining == 0) emit();
            return;
        }
        const int cnt = groups[g].second;
        for (int k = 0; k <= std::min(cnt, remaining); ++k) {
            ks[g] = k;
            self(self, g + 1, remaining - k);
        }
        ks[g] = 0;
    };
    rec(rec, 0, need);

    out.assign(agg.rbegin(), agg.rend());
    return out;
}

} // namespace detail

inline std::vector<Marking> markings(const SpinPartition& lp, int p) {
    if (p < 1 || p > lp.n)
        throw std::invalid_argument("marking row out of range");
    std::vector<Marking> out;
    for (auto& [shape, ways] : detail::markings_impl(lp.lambda.parts(), lp.n, p))
        out.push_back(Marking{Partition(std::move(shape)), ways});
    return out;
}

class CartanMemo {
public:
    using Key = std::vector<int>;  // stripped parts; the total determines n

    const Count* find(const Key& key) {
        auto it = table_.find(key);
        if (it == table_.end()) {
            ++misses_;
            return nullptr;
        }
        ++hits_;
        return &it->second;
    }

    void insert(Key key, const Count& value) { table_.emplace(std::move(key), value); }

    void clear() {
        table_.clear();
        hits_ = misses_ = 0;
    }

    MemoStats stats() const { return MemoStats{table_.size(), hits_, misses_}; }

private:
    std::map<Key, Count> table_;
    std::size_t hits_ = 0;
    std::size_t misses_ = 0;
};

inline CartanMemo& shared_cartan_memo() {
    static CartanMemo memo;
    return memo;
}

namespace detail {

inline Count n_lambda_rec(const std::vector<int>& lam, int n, CartanMemo& memo) {
    if (n <= 1) return 1;
    if (const Count* hit = memo.find(lam)) return *hit;
    Count total = 0;
    for (const auto& [shape, ways] : markings_impl(lam, n, n))
        total += ways * n_lambda_rec(shape, n - 1, memo);
    memo.insert(lam, total);
    return total;
}

} // namespace detail

// N_lambda by the marking recursion. The removed row defaults to the last
// one; any explicit p in 1..n gives the same value (a theorem, covered by
// tests), so explicit-p calls skip the top-level cache and exercise the
// chosen decomposition for real.
inline Count n_lambda_inductive(const SpinPartition& lp, CartanMemo& memo, int p = 0) {
    if (p == 0) p = lp.n;
    if (p < 1 || p > lp.n)
        throw std::invalid_argument("marking row out of range");
    if (lp.n == 1) return 1;
    if (p == lp.n) return detail::n_lambda_rec(lp.lambda.parts(), lp.n, memo);
    Count total = 0;
    for (const auto& [shape, ways] : detail::markings_impl(lp.lambda.parts(), lp.n, p))
        total += ways * detail::n_lambda_rec(shape, lp.n - 1, memo);
    return total;
}

inline Count n_lambda_inductive(const SpinPartition& lp, int p = 0) {
    return n_lambda_inductive(lp, shared_cartan_memo(), p);
}

// ---------------------------------------------------------------------------
// Spin tableaux.

struct SpinTableau {
    std::vector<std::vector<int>> rows;  // ragged, empty rows dropped

    friend bool operator==(const SpinTableau&, const SpinTableau&) = default;
    friend auto operator<=>(const SpinTableau& a, const SpinTableau& b) {
        return a.rows <=> b.rows;
    }
};

namespace detail {

// Entries n-1 of a spin tableau occupy a marking for the last row whose
// leftover shape stays nonincreasing; such markings take the bottom rows of
// each equal-length group. Enumerate those, recurse on the leftover shape,
// and reattach the n-1 entries.
inline std::vector<SpinTableau> tableaux_rec(const std::vector<int>& lam, int n) {
    std::vector<SpinTableau> out;
    if (n <= 1) {
        out.push_back(SpinTableau{});
        return out;
    }

    auto len = [&](int i) {
        return i < static_cast<int>(lam.size()) ? lam[static_cast<std::size_t>(i)] : 0;
    };
    const int lam_n = len(n - 1);
    if (lam_n > n - 1) return out;
    const int need = n - 1 - lam_n;

    struct Group {
        int row_len;
        int first_row;
        int count;
    };
    std::vector<Group> groups;
    for (int i = 0; i < n - 1; ++i) {
        const int row_len = len(i);
        if (row_len == 0) continue;
        if (!groups.empty() && groups.back().row_len == row_len)
            ++groups.back().count;
        else
            groups.push_back(Group{row_len, i, 1});
    }
    int eligible = 0;
    for (const Group& g : groups) eligible += g.count;
    if (need > eligible) return out;

    std::vector<int> ks(groups.size(), 0);
    auto emit = [&]() {
        std::vector<bool> marked(static_cast<std::size_t>(n - 1), false);
        std::vector<int> kappa;
        for (std::size_t g = 0; g < groups.size(); ++g)
            for (int r = groups[g].count - ks[g]; r < groups[g].count; ++r)
                marked[static_cast<std::size_t>(groups[g].first_row + r)] = true;
        for (int i = 0; i < n - 1; ++i) {
            const int rest = len(i) - (marked[static_cast<std::size_t>(i)] ? 1 : 0);
            if (rest > 0) kappa.push_back(rest);
        }

        for (SpinTableau& sub : tableaux_rec(kappa, n - 1)) {
            SpinTableau tau;
            for (int i = 0; i < n - 1; ++i) {
                std::vector<int> row;
                if (i < static_cast<int>(sub.rows.size()))
                    row = sub.rows[static_cast<std::size_t>(i)];
                if (marked[static_cast<std::size_t>(i)]) row.push_back(n - 1);
                if (!row.empty()) tau.rows.push_back(std::move(row));
            }
            if (lam_n > 0)
                tau.rows.emplace_back(static_cast<std::size_t>(lam_n), n - 1);
            out.push_back(std::move(tau));
        }
    };

    auto rec = [&](auto&& self, std::size_t g, int remaining) -> void {
        if (g == groups.size()) {
            if (remaining == 0) emit();
            return;
        }
        const int cnt = groups[g].count;
        for (int k = 0; k <= std::min(cnt, remaining); ++k) {
            ks[g] = k;
            self(self, g + 1, remaining - k);
        }
        ks[g] = 0;
    };
    rec(rec, 0, need);
    return out;
}

} // namespace detail

inline std::vector<SpinTableau> spin_tableaux(const SpinPartition& lp) {
    return detail::tableaux_rec(lp.lambda.parts(), lp.n);
}

// Product of the binomial labels. In each column, every occurring value i
// is labeled C(a, b) on its lowest box, where b counts the entry-i boxes
// among the first i boxes of the column and a adds the boxes of entry < i
// whose right neighbor is absent or > i.
inline Count n_tau(const SpinTableau& t) {
    Count result = 1;
    const int width = t.rows.empty() ? 0 : static_cast<int>(t.rows.front().size());
    for (int j = 0; j < width; ++j) {
        std::vector<int> col;
        for (const auto& row : t.rows)
            if (j < static_cast<int>(row.size())) col.push_back(row[static_cast<std::size_t>(j)]);

        int r = 0;
        const int height = static_cast<int>(col.size());
        while (r < height) {
            const int value = col[static_cast<std::size_t>(r)];
            int b = 0;
            for (int s = r; s < std::min(height, value); ++s)
                if (col[static_cast<std::size_t>(s)] == value) ++b;
            int extra = 0;
            for (int s = 0; s < r; ++s) {
                const auto& row = t.rows[static_cast<std::size_t>(s)];
                const bool open = j + 1 >= static_cast<int>(row.size()) ||
                                  row[static_cast<std::size_t>(j + 1)] > value;
                if (open) ++extra;
            }
            result *= binomial(b + extra, b);
            while (r < height && col[static_cast<std::size_t>(r)] == value) ++r;
        }
    }
    return result;
}

inline Count n_lambda_tableaux(const SpinPartition& lp) {
    Count total = 0;
    for (const SpinTableau& t : spin_tableaux(lp)) total += n_tau(t);
    return total;
}

// ---------------------------------------------------------------------------
// Special cases.

namespace detail {

// Core of the lifting procedure: mu is nonincreasing and positive with
// mu_1 + ... + mu_j <= (n-1) + ... + (n-j) for every prefix, and has more
// than (n-1) - mu_1 parts. Returns a nonincreasing reshuffle with first
// part n-1, every later part decreased by at most 1, the same total, and
// the same prefix bounds.
inline std::vector<int> lift_rec(const std::vector<int>& mu, int n) {
    if (mu[0] == n - 1) return mu;
    const int k = static_cast<int>(mu.size());

    int t = 0;
    long long prefix = 0;
    long long bound = 0;
    while (t < k) {
        prefix += mu[static_cast<std::size_t>(t)];
        bound += n - 1 - t;
        if (prefix >= bound) break;
        ++t;
    }

    if (t == k) {
        if (k < 2) throw std::logic_error("lift recursion underflow");
        std::vector<int> tilde(mu.begin(), mu.end() - 1);
        ++tilde[0];
        std::vector<int> lifted = lift_rec(tilde, n);
        lifted.push_back(mu[static_cast<std::size_t>(k - 1)] - 1);
        return lifted;
    }

    std::vector<int> tilde(mu.begin(), mu.begin() + t);
    ++tilde[0];
    std::vector<int> lifted = lift_rec(tilde, n);
    lifted.push_back(mu[static_cast<std::size_t>(t)] - 1);
    lifted.insert(lifted.end(), mu.begin() + t + 1, mu.end());
    return lifted;
}

} // namespace detail

// Reshuffles a partition with nonzero multiplicity into one of the same
// total whose first row is full (n-1 boxes), moving at most one box out of
// each later row and staying below the staircase.
inline Partition lift_partition(const Partition& mu, int n) {
    if (mu.size() > n || mu.sum() != static_cast<long long>(n) * (n - 1) / 2 ||
        !dominance_leq(mu, staircase(n)))
        throw std::invalid_argument("partition has zero multiplicity; nothing to lift");
    if (n == 1) return mu;
    return Partition(detail::lift_rec(mu.parts(), n));
}

struct SplitResult {
    SpinPartition lambda;
    Count n_lambda;
};

namespace detail {

// n >= 1 with n(n-1)/2 == boxes; the empty partition pairs with n = 1.
inline int triangular_rows(long long boxes, const char* what) {
    int n = 1;
    while (static_cast<long long>(n) * (n - 1) / 2 < boxes) ++n;
    if (static_cast<long long>(n) * (n - 1) / 2 != boxes)
        throw std::invalid_argument(std::string(what) + " total is not triangular");
    return n;
}

} // namespace detail

// Stacks a p-shifted copy of mu on top of pi: the combined partition's
// multiplicity is the product of the two factors.
inline SplitResult split_n_lambda(const Partition& mu, const Partition& pi) {
    const int m = detail::triangular_rows(mu.sum(), "first factor");
    const int p = detail::triangular_rows(pi.sum(), "second factor");
    if (mu.size() > m) throw std::invalid_argument("first factor has too many parts");
    if (pi.size() > p) throw std::invalid_argument("second factor has too many parts");
    if (pi.at(0) > p + mu.at(m - 1))
        throw std::invalid_argument("factors do not stack: top of second exceeds bottom of first");

    std::vector<int> parts;
    for (int i = 0; i < m; ++i) parts.push_back(p + mu.at(i));
    for (int i = 0; i < pi.size(); ++i) parts.push_back(pi.at(i));
    SpinPartition lambda(Partition(std::move(parts)), m + p);

    const bool factor_support = in_support(SpinPartition(mu, m)) && in_support(SpinPartition(pi, p));
    if (in_support(lambda) != factor_support)
        throw std::logic_error("split support mismatch");

    Count value = n_lambda_inductive(SpinPartition(mu, m)) * n_lambda_inductive(SpinPartition(pi, p));
    return SplitResult{std::move(lambda), std::move(value)};
}

struct RhoShift {
    SpinPartition lambda;
    Count mult;
};

// Staircase with one box moved from row i to row j (1-based, j - i > 1;
// adjacent rows would leave the dominant cone). The multiplicity is the
// closed form 2^(j-i-1).
inline RhoShift rho_shift_mult(int n, int i, int j) {
    if (i < 1 || j > n || i >= j)
        throw std::invalid_argument("need 1 <= i < j <= n");
    if (j - i <= 1)
        throw std::invalid_argument("adjacent rows give a non-dominant weight");
    std::vector<int> parts;
    for (int r = 0; r < n; ++r) parts.push_back(n - 1 - r);
    parts[static_cast<std::size_t>(i - 1)] -= 1;
    parts[static_cast<std::size_t>(j - 1)] += 1;
    return RhoShift{SpinPartition(Partition(std::move(parts)), n), pow2(j - i - 1)};
}

} // namespace spinmult
