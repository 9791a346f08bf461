#pragma once

// The maximal-parabolic case h = h(p,q). Weights of the spin module
// correspond to pairs of partitions (alpha, beta) of a common size — the
// row and column sums of a p-by-q 0/1 matrix — and the multiplicity of
// mu(alpha,beta) is the number of such matrices. Counting is done by a
// column-by-column DP; the matrices are in bijection with row tableaux
// (shape alpha, beta_j copies of j, rows strictly increasing), which this
// module also enumerates and converts.

#include "spinmult/common.hpp"
#include "spinmult/rootsys.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace spinmult {

inline constexpr long long kMaxEnumerationBoxes = 64;

struct MarginPair {
    int p;
    int q;
    Partition alpha;  // row sums, at most p parts, each <= q
    Partition beta;   // column sums, at most q parts, each <= p

    MarginPair(int rows, int cols, Partition a, Partition b)
        : p(rows), q(cols), alpha(std::move(a)), beta(std::move(b)) {
        if (p < 1 || q < 1) throw std::invalid_argument("block sizes must be positive");
        if (alpha.size() > p) throw std::invalid_argument("row margin has more than p parts");
        if (beta.size() > q) throw std::invalid_argument("column margin has more than q parts");
        if (alpha.at(0) > q) throw std::invalid_argument("row margin exceeds the column count");
        if (beta.at(0) > p) throw std::invalid_argument("column margin exceeds the row count");
        if (alpha.sum() != beta.sum())
            throw std::invalid_argument("row and column margins have different totals");
    }
};

struct BinMatrix {
    std::vector<std::vector<int>> entries;  // rectangular, values 0/1

    explicit BinMatrix(std::vector<std::vector<int>> rows) : entries(std::move(rows)) {
        const std::size_t cols = entries.empty() ? 0 : entries.front().size();
        for (const auto& row : entries) {
            if (row.size() != cols) throw std::invalid_argument("matrix rows differ in length");
            for (int v : row)
                if (v != 0 && v != 1) throw std::invalid_argument("matrix entries must be 0 or 1");
        }
    }

    int p() const { return static_cast<int>(entries.size()); }
    int q() const { return entries.empty() ? 0 : static_cast<int>(entries.front().size()); }

    std::vector<int> row_sums() const {
        std::vector<int> s;
        for (const auto& row : entries) {
            int t = 0;
            for (int v : row) t += v;
            s.push_back(t);
        }
        return s;
    }

    std::vector<int> col_sums() const {
        std::vector<int> s(static_cast<std::size_t>(q()), 0);
        for (const auto& row : entries)
            for (std::size_t j = 0; j < row.size(); ++j) s[j] += row[j];
        return s;
    }

    friend bool operator==(const BinMatrix&, const BinMatrix&) = default;
};

struct RowTableau {
    std::vector<std::vector<int>> rows;  // ragged, strictly increasing rows

    friend bool operator==(const RowTableau&, const RowTableau&) = default;
    friend auto operator<=>(const RowTableau& a, const RowTableau& b) {
        return a.rows <=> b.rows;
    }
};

inline Weight mu_of_margins(const MarginPair& mp) {
    std::vector<int> d;
    d.reserve(static_cast<std::size_t>(mp.p + mp.q));
    for (int i = 0; i < mp.p; ++i) d.push_back(2 * mp.alpha.at(i) - mp.q);
    for (int j = 1; j <= mp.q; ++j) d.push_back(mp.p - 2 * mp.beta.at(mp.q - j));
    return Weight(std::move(d));
}

inline MarginPair margins_of_weight(int p, int q, const Weight& w) {
    if (p < 1 || q < 1) throw std::invalid_argument("block sizes must be positive");
    if (w.n() != p + q) throw std::invalid_argument("weight length does not match p+q");
    const std::vector<int>& d = w.doubled();

    std::vector<int> alpha;
    for (int i = 0; i < p; ++i) {
        if (i > 0 && d[static_cast<std::size_t>(i)] > d[static_cast<std::size_t>(i - 1)])
            throw std::invalid_argument("first block is not nonincreasing");
        const int u = d[static_cast<std::size_t>(i)] + q;
        if (u % 2 != 0 || u < 0 || u > 2 * q)
            throw std::invalid_argument("first block is not of margin form");
        alpha.push_back(u / 2);
    }
    std::vector<int> beta;
    for (int k = 1; k <= q; ++k) {
        const std::size_t pos = static_cast<std::size_t>(p + q - k);
        if (k > 1 && d[pos] < d[pos + 1])
            throw std::invalid_argument("second block is not nonincreasing");
        const int u = p - d[pos];
        if (u % 2 != 0 || u < 0 || u > 2 * p)
            throw std::invalid_argument("second block is not of margin form");
        beta.push_back(u / 2);
    }
    return MarginPair(p, q, Partition(std::move(alpha)), Partition(std::move(beta)));
}

// Number of 0/1 matrices with the given margins. Columns are filled left to
// right; the state is the multiset of residual row capacities, so rows with
// equal residuals collapse into one choice weighted by a binomial.
inline Count count_margin_matrices(const MarginPair& mp) {
    std::vector<int> caps(static_cast<std::size_t>(mp.p));
    for (int i = 0; i < mp.p; ++i) caps[static_cast<std::size_t>(i)] = mp.alpha.at(i);

    std::map<std::pair<int, std::vector<int>>, Count> memo;

    auto rec = [&](auto&& self, int j, const std::vector<int>& state) -> Count {
        if (j == mp.q) return 1;  // residuals sum to zero here, hence all zero
        if (state.front() > mp.q - j) return 0;  // a row cannot be filled anymore
        const auto key = std::make_pair(j, state);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        std::vector<std::pair<int, int>> groups;  // (capacity >= 1, row count)
        int zeros = 0;
        for (int v : state) {
            if (v == 0) {
                ++zeros;
            } else if (!groups.empty() && groups.back().first == v) {
                ++groups.back().second;
            } else {
                groups.emplace_back(v, 1);
            }
        }

        const int need = mp.beta.at(j);
        Count total = 0;
        std::vector<int> ks(groups.size(), 0);
        auto descend = [&](auto&& go, std::size_t g, int remaining) -> void {
            if (g == groups.size()) {
                if (remaining != 0) return;
                std::vector<int> next;
                Count ways = 1;
                for (std::size_t h = 0; h < groups.size(); ++h) {
                    const auto [v, cnt] = groups[h];
                    for (int r = 0; r < cnt - ks[h]; ++r) next.push_back(v);
                    for (int r = 0; r < ks[h]; ++r) next.push_back(v - 1);
                    ways *= binomial(cnt, ks[h]);
                }
                next.insert(next.end(), static_cast<std::size_t>(zeros), 0);
                std::sort(next.begin(), next.end(), std::greater<int>());
                total += ways * self(self, j + 1, next);
                return;
            }
            for (int k = 0; k <= std::min(groups[g].second, remaining); ++k) {
                ks[g] = k;
                go(go, g + 1, remaining - k);
            }
            ks[g] = 0;
        };
        descend(descend, 0, need);

        memo.emplace(key, total);
        return total;
    };

    return rec(rec, 0, caps);
}

// True exactly when the multiplicity of mu(alpha,beta) is nonzero, decided
// by the dominance criterion beta <= dual(alpha) without any counting.
inline bool vanishing_test(const MarginPair& mp) {
    return dominance_leq(mp.beta, dual_partition(mp.alpha));
}

// All row tableaux of shape alpha using beta_j copies of j, in
// lexicographic order of their row lists. Enumeration is a display and
// testing aid, hence gated by total box count; counting has no such limit.
inline std::vector<RowTableau> row_tableaux(const MarginPair& mp,
                                            long long max_boxes = kMaxEnumerationBoxes) {
    if (mp.alpha.sum() > max_boxes)
        throw std::invalid_argument("enumeration limited to " + std::to_string(max_boxes) +
                                    " boxes; use counting for larger margins");

    std::vector<RowTableau> out;
    std::vector<int> remaining(static_cast<std::size_t>(mp.q + 1), 0);
    for (int v = 1; v <= mp.q; ++v) remaining[static_cast<std::size_t>(v)] = mp.beta.at(v - 1);

    std::vector<std::vector<int>> rows(static_cast<std::size_t>(mp.alpha.size()));
    auto fill_row = [&](auto&& self, int i, int slots, int min_value) -> void {
        if (slots == 0) {
            if (i + 1 == mp.alpha.size()) {
                out.push_back(RowTableau{rows});
                return;
            }
            self(self, i + 1, mp.alpha.at(i + 1), 1);
            return;
        }
        for (int v = min_value; v <= mp.q - slots + 1; ++v) {
            if (remaining[static_cast<std::size_t>(v)] == 0) continue;
            --remaining[static_cast<std::size_t>(v)];
            rows[static_cast<std::size_t>(i)].push_back(v);
            self(self, i, slots - 1, v + 1);
            rows[static_cast<std::size_t>(i)].pop_back();
            ++remaining[static_cast<std::size_t>(v)];
        }
    };
    if (mp.alpha.size() == 0) {
        out.push_back(RowTableau{});
    } else {
        fill_row(fill_row, 0, mp.alpha.at(0), 1);
    }
    return out;
}

inline RowTableau matrix_to_tableau(const BinMatrix& a) {
    RowTableau t;
    for (const auto& row : a.entries) {
        std::vector<int> cols;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] == 1) cols.push_back(static_cast<int>(j) + 1);
        t.rows.push_back(std::move(cols));
    }
    while (!t.rows.empty() && t.rows.back().empty()) t.rows.pop_back();
    return t;
}

inline BinMatrix tableau_to_matrix(const RowTableau& t, int p, int q) {
    if (static_cast<int>(t.rows.size()) > p)
        throw std::invalid_argument("tableau has more than p rows");
    std::vector<std::vector<int>> entries(
        static_cast<std::size_t>(p), std::vector<int>(static_cast<std::size_t>(q), 0));
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        int prev = 0;
        for (int v : t.rows[i]) {
            if (v < 1 || v > q) throw std::invalid_argument("tableau value out of range");
            if (v <= prev) throw std::invalid_argument("tableau row is not strictly increasing");
            entries[i][static_cast<std::size_t>(v - 1)] = 1;
            prev = v;
        }
    }
    return BinMatrix(std::move(entries));
}

// The matrices with the given margins, via the tableau bijection; shares
// the enumeration gate.
inline std::vector<BinMatrix> margin_matrices(const MarginPair& mp,
                                              long long max_boxes = kMaxEnumerationBoxes) {
    std::vector<BinMatrix> out;
    for (const RowTableau& t : row_tableaux(mp, max_boxes))
        out.push_back(tableau_to_matrix(t, mp.p, mp.q));
    return out;
}

} // namespace spinmult
