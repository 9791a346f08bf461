#pragma once

// General Levi multiplicities by the inductive formula: peel one coordinate
// off the first (smallest) block, distribute +1/2 or -1/2 over the
// coordinates outside that block according to a k1-subset J, and recurse.
// Queries are memoized on (composition, canonical weight form), so the
// symmetry classes collapse across the whole recursion tree.

#include "spinmult/common.hpp"
#include "spinmult/rootsys.hpp"

#include <map>
#include <utility>
#include <vector>

namespace spinmult {

class LeviMemo {
public:
    using Key = std::pair<std::vector<int>, std::vector<int>>;

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

struct LeviQuery {
    Composition comp;
    Weight weight;

    LeviQuery(Composition c, Weight w) : comp(std::move(c)), weight(std::move(w)) {
        if (weight.n() != comp.n())
            throw std::invalid_argument("weight length does not match composition");
    }
};

namespace detail {

inline Count mult_levi_rec(const std::vector<int>& c, const std::vector<int>& d,
                           LeviMemo& memo) {
    const int n = static_cast<int>(d.size());
    if (c.size() == 1) {
        for (int x : d)
            if (x != 0) return 0;
        return 1;
    }

    // Row-sum feasibility: coordinate i of block size sz implies
    // (d_i + (n - sz)) / 2 ones in its row, which must be an integer in
    // [0, n - sz]. Kills dead branches before any subset fan-out.
    {
        std::size_t pos = 0;
        for (int sz : c) {
            const int sigma = n - sz;
            for (int t = 0; t < sz; ++t, ++pos) {
                const int u = d[pos] + sigma;
                if (u < 0 || u > 2 * sigma || (u & 1)) return 0;
            }
        }
    }

    LeviMemo::Key key{c, normalize_doubled(c, d)};
    if (const Count* hit = memo.find(key)) return *hit;

    const int c1 = c[0];
    const int sigma1 = n - c1;
    const int k1 = (d[0] + sigma1) / 2;
    const int outside = n - c1;

    std::vector<int> sub_c;
    if (c1 > 1) sub_c.push_back(c1 - 1);
    sub_c.insert(sub_c.end(), c.begin() + 1, c.end());

    std::vector<int> sub_d(static_cast<std::size_t>(n - 1));

    Count total = 0;
    std::vector<int> pick(static_cast<std::size_t>(k1));
    for (int t = 0; t < k1; ++t) pick[static_cast<std::size_t>(t)] = t;
    while (true) {
        // coordinates 2..c1 of the block keep their value, the rest move
        // by -1/2, bumped to +1/2 on the members of J
        for (int i = 1; i < c1; ++i) sub_d[static_cast<std::size_t>(i - 1)] = d[static_cast<std::size_t>(i)];
        for (int o = 0; o < outside; ++o)
            sub_d[static_cast<std::size_t>(c1 - 1 + o)] = d[static_cast<std::size_t>(c1 + o)] - 1;
        for (int t = 0; t < k1; ++t)
            sub_d[static_cast<std::size_t>(c1 - 1 + pick[static_cast<std::size_t>(t)])] += 2;

        total += mult_levi_rec(sub_c, sub_d, memo);

        int t = k1 - 1;
        while (t >= 0 && pick[static_cast<std::size_t>(t)] == outside - k1 + t) --t;
        if (t < 0) break;
        ++pick[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < k1; ++u)
            pick[static_cast<std::size_t>(u)] = pick[static_cast<std::size_t>(u - 1)] + 1;
    }

    memo.insert(std::move(key), total);
    return total;
}

} // namespace detail

inline Count mult_levi(const LeviQuery& q, LeviMemo& memo) {
    return detail::mult_levi_rec(q.comp.parts(), q.weight.doubled(), memo);
}

inline LeviMemo& shared_levi_memo() {
    static LeviMemo memo;
    return memo;
}

inline Count mult_levi(const LeviQuery& q) { return mult_levi(q, shared_levi_memo()); }

inline Count mult_levi(const Composition& c, const Weight& w) {
    return mult_levi(LeviQuery(c, w));
}

inline void clear_memo() { shared_levi_memo().clear(); }

inline MemoStats memo_stats() { return shared_levi_memo().stats(); }

} // namespace spinmult
