#pragma once

// Type-A root and weight bookkeeping for the spin module of a Levi
// subalgebra of sl(n). A Levi context is determined by a composition
// c = (c_1,...,c_k) of n (block sizes on the diagonal); the cross-block
// positive roots e_i - e_j index the subsets that realize spin weights.
//
// Weights are stored in doubled integer coordinates (entry i holds 2*b_i)
// so that half-integer weights stay exact. Coordinates, blocks and root
// endpoints are 0-based throughout the library; the CLI converts at the
// boundary where flags are 1-based.

#include "spinmult/common.hpp"

#include <algorithm>
#include <charconv>
#include <compare>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spinmult {

// Nonincreasing sequence of positive parts; trailing zeros are accepted on
// input and stripped, so equality is equality of the positive parts.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0)
                throw std::invalid_argument("partition parts must be nonnegative");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be nonincreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 0-based, reads past the stored parts as 0.
    int at(int i) const {
        return i >= 0 && i < size() ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    long long sum() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0LL);
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

// Weight of sl(n) in doubled coordinates; the trace-zero constraint
// sum(b_i) = 0 is the only structural invariant.
class Weight {
public:
    Weight() = default;

    explicit Weight(std::vector<int> doubled) : doubled_(std::move(doubled)) {
        long long s = std::accumulate(doubled_.begin(), doubled_.end(), 0LL);
        if (s != 0)
            throw std::invalid_argument("weight coordinates must sum to zero");
    }

    const std::vector<int>& doubled() const { return doubled_; }
    int n() const { return static_cast<int>(doubled_.size()); }
    bool is_zero() const {
        return std::all_of(doubled_.begin(), doubled_.end(), [](int d) { return d == 0; });
    }

    Weight negated() const {
        std::vector<int> d(doubled_);
        for (int& x : d) x = -x;
        return Weight(std::move(d));
    }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight& a, const Weight& b) {
        return a.doubled_ <=> b.doubled_;
    }

private:
    std::vector<int> doubled_;
};

// Block sizes of a Levi subalgebra; canonical order is nondecreasing and
// the constructor sorts whatever order it is given.
class Composition {
public:
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty())
            throw std::invalid_argument("composition needs at least one part");
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("composition parts must be >= 1");
        std::sort(parts_.begin(), parts_.end());
    }

    const std::vector<int>& parts() const { return parts_; }
    int blocks() const { return static_cast<int>(parts_.size()); }
    int n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

// Everything derived from a composition that the algorithms consume.
// cross_roots holds the positive roots e_i - e_j whose endpoints lie in
// different blocks, ordered lexicographically by (i, j); this fixed order
// defines the bit indices of subset masks everywhere.
struct LeviContext {
    Composition comp;
    int n;
    std::vector<int> block_of;                     // coordinate -> block index
    std::vector<int> block_start;                  // block index -> first coordinate
    std::vector<std::pair<int, int>> cross_roots;  // (i, j) with i < j, 0-based
    std::vector<int> sigma;                        // sigma_i = n - own block size
    std::vector<int> rho_doubled;                  // (n-1, n-3, ..., -(n-1))

    bool is_cartan() const {
        return comp.blocks() == n;
    }

    int root_count() const { return static_cast<int>(cross_roots.size()); }
};

inline LeviContext build_context(const Composition& c) {
    const int n = c.n();
    std::vector<int> block_of(static_cast<std::size_t>(n));
    std::vector<int> block_start;
    block_start.reserve(static_cast<std::size_t>(c.blocks()));
    int pos = 0;
    for (int b = 0; b < c.blocks(); ++b) {
        block_start.push_back(pos);
        for (int i = 0; i < c.parts()[static_cast<std::size_t>(b)]; ++i)
            block_of[static_cast<std::size_t>(pos++)] = b;
    }

    std::vector<std::pair<int, int>> cross_roots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (block_of[static_cast<std::size_t>(i)] != block_of[static_cast<std::size_t>(j)])
                cross_roots.emplace_back(i, j);

    std::vector<int> sigma(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        sigma[static_cast<std::size_t>(i)] =
            n - c.parts()[static_cast<std::size_t>(block_of[static_cast<std::size_t>(i)])];

    std::vector<int> rho(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rho[static_cast<std::size_t>(i)] = n - 1 - 2 * i;

    return LeviContext{c, n, std::move(block_of), std::move(block_start),
                       std::move(cross_roots), std::move(sigma), std::move(rho)};
}

// Dominance order on partitions of a common total: every prefix sum of a
// is <= the corresponding prefix sum of b. Unequal totals compare false.
inline bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.sum() != b.sum()) return false;
    long long pa = 0, pb = 0;
    const int len = std::max(a.size(), b.size());
    for (int i = 0; i < len; ++i) {
        pa += a.at(i);
        pb += b.at(i);
        if (pa > pb) return false;
    }
    return true;
}

inline Partition dual_partition(const Partition& a) {
    std::vector<int> d(static_cast<std::size_t>(a.at(0)));
    for (int j = 0; j < a.at(0); ++j) {
        int count = 0;
        for (int p : a.parts())
            if (p >= j + 1) ++count;
        d[static_cast<std::size_t>(j)] = count;
    }
    return Partition(std::move(d));
}

namespace detail {

// Canonical representative of a doubled-coordinate vector under the block
// symmetries that preserve multiplicities: permutations inside each block
// and swaps of equal-size blocks. parts must be nondecreasing so that
// equal-size blocks sit in one contiguous run.
inline std::vector<int> normalize_doubled(const std::vector<int>& parts,
                                          std::vector<int> d) {
    std::size_t start = 0;
    for (int sz : parts) {
        std::sort(d.begin() + static_cast<std::ptrdiff_t>(start),
                  d.begin() + static_cast<std::ptrdiff_t>(start + static_cast<std::size_t>(sz)),
                  std::greater<int>());
        start += static_cast<std::size_t>(sz);
    }

    std::size_t block = 0, coord = 0;
    while (block < parts.size()) {
        std::size_t run_end = block;
        while (run_end < parts.size() && parts[run_end] == parts[block]) ++run_end;
        const std::size_t sz = static_cast<std::size_t>(parts[block]);
        const std::size_t count = run_end - block;
        if (count > 1) {
            std::vector<std::vector<int>> slices(count);
            for (std::size_t s = 0; s < count; ++s)
                slices[s].assign(d.begin() + static_cast<std::ptrdiff_t>(coord + s * sz),
                                 d.begin() + static_cast<std::ptrdiff_t>(coord + (s + 1) * sz));
            std::sort(slices.begin(), slices.end(), std::greater<std::vector<int>>());
            for (std::size_t s = 0; s < count; ++s)
                std::copy(slices[s].begin(), slices[s].end(),
                          d.begin() + static_cast<std::ptrdiff_t>(coord + s * sz));
        }
        coord += count * sz;
        block = run_end;
    }
    return d;
}

} // namespace detail

inline Weight normalize_weight(const LeviContext& ctx, const Weight& w) {
    if (w.n() != ctx.n)
        throw std::invalid_argument("weight length does not match context");
    return Weight(detail::normalize_doubled(ctx.comp.parts(), w.doubled()));
}

// ---------------------------------------------------------------------------
// Text forms.
//
// Partition: comma-separated nonincreasing integers, exponent shorthand
// accepted on input ("2^5" = "2,2,2,2,2"); the empty partition reads and
// prints as "0". Weight: comma-separated reduced fractions with denominator
// 1 or 2 ("3/2,1/2,-1,-1"). Composition: comma-separated positive integers.

namespace detail {

inline std::vector<std::string_view> split_commas(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string_view::npos) next = s.size();
        std::string_view tok = s.substr(pos, next - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        out.push_back(tok);
        pos = next + 1;
        if (next == s.size()) break;
    }
    return out;
}

inline long long parse_int(std::string_view tok, std::string_view what) {
    long long value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw std::invalid_argument("malformed " + std::string(what) + ": '" +
                                    std::string(tok) + "'");
    return value;
}

} // namespace detail

inline Partition parse_partition(std::string_view s) {
    if (s.empty() || s == "0") return Partition{};
    std::vector<int> parts;
    for (std::string_view tok : detail::split_commas(s)) {
        std::size_t caret = tok.find('^');
        long long value, repeat = 1;
        if (caret == std::string_view::npos) {
            value = detail::parse_int(tok, "partition part");
        } else {
            value = detail::parse_int(tok.substr(0, caret), "partition part");
            repeat = detail::parse_int(tok.substr(caret + 1), "partition exponent");
            if (repeat < 1)
                throw std::invalid_argument("partition exponent must be >= 1");
        }
        if (value < 0)
            throw std::invalid_argument("partition parts must be nonnegative");
        for (long long r = 0; r < repeat; ++r)
            parts.push_back(static_cast<int>(value));
    }
    return Partition(std::move(parts));
}

inline std::string format_partition(const Partition& p) {
    if (p.empty()) return "0";
    std::string out;
    for (int i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts()[static_cast<std::size_t>(i)]);
    }
    return out;
}

inline Weight parse_weight(std::string_view s) {
    std::vector<int> doubled;
    for (std::string_view tok : detail::split_commas(s)) {
        std::size_t slash = tok.find('/');
        if (slash == std::string_view::npos) {
            doubled.push_back(static_cast<int>(2 * detail::parse_int(tok, "weight coordinate")));
        } else {
            long long num = detail::parse_int(tok.substr(0, slash), "weight numerator");
            long long den = detail::parse_int(tok.substr(slash + 1), "weight denominator");
            if (den != 2)
                throw std::invalid_argument("weight coordinates must have denominator 2");
            doubled.push_back(static_cast<int>(num));
        }
    }
    return Weight(std::move(doubled));
}

inline std::string format_weight(const Weight& w) {
    std::string out;
    for (int i = 0; i < w.n(); ++i) {
        if (i) out += ',';
        int d = w.doubled()[static_cast<std::size_t>(i)];
        if (d % 2 == 0)
            out += std::to_string(d / 2);
        else
            out += std::to_string(d) + "/2";
    }
    return out;
}

inline Composition parse_composition(std::string_view s) {
    std::vector<int> parts;
    for (std::string_view tok : detail::split_commas(s)) {
        long long v = detail::parse_int(tok, "composition part");
        if (v < 1) throw std::invalid_argument("composition parts must be >= 1");
        parts.push_back(static_cast<int>(v));
    }
    return Composition(std::move(parts));
}

inline std::string format_composition(const Composition& c) {
    std::string out;
    for (int i = 0; i < c.blocks(); ++i) {
        if (i) out += ',';
        out += std::to_string(c.parts()[static_cast<std::size_t>(i)]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Generation, in descending lexicographic order (deterministic everywhere).

namespace detail {

inline void partitions_rec(long long total, int max_parts, int cap,
                           std::vector<int>& prefix, std::vector<Partition>& out) {
    if (total == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    if (max_parts == 0) return;
    const int hi = static_cast<int>(std::min<long long>(cap, total));
    for (int v = hi; v >= 1; --v) {
        prefix.push_back(v);
        partitions_rec(total - v, max_parts - 1, v, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

// Partitions of `total` into at most `max_parts` parts, each at most
// `max_value` (0 means unbounded). Descending lexicographic order.
inline std::vector<Partition> partitions_of(long long total, int max_parts,
                                            int max_value = 0) {
    if (total < 0 || max_parts < 0) return {};
    std::vector<Partition> out;
    std::vector<int> prefix;
    const int cap = max_value > 0 ? max_value
                                  : static_cast<int>(std::min<long long>(total, 1LL << 30));
    detail::partitions_rec(total, max_parts, cap, prefix, out);
    return out;
}

// All Levi block-size patterns of n in canonical (nondecreasing) form,
// ordered by descending largest part: (n) first, (1,...,1) last.
inline std::vector<Composition> canonical_compositions(int n) {
    std::vector<Composition> out;
    for (const Partition& p : partitions_of(n, n)) {
        std::vector<int> parts(p.parts().rbegin(), p.parts().rend());
        out.push_back(Composition(std::move(parts)));
    }
    return out;
}

// The staircase (n-1, n-2, ..., 1); its padded form is the top element of
// the dominance order on spin partitions.
inline Partition staircase(int n) {
    std::vector<int> parts;
    for (int v = n - 1; v >= 1; --v) parts.push_back(v);
    return Partition(std::move(parts));
}

} // namespace spinmult
