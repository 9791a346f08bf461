#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spinmult {

// All multiplicities and intermediate counts are exact arbitrary-precision
// integers; values grow combinatorially with n and must never wrap.
using Count = boost::multiprecision::cpp_int;

// Thrown when an exhaustive subset enumeration would exceed its configured
// bound. Carries the offending size so callers can report both numbers.
class oracle_bound_error : public std::runtime_error {
public:
    oracle_bound_error(int bits, int bound)
        : std::runtime_error("oracle too large: 2^" + std::to_string(bits) +
                             " subsets exceeds the bound 2^" + std::to_string(bound) +
                             " (raise the guard to enumerate)"),
          bits_(bits), bound_(bound) {}

    int bits() const { return bits_; }
    int bound() const { return bound_; }

private:
    int bits_;
    int bound_;
};

// Hit/miss bookkeeping shared by the memoized recursions.
struct MemoStats {
    std::size_t entries = 0;
    std::size_t hits = 0;
    std::size_t misses = 0;
};

inline Count binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Count r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Count pow2(int e) {
    Count r = 1;
    return r << e;
}

} // namespace spinmult
