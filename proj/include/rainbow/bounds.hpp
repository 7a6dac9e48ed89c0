#pragma once

// Exact evaluation of the rainbow-path guarantee parameters:
//   r(s) = 4 * 2^(2(s-1) log2(s-1)) = 4 * (s-1)^(2(s-1))
//   w_s = 0, w_j = w_{j+1} * r + 1 for j = s-1..1
//   c(s) = (w_1 + 1) * r
// and the inverse: the longest induced rainbow path guaranteed for a given
// chromatic number.

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rainbow {

using BigInt = boost::multiprecision::cpp_int;

struct BoundsParameters {
    int s = 0;
    BigInt r;
    /// w_s, w_{s-1}, ..., w_1 (so w.front() == 0 and w.back() == w_1).
    std::vector<BigInt> w;
    BigInt c;

    const BigInt &w1() const { return w.back(); }

    /// w_j for 1 <= j <= s.
    const BigInt &w_at(int j) const { return w.at(static_cast<std::size_t>(s - j)); }
};

inline BigInt pow_big(BigInt base, unsigned exponent) {
    BigInt out = 1;
    while (exponent) {
        if (exponent & 1u) out *= base;
        base *= base;
        exponent >>= 1;
    }
    return out;
}

inline BoundsParameters compute_bounds(int s) {
    if (s < 3) throw std::invalid_argument("bounds need s >= 3, got " + std::to_string(s));
    BoundsParameters b;
    b.s = s;
    b.r = 4 * pow_big(BigInt(s - 1), static_cast<unsigned>(2 * (s - 1)));
    b.w.push_back(0);
    for (int j = s - 1; j >= 1; --j) b.w.push_back(b.w.back() * b.r + 1);
    b.c = (b.w1() + 1) * b.r;
    return b;
}

/// Geometric-series form of w_1: (r^(s-1) - 1) / (r - 1).
inline BigInt closed_form_w1(const BoundsParameters &b) {
    return (pow_big(b.r, static_cast<unsigned>(b.s - 1)) - 1) / (b.r - 1);
}

/// Largest s whose guarantee applies to chromatic number `chi`:
/// 1 for chi >= 1, 2 for chi >= 2, and for s >= 3 the largest s with chi > c(s).
inline int guaranteed_length(const BigInt &chi) {
    if (chi < 1) throw std::invalid_argument("chromatic number must be positive");
    if (chi < 2) return 1;
    int s = 2;
    while (chi > compute_bounds(s + 1).c) ++s;
    return s;
}

inline int guaranteed_length(long long chi) { return guaranteed_length(BigInt(chi)); }

} // namespace rainbow
