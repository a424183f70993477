#pragma once

#include <cstddef>
#include <stdexcept>

#include "hamwit/bitstring.hpp"
#include "hamwit/combinatorics.hpp"
#include "hamwit/nat.hpp"

namespace hamwit {

// The u lexicographically smallest n_u-bit strings, n_u = ceil(log2 u).
// Members are exactly { w : |w| = n_u, value(w) < u }.
struct Universe {
    Nat u;
    std::size_t n_u;

    explicit Universe(Nat count) : u(std::move(count)) {
        if (u < 1) throw std::invalid_argument("universe must be non-empty");
        if (u == 1) {
            n_u = 0;
        } else {
            std::size_t b = boost::multiprecision::msb(u);
            n_u = b + (u == (Nat(1) << b) ? 0 : 1);
        }
    }

    static Universe full(std::size_t bits) { return Universe(pow2(bits)); }

    bool contains(const BitString& w) const {
        return w.length() == n_u && w.value() < u;
    }
};

// Hamming ball: all n_u-bit strings within `radius` of `center`.
struct Ball {
    BitString center;
    std::size_t radius = 0;
};

// Number of n_u-bit strings with prefix s and Hamming distance <= d to a:
// zero if the prefix already disagrees with a in more than d places, else
// sum_{j<=d-l} C(n_u - |s|, j) with l the prefix disagreement.
inline Nat ball_prefix_count(std::size_t n_u, const BitString& a, std::size_t d,
                             const BitString& s) {
    if (a.length() != n_u) throw std::invalid_argument("center length mismatch");
    if (s.length() > n_u) throw std::invalid_argument("prefix longer than universe strings");
    std::size_t l = 0;
    for (std::size_t i = 0; i < s.length(); ++i) l += s.bit(i) != a.bit(i);
    if (l > d) return 0;
    return binomial_prefix_sum(n_u - s.length(), d - l);
}

// |N(a) cap [u]|, via the prefix decomposition of the binary representation
// b of u: every member is lexicographically below b, so it is counted by the
// unique term where it first drops below b. The full universe (u = 2^n_u)
// has no n_u-bit representation and is the whole-ball special case.
inline Nat ball_universe_count(const Universe& univ, const Ball& ball) {
    const BitString& a = ball.center;
    if (a.length() != univ.n_u) throw std::invalid_argument("center length mismatch");
    if (univ.u == pow2(univ.n_u))
        return binomial_prefix_sum(univ.n_u, ball.radius);
    BitString b = BitString::from_value(univ.u, univ.n_u);
    Nat total = 0;
    std::size_t prefix_dist = 0;  // dist(b_1..b_{l-1}, a_1..a_{l-1})
    for (std::size_t l = 0; l < univ.n_u; ++l) {
        if (b.bit(l)) {
            std::size_t mismatch = prefix_dist + (a.bit(l) ? 1 : 0);
            if (mismatch <= ball.radius)
                total += binomial_prefix_sum(univ.n_u - l - 1, ball.radius - mismatch);
        }
        prefix_dist += b.bit(l) != a.bit(l);
    }
    return total;
}

// |{ w : dist(w, a) <= d, w lexicographically <= z }| (inclusive of z).
inline Nat ball_rank_upto(const Universe& univ, const Ball& ball, const BitString& z) {
    const BitString& a = ball.center;
    if (a.length() != univ.n_u) throw std::invalid_argument("center length mismatch");
    if (z.length() != univ.n_u) throw std::invalid_argument("query length mismatch");
    Nat total = 0;
    std::size_t prefix_dist = 0;
    for (std::size_t l = 0; l < univ.n_u; ++l) {
        if (z.bit(l)) {
            std::size_t mismatch = prefix_dist + (a.bit(l) ? 1 : 0);
            if (mismatch <= ball.radius)
                total += binomial_prefix_sum(univ.n_u - l - 1, ball.radius - mismatch);
        }
        prefix_dist += z.bit(l) != a.bit(l);
    }
    if (prefix_dist <= ball.radius) total += 1;  // z itself
    return total;
}

// The i-th member (1-based) of N(a) cap [u], by binary search on the value:
// ball_rank_upto is a step function that increases exactly at members.
inline BitString unrank(const Universe& univ, const Ball& ball, const Nat& i) {
    if (i < 1 || i > ball_universe_count(univ, ball))
        throw std::out_of_range("rank out of bounds");
    Nat lo = 0, hi = univ.u - 1;
    while (lo < hi) {
        Nat mid = (lo + hi) / 2;
        if (ball_rank_upto(univ, ball, BitString::from_value(mid, univ.n_u)) >= i)
            hi = mid;
        else
            lo = mid + 1;
    }
    return BitString::from_value(lo, univ.n_u);
}

}  // namespace hamwit
