#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hamwit/bitstring.hpp"

namespace hamwit {

// splitmix64 (Vigna). Hand-rolled so seeded runs reproduce bit-for-bit on
// every platform, unlike <random> distributions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), unbiased via rejection
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("empty range");
        std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    double unit() { return double(next() >> 11) * 0x1.0p-53; }
    bool coin() { return (next() >> 63) != 0; }

    BitString bits(std::size_t n) {
        BitString b(n);
        for (std::size_t i = 0; i < n; ++i) b.set_bit(i, coin());
        return b;
    }

    // k distinct positions in [0, n), partial Fisher-Yates
    std::vector<std::size_t> distinct_positions(std::size_t n, std::size_t k) {
        if (k > n) throw std::invalid_argument("too many positions requested");
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), std::size_t(0));
        for (std::size_t i = 0; i < k; ++i)
            std::swap(idx[i], idx[i + below(n - i)]);
        idx.resize(k);
        return idx;
    }

  private:
    std::uint64_t state_;
};

// Per-trial seed derivation: one splitmix64 step from the master seed offset
// by the stream index. Documented so sweeps are independently reproducible.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    Rng r(master ^ (0x9e3779b97f4a7c15ull * (stream + 1)));
    return r.next();
}

}  // namespace hamwit
