#include <catch2/catch_amalgamated.hpp>
#include <thread>
#include <atomic>

#include <cstdint>
#include <vector>

#include "hamwit/combinatorics.hpp"
#include "hamwit/rng.hpp"

using namespace hamwit;

namespace {

// independent oracle: Pascal-triangle recurrence in plain uint64
std::vector<std::vector<std::uint64_t>> pascal_triangle(std::size_t rows) {
    std::vector<std::vector<std::uint64_t>> t(rows + 1);
    for (std::size_t n = 0; n <= rows; ++n) {
        t[n].resize(n + 1);
        t[n][0] = t[n][n] = 1;
        for (std::size_t k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
}

// independent oracle: count m-bit masks with more than `threshold` ones
std::uint64_t tail_bruteforce(std::size_t m, double threshold) {
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask)
        if (double(__builtin_popcountll(mask)) > threshold) ++count;
    return count;
}

}  // namespace

TEST_CASE("hamming_distance basics") {
    CHECK(hamming_distance(BitString::parse("101"), BitString::parse("101")) == 0);
    CHECK(hamming_distance(BitString::parse("000"), BitString::parse("111")) == 3);
    CHECK(hamming_distance(BitString::parse("1011"), BitString::parse("0010")) == 2);
    CHECK_THROWS_WITH(hamming_distance(BitString::parse("10"), BitString::parse("101")),
                      "unequal lengths");
}

TEST_CASE("hamming_distance is a metric on random triples") {
    Rng rng(20240901);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + std::size_t(rng.below(64));
        BitString x = rng.bits(n), y = rng.bits(n), z = rng.bits(n);
        CHECK(hamming_distance(x, x) == 0);
        CHECK(hamming_distance(x, y) == hamming_distance(y, x));
        CHECK(hamming_distance(x, z) <= hamming_distance(x, y) + hamming_distance(y, z));
        if (x != y) CHECK(hamming_distance(x, y) > 0);
    }
}

TEST_CASE("binomial against Pascal recurrence") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(20, 10) == 184756);
    CHECK(binomial(5, 9) == 0);

    auto t = pascal_triangle(64);
    for (std::size_t n = 0; n <= 64; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == Nat(t[n][k]));
}

TEST_CASE("binomial satisfies Pascal's identity") {
    for (std::size_t n = 1; n <= 64; ++n)
        for (std::size_t k = 1; k < n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("binomial_prefix_sum matches term-by-term sums") {
    for (std::size_t n = 0; n <= 40; ++n) {
        Nat acc = 0;
        for (std::size_t t = 0; t <= n; ++t) {
            acc += binomial(n, t);
            CHECK(binomial_prefix_sum(n, t) == acc);
        }
        CHECK(binomial_prefix_sum(n, n + 7) == pow2(n));
    }
}

TEST_CASE("h_bound") {
    ApproxParams quarter{0.25, LogBase::natural};
    CHECK(h_bound(1, quarter) == 0.0);
    CHECK_THAT(h_bound(4, quarter), Catch::Matchers::WithinAbs(1.1774100225154747, 1e-9));
    CHECK_THAT(h_bound(100, {1.0, LogBase::natural}),
               Catch::Matchers::WithinAbs(21.459660262893472, 1e-9));
    CHECK_THROWS_WITH(h_bound(0, quarter), "undefined");
    CHECK_THROWS_AS(h_bound(10, {0.0, LogBase::natural}), std::invalid_argument);
}

TEST_CASE("p_bound") {
    ApproxParams quarter{0.25, LogBase::natural};
    CHECK_THAT(p_bound(2, quarter), Catch::Matchers::WithinAbs(0.8325546111576977, 1e-9));
    CHECK_THAT(p_bound(16, quarter), Catch::Matchers::WithinAbs(13.320873778523163, 1e-9));
    CHECK_THROWS_WITH(p_bound(1, quarter), "undefined");
    CHECK_THROWS_AS(p_bound(10, {0.0, LogBase::natural}), std::invalid_argument);
}

TEST_CASE("tail_count pinned values") {
    CHECK(tail_count(3, 2) == 1);
    CHECK(tail_count(3, 1.5) == 4);
    CHECK(tail_count(4, 4) == 0);
    CHECK(tail_count(5, -0.5) == 32);
    CHECK(tail_count(0, 0) == 0);
}

TEST_CASE("tail_count equals brute force for all m <= 20, integer thresholds") {
    for (std::size_t m = 0; m <= 20; ++m)
        for (long t = -1; t <= long(m); ++t)
            CHECK(tail_count(m, double(t)) == Nat(tail_bruteforce(m, double(t))));
}

TEST_CASE("tail_count non-increasing in threshold") {
    for (std::size_t m : {5u, 11u, 17u}) {
        Nat prev = tail_count(m, -1.0);
        for (double t = -0.5; t <= double(m) + 1.0; t += 0.25) {
            Nat cur = tail_count(m, t);
            CHECK(cur <= prev);
            prev = cur;
        }
    }
}

TEST_CASE("lemma1_ratio") {
    // tail_count(3, 2 + H(4, 0.1)) = 1 by enumeration, so the ratio reduces
    // to P(4, 0.1)/16
    ApproxParams tenth{0.1, LogBase::natural};
    CHECK(tail_count(3, 2.0 + h_bound(4, tenth)) == 1);
    CHECK_THAT(lemma1_ratio(4, tenth),
               Catch::Matchers::WithinAbs(0.040516483231455534, 1e-12));

    // once H reaches n/2 the tail is empty and the ratio collapses to zero
    ApproxParams huge{80.0, LogBase::natural};
    REQUIRE(h_bound(4, huge) >= 2.0);
    CHECK(tail_count(3, 2.0 + h_bound(4, huge)) == 0);
    CHECK(lemma1_ratio(4, huge) == 0.0);

    // exact-arithmetic spot check at n = 32 against an independently summed tail
    ApproxParams quarter{0.25, LogBase::natural};
    double threshold = 16.0 + h_bound(32, quarter);
    Nat expected_tail = 0;
    for (std::size_t j = 0; j <= 31; ++j)
        if (double(j) > threshold) expected_tail += binomial(31, j);
    CHECK(tail_count(31, threshold) == expected_tail);
    double expected = ratio_as_double(expected_tail, pow2(32)) * p_bound(32, quarter);
    CHECK_THAT(lemma1_ratio(32, quarter), Catch::Matchers::WithinAbs(expected, 1e-15));
    CHECK(lemma1_ratio(32, quarter) > 0.0);
}

TEST_CASE("ball_radius") {
    ApproxParams quarter{0.25, LogBase::natural};
    CHECK(ball_radius(0, quarter) == 0);
    CHECK(ball_radius(1, quarter) == 0);
    CHECK(ball_radius(10, quarter) == 7);
    CHECK(ball_radius(10, {0.1, LogBase::natural}) == 6);
    CHECK(ball_radius(14, quarter) == 10);
}

TEST_CASE("binomial cache is safe under concurrent growth") {
    std::vector<std::thread> threads;
    std::atomic<bool> ok{true};
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([t, &ok] {
            for (std::size_t n = 0; n <= 200; ++n) {
                std::size_t k = (n + std::size_t(t)) % (n + 1);
                if (binomial(n, k) != binomial(n, n - k)) ok = false;
            }
        });
    }
    for (auto& th : threads) th.join();
    CHECK(ok);
}
