#include <catch2/catch_amalgamated.hpp>

#include "hamwit/testkit.hpp"
#include "hamwit/universe.hpp"
#include "hamwit/verifier.hpp"

using namespace hamwit;

TEST_CASE("universe shape") {
    CHECK(Universe(Nat(1)).n_u == 0);
    CHECK(Universe(Nat(2)).n_u == 1);
    CHECK(Universe(Nat(3)).n_u == 2);
    CHECK(Universe(Nat(4)).n_u == 2);
    CHECK(Universe(Nat(6)).n_u == 3);
    CHECK(Universe(Nat(8)).n_u == 3);
    CHECK(Universe::full(10).u == 1024);
    CHECK_THROWS_AS(Universe(Nat(0)), std::invalid_argument);

    Universe u6{Nat(6)};
    CHECK(u6.contains(BitString::parse("101")));
    CHECK_FALSE(u6.contains(BitString::parse("110")));
    CHECK_FALSE(u6.contains(BitString::parse("0101")));
}

TEST_CASE("ball_prefix_count examples") {
    BitString a = BitString::parse("101");
    CHECK(ball_prefix_count(3, a, 1, BitString::parse("1")) == 3);
    CHECK(ball_prefix_count(3, a, 3, BitString()) == 8);
    CHECK(ball_prefix_count(3, a, 0, BitString::parse("0")) == 0);
    CHECK_THROWS_AS(ball_prefix_count(3, a, 1, BitString::parse("0110")), std::invalid_argument);
}

TEST_CASE("ball_prefix_count against enumeration") {
    Rng rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n_u = 1 + std::size_t(rng.below(10));
        BitString a = rng.bits(n_u);
        std::size_t d = std::size_t(rng.below(n_u + 1));
        std::size_t plen = std::size_t(rng.below(n_u + 1));
        BitString s = rng.bits(plen);
        Nat expect = 0;
        for (std::uint64_t val = 0; val < (std::uint64_t(1) << n_u); ++val) {
            BitString w = BitString::from_value_u64(val, n_u);
            if (w.prefix(plen) == s && hamming_distance(w, a) <= d) ++expect;
        }
        CHECK(ball_prefix_count(n_u, a, d, s) == expect);
    }
}

TEST_CASE("ball_universe_count examples") {
    Universe u6{Nat(6)};
    Ball ball{BitString::parse("000"), 1};
    CHECK(ball_universe_count(u6, ball) == 4);

    Universe full = Universe::full(3);
    CHECK(ball_universe_count(full, Ball{BitString::parse("000"), 3}) == 8);
    CHECK(ball_universe_count(full, Ball{BitString::parse("000"), 1}) == 4);
}

TEST_CASE("ball_rank_upto examples") {
    Universe full = Universe::full(3);
    Ball ball{BitString::parse("000"), 1};
    CHECK(ball_rank_upto(full, ball, BitString::parse("010")) == 3);
    CHECK(ball_rank_upto(full, Ball{BitString::parse("000"), 3}, BitString::parse("111")) == 8);
    CHECK(ball_rank_upto(full, Ball{BitString::parse("000"), 0}, BitString::parse("000")) == 1);
}

TEST_CASE("counting agrees with brute force on random triples") {
    Rng rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t n_u = 1 + std::size_t(rng.below(10));
        std::uint64_t lo = n_u == 1 ? 1 : (std::uint64_t(1) << (n_u - 1));
        std::uint64_t u = lo + 1 + rng.below((std::uint64_t(1) << n_u) - lo);
        if (u > (std::uint64_t(1) << n_u)) u = std::uint64_t(1) << n_u;
        Universe univ{Nat(u)};
        REQUIRE(univ.n_u == n_u);
        BitString a = rng.bits(n_u);
        std::size_t d = std::size_t(rng.below(n_u + 2));
        Ball ball{a, d};

        auto members = testkit::ball_members_bruteforce(n_u, a, d, u);
        CHECK(ball_universe_count(univ, ball) == Nat(members.size()));

        BitString z = rng.bits(n_u);
        std::size_t expect_rank = 0;
        for (std::uint64_t val = 0; val <= z.value().convert_to<std::uint64_t>(); ++val) {
            BitString w = BitString::from_value_u64(val, n_u);
            if (hamming_distance(w, a) <= d) ++expect_rank;
        }
        CHECK(ball_rank_upto(univ, ball, z) == Nat(expect_rank));
    }
}

TEST_CASE("unrank examples") {
    Universe u6{Nat(6)};
    Ball ball{BitString::parse("000"), 1};
    CHECK(unrank(u6, ball, 4) == BitString::parse("100"));
    CHECK(unrank(u6, ball, 1) == BitString::parse("000"));
    CHECK_THROWS_WITH(unrank(u6, ball, 0), "rank out of bounds");
    CHECK_THROWS_WITH(unrank(u6, ball, 5), "rank out of bounds");
}

TEST_CASE("rank/unrank roundtrip and monotonicity, exhaustive small sizes") {
    Rng rng(13);
    for (std::size_t n_u = 1; n_u <= 8; ++n_u) {
        std::uint64_t lo = n_u == 1 ? 1 : (std::uint64_t(1) << (n_u - 1));
        for (std::size_t d = 0; d <= n_u; ++d) {
            for (int rep = 0; rep < 4; ++rep) {
                std::uint64_t u = lo + 1 + rng.below((std::uint64_t(1) << n_u) - lo);
                Universe univ{Nat(u)};
                BitString a = rng.bits(n_u);
                Ball ball{a, d};
                auto members = testkit::ball_members_bruteforce(n_u, a, d, u);
                Nat count = ball_universe_count(univ, ball);
                REQUIRE(count == Nat(members.size()));
                for (std::size_t i = 1; i <= members.size(); ++i) {
                    BitString w = unrank(univ, ball, Nat(i));
                    CHECK(w == members[i - 1]);
                    CHECK(ball_rank_upto(univ, ball, w) == Nat(i));
                }
            }
        }
    }
}

TEST_CASE("telescoping identity: rank of last member equals the count") {
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n_u = 1 + std::size_t(rng.below(9));
        std::uint64_t lo = n_u == 1 ? 1 : (std::uint64_t(1) << (n_u - 1));
        std::uint64_t u = lo + 1 + rng.below((std::uint64_t(1) << n_u) - lo);
        Universe univ{Nat(u)};
        Ball ball{rng.bits(n_u), std::size_t(rng.below(n_u + 1))};
        BitString last = BitString::from_value(Nat(u) - 1, n_u);
        CHECK(ball_rank_upto(univ, ball, last) == ball_universe_count(univ, ball));
    }
}

TEST_CASE("restriction and phi") {
    // inner accepts only 100; restricting to (u=6, a=000, d=1) leaves a
    // 4-element child universe whose only accepted string is 11
    auto inner = std::make_shared<FnVerifier>(
        3, [](const BitString& w) { return w == BitString::parse("100"); });
    Universe u6{Nat(6)};
    Ball ball{BitString::parse("000"), 1};
    auto rv = restrict_verifier(inner, u6, ball);

    CHECK(rv->child().u == 4);
    CHECK(rv->witness_length() == 2);
    CHECK(phi_apply(*rv, BitString::parse("11")) == BitString::parse("100"));
    CHECK(phi_apply(*rv, BitString::parse("00")) == unrank(u6, ball, 1));
    CHECK_THROWS_WITH(phi_apply(*rv, BitString::parse("0011")), "not a member");

    CHECK(rv->accepts(BitString::parse("11")));
    CHECK_FALSE(rv->accepts(BitString::parse("00")));
    CHECK_FALSE(rv->accepts(BitString::parse("01")));
    CHECK_FALSE(rv->accepts(BitString::parse("10")));

    // empty inner stays empty
    auto never = std::make_shared<FnVerifier>(3, [](const BitString&) { return false; });
    auto rv_never = restrict_verifier(never, u6, ball);
    for (std::uint64_t val = 0; val < 4; ++val)
        CHECK_FALSE(rv_never->accepts(BitString::from_value_u64(val, 2)));

    // identity restriction: whole universe within radius n_u
    auto all = std::make_shared<FnVerifier>(3, [](const BitString&) { return true; });
    Universe full = Universe::full(3);
    auto rv_all = restrict_verifier(all, full, Ball{BitString::parse("000"), 3});
    CHECK(rv_all->child().u == 8);
    for (std::uint64_t val = 0; val < 8; ++val)
        CHECK(rv_all->accepts(BitString::from_value_u64(val, 3)));

    // an empty child universe is rejected outright: the only member of the
    // radius-0 ball around 11 lies outside [3] = {00, 01, 10}
    auto any = std::make_shared<FnVerifier>(2, [](const BitString&) { return true; });
    CHECK_THROWS_WITH(restrict_verifier(any, Universe{Nat(3)}, Ball{BitString::parse("11"), 0}),
                      "empty restriction");
}

TEST_CASE("witness preservation through restriction, exhaustive") {
    // for accept sets inside [u] cap N(a), restriction preserves cardinality
    // and phi maps the restricted accept set onto the original one
    Rng rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n_u = 2 + std::size_t(rng.below(7));  // 2..8
        std::uint64_t lo = std::uint64_t(1) << (n_u - 1);
        std::uint64_t u = lo + 1 + rng.below(lo);
        Universe univ{Nat(u)};
        BitString a = rng.bits(n_u);
        std::size_t d = std::size_t(rng.below(n_u + 1));
        Ball ball{a, d};
        auto members = testkit::ball_members_bruteforce(n_u, a, d, u);
        if (members.empty()) continue;

        // random subset of the ball members as the accept set
        std::set<BitString> accept;
        for (const BitString& w : members)
            if (rng.coin()) accept.insert(w);

        auto inner = std::make_shared<FnVerifier>(
            n_u, [accept](const BitString& w) { return accept.count(w) != 0; });
        auto rv = restrict_verifier(inner, univ, ball);

        std::set<BitString> image;
        for (std::uint64_t val = 0; val < members.size(); ++val) {
            BitString w_prime = BitString::from_value_u64(val, rv->child().n_u);
            if (rv->accepts(w_prime)) image.insert(phi_apply(*rv, w_prime));
        }
        CHECK(image == accept);
    }
}

TEST_CASE("nested restrictions compose") {
    // restrict twice and check membership against double brute force
    auto inner = std::make_shared<FnVerifier>(
        4, [](const BitString& w) { return w.weight() == 1; });
    Universe top = Universe::full(4);
    Ball b1{BitString::parse("0000"), 2};
    auto rv1 = restrict_verifier(inner, top, b1);
    Universe mid = rv1->child();
    Ball b2{BitString::from_value(Nat(0), mid.n_u), mid.n_u >= 1 ? mid.n_u - 1 : 0};
    auto rv2 = restrict_verifier(rv1, mid, b2);

    std::size_t hits = 0;
    for (std::uint64_t val = 0; val < rv2->child().u; ++val) {
        BitString w2 = BitString::from_value_u64(val, rv2->child().n_u);
        if (rv2->accepts(w2)) {
            BitString w0 = phi_apply(*rv1, phi_apply(*rv2, w2));
            CHECK(w0.weight() == 1);
            ++hits;
        }
    }
    // every weight-1 string of 4 bits lies in both balls' survivors or not;
    // recompute expectation by direct scan
    std::size_t expect = 0;
    auto members1 = testkit::ball_members_bruteforce(4, b1.center, b1.radius, 16);
    for (std::size_t i = 0; i < members1.size(); ++i) {
        if (members1[i].weight() != 1) continue;
        BitString w1 = BitString::from_value_u64(i, mid.n_u);
        if (hamming_distance(w1, b2.center) <= b2.radius) ++expect;
    }
    CHECK(hits == expect);
}
