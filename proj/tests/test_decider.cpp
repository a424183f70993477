#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hamwit/decider.hpp"
#include "hamwit/testkit.hpp"

using namespace hamwit;

namespace {

VerifierPtr single_witness(const BitString& w) {
    return std::make_shared<FnVerifier>(w.length(), [w](const BitString& x) { return x == w; },
                                        "single");
}

VerifierPtr empty_verifier(std::size_t n) {
    return std::make_shared<FnVerifier>(n, [](const BitString&) { return false; }, "empty");
}

struct WrongLengthOracle final : ApproxOracle {
    BitString answer(const Verifier&, std::size_t n_u, const ApproxParams&) override {
        return BitString(n_u + 1);
    }
};

// u - u' must beat the tail bound at every non-fallback level
void check_shrinkage(const RunTrace& trace, const ApproxParams& params) {
    for (std::size_t i = 0; i + 1 < trace.u_sequence.size(); ++i) {
        const Nat& u = trace.u_sequence[i];
        const Nat& next = trace.u_sequence[i + 1];
        REQUIRE(next < u);
        std::size_t n_u = Universe(u).n_u;
        Nat bound = tail_count(n_u - 1, double(n_u) / 2.0 + h_bound(n_u, params));
        CHECK(u - next >= bound);
    }
}

}  // namespace

TEST_CASE("soundness: empty verifier is always rejected") {
    DeciderConfig cfg;
    AdversarialOracle oracle(42);
    auto [ok, trace] = check_universe(8, Universe::full(8), empty_verifier(8), oracle, cfg);
    CHECK_FALSE(ok);
    CHECK_FALSE(trace.outcome);
}

TEST_CASE("exact oracle finds a single planted witness") {
    BitString w = BitString::parse("101010");
    DeciderConfig cfg;
    PlantedOracle oracle(w, FlipPolicy::zero, 1);
    auto [ok, trace] = check_universe(6, Universe::full(6), single_witness(w), oracle, cfg);
    CHECK(ok);
    CHECK(trace.recursion_count <= 4);
}

TEST_CASE("worst-case compliant oracle still completes") {
    Rng rng(77);
    BitString w = rng.bits(10);
    DeciderConfig cfg;
    cfg.params = {0.25, LogBase::natural};
    PlantedOracle oracle(w, FlipPolicy::exact_max, 1234);
    auto [ok, trace] = check_universe(10, Universe::full(10), single_witness(w), oracle, cfg);
    CHECK(ok);
    CHECK(trace.recursion_count > 0);
    CHECK(trace.oracle_calls >= trace.recursion_count);
    check_shrinkage(trace, cfg.params);
}

TEST_CASE("planted oracle policies") {
    Rng rng(5);
    ApproxParams quarter{0.25, LogBase::natural};
    BitString w = rng.bits(10);
    auto v = single_witness(w);

    SECTION("zero policy returns the witness image itself") {
        PlantedOracle oracle(w, FlipPolicy::zero, 9);
        CHECK(oracle.answer(*v, 10, quarter) == w);
    }
    SECTION("exact_max flips exactly floor(n_u/2 + H) bits") {
        ApproxParams tenth{0.1, LogBase::natural};
        REQUIRE(ball_radius(10, tenth) == 6);
        PlantedOracle oracle(w, FlipPolicy::exact_max, 9);
        CHECK(hamming_distance(oracle.answer(*v, 10, tenth), w) == 6);

        REQUIRE(ball_radius(10, quarter) == 7);
        PlantedOracle oracle2(w, FlipPolicy::exact_max, 9);
        CHECK(hamming_distance(oracle2.answer(*v, 10, quarter), w) == 7);
    }
    SECTION("uniform policy stays within the radius") {
        PlantedOracle oracle(w, FlipPolicy::uniform_up_to_max, 9);
        for (int i = 0; i < 50; ++i)
            CHECK(hamming_distance(oracle.answer(*v, 10, quarter), w) <= 7);
    }
    SECTION("no plant means arbitrary answers of the right length") {
        PlantedOracle oracle(std::nullopt, FlipPolicy::exact_max, 9);
        CHECK(oracle.answer(*empty_verifier(10), 10, quarter).length() == 10);
    }
    SECTION("a chain whose ball excludes the plant breaks tracking") {
        Universe top = Universe::full(10);
        Ball miss{BitString::all_ones(10), 0};
        if (hamming_distance(miss.center, w) == 0) miss.center.flip(0);
        auto rv = restrict_verifier(v, top, miss);
        PlantedOracle oracle(w, FlipPolicy::zero, 9);
        CHECK_THROWS_WITH(oracle.answer(*rv, rv->child().n_u, quarter), "tracking broken");
    }
}

TEST_CASE("malformed oracle answers surface as errors") {
    DeciderConfig cfg;
    WrongLengthOracle oracle;
    CHECK_THROWS_WITH(check_universe(10, Universe::full(10), empty_verifier(10), oracle, cfg),
                      "malformed oracle answer");
}

TEST_CASE("no-progress fallback enumerates, and the cap is honored") {
    // radius >= n_u makes the ball cover everything
    DeciderConfig cfg;
    cfg.params = {4.0, LogBase::natural};
    cfg.base_case_cap = [](std::size_t) { return Nat(1); };
    REQUIRE(ball_radius(4, cfg.params) >= 4);

    BitString w = BitString::parse("0110");
    PlantedOracle oracle(w, FlipPolicy::zero, 3);
    auto [ok, trace] = check_universe(4, Universe::full(4), single_witness(w), oracle, cfg);
    CHECK(ok);
    CHECK(trace.fallback_used);

    cfg.enumeration_cap = 3;
    PlantedOracle oracle2(w, FlipPolicy::zero, 3);
    CHECK_THROWS_WITH(check_universe(4, Universe::full(4), single_witness(w), oracle2, cfg),
                      "cannot shrink");
}

TEST_CASE("adversarial oracle keeps soundness, forfeits only completeness") {
    DeciderConfig cfg;
    SECTION("no witness stays rejected") {
        AdversarialOracle oracle(1);
        auto [ok, trace] = check_universe(9, Universe::full(9), empty_verifier(9), oracle, cfg);
        CHECK_FALSE(ok);
    }
    SECTION("witnessed instance terminates with some boolean") {
        Rng rng(2);
        BitString w = rng.bits(9);
        AdversarialOracle oracle(3);
        auto [ok, trace] = check_universe(9, Universe::full(9), single_witness(w), oracle, cfg);
        CHECK((ok == true || ok == false));
        CHECK(trace.u_sequence.size() == trace.recursion_count + 1);
    }
}

TEST_CASE("soundness sweep: 1000 arbitrary-oracle trials never accept") {
    DeciderConfig cfg;
    for (std::uint64_t trial = 0; trial < 1000; ++trial) {
        std::uint64_t seed = derive_seed(0xabcdef12, trial);
        Rng rng(seed);
        std::size_t n = 4 + std::size_t(rng.below(9));  // 4..12
        bool adversarial = rng.coin();
        if (adversarial) {
            AdversarialOracle oracle(seed);
            auto [ok, trace] = check_universe(n, Universe::full(n), empty_verifier(n), oracle, cfg);
            CHECK_FALSE(ok);
        } else {
            PlantedOracle oracle(rng.bits(n), FlipPolicy::exact_max, seed);
            auto [ok, trace] = check_universe(n, Universe::full(n), empty_verifier(n), oracle, cfg);
            CHECK_FALSE(ok);
        }
    }
}

TEST_CASE("completeness sweep at small sizes") {
    DeciderConfig cfg;
    for (std::uint64_t trial = 0; trial < 60; ++trial) {
        std::uint64_t seed = derive_seed(0x51deca11, trial);
        Rng rng(seed);
        std::size_t n = 8 + std::size_t(rng.below(5));  // 8..12
        BitString w = rng.bits(n);
        PlantedOracle oracle(w, FlipPolicy::exact_max, seed);
        auto [ok, trace] = check_universe(n, Universe::full(n), single_witness(w), oracle, cfg);
        CHECK(ok);
        check_shrinkage(trace, cfg.params);
    }
}

TEST_CASE("decide sweeps witness lengths") {
    DeciderConfig cfg;
    BitString w = BitString::parse("011");
    auto family = [&](std::size_t n) -> VerifierPtr {
        if (n == 3) return single_witness(w);
        return empty_verifier(n);
    };
    PlantedOracle oracle(w, FlipPolicy::zero, 4);
    CHECK(decide(family, 5, oracle, cfg).first);

    auto empties = [](std::size_t n) { return empty_verifier(n); };
    PlantedOracle oracle2(w, FlipPolicy::zero, 4);
    CHECK_FALSE(decide(empties, 5, oracle2, cfg).first);

    PlantedOracle oracle3(w, FlipPolicy::zero, 4);
    CHECK_FALSE(decide(family, 2, oracle3, cfg).first);

    // n = 0: the empty string can itself be the witness
    auto zero_family = [](std::size_t n) -> VerifierPtr {
        return std::make_shared<FnVerifier>(n, [n](const BitString&) { return n == 0; });
    };
    PlantedOracle oracle4(BitString(), FlipPolicy::zero, 4);
    CHECK(decide(zero_family, 3, oracle4, cfg).first);
}

TEST_CASE("identical seed and config reproduce the trace exactly") {
    DeciderConfig cfg;
    Rng rng(31);
    BitString w = rng.bits(11);
    auto run = [&] {
        PlantedOracle oracle(w, FlipPolicy::exact_max, 999);
        return check_universe(11, Universe::full(11), single_witness(w), oracle, cfg);
    };
    auto [ok1, t1] = run();
    auto [ok2, t2] = run();
    CHECK(ok1 == ok2);
    CHECK(t1.recursion_count == t2.recursion_count);
    CHECK(t1.oracle_calls == t2.oracle_calls);
    CHECK(t1.u_sequence == t2.u_sequence);
    CHECK(t1.fallback_used == t2.fallback_used);
}

TEST_CASE("trace serializes to JSON with the trace fields") {
    RunTrace t;
    t.recursion_count = 2;
    t.u_sequence = {Nat(1) << 70, Nat(100), Nat(50)};
    t.oracle_calls = 3;
    t.outcome = true;
    t.fallback_used = false;
    nlohmann::json j = t;
    CHECK(j["recursion_count"] == 2);
    CHECK(j["oracle_calls"] == 3);
    CHECK(j["outcome"] == true);
    CHECK(j["fallback_used"] == false);
    CHECK(j["u_sequence"][0] == "1180591620717411303424");
    CHECK(j["u_sequence"][2] == "50");
}
