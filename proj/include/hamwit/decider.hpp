#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hamwit/rng.hpp"
#include "hamwit/verifier.hpp"

namespace hamwit {

// Simulated Hamming-approximation oracle. A compliant oracle answers within
// ball_radius(n_u, params) of some accepted witness whenever one exists; when
// no witness exists any answer is allowed.
class ApproxOracle {
  public:
    virtual ~ApproxOracle() = default;
    virtual BitString answer(const Verifier& v, std::size_t n_u, const ApproxParams& params) = 0;
};

struct DeciderConfig {
    ApproxParams params{};
    std::function<Nat(std::size_t)> base_case_cap = [](std::size_t n) {
        return Nat(std::max<std::size_t>(64, n * n));
    };
    Nat enumeration_cap = Nat(1) << 20;
};

struct RunTrace {
    std::size_t recursion_count = 0;
    std::vector<Nat> u_sequence;
    std::size_t oracle_calls = 0;
    bool outcome = false;
    bool fallback_used = false;
};

// u values are emitted as decimal strings; they need not fit in 64 bits.
inline void to_json(nlohmann::json& j, const RunTrace& t) {
    std::vector<std::string> us;
    us.reserve(t.u_sequence.size());
    for (const Nat& u : t.u_sequence) us.push_back(u.str());
    j = nlohmann::json{{"recursion_count", t.recursion_count},
                       {"u_sequence", us},
                       {"oracle_calls", t.oracle_calls},
                       {"outcome", t.outcome},
                       {"fallback_used", t.fallback_used}};
}

namespace detail {

inline bool enumerate_universe(const Universe& univ, const Verifier& v) {
    for (Nat val = 0; val < univ.u; ++val)
        if (v.accepts(BitString::from_value(val, univ.n_u))) return true;
    return false;
}

}  // namespace detail

// The universe-shrinking decision procedure. Given an oracle that is
// compliant for v, returns true iff v accepts some witness; regardless of
// the oracle it never returns true when no witness exists. Precondition:
// the accept set of v is a subset of [univ.u].
inline std::pair<bool, RunTrace> check_universe(std::size_t n, Universe univ, VerifierPtr v,
                                                ApproxOracle& oracle, const DeciderConfig& cfg) {
    RunTrace trace;
    trace.u_sequence.push_back(univ.u);
    for (;;) {
        if (univ.u <= cfg.base_case_cap(n)) {
            trace.outcome = detail::enumerate_universe(univ, *v);
            return {trace.outcome, trace};
        }
        BitString a = oracle.answer(*v, univ.n_u, cfg.params);
        ++trace.oracle_calls;
        if (a.length() != univ.n_u) throw std::runtime_error("malformed oracle answer");
        Ball ball{std::move(a), ball_radius(univ.n_u, cfg.params)};
        Nat shrunk = ball_universe_count(univ, ball);
        if (shrunk == 0) {
            // no candidate survives; a compliant oracle rules out any witness
            trace.outcome = false;
            return {trace.outcome, trace};
        }
        if (shrunk == univ.u) {
            // the ball excluded nothing (possible when the radius reaches n_u
            // or every member is already close to a); enumerate instead
            if (univ.u > cfg.enumeration_cap) throw std::runtime_error("cannot shrink");
            trace.fallback_used = true;
            trace.outcome = detail::enumerate_universe(univ, *v);
            return {trace.outcome, trace};
        }
        v = restrict_verifier(std::move(v), univ, std::move(ball));
        univ = Universe(shrunk);
        ++trace.recursion_count;
        trace.u_sequence.push_back(univ.u);
    }
}

// Try each witness length 0..max_len; accept iff some length checks out.
inline std::pair<bool, std::vector<RunTrace>> decide(
    const std::function<VerifierPtr(std::size_t)>& family, std::size_t max_len,
    ApproxOracle& oracle, const DeciderConfig& cfg) {
    std::vector<RunTrace> traces;
    bool found = false;
    for (std::size_t n = 0; n <= max_len; ++n) {
        VerifierPtr v = family(n);
        auto [ok, trace] = check_universe(n, Universe::full(n), std::move(v), oracle, cfg);
        traces.push_back(std::move(trace));
        if (ok) {
            found = true;
            break;
        }
    }
    return {found, traces};
}

enum class FlipPolicy { exact_max, uniform_up_to_max, zero };

// Compliant oracle for planted-witness experiments. It keeps the original
// planted witness and recovers its image under the current restriction chain
// by applying phi^{-1} level by level, so the decider itself never sees the
// plant. The answer is the image with a policy-dependent number of bits
// flipped, which keeps it within the guarantee radius.
class PlantedOracle final : public ApproxOracle {
  public:
    PlantedOracle(std::optional<BitString> plant, FlipPolicy policy, std::uint64_t seed)
        : plant_(std::move(plant)), policy_(policy), rng_(seed) {}

    BitString answer(const Verifier& v, std::size_t n_u, const ApproxParams& params) override {
        std::optional<BitString> image = tracked_image(v);
        if (!image) return rng_.bits(n_u);  // guarantee is vacuous
        if (image->length() != n_u) throw std::runtime_error("tracking broken");
        std::size_t budget = std::min(ball_radius(n_u, params), n_u);
        std::size_t flips = 0;
        switch (policy_) {
            case FlipPolicy::zero: flips = 0; break;
            case FlipPolicy::exact_max: flips = budget; break;
            case FlipPolicy::uniform_up_to_max: flips = std::size_t(rng_.below(budget + 1)); break;
        }
        BitString out = *image;
        for (std::size_t pos : rng_.distinct_positions(n_u, flips)) out.flip(pos);
        return out;
    }

  private:
    // Walk the restriction chain from the base upward, mapping the plant into
    // the current universe. Returns nullopt when the plant does not apply to
    // this verifier (different base witness length, or no plant at all).
    std::optional<BitString> tracked_image(const Verifier& v) const {
        std::vector<const RestrictedVerifier*> levels;
        const Verifier* cur = &v;
        while (auto* r = dynamic_cast<const RestrictedVerifier*>(cur)) {
            levels.push_back(r);
            cur = &r->inner();
        }
        if (!plant_ || cur->witness_length() != plant_->length()) return std::nullopt;
        BitString image = *plant_;
        for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
            const RestrictedVerifier& level = **it;
            if (!level.parent().contains(image) ||
                hamming_distance(image, level.ball().center) > level.ball().radius)
                throw std::runtime_error("tracking broken");
            image = level.phi_inverse(image);
        }
        return image;
    }

    std::optional<BitString> plant_;
    FlipPolicy policy_;
    mutable Rng rng_;
};

// Ignores every guarantee: arbitrary seeded strings of the right length.
class AdversarialOracle final : public ApproxOracle {
  public:
    explicit AdversarialOracle(std::uint64_t seed) : rng_(seed) {}
    BitString answer(const Verifier&, std::size_t n_u, const ApproxParams&) override {
        return rng_.bits(n_u);
    }

  private:
    Rng rng_;
};

inline PlantedOracle planted_oracle(std::optional<BitString> plant, FlipPolicy policy,
                                    std::uint64_t seed) {
    return PlantedOracle(std::move(plant), policy, seed);
}

inline AdversarialOracle adversarial_noncompliant_oracle(std::uint64_t seed) {
    return AdversarialOracle(seed);
}

}  // namespace hamwit
