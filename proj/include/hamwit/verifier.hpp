#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "hamwit/universe.hpp"

namespace hamwit {

// Total deterministic predicate over fixed-length witnesses.
class Verifier {
  public:
    virtual ~Verifier() = default;
    virtual std::size_t witness_length() const = 0;
    virtual bool accepts(const BitString& w) const = 0;
    virtual std::string label() const { return "verifier"; }
};

using VerifierPtr = std::shared_ptr<const Verifier>;

class FnVerifier final : public Verifier {
  public:
    FnVerifier(std::size_t length, std::function<bool(const BitString&)> pred,
               std::string label = "fn")
        : length_(length), pred_(std::move(pred)), label_(std::move(label)) {}

    std::size_t witness_length() const override { return length_; }
    bool accepts(const BitString& w) const override {
        if (w.length() != length_) throw std::invalid_argument("witness length mismatch");
        return pred_(w);
    }
    std::string label() const override { return label_; }

  private:
    std::size_t length_;
    std::function<bool(const BitString&)> pred_;
    std::string label_;
};

// Verifier over the compacted universe [u']: accepts w' iff w' is a member
// of [u'] and the inner verifier accepts phi(w'), where phi maps the i-th
// element of [u'] to the i-th element of N(a) cap [u]. phi is evaluated
// lazily per query; restriction chains nest without flattening.
class RestrictedVerifier final : public Verifier {
  public:
    RestrictedVerifier(VerifierPtr inner, Universe parent, Ball ball)
        : inner_(std::move(inner)),
          parent_(std::move(parent)),
          ball_(std::move(ball)),
          child_(make_child(parent_, ball_)) {}

    std::size_t witness_length() const override { return child_.n_u; }

    bool accepts(const BitString& w_prime) const override {
        if (w_prime.length() != child_.n_u)
            throw std::invalid_argument("witness length mismatch");
        if (w_prime.value() >= child_.u) return false;
        return inner_->accepts(phi(w_prime));
    }

    std::string label() const override { return inner_->label() + "|restricted"; }

    // phi(w') = the (value(w')+1)-th member of N(a) cap [u]
    BitString phi(const BitString& w_prime) const {
        if (w_prime.length() != child_.n_u || w_prime.value() >= child_.u)
            throw std::invalid_argument("not a member");
        return unrank(parent_, ball_, w_prime.value() + 1);
    }

    // phi^{-1}(w) as a child-universe string; w must lie in N(a) cap [u]
    BitString phi_inverse(const BitString& w) const {
        if (!parent_.contains(w) || hamming_distance(w, ball_.center) > ball_.radius)
            throw std::invalid_argument("not in restricted universe");
        Nat rank = ball_rank_upto(parent_, ball_, w);
        return BitString::from_value(rank - 1, child_.n_u);
    }

    const Verifier& inner() const { return *inner_; }
    VerifierPtr inner_ptr() const { return inner_; }
    const Universe& parent() const { return parent_; }
    const Ball& ball() const { return ball_; }
    const Universe& child() const { return child_; }

  private:
    static Universe make_child(const Universe& parent, const Ball& ball) {
        Nat count = ball_universe_count(parent, ball);
        if (count == 0) throw std::invalid_argument("empty restriction");
        return Universe(count);
    }

    VerifierPtr inner_;
    Universe parent_;
    Ball ball_;
    Universe child_;
};

inline std::shared_ptr<const RestrictedVerifier> restrict_verifier(VerifierPtr inner,
                                                                   Universe univ, Ball ball) {
    return std::make_shared<const RestrictedVerifier>(std::move(inner), std::move(univ),
                                                      std::move(ball));
}

inline BitString phi_apply(const RestrictedVerifier& rv, const BitString& w_prime) {
    return rv.phi(w_prime);
}

}  // namespace hamwit
