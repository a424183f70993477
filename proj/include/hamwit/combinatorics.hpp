#pragma once

#include <atomic>
#include <cmath>
#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hamwit/nat.hpp"

namespace hamwit {

enum class LogBase { natural, base2 };

// Shared knobs of the quantitative bounds: the constant alpha and the log
// convention used inside H and P.
struct ApproxParams {
    double alpha = 0.25;
    LogBase log_base = LogBase::natural;
};

inline double log_of(std::size_t n, LogBase base) {
    double ln = std::log(double(n));
    return base == LogBase::natural ? ln : ln / std::log(2.0);
}

// H(n, alpha) = sqrt(alpha * n * log n)
inline double h_bound(std::size_t n, const ApproxParams& params) {
    if (params.alpha <= 0) throw std::invalid_argument("alpha must be positive");
    if (n == 0) throw std::domain_error("undefined");
    return std::sqrt(params.alpha * double(n) * log_of(n, params.log_base));
}

// P(n, alpha) = n^{4 alpha} * sqrt(alpha * log n)
inline double p_bound(std::size_t n, const ApproxParams& params) {
    if (params.alpha <= 0) throw std::invalid_argument("alpha must be positive");
    if (n < 2) throw std::domain_error("undefined");
    double lg = log_of(n, params.log_base);
    return std::pow(double(n), 4.0 * params.alpha) * std::sqrt(params.alpha * lg);
}

// Ball radius used by the universe-shrinking decision procedure:
// floor(n_u/2 + H(n_u, alpha)); 0 for the empty-string universe.
inline std::size_t ball_radius(std::size_t n_u, const ApproxParams& params) {
    if (n_u == 0) return 0;
    double d = double(n_u) / 2.0 + h_bound(n_u, params);
    return static_cast<std::size_t>(std::floor(d));
}

namespace detail {

// Memoized binomial rows, built multiplicatively on demand; rows are
// immutable once published, so concurrent readers only contend on growth.
class BinomialCache {
  public:
    static BinomialCache& instance() {
        static BinomialCache cache;
        return cache;
    }

    std::size_t cap() const { return cap_.load(std::memory_order_relaxed); }
    void set_cap(std::size_t cap) { cap_.store(cap, std::memory_order_relaxed); }

    Nat choose(std::size_t n, std::size_t k) const {
        if (k > n) return 0;
        const Row& row = locate(n);
        return row.coeff[std::min(k, n - k)];
    }

    // sum_{j=0}^{min(t,n)} C(n, j)
    Nat prefix_sum(std::size_t n, std::size_t t) const {
        const Row& row = locate(n);
        return row.cumulative[std::min(t, n)];
    }

  private:
    struct Row {
        std::vector<Nat> coeff;       // C(n, 0..floor(n/2)); symmetric half
        std::vector<Nat> cumulative;  // sum_{j<=t} C(n, j) for t = 0..n
    };

    const Row& locate(std::size_t n) const {
        if (n > cap_.load(std::memory_order_relaxed))
            throw std::invalid_argument("binomial table cap exceeded");
        {
            std::shared_lock lock(mutex_);
            auto it = rows_.find(n);
            if (it != rows_.end()) return it->second;
        }
        Row row = build(n);
        std::unique_lock lock(mutex_);
        return rows_.try_emplace(n, std::move(row)).first->second;
    }

    static Row build(std::size_t n) {
        Row row;
        row.coeff.resize(n / 2 + 1);
        Nat c = 1;
        row.coeff[0] = c;
        for (std::size_t k = 1; k <= n / 2; ++k) {
            c *= Nat(n - k + 1);
            c /= Nat(k);
            row.coeff[k] = c;
        }
        row.cumulative.resize(n + 1);
        Nat acc = 0;
        for (std::size_t t = 0; t <= n; ++t) {
            acc += row.coeff[std::min(t, n - t)];
            row.cumulative[t] = acc;
        }
        return row;
    }

    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<std::size_t, Row> rows_;
    std::atomic<std::size_t> cap_{4096};
};

}  // namespace detail

// C(n, k); 0 when k > n. Exact at any magnitude up to the table cap.
inline Nat binomial(std::size_t n, std::size_t k) {
    return detail::BinomialCache::instance().choose(n, k);
}

// sum_{j=0}^{min(t,n)} C(n, j)
inline Nat binomial_prefix_sum(std::size_t n, std::size_t t) {
    return detail::BinomialCache::instance().prefix_sum(n, t);
}

inline void set_binomial_cap(std::size_t cap) {
    detail::BinomialCache::instance().set_cap(cap);
}

// Number of m-bit strings with strictly more than `threshold` ones.
inline Nat tail_count(std::size_t m, double threshold) {
    if (threshold < 0) return pow2(m);
    if (threshold >= double(m)) return 0;
    // smallest integer j with j > threshold; here 1 <= j0 <= m
    auto j0 = static_cast<std::size_t>(std::floor(threshold)) + 1;
    if (j0 > m) return 0;
    return pow2(m) - binomial_prefix_sum(m, j0 - 1);
}

// tail_count(n-1, n/2 + H(n,a)) * P(n,a) / 2^n: the quantity whose positive
// lower bound drives the universe-shrinking argument.
inline double lemma1_ratio(std::size_t n, const ApproxParams& params) {
    double threshold = double(n) / 2.0 + h_bound(n, params);
    Nat tail = tail_count(n - 1, threshold);
    return ratio_as_double(tail, pow2(n)) * p_bound(n, params);
}

}  // namespace hamwit
