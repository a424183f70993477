#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "hamwit/cnf.hpp"
#include "hamwit/combinatorics.hpp"
#include "hamwit/graph.hpp"
#include "hamwit/rng.hpp"
#include "hamwit/verifier.hpp"

namespace hamwit {

// ---------------------------------------------------------------------------
// decision half-split and NAE-3SAT
// ---------------------------------------------------------------------------

// Decision problems over "subsets of size <= k" (or >= k): whenever a witness
// exists, the all-zeros (resp. all-ones) side is within n/2 of one.
inline BitString halfsplit_decision_approx(std::size_t n, std::size_t k) {
    if (k > n) throw std::invalid_argument("budget exceeds universe size");
    return 2 * k <= n ? BitString(n) : BitString::all_ones(n);
}

// NAE satisfying assignments come in complementary pairs, so all-False is
// within n/2 of one of them.
inline BitString nae3sat_allfalse(const CnfFormula& f) { return BitString(f.variable_count); }

// ---------------------------------------------------------------------------
// half-integral vertex-cover LP via bipartite doubling + Koenig
// ---------------------------------------------------------------------------

// Values are stored doubled (0/1/2) so all arithmetic stays exact.
struct HalfIntegralSolution {
    std::vector<int> doubled;

    std::size_t cost_doubled() const {
        std::size_t s = 0;
        for (int v : doubled) s += std::size_t(v);
        return s;
    }

    bool feasible_for(const Graph& g) const {
        for (auto [u, v] : g.edges)
            if (doubled[u] + doubled[v] < 2) return false;
        return true;
    }
};

namespace detail {

// Kuhn's augmenting-path matching on the doubled bipartite graph; vertices
// and neighbors are scanned in ascending order so ties always break toward
// the lowest index.
struct BipartiteCover {
    std::vector<char> left_in_cover;
    std::vector<char> right_in_cover;
};

inline BipartiteCover koenig_cover(const Graph& g) {
    std::size_t n = g.vertex_count;
    std::vector<std::vector<std::size_t>> adj(n);  // left v -> right neighbors
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<long> match_left(n, -1), match_right(n, -1);
    std::vector<char> visited(n, 0);
    std::function<bool(std::size_t)> try_augment = [&](std::size_t u) -> bool {
        for (std::size_t v : adj[u]) {
            if (visited[v]) continue;
            visited[v] = 1;
            if (match_right[v] < 0 || try_augment(std::size_t(match_right[v]))) {
                match_left[u] = long(v);
                match_right[v] = long(u);
                return true;
            }
        }
        return false;
    };
    for (std::size_t u = 0; u < n; ++u) {
        std::fill(visited.begin(), visited.end(), 0);
        try_augment(u);
    }

    // Koenig: alternating reachability from unmatched left vertices; the
    // minimum cover is (L \ Z) on the left plus (R cap Z) on the right.
    std::vector<char> zl(n, 0), zr(n, 0);
    std::vector<std::size_t> queue;
    for (std::size_t u = 0; u < n; ++u)
        if (match_left[u] < 0) {
            zl[u] = 1;
            queue.push_back(u);
        }
    while (!queue.empty()) {
        std::size_t u = queue.back();
        queue.pop_back();
        for (std::size_t v : adj[u]) {
            if (zr[v]) continue;
            zr[v] = 1;
            long w = match_right[v];
            if (w >= 0 && !zl[std::size_t(w)]) {
                zl[std::size_t(w)] = 1;
                queue.push_back(std::size_t(w));
            }
        }
    }
    BipartiteCover cover{std::vector<char>(n, 0), std::vector<char>(n, 0)};
    for (std::size_t v = 0; v < n; ++v) {
        cover.left_in_cover[v] = !zl[v];
        cover.right_in_cover[v] = zr[v];
    }
    return cover;
}

}  // namespace detail

// Optimal half-integral solution of the vertex-cover LP relaxation, computed
// combinatorially: double the graph into a bipartite one, take a minimum
// bipartite vertex cover (Koenig), and set y_v to half the number of copies
// of v in that cover.
inline HalfIntegralSolution half_integral_lp_optimum(const Graph& g) {
    detail::BipartiteCover cover = detail::koenig_cover(g);
    HalfIntegralSolution y;
    y.doubled.resize(g.vertex_count, 0);
    for (std::size_t v = 0; v < g.vertex_count; ++v)
        y.doubled[v] = int(cover.left_in_cover[v]) + int(cover.right_in_cover[v]);
    return y;
}

// Support of the optimal LP solution: contains some minimum cover and has at
// most twice its size, hence is within n/2 of it.
inline std::vector<std::size_t> nt_vertex_cover_approx(const Graph& g) {
    HalfIntegralSolution y = half_integral_lp_optimum(g);
    std::vector<std::size_t> support;
    for (std::size_t v = 0; v < g.vertex_count; ++v)
        if (y.doubled[v] > 0) support.push_back(v);
    return support;
}

inline std::vector<std::size_t> nt_independent_set_approx(const Graph& g) {
    std::vector<std::size_t> cover = nt_vertex_cover_approx(g);
    std::vector<char> in(g.vertex_count, 0);
    for (std::size_t v : cover) in[v] = 1;
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < g.vertex_count; ++v)
        if (!in[v]) out.push_back(v);
    return out;
}

inline std::vector<std::size_t> nt_clique_approx(const Graph& g) {
    return nt_independent_set_approx(complement(g));
}

// ---------------------------------------------------------------------------
// black-box baselines and the adversary game
// ---------------------------------------------------------------------------

// Test every candidate of weight <= c in (weight, lexicographic) order;
// fall back to the all-ones string, which is within n-c of anything heavier.
inline BitString deterministic_lowweight_baseline(const Verifier& v, std::size_t c,
                                                  const Nat& budget = Nat(1) << 20) {
    std::size_t n = v.witness_length();
    Nat candidates = binomial_prefix_sum(n, std::min(c, n));
    if (candidates > budget) throw std::runtime_error("budget exceeded");

    BitString probe(n);
    if (v.accepts(probe)) return probe;
    std::vector<std::size_t> positions;
    // combinations of one-positions in lexicographic order per weight
    std::function<BitString*(std::size_t, std::size_t)> scan =
        [&](std::size_t start, std::size_t remaining) -> BitString* {
        if (remaining == 0) {
            for (std::size_t i = 0; i < n; ++i) probe.set_bit(i, false);
            for (std::size_t p : positions) probe.set_bit(p, true);
            return v.accepts(probe) ? &probe : nullptr;
        }
        for (std::size_t p = start; p + remaining <= n; ++p) {
            positions.push_back(p);
            if (BitString* hit = scan(p + 1, remaining - 1)) return hit;
            positions.pop_back();
        }
        return nullptr;
    };
    for (std::size_t w = 1; w <= std::min(c, n); ++w) {
        positions.clear();
        if (BitString* hit = scan(0, w)) return *hit;
    }
    return BitString::all_ones(n);
}

// Guess n random bits; deterministic per seed.
inline BitString randomized_baseline(std::size_t n, std::uint64_t seed) {
    return Rng(seed).bits(n);
}

struct AdversaryOutcome {
    std::size_t query_count = 0;
    std::size_t achieved_distance = 0;
    bool adversary_lost = false;
};

using QueryFn = std::function<bool(const BitString&)>;
using QueryStrategy = std::function<BitString(const QueryFn&, std::size_t)>;

// The adversary answers every accept-query "no"; once the strategy commits to
// an answer a, it plants the witness at some unqueried string at distance
// exactly n-c+1 from a, if one remains.
inline AdversaryOutcome adversary_game(const QueryStrategy& strategy, std::size_t n,
                                       std::size_t c) {
    if (c < 1 || c > n) throw std::invalid_argument("need 1 <= c <= n");
    std::set<BitString> queried;
    std::size_t raw_queries = 0;
    QueryFn query = [&](const BitString& w) {
        if (w.length() != n) throw std::invalid_argument("query length mismatch");
        queried.insert(w);
        ++raw_queries;
        return false;
    };
    BitString a = strategy(query, n);
    if (a.length() != n) throw std::invalid_argument("answer length mismatch");

    std::size_t flip_count = n - c + 1;
    std::vector<std::size_t> positions;
    bool found = false;
    std::function<void(std::size_t, std::size_t)> place = [&](std::size_t start,
                                                              std::size_t remaining) {
        if (found) return;
        if (remaining == 0) {
            BitString w = a;
            for (std::size_t p : positions) w.flip(p);
            if (!queried.count(w)) found = true;
            return;
        }
        for (std::size_t p = start; p + remaining <= n && !found; ++p) {
            positions.push_back(p);
            place(p + 1, remaining - 1);
            positions.pop_back();
        }
    };
    place(0, flip_count);

    AdversaryOutcome out;
    out.query_count = raw_queries;
    if (found) {
        out.achieved_distance = flip_count;
    } else {
        out.achieved_distance = 0;
        out.adversary_lost = true;
    }
    return out;
}

}  // namespace hamwit
