#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hamwit/cnf.hpp"
#include "hamwit/graph.hpp"

namespace hamwit {

namespace detail {

// The constructions treat 1/epsilon as an integer exponent.
inline std::size_t inv_epsilon_exponent(double epsilon) {
    if (!(epsilon > 0.0) || epsilon > 1.0) throw std::invalid_argument("need 0 < epsilon <= 1");
    return static_cast<std::size_t>(std::ceil(1.0 / epsilon));
}

inline std::size_t int_pow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > std::size_t(1) << 40) throw std::overflow_error("gadget size overflow");
        r *= base;
    }
    return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 3-SAT variable duplication
// ---------------------------------------------------------------------------

struct PaddedFormula {
    CnfFormula base;
    CnfFormula padded;
    std::size_t target_var = 0;             // z, the first variable
    std::vector<std::size_t> duplicate_vars;
    double epsilon = 1.0;
};

// Append N = n^{ceil(1/eps)} fresh copies of the first variable, chained to
// it by equality clauses (two 2-clauses each, stored width-3 by repetition).
// Satisfying assignments of the result are exactly those of the base extended
// by z's value on every duplicate.
inline PaddedFormula pad_sat(const CnfFormula& f, double epsilon) {
    if (f.variable_count < 1) throw std::invalid_argument("formula needs a variable");
    std::size_t n = f.variable_count;
    std::size_t copies = detail::int_pow(n, detail::inv_epsilon_exponent(epsilon));

    PaddedFormula pf;
    pf.base = f;
    pf.epsilon = epsilon;
    pf.padded = CnfFormula(n + copies);
    pf.padded.clauses = f.clauses;
    const std::size_t z = pf.target_var;
    for (std::size_t i = 0; i < copies; ++i) {
        std::size_t dup = n + i;
        pf.duplicate_vars.push_back(dup);
        pf.padded.add_clause({z, true}, {dup, false}, {dup, false});   // z -> dup
        pf.padded.add_clause({z, false}, {dup, true}, {dup, true});   // dup -> z
    }
    return pf;
}

struct MajorityDecode {
    bool value = false;
    bool tie = false;
};

// Majority vote over the duplicate positions of a corrupted assignment.
// A compliant corruption always leaves a strict majority; ties can only come
// from non-compliant inputs and decode as true with the tie flag set.
inline MajorityDecode decode_sat_majority(const PaddedFormula& pf, const BitString& a_prime) {
    if (a_prime.length() != pf.padded.variable_count)
        throw std::invalid_argument("assignment length mismatch");
    std::size_t ones = 0;
    for (std::size_t v : pf.duplicate_vars) ones += a_prime.bit(v) ? 1 : 0;
    std::size_t zeros = pf.duplicate_vars.size() - ones;
    if (ones == zeros) return {true, true};
    return {ones > zeros, false};
}

// Feasible value for the first variable of the given formula; callers supply
// the implementation (exact, noisy, ...).
using FeasibleValueOracle = std::function<bool(const CnfFormula&)>;

namespace detail {

// Fix variable 0 to `value`, drop satisfied clauses, renumber the rest down
// by one. nullopt signals an immediate contradiction.
inline std::optional<CnfFormula> substitute_first(const CnfFormula& f, bool value) {
    if (f.variable_count == 0) throw std::invalid_argument("no variable to substitute");
    CnfFormula g(f.variable_count - 1);
    for (const Clause& c : f.clauses) {
        bool satisfied = false;
        std::vector<Lit> rest;
        for (const Lit& l : c) {
            if (l.var == 0) {
                if (l.neg != value) satisfied = true;
            } else {
                rest.push_back({l.var - 1, l.neg});
            }
        }
        if (satisfied) continue;
        // dedupe repeated literals before deciding emptiness
        std::vector<Lit> uniq;
        for (const Lit& l : rest)
            if (std::find(uniq.begin(), uniq.end(), l) == uniq.end()) uniq.push_back(l);
        if (uniq.empty()) return std::nullopt;
        while (uniq.size() < 3) uniq.push_back(uniq.back());
        g.add_clause(uniq[0], uniq[1], uniq[2]);
    }
    return g;
}

}  // namespace detail

// Search-to-decision loop: amplify the oracle by majority over
// n^{repeats_exponent} calls per variable, substitute, recurse; the final
// assignment is re-verified against the original formula.
inline std::optional<BitString> solve_sat_via_feasible_oracle(const CnfFormula& f,
                                                              const FeasibleValueOracle& oracle,
                                                              std::size_t repeats_exponent) {
    std::size_t n = f.variable_count;
    std::size_t repeats = std::max<std::size_t>(1, detail::int_pow(n, repeats_exponent));
    BitString assignment(n);
    std::optional<CnfFormula> current = f;
    for (std::size_t i = 0; i < n; ++i) {
        bool bit = false;
        if (current) {
            std::size_t votes = 0;
            for (std::size_t r = 0; r < repeats; ++r) votes += oracle(*current) ? 1 : 0;
            bit = 2 * votes > repeats;
            current = detail::substitute_first(*current, bit);
        }
        assignment.set_bit(i, bit);
    }
    if (satisfies(f, assignment)) return assignment;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Vertex-Cover path gadget
// ---------------------------------------------------------------------------

struct VcGadget {
    Graph base;
    std::size_t v = 0;        // the distinguished vertex
    std::size_t v_prime = 0;  // its copy
    Graph g_prime;
    std::size_t k_prime = 0;
    std::vector<std::size_t> p0;  // even path vertices, v' included
    std::vector<std::size_t> p1;  // odd path vertices
    std::size_t path_len = 0;     // number of path edges, even

    // all new vertices: the decode distance is measured over these
    std::vector<std::size_t> path_vertices() const {
        std::vector<std::size_t> all;
        all.reserve(p0.size() + p1.size());
        for (std::size_t x : p1) all.push_back(x);
        for (std::size_t x : p0) all.push_back(x);
        std::sort(all.begin(), all.end());
        return all;
    }
};

// Add a copy v' of v (adjacent to all of v's neighbors) and an even path of
// new vertices from v to v' of length 2*ceil(n^{ceil(1/eps)}/2). Minimum
// covers of the result have size k + path_len/2 and consist of a minimum
// cover of the base plus one of the two path alternations.
inline VcGadget build_vc_gadget(const Graph& g, std::size_t v, std::size_t k, double epsilon) {
    if (v >= g.vertex_count) throw std::invalid_argument("vertex out of range");
    if (g.degree(v) == 0) throw std::invalid_argument("vertex must not be isolated");
    std::size_t n = g.vertex_count;
    std::size_t raw = detail::int_pow(n, detail::inv_epsilon_exponent(epsilon));
    std::size_t path_len = 2 * ((raw + 1) / 2);

    VcGadget gdt;
    gdt.base = g;
    gdt.v = v;
    gdt.path_len = path_len;
    gdt.k_prime = k + path_len / 2;
    gdt.g_prime = Graph(n + path_len);
    for (auto [a, b] : g.edges) gdt.g_prime.add_edge(a, b);

    // path vertices v = pv(0), pv(1), .., pv(path_len) = v'; interior ones are
    // new ids n .. n+path_len-2 and v' is the last new id
    gdt.v_prime = n + path_len - 1;
    auto pv = [&](std::size_t j) -> std::size_t {
        if (j == 0) return v;
        if (j == path_len) return gdt.v_prime;
        return n + j - 1;
    };
    for (std::size_t w : g.neighbors(v)) gdt.g_prime.add_edge(gdt.v_prime, w);
    for (std::size_t j = 0; j < path_len; ++j) gdt.g_prime.add_edge(pv(j), pv(j + 1));
    for (std::size_t j = 1; j <= path_len; ++j)
        (j % 2 == 0 ? gdt.p0 : gdt.p1).push_back(pv(j));
    return gdt;
}

enum class VcCase {
    contains_v,  // some minimum cover of the base contains v
    avoids_v,    // some minimum cover of the base avoids v
};

// Compare the candidate cover against the two path alternations, restricted
// to the new path vertices; the closer side names the case.
inline VcCase decode_vc_gadget(const VcGadget& gdt, const std::vector<std::size_t>& c_a) {
    std::set<std::size_t> in(c_a.begin(), c_a.end());
    auto restricted_distance = [&](const std::vector<std::size_t>& side) {
        std::set<std::size_t> side_set(side.begin(), side.end());
        std::size_t d = 0;
        for (std::size_t x : gdt.path_vertices())
            d += (in.count(x) != 0) != (side_set.count(x) != 0);
        return d;
    };
    std::size_t d0 = restricted_distance(gdt.p0);
    std::size_t d1 = restricted_distance(gdt.p1);
    return d0 < d1 ? VcCase::contains_v : VcCase::avoids_v;
}

// ---------------------------------------------------------------------------
// Hamiltonian-Cycle edge-pair gadget
// ---------------------------------------------------------------------------

using DirectedEdge = std::pair<std::size_t, std::size_t>;
using DirectedEdgeSet = std::set<DirectedEdge>;

// A 3-SAT -> directed-Hamiltonian-Cycle reduction exposing, per variable, a
// pair of opposite edges of which every Hamiltonian cycle uses exactly one;
// the used direction determines the variable in the extracted assignment.
class EdgePairReduction {
  public:
    virtual ~EdgePairReduction() = default;
    virtual const Digraph& graph() const = 0;
    virtual std::size_t variable_count() const = 0;
    virtual std::pair<DirectedEdge, DirectedEdge> edge_pair(std::size_t var) const = 0;
    virtual BitString extract_assignment(const DirectedEdgeSet& cycle) const = 0;
};

struct HcGadget {
    const EdgePairReduction* reduction = nullptr;
    std::size_t target_var = 0;
    Digraph g_prime;
    std::vector<DirectedEdge> p0;  // duplicates of (v, v'), in path order
    std::vector<DirectedEdge> p1;  // duplicates of (v', v), in path order
    std::size_t k = 0;             // interior vertices
};

// Replace the pair's two edges by opposite-direction paths through k shared
// new interior vertices; every Hamiltonian cycle of the result traverses the
// chain monotonically, using all of p0 or all of p1.
inline HcGadget build_hc_gadget_with_k(const EdgePairReduction& red, std::size_t z,
                                       std::size_t k) {
    if (z >= red.variable_count()) throw std::invalid_argument("unregistered variable");
    auto [fwd, bwd] = red.edge_pair(z);
    const Digraph& g = red.graph();
    if (!g.has_edge(fwd.first, fwd.second) || !g.has_edge(bwd.first, bwd.second))
        throw std::invalid_argument("edge pair missing from graph");
    if (k == 0) throw std::invalid_argument("need at least one interior vertex");

    HcGadget gdt;
    gdt.reduction = &red;
    gdt.target_var = z;
    gdt.k = k;
    std::size_t base_n = g.vertex_count;
    gdt.g_prime = Digraph(base_n + k);
    for (auto e : g.edges)
        if (e != fwd && e != bwd) gdt.g_prime.add_edge(e.first, e.second);

    auto interior = [&](std::size_t i) { return base_n + i - 1; };  // i = 1..k
    std::size_t v = fwd.first, v_prime = fwd.second;
    // forward chain v -> i1 -> ... -> ik -> v'
    gdt.p0.emplace_back(v, interior(1));
    for (std::size_t i = 1; i < k; ++i) gdt.p0.emplace_back(interior(i), interior(i + 1));
    gdt.p0.emplace_back(interior(k), v_prime);
    // backward chain v' -> ik -> ... -> i1 -> v
    gdt.p1.emplace_back(v_prime, interior(k));
    for (std::size_t i = k; i > 1; --i) gdt.p1.emplace_back(interior(i), interior(i - 1));
    gdt.p1.emplace_back(interior(1), v);
    for (auto e : gdt.p0) gdt.g_prime.add_edge(e.first, e.second);
    for (auto e : gdt.p1) gdt.g_prime.add_edge(e.first, e.second);
    return gdt;
}

inline HcGadget build_hc_gadget(const EdgePairReduction& red, std::size_t z, double epsilon) {
    std::size_t n = red.graph().edges.size();
    std::size_t raw = detail::int_pow(n, detail::inv_epsilon_exponent(epsilon));
    return build_hc_gadget_with_k(red, z, (raw + 1) / 2);
}

// True iff the candidate edge set is nearer to the forward duplicates,
// measured over duplicate edges only.
inline bool decode_hc_gadget(const HcGadget& gdt, const DirectedEdgeSet& p_prime) {
    auto side_distance = [&](const std::vector<DirectedEdge>& side) {
        DirectedEdgeSet side_set(side.begin(), side.end());
        std::size_t d = 0;
        for (const auto& dup : {gdt.p0, gdt.p1})
            for (const DirectedEdge& e : dup)
                d += (p_prime.count(e) != 0) != (side_set.count(e) != 0);
        return d;
    };
    return side_distance(gdt.p0) < side_distance(gdt.p1);
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

// DIMACS with a comment line mapping the duplicate variables (1-based).
inline void write_padded_dimacs(std::ostream& os, const PaddedFormula& pf) {
    os << "c padded target=" << pf.target_var + 1 << " duplicates=" << pf.duplicate_vars.front() + 1
       << "-" << pf.duplicate_vars.back() + 1 << " epsilon=" << pf.epsilon << '\n';
    write_dimacs(os, pf.padded);
}

inline nlohmann::json vc_gadget_sidecar(const VcGadget& gdt) {
    return nlohmann::json{{"v", gdt.v},
                          {"v_prime", gdt.v_prime},
                          {"p0", gdt.p0},
                          {"p1", gdt.p1},
                          {"k_prime", gdt.k_prime},
                          {"path_len", gdt.path_len}};
}

inline nlohmann::json hc_gadget_sidecar(const HcGadget& gdt) {
    return nlohmann::json{{"target_var", gdt.target_var},
                          {"k", gdt.k},
                          {"p0", gdt.p0},
                          {"p1", gdt.p1}};
}

}  // namespace hamwit
