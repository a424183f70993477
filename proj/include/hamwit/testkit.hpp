#pragma once

// Brute-force oracles and seeded instance generators. Everything here is
// implemented by direct scan, independently of the counting machinery in the
// rest of the library, so agreement between the two is genuine
// cross-validation.

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hamwit/bitstring.hpp"
#include "hamwit/cnf.hpp"
#include "hamwit/gadgets.hpp"
#include "hamwit/graph.hpp"
#include "hamwit/rng.hpp"
#include "hamwit/verifier.hpp"

namespace hamwit::testkit {

inline constexpr std::uint64_t kDefaultEnumCap = std::uint64_t(1) << 22;

// All accepted strings, in lexicographic order, by scanning the full cube.
inline std::vector<BitString> enumerate_witnesses(const Verifier& v,
                                                  std::uint64_t cap = kDefaultEnumCap) {
    std::size_t n = v.witness_length();
    if (n >= 63 || (std::uint64_t(1) << n) > cap) throw std::runtime_error("enumeration cap exceeded");
    std::vector<BitString> out;
    for (std::uint64_t val = 0; val < (std::uint64_t(1) << n); ++val) {
        BitString w = BitString::from_value_u64(val, n);
        if (v.accepts(w)) out.push_back(std::move(w));
    }
    return out;
}

// min over witnesses of the positionwise disagreement with a; nullopt when
// the verifier accepts nothing
inline std::optional<std::size_t> nearest_witness_distance(const BitString& a, const Verifier& v,
                                                           std::uint64_t cap = kDefaultEnumCap) {
    std::size_t n = v.witness_length();
    if (a.length() != n) throw std::invalid_argument("length mismatch");
    if (n >= 63 || (std::uint64_t(1) << n) > cap) throw std::runtime_error("enumeration cap exceeded");
    std::optional<std::size_t> best;
    for (std::uint64_t val = 0; val < (std::uint64_t(1) << n); ++val) {
        BitString w = BitString::from_value_u64(val, n);
        if (!v.accepts(w)) continue;
        std::size_t d = 0;
        for (std::size_t i = 0; i < n; ++i) d += w.bit(i) != a.bit(i);
        if (!best || d < *best) best = d;
    }
    return best;
}

struct MinCovers {
    std::size_t size = 0;
    std::vector<std::vector<std::size_t>> covers;  // each sorted; list sorted
};

// All minimum vertex covers by subset enumeration.
inline MinCovers min_vertex_covers_exact(const Graph& g) {
    std::size_t n = g.vertex_count;
    if (n > 20) throw std::runtime_error("enumeration cap exceeded");
    std::size_t best = n + 1;
    std::vector<std::uint32_t> best_masks;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        bool covers = true;
        for (auto [u, v] : g.edges)
            if (!((mask >> u) & 1u) && !((mask >> v) & 1u)) {
                covers = false;
                break;
            }
        if (!covers) continue;
        auto size = std::size_t(__builtin_popcount(mask));
        if (size < best) {
            best = size;
            best_masks.clear();
        }
        if (size == best) best_masks.push_back(mask);
    }
    MinCovers out;
    out.size = best;
    for (std::uint32_t mask : best_masks) {
        std::vector<std::size_t> cover;
        for (std::size_t v = 0; v < n; ++v)
            if ((mask >> v) & 1u) cover.push_back(v);
        out.covers.push_back(std::move(cover));
    }
    return out;
}

// Members of the radius-d ball around a that fall in the first u strings,
// sorted, by direct scan.
inline std::vector<BitString> ball_members_bruteforce(std::size_t n_u, const BitString& a,
                                                      std::size_t d, std::uint64_t u) {
    if (n_u > 22) throw std::runtime_error("enumeration cap exceeded");
    if (a.length() != n_u) throw std::invalid_argument("length mismatch");
    std::vector<BitString> out;
    for (std::uint64_t val = 0; val < u; ++val) {
        BitString w = BitString::from_value_u64(val, n_u);
        std::size_t dist = 0;
        for (std::size_t i = 0; i < n_u; ++i) dist += w.bit(i) != a.bit(i);
        if (dist <= d) out.push_back(std::move(w));
    }
    return out;
}

// ---------------------------------------------------------------------------
// generators (deterministic per seed)
// ---------------------------------------------------------------------------

inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    Rng rng(seed);
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.unit() < p) g.add_edge(u, v);
    return g;
}

namespace detail {

inline Clause random_clause(std::size_t n, Rng& rng) {
    std::vector<std::size_t> vars =
        rng.distinct_positions(n, std::min<std::size_t>(3, n));
    while (vars.size() < 3) vars.push_back(vars.back());
    Clause c;
    for (std::size_t i = 0; i < 3; ++i) c[i] = {vars[i], rng.coin()};
    return c;
}

}  // namespace detail

inline CnfFormula random_3cnf(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("need at least one variable");
    Rng rng(seed);
    CnfFormula f(n);
    for (std::size_t i = 0; i < m; ++i) {
        Clause c = detail::random_clause(n, rng);
        f.add_clause(c[0], c[1], c[2]);
    }
    return f;
}

// Clauses are redrawn until the planted assignment satisfies them.
inline std::pair<CnfFormula, BitString> random_planted_3cnf(std::size_t n, std::size_t m,
                                                            std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("need at least one variable");
    Rng rng(seed);
    BitString plant = rng.bits(n);
    CnfFormula f(n);
    for (std::size_t i = 0; i < m; ++i) {
        for (;;) {
            Clause c = detail::random_clause(n, rng);
            bool sat = false;
            for (const Lit& l : c) sat = sat || lit_true(l, plant);
            if (sat) {
                f.add_clause(c[0], c[1], c[2]);
                break;
            }
        }
    }
    return {f, plant};
}

inline std::pair<CnfFormula, BitString> random_planted_nae3sat(std::size_t n, std::size_t m,
                                                               std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("need at least two variables");
    Rng rng(seed);
    BitString plant = rng.bits(n);
    CnfFormula f(n);
    for (std::size_t i = 0; i < m; ++i) {
        for (;;) {
            Clause c = detail::random_clause(n, rng);
            bool any_true = false, any_false = false;
            for (const Lit& l : c) (lit_true(l, plant) ? any_true : any_false) = true;
            if (any_true && any_false) {
                f.add_clause(c[0], c[1], c[2]);
                break;
            }
        }
    }
    return {f, plant};
}

inline CnfFormula random_nae3sat(std::size_t n, std::size_t m, std::uint64_t seed) {
    return random_3cnf(n, m, seed);
}

// ---------------------------------------------------------------------------
// directed Hamiltonian cycles and toy edge-pair reductions
// ---------------------------------------------------------------------------

// All Hamiltonian cycles as edge sets, by scanning permutations anchored at
// vertex 0.
inline std::vector<DirectedEdgeSet> hamiltonian_cycles_bruteforce(const Digraph& g) {
    std::size_t n = g.vertex_count;
    std::vector<DirectedEdgeSet> out;
    if (n == 0) return out;
    if (n > 10) throw std::runtime_error("enumeration cap exceeded");
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            ok = g.has_edge(order[i], order[(i + 1) % n]);
        if (ok) {
            DirectedEdgeSet cycle;
            for (std::size_t i = 0; i < n; ++i)
                cycle.insert({order[i], order[(i + 1) % n]});
            out.push_back(std::move(cycle));
        }
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return out;
}

// Hand-built instance of the edge-pair interface: a digraph plus, for each
// variable, a pair of opposite edges; the direction a cycle uses fixes the
// variable's value.
class ToyEdgePairReduction final : public EdgePairReduction {
  public:
    ToyEdgePairReduction(Digraph g, std::vector<std::pair<DirectedEdge, DirectedEdge>> pairs,
                         std::string name)
        : graph_(std::move(g)), pairs_(std::move(pairs)), name_(std::move(name)) {}

    const Digraph& graph() const override { return graph_; }
    std::size_t variable_count() const override { return pairs_.size(); }
    std::pair<DirectedEdge, DirectedEdge> edge_pair(std::size_t var) const override {
        if (var >= pairs_.size()) throw std::invalid_argument("unregistered variable");
        return pairs_[var];
    }
    BitString extract_assignment(const DirectedEdgeSet& cycle) const override {
        BitString a(pairs_.size());
        for (std::size_t z = 0; z < pairs_.size(); ++z) {
            bool fwd = cycle.count(pairs_[z].first) != 0;
            bool bwd = cycle.count(pairs_[z].second) != 0;
            if (fwd == bwd) throw std::invalid_argument("cycle must use exactly one pair edge");
            a.set_bit(z, fwd);
        }
        return a;
    }
    const std::string& name() const { return name_; }

  private:
    Digraph graph_;
    std::vector<std::pair<DirectedEdge, DirectedEdge>> pairs_;
    std::string name_;
};

// Small digraphs where every Hamiltonian cycle uses exactly one edge of each
// registered pair; some admit only the forward direction, some both.
inline std::vector<ToyEdgePairReduction> toy_edge_pair_corpus() {
    std::vector<ToyEdgePairReduction> corpus;
    {
        // one 4-cycle through (v, v') plus the unusable back edge
        Digraph g(4);  // a=0, v=1, v'=2, b=3
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(3, 0);
        g.add_edge(2, 1);
        corpus.emplace_back(std::move(g),
                            std::vector<std::pair<DirectedEdge, DirectedEdge>>{{{1, 2}, {2, 1}}},
                            "one-way-square");
    }
    {
        // both orientations Hamiltonian: triangle in each direction
        Digraph g(3);  // a=0, v=1, v'=2
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 0);
        g.add_edge(0, 2);
        g.add_edge(2, 1);
        g.add_edge(1, 0);
        corpus.emplace_back(std::move(g),
                            std::vector<std::pair<DirectedEdge, DirectedEdge>>{{{1, 2}, {2, 1}}},
                            "two-way-triangle");
    }
    {
        // five vertices, both orientations, some chords that do not help
        Digraph g(5);  // v=2, v'=3
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(3, 4);
        g.add_edge(4, 0);
        g.add_edge(3, 2);
        g.add_edge(1, 3);
        g.add_edge(2, 4);
        g.add_edge(0, 2);
        g.add_edge(4, 1);
        corpus.emplace_back(std::move(g),
                            std::vector<std::pair<DirectedEdge, DirectedEdge>>{{{2, 3}, {3, 2}}},
                            "pentagon-chords");
    }
    return corpus;
}

// ---------------------------------------------------------------------------
// corpus
// ---------------------------------------------------------------------------

struct CorpusInstance {
    std::string kind;        // "graph" | "cnf3" | "cnf3-planted" | "nae3-planted"
    nlohmann::json params;   // generator parameters, including the derived seed
    std::string payload;     // edge list or DIMACS text
};

// Regenerable instance bundle: rebuilding from (seed, parameters) is
// byte-identical.
struct Corpus {
    std::uint64_t seed = 0;
    std::vector<CorpusInstance> instances;
};

inline void to_json(nlohmann::json& j, const CorpusInstance& ci) {
    j = nlohmann::json{{"kind", ci.kind}, {"params", ci.params}, {"payload", ci.payload}};
}

inline void from_json(const nlohmann::json& j, CorpusInstance& ci) {
    j.at("kind").get_to(ci.kind);
    ci.params = j.at("params");
    j.at("payload").get_to(ci.payload);
}

inline void to_json(nlohmann::json& j, const Corpus& c) {
    j = nlohmann::json{{"seed", c.seed}, {"instances", c.instances}};
}

inline void from_json(const nlohmann::json& j, Corpus& c) {
    j.at("seed").get_to(c.seed);
    j.at("instances").get_to(c.instances);
}

inline CorpusInstance make_graph_instance(std::size_t n, double p, std::uint64_t seed) {
    Graph g = random_graph(n, p, seed);
    std::ostringstream os;
    write_edge_list(os, g);
    return { "graph", nlohmann::json{{"n", n}, {"p", p}, {"seed", seed}}, os.str() };
}

inline CorpusInstance make_cnf_instance(std::size_t n, std::size_t m, std::uint64_t seed,
                                        bool planted) {
    CnfFormula f = planted ? random_planted_3cnf(n, m, seed).first : random_3cnf(n, m, seed);
    std::ostringstream os;
    write_dimacs(os, f);
    return { planted ? "cnf3-planted" : "cnf3",
             nlohmann::json{{"n", n}, {"m", m}, {"seed", seed}}, os.str() };
}

}  // namespace hamwit::testkit
