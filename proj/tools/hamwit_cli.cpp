// Experiment harness: runs the library's suites over seeded instance sweeps
// and emits machine-readable tables (CSV or JSON). Exit code 0 iff every
// asserted property in the run passed.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hamwit/approx.hpp"
#include "hamwit/decider.hpp"
#include "hamwit/gadgets.hpp"
#include "hamwit/testkit.hpp"

using namespace hamwit;

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

struct Table {
    std::vector<std::pair<std::string, std::string>> config;  // echoed verbatim
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add(std::vector<std::string> row) {
        if (row.size() != columns.size()) throw std::logic_error("row arity mismatch");
        rows.push_back(std::move(row));
    }

    void write_csv(std::ostream& os) const {
        for (const auto& [k, v] : config) os << "# " << k << '=' << v << '\n';
        for (std::size_t i = 0; i < columns.size(); ++i)
            os << columns[i] << (i + 1 < columns.size() ? ',' : '\n');
        for (const auto& row : rows)
            for (std::size_t i = 0; i < row.size(); ++i)
                os << row[i] << (i + 1 < row.size() ? ',' : '\n');
    }

    void write_json(std::ostream& os) const {
        nlohmann::ordered_json j;
        for (const auto& [k, v] : config) j["config"][k] = v;
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json obj;
            for (std::size_t i = 0; i < row.size(); ++i) obj[columns[i]] = row[i];
            j["rows"].push_back(std::move(obj));
        }
        os << j.dump(2) << '\n';
    }
};

struct Options {
    std::size_t n_min = 8, n_max = 64, n_step = 8;
    double alpha = 0.25;
    double epsilon = 0.5;
    std::string log_base = "natural";
    std::uint64_t seed = 1;
    std::size_t trials = ~std::size_t(0);  // sentinel: per-command default
    std::size_t c = 2;
    std::string format = "csv";
    std::string out;
    std::string kind;
    std::string policy = "exact_max";
    std::string experiment = "all";
    std::size_t overshoot = 0;
    std::string emit_dir;
    std::uint64_t enum_cap = testkit::kDefaultEnumCap;
};

ApproxParams make_params(const Options& opt) {
    return {opt.alpha, opt.log_base == "base2" ? LogBase::base2 : LogBase::natural};
}

void echo_common(Table& t, const Options& opt, const std::string& sub) {
    t.config = {{"subcommand", sub},
                {"n_min", std::to_string(opt.n_min)},
                {"n_max", std::to_string(opt.n_max)},
                {"n_step", std::to_string(opt.n_step)},
                {"alpha", fmt_double(opt.alpha)},
                {"epsilon", fmt_double(opt.epsilon)},
                {"log_base", opt.log_base},
                {"seed", std::to_string(opt.seed)},
                {"trials", opt.trials == ~std::size_t(0) ? "default" : std::to_string(opt.trials)},
                {"c", std::to_string(opt.c)},
                {"kind", opt.kind},
                {"policy", opt.policy},
                {"experiment", opt.experiment},
                {"enum_cap", std::to_string(opt.enum_cap)},
                {"version", "hamwit 0.1.0"}};
}

int emit(const Table& t, const Options& opt) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!opt.out.empty()) {
        file.open(opt.out);
        if (!file) {
            std::cerr << "cannot open output file: " << opt.out << '\n';
            return 2;
        }
        os = &file;
    }
    if (opt.format == "json")
        t.write_json(*os);
    else
        t.write_csv(*os);
    for (const auto& row : t.rows)
        if (row.back() == "0") return 1;
    return 0;
}

// ---------------------------------------------------------------------------

int cmd_lemma1(const Options& opt) {
    if (opt.n_min < 2) {
        std::cerr << "lemma1 requires n >= 2\n";
        return 2;
    }
    ApproxParams params = make_params(opt);
    Table t;
    echo_common(t, opt, "lemma1");
    t.columns = {"n", "alpha", "log_base", "tail_count", "two_pow_n_over_p", "ratio", "pass"};
    for (std::size_t n = opt.n_min; n <= opt.n_max; n += opt.n_step) {
        double threshold = double(n) / 2.0 + h_bound(n, params);
        Nat tail = tail_count(n - 1, threshold);
        double p = p_bound(n, params);
        double ratio = lemma1_ratio(n, params);
        // a zero ratio is only legitimate in the boundary regime where the
        // threshold leaves no room above it
        bool pass = ratio > 0.0 || (tail == 0 && threshold >= double(n - 1));
        t.add({std::to_string(n), fmt_double(opt.alpha), opt.log_base, tail.str(),
               fmt_double(ratio_as_double(pow2(n), Nat(1)) / p), fmt_double(ratio),
               pass ? "1" : "0"});
    }
    return emit(t, opt);
}

int cmd_decider(Options opt) {
    if (opt.trials == ~std::size_t(0)) opt.trials = 10;
    if (opt.n_min == 8 && opt.n_max == 64 && opt.n_step == 8) {
        opt.n_min = 8;
        opt.n_max = 14;
        opt.n_step = 2;
    }
    if (opt.n_max > 20) {
        std::cerr << "decider sweep capped at n <= 20\n";
        return 2;
    }
    FlipPolicy policy = FlipPolicy::exact_max;
    if (opt.policy == "zero")
        policy = FlipPolicy::zero;
    else if (opt.policy == "uniform_up_to_max")
        policy = FlipPolicy::uniform_up_to_max;

    DeciderConfig cfg;
    cfg.params = make_params(opt);
    cfg.enumeration_cap = Nat(opt.enum_cap);
    Table t;
    echo_common(t, opt, "decider");
    t.columns = {"n",           "trial",         "planted",    "outcome", "recursion_count",
                 "oracle_calls", "fallback_used", "budget_n_p", "pass"};
    for (std::size_t n = opt.n_min; n <= opt.n_max; n += opt.n_step) {
        for (std::size_t trial = 0; trial < opt.trials; ++trial) {
            std::uint64_t seed = derive_seed(opt.seed, (std::uint64_t(n) << 32) | trial);
            Rng rng(seed);
            bool plant = trial % 2 == 0;
            BitString w = rng.bits(n);
            auto family = [&](std::size_t m) -> VerifierPtr {
                if (plant && m == n)
                    return std::make_shared<FnVerifier>(
                        m, [w](const BitString& x) { return x == w; }, "planted");
                return std::make_shared<FnVerifier>(
                    m, [](const BitString&) { return false; }, "empty");
            };
            PlantedOracle oracle(plant ? std::optional<BitString>(w) : std::nullopt, policy, seed);
            auto [ok, traces] = decide(family, n, oracle, cfg);
            const RunTrace& last = traces.back();
            double budget = double(n) * p_bound(std::max<std::size_t>(2, n), cfg.params);
            bool pass = ok == plant;
            t.add({std::to_string(n), std::to_string(trial), plant ? "1" : "0", ok ? "1" : "0",
                   std::to_string(last.recursion_count), std::to_string(last.oracle_calls),
                   last.fallback_used ? "1" : "0", fmt_double(budget), pass ? "1" : "0"});
        }
    }
    return emit(t, opt);
}

int cmd_approx(Options opt) {
    if (opt.trials == ~std::size_t(0)) opt.trials = 200;
    if (opt.kind.empty()) opt.kind = "nt-vc";
    if (opt.n_min == 8 && opt.n_max == 64 && opt.n_step == 8) {
        opt.n_min = 4;
        opt.n_max = 8;
        opt.n_step = 1;
    }
    Table t;
    echo_common(t, opt, "approx");
    t.columns = {"kind", "instance", "n", "output_weight", "nearest_distance", "half_n", "pass"};

    auto subset_dist = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        std::set<std::size_t> sa(a.begin(), a.end()), sb(b.begin(), b.end());
        std::size_t d = 0;
        for (auto x : sa) d += sb.count(x) == 0;
        for (auto x : sb) d += sa.count(x) == 0;
        return d;
    };

    for (std::size_t trial = 0; trial < opt.trials; ++trial) {
        std::uint64_t seed = derive_seed(opt.seed, trial);
        Rng rng(seed);
        std::size_t span = opt.n_max - opt.n_min + 1;
        std::size_t n = opt.n_min + std::size_t(rng.below(span));
        std::string dist_str = "-";
        std::size_t weight = 0;
        bool vacuous = false;
        std::size_t best = ~std::size_t(0);

        if (opt.kind == "nae") {
            auto [f, plant] =
                testkit::random_planted_nae3sat(std::max<std::size_t>(2, n), 2 * n, seed);
            n = f.variable_count;
            BitString out = nae3sat_allfalse(f);
            weight = out.weight();
            FnVerifier v(n, [f](const BitString& w) { return nae_satisfies(f, w); });
            best = testkit::nearest_witness_distance(out, v, opt.enum_cap).value();
        } else if (opt.kind == "halfsplit") {
            Graph g = testkit::random_graph(n, 0.4, seed);
            std::size_t k = std::size_t(rng.below(n + 1));
            BitString out = halfsplit_decision_approx(n, k);
            weight = out.weight();
            testkit::MinCovers mc = testkit::min_vertex_covers_exact(g);
            if (mc.size > k) {
                vacuous = true;  // no witness of size <= k
            } else {
                FnVerifier v(n, [g, k](const BitString& w) {
                    std::vector<std::size_t> subset = bits_subset(w);
                    return subset.size() <= k && is_vertex_cover(g, subset);
                });
                best = testkit::nearest_witness_distance(out, v, opt.enum_cap).value();
            }
        } else {
            Graph g = testkit::random_graph(n, 0.15 + 0.17 * double(trial % 5), seed);
            std::vector<std::size_t> out;
            std::vector<std::vector<std::size_t>> targets;
            if (opt.kind == "nt-vc") {
                out = nt_vertex_cover_approx(g);
                targets = testkit::min_vertex_covers_exact(g).covers;
            } else if (opt.kind == "nt-is") {
                out = nt_independent_set_approx(g);
                for (const auto& cover : testkit::min_vertex_covers_exact(g).covers) {
                    std::set<std::size_t> cs(cover.begin(), cover.end());
                    std::vector<std::size_t> is;
                    for (std::size_t x = 0; x < n; ++x)
                        if (!cs.count(x)) is.push_back(x);
                    targets.push_back(std::move(is));
                }
            } else {  // nt-clique
                out = nt_clique_approx(g);
                Graph cg = complement(g);
                for (const auto& cover : testkit::min_vertex_covers_exact(cg).covers) {
                    std::set<std::size_t> cs(cover.begin(), cover.end());
                    std::vector<std::size_t> kq;
                    for (std::size_t x = 0; x < n; ++x)
                        if (!cs.count(x)) kq.push_back(x);
                    targets.push_back(std::move(kq));
                }
            }
            weight = out.size();
            for (const auto& tgt : targets) best = std::min(best, subset_dist(out, tgt));
        }

        bool pass = vacuous || 2 * best <= n;
        if (!vacuous) dist_str = std::to_string(best);
        t.add({opt.kind, std::to_string(trial), std::to_string(n), std::to_string(weight),
               dist_str, fmt_double(double(n) / 2.0), pass ? "1" : "0"});
    }
    return emit(t, opt);
}

void emit_gadget_samples(const Options& opt) {
    auto path = [&](const char* name) { return opt.emit_dir + "/" + name; };
    {
        CnfFormula base = testkit::random_planted_3cnf(4, 8, opt.seed).first;
        PaddedFormula pf = pad_sat(base, opt.epsilon);
        std::ofstream os(path("padded.cnf"));
        write_padded_dimacs(os, pf);
    }
    {
        Graph tri(3);
        tri.add_edge(0, 1);
        tri.add_edge(0, 2);
        tri.add_edge(1, 2);
        VcGadget gdt = build_vc_gadget(tri, 0, 2, opt.epsilon);
        std::ofstream os(path("vc_gadget.edges"));
        write_edge_list(os, gdt.g_prime);
        std::ofstream js(path("vc_gadget.json"));
        js << vc_gadget_sidecar(gdt).dump(2) << '\n';
    }
    {
        auto toys = testkit::toy_edge_pair_corpus();
        HcGadget gdt = build_hc_gadget(toys[0], 0, opt.epsilon);
        std::ofstream os(path("hc_gadget.edges"));
        write_edge_list(os, gdt.g_prime);
        std::ofstream js(path("hc_gadget.json"));
        js << hc_gadget_sidecar(gdt).dump(2) << '\n';
    }
}

int cmd_gadgets(Options opt) {
    if (opt.trials == ~std::size_t(0)) opt.trials = 500;
    if (opt.kind.empty()) opt.kind = "sat";
    if (!opt.emit_dir.empty()) emit_gadget_samples(opt);
    Table t;
    echo_common(t, opt, "gadgets");
    t.columns = {"kind",  "trial",   "n_base",       "n_prime", "bound",
                 "flips", "decoded", "within_bound", "pass"};

    auto bound_for = [&](std::size_t n_prime) -> std::size_t {
        double b = double(n_prime) / 2.0 - std::pow(double(n_prime), opt.epsilon);
        return b <= 0 ? 0 : std::size_t(b);
    };

    if (opt.kind == "sat") {
        for (std::size_t trial = 0; trial < opt.trials; ++trial) {
            std::uint64_t seed = derive_seed(opt.seed, trial);
            Rng rng(seed);
            std::size_t n = 2 + std::size_t(rng.below(11));  // 2..12
            auto [f, plant] = testkit::random_planted_3cnf(n, 2 * n, seed);
            PaddedFormula pf = pad_sat(f, opt.epsilon);
            std::size_t n_prime = pf.padded.variable_count;
            BitString w_prime(n_prime);
            for (std::size_t i = 0; i < n; ++i) w_prime.set_bit(i, plant.bit(i));
            for (std::size_t dup : pf.duplicate_vars) w_prime.set_bit(dup, plant.bit(0));

            std::size_t bound = bound_for(n_prime);
            std::size_t flips = std::size_t(rng.below(bound + 1)) + opt.overshoot;
            flips = std::min(flips, n_prime);
            BitString corrupted = w_prime;
            for (std::size_t pos : rng.distinct_positions(n_prime, flips)) corrupted.flip(pos);
            MajorityDecode dec = decode_sat_majority(pf, corrupted);

            bool within = flips <= bound;
            bool feasible = false;
            for (std::uint64_t val = 0; val < (std::uint64_t(1) << n) && !feasible; ++val) {
                BitString a = BitString::from_value_u64(val, n);
                feasible = a.bit(0) == dec.value && satisfies(f, a);
            }
            bool pass = !within || feasible;
            t.add({"sat", std::to_string(trial), std::to_string(n), std::to_string(n_prime),
                   std::to_string(bound), std::to_string(flips), dec.value ? "1" : "0",
                   within ? "1" : "0", pass ? "1" : "0"});
        }
    } else if (opt.kind == "vc") {
        std::vector<Graph> corpus;
        {
            Graph single(2);
            single.add_edge(0, 1);
            Graph tri(3);
            tri.add_edge(0, 1);
            tri.add_edge(0, 2);
            tri.add_edge(1, 2);
            Graph p4(4);
            p4.add_edge(0, 1);
            p4.add_edge(1, 2);
            p4.add_edge(2, 3);
            Graph star(4);
            star.add_edge(0, 1);
            star.add_edge(0, 2);
            star.add_edge(0, 3);
            Graph p5(5);
            for (std::size_t i = 0; i + 1 < 5; ++i) p5.add_edge(i, i + 1);
            corpus = {single, tri, p4, star, p5};
        }
        for (std::size_t trial = 0; trial < opt.trials; ++trial) {
            std::uint64_t seed = derive_seed(opt.seed, trial);
            Rng rng(seed);
            const Graph& g = corpus[trial % corpus.size()];
            testkit::MinCovers mc = testkit::min_vertex_covers_exact(g);
            const auto& cover = mc.covers[rng.below(mc.covers.size())];
            std::size_t v = cover[rng.below(cover.size())];
            bool contains = true;
            if (rng.coin()) {
                std::vector<std::size_t> outside;
                for (std::size_t x = 0; x < g.vertex_count; ++x)
                    if (g.degree(x) > 0 && std::find(cover.begin(), cover.end(), x) == cover.end())
                        outside.push_back(x);
                if (!outside.empty()) {
                    v = outside[rng.below(outside.size())];
                    contains = false;
                }
            }
            VcGadget gdt = build_vc_gadget(g, v, mc.size, opt.epsilon);
            std::vector<std::size_t> planted = cover;
            const auto& side = contains ? gdt.p0 : gdt.p1;
            planted.insert(planted.end(), side.begin(), side.end());

            std::size_t n_prime = gdt.g_prime.vertex_count;
            std::size_t bound = bound_for(n_prime);
            std::size_t flips = std::size_t(rng.below(bound + 1)) + opt.overshoot;
            flips = std::min(flips, n_prime);
            BitString bits = subset_bits(planted, n_prime);
            for (std::size_t pos : rng.distinct_positions(n_prime, flips)) bits.flip(pos);
            VcCase decoded = decode_vc_gadget(gdt, bits_subset(bits));

            // decoded case must hold for some exhaustively enumerated min cover
            bool correct = false;
            for (const auto& c2 : mc.covers) {
                bool has = std::find(c2.begin(), c2.end(), v) != c2.end();
                if (decoded == VcCase::contains_v ? has : !has) correct = true;
            }
            bool within = flips <= bound;
            bool pass = !within || correct;
            t.add({"vc", std::to_string(trial), std::to_string(g.vertex_count),
                   std::to_string(n_prime), std::to_string(bound), std::to_string(flips),
                   decoded == VcCase::contains_v ? "1" : "0", within ? "1" : "0",
                   pass ? "1" : "0"});
        }
    } else {  // hc
        auto toys = testkit::toy_edge_pair_corpus();
        std::size_t trial = 0;
        for (const auto& red : toys) {
            HcGadget gdt = build_hc_gadget(red, 0, opt.epsilon);
            auto base_cycles = testkit::hamiltonian_cycles_bruteforce(red.graph());
            auto [fwd, bwd] = red.edge_pair(0);
            std::size_t n_prime = gdt.g_prime.edges.size();
            std::size_t bound = bound_for(n_prime);
            std::size_t reps =
                opt.trials == 0
                    ? 0
                    : std::max<std::size_t>(1, opt.trials / (toys.size() * base_cycles.size()));
            for (const auto& base_cycle : base_cycles) {
                bool z_true = base_cycle.count(fwd) != 0;
                DirectedEdgeSet lifted = base_cycle;
                lifted.erase(fwd);
                lifted.erase(bwd);
                for (const auto& e : z_true ? gdt.p0 : gdt.p1) lifted.insert(e);
                BitString indicator(n_prime);
                for (std::size_t i = 0; i < n_prime; ++i)
                    indicator.set_bit(i, lifted.count(gdt.g_prime.edges[i]) != 0);
                for (std::size_t rep = 0; rep < reps; ++rep, ++trial) {
                    std::uint64_t seed = derive_seed(opt.seed, trial);
                    Rng rng(seed);
                    std::size_t flips = std::size_t(rng.below(bound + 1)) + opt.overshoot;
                    flips = std::min(flips, n_prime);
                    BitString corrupted = indicator;
                    for (std::size_t pos : rng.distinct_positions(n_prime, flips))
                        corrupted.flip(pos);
                    DirectedEdgeSet candidate;
                    for (std::size_t i = 0; i < n_prime; ++i)
                        if (corrupted.bit(i)) candidate.insert(gdt.g_prime.edges[i]);
                    bool decoded = decode_hc_gadget(gdt, candidate);
                    bool within = flips <= bound;
                    bool pass = !within || decoded == z_true;
                    t.add({"hc", std::to_string(trial), std::to_string(red.graph().edges.size()),
                           std::to_string(n_prime), std::to_string(bound), std::to_string(flips),
                           decoded ? "1" : "0", within ? "1" : "0", pass ? "1" : "0"});
                }
            }
        }
    }
    return emit(t, opt);
}

int cmd_baselines(Options opt) {
    if (opt.trials == ~std::size_t(0)) opt.trials = 20000;
    if (opt.n_min == 8 && opt.n_max == 64 && opt.n_step == 8) {
        opt.n_min = 8;
        opt.n_max = 32;
        opt.n_step = 8;
    }
    Table t;
    echo_common(t, opt, "baselines");
    t.columns = {"experiment", "n", "c", "case", "observed", "expected", "tolerance", "pass"};
    ApproxParams params = make_params(opt);

    bool run_rand = opt.experiment == "all" || opt.experiment == "randomized";
    bool run_det = opt.experiment == "all" || opt.experiment == "deterministic";
    bool run_adv = opt.experiment == "all" || opt.experiment == "adversary";

    if (run_rand && opt.trials > 0) {
        for (std::size_t n = std::max<std::size_t>(2, opt.n_min); n <= opt.n_max;
             n += opt.n_step) {
            std::size_t radius = ball_radius(n, params);
            BitString target(n);  // the distance law is target-invariant
            std::size_t hits = 0;
            for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
                BitString a = randomized_baseline(n, derive_seed(opt.seed, trial));
                if (hamming_distance(a, target) <= radius) ++hits;
            }
            double observed = double(hits) / double(opt.trials);
            double expected =
                1.0 -
                ratio_as_double(tail_count(n, double(n) / 2.0 + h_bound(n, params)), pow2(n));
            double tol = 3.0 * std::sqrt(expected * (1.0 - expected) / double(opt.trials));
            bool pass = std::abs(observed - expected) <= tol;
            t.add({"randomized", std::to_string(n), "-", "freq", fmt_double(observed),
                   fmt_double(expected), fmt_double(tol), pass ? "1" : "0"});
        }
    }
    if (run_det) {
        for (std::size_t n = std::max<std::size_t>(opt.c + 1, opt.n_min);
             n <= std::min<std::size_t>(opt.n_max, 12); n += opt.n_step) {
            for (std::size_t inst = 0; inst < 20; ++inst) {
                std::uint64_t seed = derive_seed(opt.seed, (std::uint64_t(n) << 20) | inst);
                Rng rng(seed);
                std::set<BitString> witnesses;
                std::size_t count = 1 + std::size_t(rng.below(4));
                for (std::size_t i = 0; i < count; ++i) witnesses.insert(rng.bits(n));
                FnVerifier v(n,
                             [witnesses](const BitString& x) { return witnesses.count(x) != 0; });
                BitString out = deterministic_lowweight_baseline(v, opt.c, Nat(opt.enum_cap));
                std::size_t dist = testkit::nearest_witness_distance(out, v, opt.enum_cap).value();
                bool pass = dist <= n - opt.c;
                t.add({"deterministic", std::to_string(n), std::to_string(opt.c),
                       std::to_string(inst), std::to_string(dist), std::to_string(n - opt.c), "0",
                       pass ? "1" : "0"});
            }
        }
    }
    if (run_adv) {
        for (std::size_t n = std::max<std::size_t>(2, opt.n_min);
             n <= std::min<std::size_t>(opt.n_max, 8); n += 1) {
            for (std::size_t c = 1; c <= std::min<std::size_t>(3, n); ++c) {
                for (std::size_t game = 0; game < 10; ++game) {
                    std::uint64_t seed =
                        derive_seed(opt.seed, (std::uint64_t(n) << 8) | (c << 4) | game);
                    QueryStrategy strategy = [seed](const QueryFn& query, std::size_t len) {
                        Rng rng(seed);
                        std::size_t q = std::size_t(rng.below(12));
                        for (std::size_t i = 0; i < q; ++i) query(rng.bits(len));
                        return rng.bits(len);
                    };
                    AdversaryOutcome out = adversary_game(strategy, n, c);
                    bool few = Nat(out.query_count) < binomial(n, n - c + 1);
                    bool pass =
                        !few || (out.achieved_distance == n - c + 1 && !out.adversary_lost);
                    t.add({"adversary", std::to_string(n), std::to_string(c),
                           std::to_string(game), std::to_string(out.achieved_distance),
                           std::to_string(n - c + 1), "0", pass ? "1" : "0"});
                }
            }
        }
    }
    return emit(t, opt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hamwit experiment harness"};
    app.require_subcommand(1);

    Options opt;
    if (const char* cap = std::getenv("HAMWIT_ENUM_CAP"))
        opt.enum_cap = std::strtoull(cap, nullptr, 10);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n-min", opt.n_min, "smallest n in the sweep");
        sub->add_option("--n-max", opt.n_max, "largest n in the sweep");
        sub->add_option("--n-step", opt.n_step, "sweep step")->check(CLI::PositiveNumber);
        sub->add_option("--alpha", opt.alpha, "constant alpha of H and P")
            ->check(CLI::PositiveNumber);
        sub->add_option("--epsilon", opt.epsilon, "gadget exponent, 0 < eps <= 1");
        sub->add_option("--log-base", opt.log_base, "natural | base2")
            ->check(CLI::IsMember({"natural", "base2"}));
        sub->add_option("--seed", opt.seed, "master seed; per-trial seeds are derived");
        sub->add_option("--trials", opt.trials, "trial count (0 = subcommand default)");
        sub->add_option("--format", opt.format, "csv | json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", opt.out, "output path (default stdout)");
    };

    CLI::App* lemma1 = app.add_subcommand("lemma1", "exact tail counts against 2^n / P(n, alpha)");
    add_common(lemma1);

    CLI::App* decider = app.add_subcommand("decider", "planted/empty universe-shrinking sweeps");
    add_common(decider);
    decider->add_option("--policy", opt.policy, "exact_max | uniform_up_to_max | zero")
        ->check(CLI::IsMember({"exact_max", "uniform_up_to_max", "zero"}));

    CLI::App* approx = app.add_subcommand("approx", "n/2 approximators against exact oracles");
    add_common(approx);
    approx->add_option("--kind", opt.kind, "nt-vc | nt-is | nt-clique | halfsplit | nae")
        ->check(CLI::IsMember({"nt-vc", "nt-is", "nt-clique", "halfsplit", "nae"}));

    CLI::App* gadgets = app.add_subcommand("gadgets", "plant, corrupt, decode sweeps");
    add_common(gadgets);
    gadgets->add_option("--kind", opt.kind, "sat | vc | hc")
        ->check(CLI::IsMember({"sat", "vc", "hc"}));
    gadgets->add_option("--overshoot", opt.overshoot,
                        "extra flips beyond the guarantee bound (reported, not asserted)");
    gadgets->add_option("--emit-dir", opt.emit_dir,
                        "also write sample gadget files (DIMACS / edge lists / JSON sidecars)");

    CLI::App* baselines =
        app.add_subcommand("baselines", "randomized/deterministic baselines and the adversary");
    add_common(baselines);
    baselines->add_option("--c", opt.c, "weight budget of the deterministic baseline")
        ->check(CLI::PositiveNumber);
    baselines->add_option("--experiment", opt.experiment,
                          "randomized | deterministic | adversary | all")
        ->check(CLI::IsMember({"randomized", "deterministic", "adversary", "all"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (lemma1->parsed()) return cmd_lemma1(opt);
        if (decider->parsed()) return cmd_decider(opt);
        if (approx->parsed()) return cmd_approx(opt);
        if (gadgets->parsed()) return cmd_gadgets(opt);
        if (baselines->parsed()) return cmd_baselines(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
