#pragma once

#include <array>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamwit/bitstring.hpp"

namespace hamwit {

struct Lit {
    std::size_t var = 0;
    bool neg = false;

    friend bool operator==(const Lit&, const Lit&) = default;
};

using Clause = std::array<Lit, 3>;

// 3-CNF over variables 0..variable_count-1. Repeated literals are allowed
// (shorter clauses are stored width-3 by repetition).
struct CnfFormula {
    std::size_t variable_count = 0;
    std::vector<Clause> clauses;

    CnfFormula() = default;
    explicit CnfFormula(std::size_t n) : variable_count(n) {}

    void add_clause(Lit a, Lit b, Lit c) {
        for (const Lit& l : {a, b, c})
            if (l.var >= variable_count) throw std::invalid_argument("literal out of range");
        clauses.push_back({a, b, c});
    }
};

// assignment bit i = truth value of variable i
inline bool lit_true(const Lit& l, const BitString& assignment) {
    return assignment.bit(l.var) != l.neg;
}

inline bool satisfies(const CnfFormula& f, const BitString& assignment) {
    if (assignment.length() != f.variable_count)
        throw std::invalid_argument("assignment length mismatch");
    for (const Clause& c : f.clauses) {
        if (!lit_true(c[0], assignment) && !lit_true(c[1], assignment) &&
            !lit_true(c[2], assignment))
            return false;
    }
    return true;
}

// not-all-equal: every clause needs a true literal and a false literal
inline bool nae_satisfies(const CnfFormula& f, const BitString& assignment) {
    if (assignment.length() != f.variable_count)
        throw std::invalid_argument("assignment length mismatch");
    for (const Clause& c : f.clauses) {
        bool any_true = false, any_false = false;
        for (const Lit& l : c) (lit_true(l, assignment) ? any_true : any_false) = true;
        if (!any_true || !any_false) return false;
    }
    return true;
}

inline void write_dimacs(std::ostream& os, const CnfFormula& f) {
    os << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
    for (const Clause& c : f.clauses) {
        for (const Lit& l : c) os << (l.neg ? -long(l.var + 1) : long(l.var + 1)) << ' ';
        os << "0\n";
    }
}

inline CnfFormula read_dimacs(std::istream& is) {
    CnfFormula f;
    bool have_header = false;
    std::size_t expect = 0;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string p, kind;
            std::size_t n = 0, m = 0;
            if (!(ls >> p >> kind >> n >> m) || p != "p" || kind != "cnf")
                throw std::runtime_error("bad DIMACS header");
            f = CnfFormula(n);
            expect = m;
            have_header = true;
            continue;
        }
        std::vector<Lit> lits;
        long x = 0;
        while (ls >> x && x != 0) {
            std::size_t var = std::size_t(x > 0 ? x : -x) - 1;
            lits.push_back({var, x < 0});
        }
        if (lits.empty() || lits.size() > 3) throw std::runtime_error("clause width must be 1..3");
        while (lits.size() < 3) lits.push_back(lits.back());
        f.add_clause(lits[0], lits[1], lits[2]);
    }
    if (!have_header) throw std::runtime_error("missing DIMACS header");
    if (f.clauses.size() != expect) throw std::runtime_error("clause count mismatch");
    return f;
}

}  // namespace hamwit
