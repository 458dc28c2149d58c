#pragma once

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>

#include "gudg/core.hpp"

namespace gudg {

struct Literal {
    std::size_t var;
    bool positive;

    friend constexpr auto operator<=>(const Literal&, const Literal&) = default;
};

struct Clause {
    std::string name;
    std::vector<Literal> lits;
};

struct SatInstance {
    std::vector<std::string> variables;
    std::vector<Clause> clauses;
};

using TruthAssignment = std::vector<bool>;

inline bool is_reserved_name(std::string_view name) { return name.find('#') != std::string_view::npos; }

inline ValidationReport validate_instance(const SatInstance& psi) {
    ValidationReport rep;
    std::set<std::string> names;
    for (const auto& v : psi.variables)
        if (!names.insert(v).second) rep.add("names", "variable '" + v + "' declared twice");
    std::set<std::string> cnames;
    for (const auto& c : psi.clauses)
        if (!cnames.insert(c.name).second) rep.add("names", "clause '" + c.name + "' declared twice");
    std::vector<int> pos(psi.variables.size(), 0), neg(psi.variables.size(), 0);
    for (const auto& c : psi.clauses) {
        if (c.lits.size() < 2 || c.lits.size() > 3)
            rep.add("clause-size", "clause '" + c.name + "' has " + std::to_string(c.lits.size()) + " literals");
        std::set<std::size_t> seen;
        bool has_neg = false;
        for (const auto& l : c.lits) {
            if (l.var >= psi.variables.size()) {
                rep.add("literal", "clause '" + c.name + "' references unknown variable");
                continue;
            }
            if (!seen.insert(l.var).second)
                rep.add("repeated-variable", "clause '" + c.name + "' contains '" + psi.variables[l.var] + "' twice");
            (l.positive ? pos : neg)[l.var]++;
            has_neg |= !l.positive;
        }
        if (c.lits.size() == 3 && !has_neg)
            rep.add("no-negative", "3-literal clause '" + c.name + "' has no negative literal");
    }
    for (std::size_t v = 0; v < psi.variables.size(); ++v) {
        if (neg[v] != 1)
            rep.add("occurrence", "variable '" + psi.variables[v] + "' occurs " + std::to_string(neg[v]) +
                                      " times negatively");
        if (pos[v] < 1 || pos[v] > 2)
            rep.add("occurrence", "variable '" + psi.variables[v] + "' occurs " + std::to_string(pos[v]) +
                                      " times positively");
    }
    return rep;
}

inline bool satisfies(const SatInstance& psi, const TruthAssignment& a) {
    if (a.size() != psi.variables.size()) throw InputError("assignment size mismatch");
    for (const auto& c : psi.clauses) {
        bool sat = false;
        for (const auto& l : c.lits) sat |= a[l.var] == l.positive;
        if (!sat) return false;
    }
    return true;
}

// Variables in order with false < true, the first variable most significant.
inline std::optional<TruthAssignment> brute_force_sat(const SatInstance& psi) {
    const std::size_t n = psi.variables.size();
    if (n > 30) throw InputError("brute_force_sat: more than 30 variables");
    TruthAssignment a(n, false);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        for (std::size_t v = 0; v < n; ++v) a[v] = (m >> (n - 1 - v)) & 1;
        if (satisfies(psi, a)) return a;
    }
    return std::nullopt;
}

struct DiGraph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::optional<std::size_t> find_edge(std::size_t u, std::size_t v) const {
        for (std::size_t k = 0; k < edges.size(); ++k)
            if (edges[k] == std::pair{u, v}) return k;
        return std::nullopt;
    }
    std::size_t degree(std::size_t v) const {
        std::size_t d = 0;
        for (const auto& [a, b] : edges) d += (a == v) + (b == v);
        return d;
    }
};

// Vertices: variables 0..|X|-1, then clauses; edges ordered by variable, then clause index.
struct ClauseVariableGraph {
    DiGraph graph;
    std::size_t variable_count = 0;
    std::size_t clause_count = 0;

    std::size_t clause_vertex(std::size_t c) const { return variable_count + c; }
    bool is_variable(std::size_t v) const { return v < variable_count; }
};

inline ClauseVariableGraph clause_variable_graph(const SatInstance& psi) {
    ClauseVariableGraph g;
    g.variable_count = psi.variables.size();
    g.clause_count = psi.clauses.size();
    g.graph.n = g.variable_count + g.clause_count;
    for (std::size_t v = 0; v < psi.variables.size(); ++v)
        for (std::size_t c = 0; c < psi.clauses.size(); ++c)
            for (const auto& l : psi.clauses[c].lits)
                if (l.var == v) g.graph.edges.push_back({v, g.variable_count + c});
    return g;
}

// The literal of variable v in clause c.
inline std::optional<Literal> literal_of(const SatInstance& psi, std::size_t v, std::size_t c) {
    for (const auto& l : psi.clauses[c].lits)
        if (l.var == v) return l;
    return std::nullopt;
}

struct DimacsOptions {
    bool allow_reserved = false;
};

// DIMACS CNF; optional name comments: `c var <i> <name>`, `c clause <j> <name>` (1-based).
inline SatInstance read_dimacs(std::istream& is, DimacsOptions opt = {}) {
    SatInstance psi;
    std::string line;
    std::size_t no = 0;
    long long nv = -1, nc = -1;
    std::map<std::size_t, std::string> vnames, cnames;
    std::vector<std::pair<std::size_t, std::vector<long long>>> raw;
    std::vector<long long> cur;
    std::size_t cur_line = 0;
    while (std::getline(is, line)) {
        ++no;
        auto tok = split_ws(line);
        if (tok.empty()) continue;
        if (tok[0] == "c") {
            if (tok.size() == 4 && (tok[1] == "var" || tok[1] == "clause")) {
                const auto idx = parse_int<std::size_t>(tok[2], no);
                std::string name(tok[3]);
                if (is_reserved_name(name) && !opt.allow_reserved)
                    throw ParseError(no, "name '" + name + "' uses the reserved '#' namespace");
                (tok[1] == "var" ? vnames : cnames)[idx] = name;
            }
            continue;
        }
        if (tok[0] == "%") break;
        if (tok[0] == "p") {
            if (nv >= 0) throw ParseError(no, "duplicate problem line");
            if (tok.size() != 4 || tok[1] != "cnf") throw ParseError(no, "expected 'p cnf <vars> <clauses>'");
            nv = parse_int<long long>(tok[2], no);
            nc = parse_int<long long>(tok[3], no);
            if (nv < 0 || nc < 0) throw ParseError(no, "negative counts");
            continue;
        }
        if (nv < 0) throw ParseError(no, "clause before problem line");
        for (auto t : tok) {
            const auto lit = parse_int<long long>(t, no);
            if (cur.empty()) cur_line = no;
            if (lit == 0) {
                raw.push_back({cur_line, cur});
                cur.clear();
                continue;
            }
            if (lit > nv || -lit > nv) throw ParseError(no, "literal " + std::to_string(lit) + " out of range");
            cur.push_back(lit);
        }
    }
    if (nv < 0) throw ParseError(no, "missing problem line");
    if (!cur.empty()) throw ParseError(no, "unterminated clause");
    if (static_cast<long long>(raw.size()) != nc)
        throw ParseError(no, "expected " + std::to_string(nc) + " clauses, found " + std::to_string(raw.size()));
    for (long long v = 1; v <= nv; ++v) {
        auto it = vnames.find(static_cast<std::size_t>(v));
        psi.variables.push_back(it != vnames.end() ? it->second : "x" + std::to_string(v));
    }
    for (std::size_t j = 0; j < raw.size(); ++j) {
        Clause c;
        auto it = cnames.find(j + 1);
        c.name = it != cnames.end() ? it->second : "c" + std::to_string(j + 1);
        for (long long lit : raw[j].second)
            c.lits.push_back({static_cast<std::size_t>((lit > 0 ? lit : -lit) - 1), lit > 0});
        psi.clauses.push_back(std::move(c));
    }
    return psi;
}

inline void write_dimacs(std::ostream& os, const SatInstance& psi) {
    os << "p cnf " << psi.variables.size() << ' ' << psi.clauses.size() << '\n';
    for (std::size_t v = 0; v < psi.variables.size(); ++v)
        if (psi.variables[v] != "x" + std::to_string(v + 1)) os << "c var " << v + 1 << ' ' << psi.variables[v] << '\n';
    for (std::size_t j = 0; j < psi.clauses.size(); ++j)
        if (psi.clauses[j].name != "c" + std::to_string(j + 1))
            os << "c clause " << j + 1 << ' ' << psi.clauses[j].name << '\n';
    for (const auto& c : psi.clauses) {
        for (const auto& l : c.lits) os << (l.positive ? "" : "-") << l.var + 1 << ' ';
        os << "0\n";
    }
}

}  // namespace gudg
