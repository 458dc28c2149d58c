#pragma once

#include <json.hpp>

#include "gudg/assembler.hpp"
#include "gudg/shorten.hpp"

namespace gudg {

struct CheckResult {
    std::string name;
    bool pass;
    std::string witness;  // empty on pass
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    std::size_t skipped = 0;
    std::vector<std::string> notes;

    void add(std::string name, bool pass, std::string witness = {}) {
        checks.push_back({std::move(name), pass, pass ? std::string{} : std::move(witness)});
    }
    std::size_t passed() const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.pass; }));
    }
    std::size_t failed() const { return checks.size() - passed(); }
    bool ok() const { return failed() == 0; }

    std::string text(bool verbose = false) const {
        std::string s;
        for (const auto& c : checks)
            if (verbose || !c.pass)
                s += std::string(c.pass ? "PASS " : "FAIL ") + suite + "/" + c.name + (c.pass ? "" : ": " + c.witness) + "\n";
        for (const auto& n : notes) s += "NOTE " + suite + ": " + n + "\n";
        s += suite + ": " + std::to_string(passed()) + " passed, " + std::to_string(failed()) + " failed";
        if (skipped) s += ", " + std::to_string(skipped) + " skipped";
        return s + "\n";
    }

    nlohmann::json json(std::size_t max_witnesses = 5) const {
        nlohmann::json j{{"suite", suite}, {"passed", passed()}, {"failed", failed()}, {"skipped", skipped}};
        j["first_failures"] = nlohmann::json::array();
        for (const auto& c : checks) {
            if (c.pass) continue;
            if (j["first_failures"].size() == max_witnesses) break;
            j["first_failures"].push_back({{"check", c.name}, {"witness", c.witness}});
        }
        if (!notes.empty()) j["notes"] = notes;
        return j;
    }
};

struct VariableDistanceRow {
    const char* name;
    double x, y;
    std::array<int, 3> d;
};

// Variable gadget interior: coordinates and hop distances to (a1, a2, a3).  T1 appears twice.
inline constexpr std::array<VariableDistanceRow, 23> kVariableDistances{{
    {"T1", -0.7, 1.61, {4, 3, 3}},      {"T2", -0.45, 0.85, {4, 3, 3}},    {"N1", -0.36, 0.65, {3, 3, 3}},
    {"T1", -0.7, 1.61, {4, 3, 3}},      {"F", -0.35, -0.75, {3, 3, 3}},    {"a1", 1.57, -0.74, {0, 4, 3}},
    {"a2", -1.68, -0.86, {4, 0, 4}},    {"a3", 1.62, 0.34, {3, 4, 0}},     {"b1", 1.55, -0.81, {1, 4, 3}},
    {"b2", -1.62, -0.9, {4, 1, 4}},     {"b3", 1.6, 0.26, {3, 4, 1}},      {"t1,0", -0.15, -1.11, {2, 4, 3}},
    {"f1,0", 0.62, -0.48, {1, 3, 2}},   {"t2,0", -1.35, 0.9, {4, 2, 4}},   {"f2,0", -1.08, -0.06, {3, 1, 3}},
    {"t3,0", 0.28, 1.43, {3, 4, 2}},    {"f3,0", 0.64, 0.51, {2, 3, 1}},   {"t1,1", -0.25, -1.87, {3, 5, 4}},
    {"f1,1", 0.79, -1.46, {2, 4, 3}},   {"t2,1", -1.97, 1.27, {5, 3, 5}},  {"f2,1", -2.03, 0.14, {4, 2, 4}},
    {"t3,1", 0.58, 2.12, {4, 5, 3}},    {"f3,1", 1.27, 1.28, {3, 4, 2}},
}};

struct ClauseDistanceRow {
    const char* name;
    std::array<int, 3> d;  // nearest forced landmark in the copy of the variable on pair 1, 2, 3
};

inline constexpr std::array<ClauseDistanceRow, 96> kClauseDistances{{
    {"m", {66, 66, 66}},      {"w1", {67, 67, 67}},     {"w2", {67, 67, 67}},     {"c1", {67, 68, 68}},
    {"c2", {68, 68, 67}},     {"c3", {68, 67, 68}},     {"t1,1", {66, 69, 69}},   {"t1,2", {65, 70, 70}},
    {"t1,3", {64, 71, 71}},   {"t1,4", {63, 72, 72}},   {"t1,5", {62, 73, 73}},   {"t1,6", {61, 74, 74}},
    {"t1,7", {60, 75, 75}},   {"t1,8", {59, 76, 76}},   {"t1,9", {58, 77, 77}},   {"t1,10", {57, 78, 78}},
    {"t1,11", {56, 79, 79}},  {"t1,12", {55, 80, 80}},  {"t1,13", {54, 81, 81}},  {"t1,14", {53, 82, 82}},
    {"t1,15", {52, 82, 82}},  {"f1,1", {65, 67, 67}},   {"f1,2", {64, 68, 68}},   {"f1,3", {63, 69, 69}},
    {"f1,4", {62, 70, 70}},   {"f1,5", {61, 71, 71}},   {"f1,6", {60, 72, 72}},   {"f1,7", {59, 73, 73}},
    {"f1,8", {58, 74, 74}},   {"f1,9", {57, 75, 75}},   {"f1,10", {56, 76, 76}},  {"f1,11", {55, 77, 77}},
    {"f1,12", {54, 78, 78}},  {"f1,13", {53, 79, 79}},  {"f1,14", {52, 80, 80}},  {"f1,15", {51, 81, 81}},
    {"t2,1", {69, 66, 69}},   {"t2,2", {70, 65, 70}},   {"t2,3", {71, 64, 71}},   {"t2,4", {72, 63, 72}},
    {"t2,5", {73, 62, 73}},   {"t2,6", {74, 61, 74}},   {"t2,7", {75, 60, 75}},   {"t2,8", {76, 59, 76}},
    {"t2,9", {77, 58, 77}},   {"t2,10", {78, 57, 78}},  {"t2,11", {79, 56, 79}},  {"t2,12", {80, 55, 80}},
    {"t2,13", {81, 54, 81}},  {"t2,14", {82, 53, 82}},  {"t2,15", {82, 52, 82}},  {"f2,1", {67, 65, 67}},
    {"f2,2", {68, 64, 68}},   {"f2,3", {69, 63, 69}},   {"f2,4", {70, 62, 70}},   {"f2,5", {71, 61, 71}},
    {"f2,6", {72, 60, 72}},   {"f2,7", {73, 59, 73}},   {"f2,8", {74, 58, 74}},   {"f2,9", {75, 57, 75}},
    {"f2,10", {76, 56, 76}},  {"f2,11", {77, 55, 77}},  {"f2,12", {78, 54, 78}},  {"f2,13", {79, 53, 79}},
    {"f2,14", {80, 52, 80}},  {"f2,15", {81, 51, 81}},  {"t3,1", {69, 69, 66}},   {"t3,2", {70, 70, 65}},
    {"t3,3", {71, 71, 64}},   {"t3,4", {72, 72, 63}},   {"t3,5", {73, 73, 62}},   {"t3,6", {74, 74, 61}},
    {"t3,7", {75, 75, 60}},   {"t3,8", {76, 76, 59}},   {"t3,9", {77, 77, 58}},   {"t3,10", {78, 78, 57}},
    {"t3,11", {79, 79, 56}},  {"t3,12", {80, 80, 55}},  {"t3,13", {81, 81, 54}},  {"t3,14", {82, 82, 53}},
    {"t3,15", {82, 82, 52}},  {"f3,1", {67, 67, 65}},   {"f3,2", {68, 68, 64}},   {"f3,3", {69, 69, 63}},
    {"f3,4", {70, 70, 62}},   {"f3,5", {71, 71, 61}},   {"f3,6", {72, 72, 60}},   {"f3,7", {73, 73, 59}},
    {"f3,8", {74, 74, 58}},   {"f3,9", {75, 75, 57}},   {"f3,10", {76, 76, 56}},  {"f3,11", {77, 77, 55}},
    {"f3,12", {78, 78, 54}},  {"f3,13", {79, 79, 53}},  {"f3,14", {80, 80, 52}},  {"f3,15", {81, 81, 51}},
}};

namespace detail {

inline std::string triple(const std::array<Hops, 3>& h) {
    return "(" + h[0].str() + "," + h[1].str() + "," + h[2].str() + ")";
}

inline std::string triple(const std::array<int, 3>& h) {
    return "(" + std::to_string(h[0]) + "," + std::to_string(h[1]) + "," + std::to_string(h[2]) + ")";
}

inline bool equals(const std::array<Hops, 3>& h, const std::array<int, 3>& d) {
    for (int i = 0; i < 3; ++i)
        if (!h[i].finite() || h[i].value() != static_cast<std::uint32_t>(d[i])) return false;
    return true;
}

}  // namespace detail

inline SuiteReport golden_variable_distances(const Assembly& a) {
    SuiteReport r{"golden_variable_distances", {}, 0, {}};
    for (std::size_t x = 0; x < a.variable_count; ++x) {
        const auto& copy = a.variable_copy(x);
        std::array<std::vector<Hops>, 3> rows;
        for (int i = 0; i < 3; ++i) rows[i] = bfs_distances(a.g.graph, copy.at("a" + std::to_string(i + 1)));
        std::set<std::string> seen;
        for (const auto& row : kVariableDistances) {
            if (!seen.insert(row.name).second) continue;
            auto it = copy.vertices.find(row.name);
            if (it == copy.vertices.end()) {
                ++r.skipped;
                continue;
            }
            const std::array<Hops, 3> got{rows[0][it->second], rows[1][it->second], rows[2][it->second]};
            r.add(copy.id + "/" + row.name, detail::equals(got, row.d),
                  "got " + detail::triple(got) + ", table " + detail::triple(row.d));
        }
    }
    if (r.skipped) r.notes.push_back("rows naming vertices absent from two-occurrence gadgets are skipped");
    return r;
}

inline SuiteReport golden_clause_distances(const Assembly& a, ForcedChoice choice = ForcedChoice::ASide) {
    SuiteReport r{"golden_clause_distances", {}, 0, {}};
    const auto forced = forced_landmarks(a, choice);
    std::size_t three = 0;
    for (std::size_t c = 0; c < a.clause_count; ++c) {
        const auto& copy = a.clause_copy(c);
        if (copy.kind != GadgetKind::G3c) continue;
        ++three;
        std::array<std::vector<Hops>, 3> rows;
        for (int k = 1; k <= 3; ++k) {
            const std::size_t x = a.clause_pair_var[c].at(k);
            const std::vector<VertexId> src(forced.begin() + 3 * x, forced.begin() + 3 * x + 3);
            rows[k - 1] = multi_source_bfs(a.g.graph, src);
        }
        for (const auto& row : kClauseDistances) {
            const VertexId v = copy.at(row.name);
            const std::array<Hops, 3> got{rows[0][v], rows[1][v], rows[2][v]};
            r.add(copy.id + "/" + row.name, detail::equals(got, row.d),
                  "got " + detail::triple(got) + ", table " + detail::triple(row.d));
        }
    }
    if (three == 0) r.add("has-three-literal-clause", false, "assembly contains no three-literal clause");
    return r;
}

inline SuiteReport lemma_min3(const Assembly& a) {
    SuiteReport r{"lemma_min3", {}, 0, {}};
    for (std::size_t x = 0; x < a.variable_count; ++x) {
        const auto& copy = a.variable_copy(x);
        for (int i = 1; i <= 3; ++i) {
            const VertexId ai = copy.at("a" + std::to_string(i)), bi = copy.at("b" + std::to_string(i));
            const auto da = bfs_distances(a.g.graph, ai), db = bfs_distances(a.g.graph, bi);
            std::string witness;
            for (VertexId s = 0; s < a.g.size() && witness.empty(); ++s)
                if (s != ai && s != bi && da[s] != db[s])
                    witness = a.labels[s] + " resolves: " + da[s].str() + " vs " + db[s].str();
            r.add(copy.id + "/a" + std::to_string(i) + "b" + std::to_string(i), witness.empty(), witness);
        }
    }
    return r;
}

inline SuiteReport lemma_resolve_all(const Assembly& a, const LandmarkSet& forced) {
    SuiteReport r{"lemma_resolveAll", {}, 0, {}};
    const auto dm = DistanceMatrix::from_sources(a.g.graph, forced);
    const auto un = unsolved_pairs(dm, forced);
    std::set<VertexPair> got(un.begin(), un.end());
    std::set<VertexPair> want;
    auto expect = [&](const GadgetCopy& c, std::string_view u, std::string_view v) {
        VertexId p = c.at(u), q = c.at(v);
        want.insert({std::min(p, q), std::max(p, q)});
    };
    for (std::size_t x = 0; x < a.variable_count; ++x) {
        expect(a.variable_copy(x), "T1", "T2");
        expect(a.variable_copy(x), "N1", "F");
    }
    for (std::size_t c = 0; c < a.clause_count; ++c) expect(a.clause_copy(c), "w1", "w2");
    for (const auto& p : want)
        r.add("unsolved " + a.labels[p.first] + "," + a.labels[p.second], got.count(p) > 0, "pair is resolved by the forced landmarks");
    std::vector<std::string> extra;
    for (const auto& p : got)
        if (!want.count(p)) extra.push_back(a.labels[p.first] + "," + a.labels[p.second]);
    std::string w = std::to_string(extra.size()) + " unexpected unsolved pairs";
    for (std::size_t i = 0; i < std::min<std::size_t>(extra.size(), 5); ++i) w += (i ? "; " : ": ") + extra[i];
    r.add("no-other-unsolved-pairs", extra.empty(), w);
    return r;
}

inline SuiteReport lemma_resolve_all(const Assembly& a, ForcedChoice choice = ForcedChoice::ASide) {
    auto r = lemma_resolve_all(a, forced_landmarks(a, choice));
    r.suite += choice == ForcedChoice::ASide ? "[a]" : "[b]";
    return r;
}

inline SuiteReport lemma_T1T2(const Assembly& a) {
    SuiteReport r{"lemma_T1T2", {}, 0, {}};
    for (std::size_t x = 0; x < a.variable_count; ++x) {
        const auto& copy = a.variable_copy(x);
        const auto d1 = bfs_distances(a.g.graph, copy.at("T1")), d2 = bfs_distances(a.g.graph, copy.at("T2"));
        std::set<VertexId> got, want;
        for (VertexId s = 0; s < a.g.size(); ++s)
            if (d1[s] != d2[s]) got.insert(s);
        for (auto n : kFourthGroup) want.insert(copy.at(n));
        std::string w;
        for (VertexId s : got)
            if (!want.count(s)) w += " extra " + a.labels[s];
        for (VertexId s : want)
            if (!got.count(s)) w += " missing " + a.labels[s];
        r.add(copy.id + "/resolvers", got == want, "resolver set differs:" + w);
    }
    return r;
}

inline SuiteReport degree_check(const Assembly& a) {
    SuiteReport r{"degree_check", {}, 0, {}};
    VertexId arg = 0;
    for (VertexId v = 0; v < a.g.size(); ++v)
        if (a.g.graph.degree(v) > a.g.graph.degree(arg)) arg = v;
    const std::size_t deg = a.g.size() ? a.g.graph.degree(arg) : 0;
    r.add("max-degree", deg <= 6, "degree " + std::to_string(deg) + " at " + (a.g.size() ? a.labels[arg] : ""));
    r.notes.push_back("max degree " + std::to_string(deg) + (a.g.size() ? " at " + a.labels[arg] : ""));
    return r;
}

inline SuiteReport gudg_check(const Assembly& a, std::int64_t margin = 10) {
    SuiteReport r{"gudg_check", {}, 0, {}};
    const auto rep = is_gudg_embedding(a.g, margin);
    std::map<std::string, std::size_t> by_kind;
    for (const auto& v : rep.violations) ++by_kind[v.kind];
    r.add("embedding", rep.ok(), rep.ok() ? "" : rep.violations.front().kind + " " + rep.violations.front().detail);
    for (const auto& [k, n] : by_kind) r.notes.push_back(std::to_string(n) + " " + k + " violations");
    return r;
}

struct Pipeline {
    SatInstance shortened;
    Drawing drawing;
    Assembly assembly;
};

inline Pipeline run_pipeline(const SatInstance& psi, const Drawing& d) {
    auto sh = shorten_edge_paths(psi, d);
    Pipeline p{sh.psi, sh.drawing, assemble(sh.psi, sh.drawing)};
    return p;
}

inline constexpr std::size_t kMaxTheoremVariables = 8;

// Both directions of the main equivalence on an assembled instance of at most 8 variables.
inline SuiteReport theorem_equivalence(const Assembly& a, ForcedChoice choice = ForcedChoice::ASide) {
    const SatInstance& psi = a.psi;
    if (a.variable_count > kMaxTheoremVariables)
        throw InputError("theorem_equivalence: " + std::to_string(a.variable_count) + " variables after shortening (max 8)");
    SuiteReport r{"theorem_equivalence", {}, 0, {}};
    const auto forced = forced_landmarks(a, choice);
    const auto groups = fourth_landmark_groups(a);
    std::vector<VertexId> sources = forced;
    for (const auto& g : groups) sources.insert(sources.end(), g.begin(), g.end());
    const auto dm = DistanceMatrix::from_sources(a.g.graph, sources);
    std::set<VertexPair> clause_pairs;
    for (std::size_t c = 0; c < a.clause_count; ++c) {
        const VertexId u = a.clause_copy(c).at("w1"), v = a.clause_copy(c).at("w2");
        clause_pairs.insert({std::min(u, v), std::max(u, v)});
    }
    const std::size_t n = a.variable_count;
    std::size_t sat_count = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        TruthAssignment A(n);
        std::string bits;
        for (std::size_t v = 0; v < n; ++v) {
            A[v] = (m >> (n - 1 - v)) & 1;
            bits += A[v] ? '1' : '0';
        }
        const bool sat = satisfies(psi, A);
        sat_count += sat;
        const auto S = assignment_to_landmarks(a, A, choice);
        if (sat) {
            const auto bad = is_resolving(dm, S);
            r.add("sat-resolves/" + bits, !bad,
                  bad ? "unsolved " + a.labels[bad->first] + "," + a.labels[bad->second] : "");
        } else {
            const auto un = unsolved_pairs(dm, S);
            bool clause_left = false;
            for (const auto& p : un) clause_left |= clause_pairs.count(p) > 0;
            r.add("unsat-fails/" + bits, clause_left, un.empty() ? "set resolves H" : "no clause pair (w1,w2) unsolved");
        }
    }
    const bool sat = brute_force_sat(psi).has_value();
    const auto sel = restricted_min_resolving(dm, forced, groups);
    r.add("restricted-search-agrees", sel.has_value() == sat,
          std::string("brute force says ") + (sat ? "satisfiable" : "unsatisfiable") + ", restricted search " +
              (sel ? "found a selection" : "found none"));
    if (sel) {
        if (const auto bad = is_resolving(dm, *sel))
            r.add("selection-resolves", false, "unsolved " + a.labels[bad->first] + "," + a.labels[bad->second]);
        else
            r.add("selection-resolves", true);
        const auto A = landmarks_to_assignment(a, *sel);
        r.add("extracted-assignment-satisfies", satisfies(psi, A), "extracted assignment falsifies the formula");
        r.add("selection-size", sel->size() == a.budget,
              "size " + std::to_string(sel->size()) + " vs budget " + std::to_string(a.budget));
    }
    r.notes.push_back(std::to_string(sat_count) + " of " + std::to_string(std::uint64_t{1} << n) +
                      " assignments satisfy; the reverse direction searches one of {T1,T2,N1,N2,F} per variable copy");
    return r;
}

inline std::vector<SuiteReport> run_all_suites(const Assembly& a, std::int64_t margin = 10) {
    std::vector<SuiteReport> out;
    out.push_back(gudg_check(a, margin));
    out.push_back(degree_check(a));
    out.push_back(golden_variable_distances(a));
    bool three = false;
    for (std::size_t c = 0; c < a.clause_count; ++c) three |= a.clause_copy(c).kind == GadgetKind::G3c;
    if (three) out.push_back(golden_clause_distances(a));
    out.push_back(lemma_min3(a));
    out.push_back(lemma_resolve_all(a, ForcedChoice::ASide));
    out.push_back(lemma_resolve_all(a, ForcedChoice::BSide));
    out.push_back(lemma_T1T2(a));
    if (a.variable_count <= kMaxTheoremVariables) out.push_back(theorem_equivalence(a));
    return out;
}

}  // namespace gudg
