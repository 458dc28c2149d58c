#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace gudg;

namespace {

Assembly build(const std::string& stem) {
    const auto inst = testutil::load_instance(stem);
    return run_pipeline(inst.psi, inst.d).assembly;
}

bool is_last_strand_t(const std::string& check) {
    const auto slash = check.rfind('/');
    const auto name = check.substr(slash + 1);
    return name.size() == 5 && name[0] == 't' && name.substr(2) == ",15";
}

}  // namespace

TEST(Suites, SmallInstanceSuitesPass) {
    const auto a = build("xyz");
    for (const auto& r : {gudg_check(a), degree_check(a), golden_variable_distances(a), lemma_min3(a),
                          lemma_resolve_all(a, ForcedChoice::ASide), lemma_resolve_all(a, ForcedChoice::BSide),
                          lemma_T1T2(a), theorem_equivalence(a)})
        EXPECT_TRUE(r.ok()) << r.text();
}

TEST(Suites, UnsatInstance) {
    const auto a = build("unsat");
    const auto t = theorem_equivalence(a);
    EXPECT_TRUE(t.ok()) << t.text();
    for (const auto& c : t.checks) EXPECT_EQ(c.name.rfind("sat-resolves", 0), std::string::npos);
    EXPECT_TRUE(lemma_resolve_all(a).ok());
    EXPECT_TRUE(golden_variable_distances(a).ok());
}

TEST(Suites, GoldenVariableRowCount) {
    const auto a = build("xyz");
    const auto r = golden_variable_distances(a);
    // 22 distinct rows per three-pair copy, fewer on two-pair copies
    std::size_t want = 0;
    for (std::size_t x = 0; x < a.variable_count; ++x) {
        std::set<std::string> seen;
        for (const auto& row : kVariableDistances)
            if (seen.insert(row.name).second && a.variable_copy(x).vertices.count(row.name)) ++want;
    }
    EXPECT_EQ(r.checks.size(), want);
}

TEST(ClauseDistances, AttainableRowsMatchAndLastStrandRowsAreForced) {
    const auto a = build("xyz");
    const auto r = golden_clause_distances(a);
    std::size_t three = 0;
    for (std::size_t c = 0; c < a.clause_count; ++c) three += a.clause_copy(c).kind == GadgetKind::G3c;
    ASSERT_GT(three, 0u);
    EXPECT_EQ(r.checks.size(), 96 * three);
    EXPECT_EQ(r.failed(), 3 * three);
    for (const auto& c : r.checks)
        if (!c.pass) { EXPECT_TRUE(is_last_strand_t(c.name)) << c.name; }

    // t_{k,15} has two neighbours, t_{k,14} and the edge strand; away from its own variable
    // the edge strand is farther, so the distance is one more than at t_{k,14}.
    const auto forced = forced_landmarks(a, ForcedChoice::ASide);
    for (std::size_t c = 0; c < a.clause_count; ++c) {
        const auto& copy = a.clause_copy(c);
        if (copy.kind != GadgetKind::G3c) continue;
        for (int col = 1; col <= 3; ++col) {
            const std::size_t x = a.clause_pair_var[c].at(col);
            const std::vector<VertexId> src(forced.begin() + 3 * x, forced.begin() + 3 * x + 3);
            const auto d = multi_source_bfs(a.g.graph, src);
            for (int k = 1; k <= 3; ++k) {
                const VertexId last = copy.at(tf_name('t', k, 15));
                ASSERT_EQ(a.g.graph.degree(last), 2u);
                const auto here = d[last].value(), prev = d[copy.at(tf_name('t', k, 14))].value();
                if (k == col) {
                    EXPECT_EQ(here, 52u);
                } else {
                    EXPECT_EQ(prev, 82u);
                    EXPECT_EQ(here, prev + 1);
                }
            }
        }
    }
}

TEST(ClauseDistances, ValuesAreSymmetricUnderPairPermutation) {
    std::map<std::string, std::array<int, 3>> t;
    for (const auto& r : kClauseDistances) t[r.name] = r.d;
    EXPECT_EQ(t.size(), 96u);
    for (int k = 1; k <= 3; ++k)
        for (int j = 1; j <= 15; ++j)
            for (char s : {'t', 'f'}) {
                const auto& row = t.at(tf_name(s, k, j));
                const int own = row[k - 1];
                EXPECT_EQ(own, (s == 't' ? 67 : 66) - j) << tf_name(s, k, j);
            }
}

TEST(Report, TextAndJson) {
    SuiteReport r{"demo", {}, 2, {"a note"}};
    r.add("one", true);
    r.add("two", false, "why");
    EXPECT_FALSE(r.ok());
    const auto text = r.text();
    EXPECT_NE(text.find("FAIL demo/two: why"), std::string::npos);
    EXPECT_EQ(text.find("PASS demo/one"), std::string::npos);
    EXPECT_NE(r.text(true).find("PASS demo/one"), std::string::npos);
    EXPECT_NE(text.find("1 passed, 1 failed, 2 skipped"), std::string::npos);
    const auto j = r.json();
    EXPECT_EQ(j["passed"], 1);
    EXPECT_EQ(j["failed"], 1);
    EXPECT_EQ(j["first_failures"][0]["witness"], "why");
    EXPECT_EQ(j["notes"][0], "a note");
    for (int i = 0; i < 10; ++i) r.add("f" + std::to_string(i), false, "w");
    EXPECT_EQ(r.json(3)["first_failures"].size(), 3u);
}

TEST(Theorem, TooManyVariablesThrows) {
    const auto a = build("xyz_long");
    ASSERT_GT(a.variable_count, kMaxTheoremVariables);
    EXPECT_THROW(theorem_equivalence(a), InputError);
    bool has_theorem = false;
    for (const auto& r : run_all_suites(a)) has_theorem |= r.suite == "theorem_equivalence";
    EXPECT_FALSE(has_theorem);
}

TEST(Theorem, SatisfyingAssignmentsResolve) {
    const auto a = build("xyz");
    const auto r = theorem_equivalence(a, ForcedChoice::BSide);
    EXPECT_TRUE(r.ok()) << r.text();
    std::size_t sat = 0;
    for (const auto& c : r.checks) sat += c.name.rfind("sat-resolves", 0) == 0;
    std::size_t want = 0;
    for (std::uint32_t m = 0; m < (1u << a.variable_count); ++m) {
        TruthAssignment A(a.variable_count);
        for (std::size_t v = 0; v < A.size(); ++v) A[v] = (m >> v) & 1;
        want += satisfies(a.psi, A);
    }
    EXPECT_EQ(sat, want);
}
