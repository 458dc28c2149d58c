#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace gudg;

namespace {

struct Built {
    SatInstance psi;
    Drawing d;
    Placement placement;
    Assembly a;
};

Built build(const std::string& stem) {
    const auto inst = testutil::load_instance(stem);
    auto sh = shorten_edge_paths(inst.psi, inst.d);
    auto p = resolve_orientation_conflicts(select_tiles(sh.psi, sh.drawing));
    auto a = assemble(p);
    return {sh.psi, sh.drawing, std::move(p), std::move(a)};
}

std::size_t edge_count_of(const SatInstance& psi) {
    std::size_t n = 0;
    for (const auto& c : psi.clauses) n += c.lits.size();
    return n;
}

std::size_t occurrences(const SatInstance& psi, std::size_t x) {
    std::size_t n = 0;
    for (const auto& c : psi.clauses)
        for (const auto& l : c.lits) n += l.var == x;
    return n;
}

}  // namespace

TEST(Assembler, ConflictsResolved) {
    for (const char* stem : {"xyz", "unsat", "xyz_long"}) {
        const auto b = build(stem);
        EXPECT_EQ(orientation_conflicts(b.placement), 0u) << stem;
    }
}

TEST(Assembler, ConflictedPlacementIsRejected) {
    std::size_t seen = 0;
    for (const auto& stem : testutil::random_stems()) {
        const auto inst = testutil::load_instance(stem);
        const auto sh = shorten_edge_paths(inst.psi, inst.d);
        const auto raw = select_tiles(sh.psi, sh.drawing);
        if (orientation_conflicts(raw) == 0) continue;
        ++seen;
        EXPECT_THROW(assemble(raw), InputError) << stem;
    }
    RecordProperty("conflicted_placements", std::to_string(seen));
}

TEST(Assembler, TileKindsFollowOccurrences) {
    const auto b = build("xyz_long");
    for (std::size_t x = 0; x < b.psi.variables.size(); ++x) {
        const auto k = b.a.variable_copy(x).kind;
        EXPECT_EQ(k == GadgetKind::G3v, occurrences(b.psi, x) == 3) << b.psi.variables[x];
        EXPECT_TRUE(is_variable_kind(k));
    }
    for (std::size_t c = 0; c < b.psi.clauses.size(); ++c)
        EXPECT_EQ(b.a.clause_copy(c).kind, b.psi.clauses[c].lits.size() == 3 ? GadgetKind::G3c : GadgetKind::G2c);
}

TEST(Assembler, SizesFromGadgetCounts) {
    for (const char* stem : {"xyz", "unsat", "xyz_long"}) {
        const auto b = build(stem);
        std::size_t vertices = 0, edges = 0;
        for (const auto& c : b.a.copies) {
            const auto g = make_gadget(c.kind);
            vertices += g.graph.size();
            edges += g.graph.edge_count();
        }
        const std::size_t m = edge_count_of(b.psi);
        EXPECT_EQ(b.a.copies.size(), b.psi.variables.size() + b.psi.clauses.size() + m);
        EXPECT_EQ(b.a.identifications.size(), 4 * m);
        EXPECT_EQ(b.a.g.size(), vertices - 4 * m) << stem;
        EXPECT_EQ(b.a.g.graph.edge_count(), edges) << stem;
        EXPECT_EQ(b.a.budget, 4 * b.psi.variables.size());
        EXPECT_EQ(b.a.labels.size(), b.a.g.size());
    }
}

TEST(Assembler, SlotVerticesBecomeStrandInteriors) {
    const auto b = build("xyz");
    for (std::size_t i = 0; i < b.a.variable_count + b.a.clause_count; ++i) {
        const auto& copy = b.a.copies[i];
        for (const auto& p : make_gadget(copy.kind).tf_pairs) {
            const auto& names = make_gadget(copy.kind).names;
            EXPECT_EQ(b.a.g.graph.degree(copy.at(names[p.t])), 2u) << copy.id << "/" << names[p.t];
            EXPECT_EQ(b.a.g.graph.degree(copy.at(names[p.f])), 2u) << copy.id << "/" << names[p.f];
        }
    }
}

TEST(Assembler, EmbeddingIsGabrielUdg) {
    for (const char* stem : {"xyz", "unsat"}) {
        const auto b = build(stem);
        const auto rep = is_gudg_embedding(b.a.g, 10);
        EXPECT_TRUE(rep.ok()) << stem << "\n" << rep.str();
        EXPECT_LE(b.a.g.graph.max_degree(), 6u);
        EXPECT_TRUE(is_connected(b.a.g.graph));
    }
}

TEST(Assembler, CopyCoordinatesAreTileCoordinatesPlusCellOffset) {
    const auto b = build("xyz");
    const auto cvg = clause_variable_graph(b.psi);
    for (std::size_t x = 0; x < b.a.variable_count; ++x) {
        const auto& copy = b.a.variable_copy(x);
        const auto& tile = catalog().find(copy.variant).tile;
        const auto gp = b.d.placement[x];
        const Point2 off{24 * gp.x * kScale, 24 * gp.y * kScale};
        for (const auto& [name, v] : copy.vertices) EXPECT_EQ(b.a.g.pos[v], tile.at(name) + off) << copy.id << "/" << name;
    }
    for (std::size_t c = 0; c < b.a.clause_count; ++c) {
        const auto& copy = b.a.clause_copy(c);
        const auto gp = b.d.placement[cvg.clause_vertex(c)];
        const Point2 off{24 * gp.x * kScale, 24 * gp.y * kScale};
        EXPECT_EQ(b.a.g.pos[copy.at("m")], catalog().find(copy.variant).tile.at("m") + off);
    }
}

TEST(Assembler, Labels) {
    const auto b = build("xyz");
    EXPECT_EQ(b.a.labels[b.a.variable_copy(0).at("T1")], "x:x/T1");
    EXPECT_EQ(b.a.labels[b.a.clause_copy(1).at("w2")], "c:c2/w2");
    std::set<std::string> uniq(b.a.labels.begin(), b.a.labels.end());
    EXPECT_EQ(uniq.size(), b.a.labels.size());
    for (const auto& id : b.a.identifications) EXPECT_EQ(id.removed.rfind("e:", 0), 0u);
}

TEST(Assembler, VariableToClausePathLength) {
    // a_i to f_{i,0} to t_{i,0}, 14 strand steps, 36 through the edge gadget
    const auto b = build("xyz");
    for (std::size_t c = 0; c < b.a.clause_count; ++c)
        for (const auto& [k, x] : b.a.clause_pair_var[c]) {
            const auto& vc = b.a.variable_copy(x);
            const auto target = b.a.clause_copy(c).at(tf_name('t', k, 15));
            std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
            for (int i = 1; i <= 3; ++i) {
                const auto name = "a" + std::to_string(i);
                if (!vc.vertices.count(name)) continue;
                const auto d = bfs_distances(b.a.g.graph, vc.at(name));
                best = std::min(best, d[target].value());
            }
            EXPECT_EQ(best, 52u) << b.a.clause_copy(c).id << " pair " << k;
        }
}

TEST(Landmarks, ForcedSetSize) {
    const auto b = build("xyz_long");
    EXPECT_EQ(forced_landmarks(b.a, ForcedChoice::ASide).size(), 3 * b.a.variable_count);
    EXPECT_EQ(forced_landmarks(b.a, ForcedChoice::BSide).size(), 3 * b.a.variable_count);
    EXPECT_THROW(forced_landmarks(b.a, std::vector<ForcedChoice>{}), InputError);
    const auto groups = fourth_landmark_groups(b.a);
    ASSERT_EQ(groups.size(), b.a.variable_count);
    for (const auto& g : groups) EXPECT_EQ(g.size(), 5u);
}

TEST(Landmarks, AssignmentRoundTrip) {
    const auto b = build("xyz");
    const std::size_t n = b.a.variable_count;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        TruthAssignment A(n);
        for (std::size_t v = 0; v < n; ++v) A[v] = (m >> v) & 1;
        for (auto ch : {ForcedChoice::ASide, ForcedChoice::BSide}) {
            const auto S = assignment_to_landmarks(b.a, A, ch);
            EXPECT_EQ(S.size(), b.a.budget);
            EXPECT_EQ(landmarks_to_assignment(b.a, S), A);
        }
    }
    const auto all_true = assignment_to_landmarks(b.a, TruthAssignment(n, true));
    EXPECT_EQ(b.a.labels[all_true.back()], "x:" + b.psi.variables[n - 1] + "/T1");
    const auto all_false = assignment_to_landmarks(b.a, TruthAssignment(n, false));
    EXPECT_EQ(b.a.labels[all_false.back()], "x:" + b.psi.variables[n - 1] + "/F");
}

TEST(Landmarks, OtherFourthLandmarksReadAsTrue) {
    const auto b = build("xyz");
    auto S = forced_landmarks(b.a, ForcedChoice::ASide);
    for (std::size_t x = 0; x < b.a.variable_count; ++x) S.push_back(b.a.variable_copy(x).at(x == 0 ? "N1" : "F"));
    const auto A = landmarks_to_assignment(b.a, S);
    EXPECT_TRUE(A[0]);
    for (std::size_t x = 1; x < A.size(); ++x) EXPECT_FALSE(A[x]);
}

TEST(Landmarks, BadShapeThrows) {
    const auto b = build("xyz");
    auto S = assignment_to_landmarks(b.a, TruthAssignment(b.a.variable_count, true));
    auto extra = S;
    extra.push_back(b.a.variable_copy(0).at("b1"));
    EXPECT_THROW(landmarks_to_assignment(b.a, extra), InputError);
    auto missing = S;
    missing.pop_back();
    EXPECT_THROW(landmarks_to_assignment(b.a, missing), InputError);
    auto outside = S;
    outside.push_back(b.a.clause_copy(0).at("m"));
    EXPECT_THROW(landmarks_to_assignment(b.a, outside), InputError);
    EXPECT_THROW(assignment_to_landmarks(b.a, TruthAssignment(1, true)), InputError);
}
