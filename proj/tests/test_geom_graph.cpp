#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace gudg;
using testutil::pt;

TEST(Decimal, ParseAndFormat) {
    EXPECT_EQ(parse_decimal("1"), 10000);
    EXPECT_EQ(parse_decimal("-0.7"), -7000);
    EXPECT_EQ(parse_decimal("0.0001"), 1);
    EXPECT_EQ(parse_decimal(".5"), 5000);
    EXPECT_EQ(format_decimal(-7000), "-0.7");
    EXPECT_EQ(format_decimal(12345), "1.2345");
    EXPECT_EQ(format_decimal(20000), "2");
    EXPECT_THROW(parse_decimal("0.00001"), InputError);
    EXPECT_THROW(parse_decimal("1e3"), InputError);
    EXPECT_THROW(parse_decimal("-"), InputError);
}

TEST(Udg, BoundaryIsInclusive) {
    auto g = udg_from_points({pt(0, 0), pt(1, 0)});
    EXPECT_TRUE(g.graph.has_edge(0, 1));
    auto h = udg_from_points({pt(0, 0), pt(0, 2)});
    EXPECT_EQ(h.graph.edge_count(), 0u);
    auto k = udg_from_points({pt(0, 0), {kScale, 1}});
    EXPECT_EQ(k.graph.edge_count(), 0u);
}

TEST(Udg, VariableGadgetCoordinatesNearBoundary) {
    const Point2 T1 = pt(-0.7, 1.61), t30 = pt(0.28, 1.43);
    EXPECT_EQ(dist2(T1, t30), 9928LL * 10000);
    auto g = udg_from_points({T1, t30});
    EXPECT_TRUE(g.graph.has_edge(0, 1));
}

TEST(Udg, DuplicatePointNamesIndices) {
    try {
        udg_from_points({pt(0, 0), pt(3, 3), pt(0, 0)});
        FAIL() << "expected rejection";
    } catch (const DuplicatePointError& e) {
        EXPECT_EQ(e.first, 0u);
        EXPECT_EQ(e.second, 2u);
    }
}

TEST(Udg, MatchesQuadraticScan) {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const auto pts = testutil::random_points(rng, 60, 5.0);
        const auto g = udg_from_points(pts);
        std::size_t count = 0;
        for (VertexId i = 0; i < pts.size(); ++i)
            for (VertexId j = i + 1; j < pts.size(); ++j) {
                const double dx = double(pts[i].x - pts[j].x) / kScale, dy = double(pts[i].y - pts[j].y) / kScale;
                const bool near = dx * dx + dy * dy <= 1.0 + 1e-12;
                const bool exact = dist2(pts[i], pts[j]) <= kScale * kScale;
                EXPECT_EQ(g.graph.has_edge(i, j), exact);
                if (std::abs(dx * dx + dy * dy - 1.0) > 1e-9) { EXPECT_EQ(near, exact); }
                count += exact;
            }
        EXPECT_EQ(g.graph.edge_count(), count);
        EXPECT_EQ(udg_edges(pts), g.graph.edges());
    }
}

TEST(Gabriel, MidpointBlocksLongEdge) {
    auto g = udg_from_points({pt(0, 0), pt(0.5, 0), pt(1, 0)});
    ASSERT_EQ(g.graph.edge_count(), 3u);
    const auto e = gabriel_edges(g);
    EXPECT_EQ(e, (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(Gabriel, NearEquilateralKeepsAll) {
    auto g = udg_from_points({pt(0, 0), pt(1, 0), pt(0.5, 0.866)});
    ASSERT_EQ(g.graph.edge_count(), 3u);
    EXPECT_EQ(gabriel_edges(g).size(), 3u);
}

TEST(Gabriel, PendantTriangle) {
    const Point2 a1 = pt(1.57, -0.74), f10 = pt(0.62, -0.48), b1 = pt(1.55, -0.81);
    // |a1 w|^2 + |w f|^2 vs |a1 f|^2, by hand in 1e-4 units squared
    const std::int64_t aw = 2 * 2 + 7 * 7, wf = 93 * 93 + 33 * 33, af = 95 * 95 + 26 * 26;
    EXPECT_EQ(dist2(a1, b1), aw * 10000);
    EXPECT_GT(aw + wf, af);
    EXPECT_FALSE(detail::gabriel_blocked(a1, f10, b1));
    auto g = udg_from_points({a1, f10, b1});
    EXPECT_EQ(gabriel_edges(g).size(), 3u);
}

TEST(Gabriel, SubsetAndConnectivity) {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        const auto g = udg_from_points(testutil::random_points(rng, 50, 4.0));
        const auto gab = gabriel_edges(g);
        const auto sub = subgraph_with_edges(g.size(), gab);
        for (const Edge& e : gab) EXPECT_TRUE(g.graph.has_edge(e.u, e.v));
        // brute-force definition
        for (const Edge& e : g.graph.edges()) {
            bool blocked = false;
            for (VertexId w = 0; w < g.size(); ++w)
                if (w != e.u && w != e.v &&
                    dist2(g.pos[e.u], g.pos[w]) + dist2(g.pos[w], g.pos[e.v]) <= dist2(g.pos[e.u], g.pos[e.v]))
                    blocked = true;
            EXPECT_EQ(sub.has_edge(e.u, e.v), !blocked);
        }
        const auto a = testutil::all_pairs(g.graph), b = testutil::all_pairs(sub);
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j) EXPECT_EQ(a[i][j] < (1L << 40), b[i][j] < (1L << 40));
    }
}

TEST(GudgEmbedding, PathPassesAndExtraEdgeFails) {
    const std::vector<Point2> pts{pt(0, 0), pt(1, 0), pt(2, 0)};
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    EXPECT_TRUE(is_gudg_embedding({g, pts}).ok());
    g.add_edge(0, 2);
    const auto rep = is_gudg_embedding({g, pts});
    ASSERT_FALSE(rep.ok());
    bool listed = false;
    for (const auto& v : rep.violations) listed |= v.detail.find("0-2") != std::string::npos;
    EXPECT_TRUE(listed) << rep.str();
}

TEST(GudgEmbedding, MissingUdgEdgeAndMargin) {
    const std::vector<Point2> pts{pt(0, 0), pt(0.9, 0)};
    EXPECT_FALSE(is_gudg_embedding({Graph(2), pts}).ok());
    const std::vector<Point2> close{pt(0, 0), pt(1.0005, 0)};
    EXPECT_FALSE(is_gudg_embedding({Graph(2), close}, 10).ok());
    EXPECT_TRUE(is_gudg_embedding({Graph(2), close}, 5).ok());
    EXPECT_TRUE(is_gudg_embedding({Graph(2), close}, 0).ok());
    EXPECT_THROW(is_gudg_embedding({Graph(2), close}, -1), InputError);
}

TEST(GudgEmbedding, NonGabrielEdgeReported) {
    const std::vector<Point2> pts{pt(0, 0), pt(0.5, 0.1), pt(1, 0)};
    const auto udg = udg_from_points(pts);
    const auto rep = is_gudg_embedding(udg);
    ASSERT_FALSE(rep.ok());
    EXPECT_EQ(rep.violations.front().kind, "non-gabriel");
}

TEST(Bfs, PathAndUnreachable) {
    const auto d = bfs_distances(testutil::path_graph(3), 0);
    EXPECT_EQ(d[0].value(), 0u);
    EXPECT_EQ(d[1].value(), 1u);
    EXPECT_EQ(d[2].value(), 2u);
    Graph g(3);
    g.add_edge(0, 1);
    const auto e = bfs_distances(g, 0);
    EXPECT_FALSE(e[2].finite());
    EXPECT_EQ(e[2].str(), "inf");
    EXPECT_THROW(e[2].value(), std::domain_error);
    EXPECT_THROW(bfs_distances(g, 7), std::exception);
    EXPECT_LT(Hops(1000000), Hops::infinity());
}

TEST(Bfs, AgreesWithFloydWarshallAndEdgeLipschitz) {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 20; ++rep) {
        const auto g = udg_from_points(testutil::random_points(rng, 40, 4.0)).graph;
        const auto fw = testutil::all_pairs(g);
        const auto dm = distance_matrix(g);
        for (VertexId u = 0; u < g.size(); ++u)
            for (VertexId v = 0; v < g.size(); ++v) {
                const bool fin = fw[u][v] < (1L << 40);
                ASSERT_EQ(dm(u, v).finite(), fin);
                if (fin) { EXPECT_EQ(dm(u, v).value(), std::uint32_t(fw[u][v])); }
                EXPECT_EQ(dm(u, v), dm(v, u));
            }
        for (const Edge& e : g.edges())
            for (VertexId x = 0; x < g.size(); ++x)
                if (dm(e.u, x).finite()) { EXPECT_LE(std::abs(long(dm(e.u, x).value()) - long(dm(e.v, x).value())), 1); }
    }
}

TEST(DistanceMatrix, SmallCases) {
    const auto one = distance_matrix(Graph(1));
    EXPECT_EQ(one(0, 0).value(), 0u);
    const auto tri = distance_matrix(testutil::complete_graph(3));
    for (VertexId u = 0; u < 3; ++u)
        for (VertexId v = 0; v < 3; ++v) EXPECT_EQ(tri(u, v).value(), u == v ? 0u : 1u);
    const std::vector<VertexId> src{2};
    const auto part = DistanceMatrix::from_sources(testutil::path_graph(4), src);
    EXPECT_EQ(part(0, 2).value(), 2u);
    EXPECT_THROW(part.row(0), std::out_of_range);
}

TEST(MultiSourceBfs, NearestSource) {
    const std::vector<VertexId> src{0, 6};
    const auto d = multi_source_bfs(testutil::path_graph(7), src);
    const std::vector<std::uint32_t> want{0, 1, 2, 3, 2, 1, 0};
    for (VertexId v = 0; v < 7; ++v) EXPECT_EQ(d[v].value(), want[v]);
}

TEST(EnergyStretch, IdentityAndGabrielQuadratic) {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 10; ++rep) {
        const auto g = udg_from_points(testutil::random_points(rng, 40, 4.0));
        EXPECT_DOUBLE_EQ(energy_stretch(g, g.graph, 1.0), 1.0);
        const auto sub = subgraph_with_edges(g.size(), gabriel_edges(g));
        EXPECT_NEAR(energy_stretch(g, sub, 2.0), 1.0, 1e-9);
        EXPECT_GE(energy_stretch(g, sub, 1.0), 1.0);
    }
}

TEST(EnergyStretch, DisconnectingSubgraphIsInfinite) {
    const auto g = udg_from_points({pt(0, 0), pt(1, 0)});
    EXPECT_TRUE(std::isinf(energy_stretch(g, Graph(2), 2.0)));
    EXPECT_THROW(energy_stretch(g, g.graph, 0.5), InputError);
    Graph extra(2);
    const auto far = udg_from_points({pt(0, 0), pt(3, 0)});
    extra.add_edge(0, 1);
    EXPECT_THROW(energy_stretch(far, extra, 2.0), InputError);
}

TEST(GraphFile, RoundTripAndErrors) {
    const auto g = udg_from_points({pt(0, 0), pt(0.5, -0.25), pt(1.2, 0)});
    std::stringstream ss;
    write_graph_file(ss, g, {{0, "x:a/T1"}}, {{"G3v", "x:a", {0, 1}}});
    const auto back = read_graph_file(ss);
    EXPECT_EQ(back.g.pos, g.pos);
    EXPECT_EQ(back.g.graph.edges(), g.graph.edges());
    EXPECT_EQ(back.names.at(0), "x:a/T1");
    ASSERT_EQ(back.copies.size(), 1u);
    EXPECT_EQ(back.copies[0].vertices, (std::vector<VertexId>{0, 1}));

    std::stringstream bad("v 0 0 0\nv 1 1 0\ne 0 5\n");
    try {
        read_graph_file(bad);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line, 3u);
    }
    std::stringstream dup("v 0 0 0\nv 1 0 0\n");
    EXPECT_THROW(read_graph_file(dup), ParseError);
    std::stringstream digits("v 0 0.12345 0\n");
    try {
        read_graph_file(digits);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line, 1u);
    }
}
