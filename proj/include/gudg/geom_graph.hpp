#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <unordered_map>

#include "gudg/graph.hpp"

namespace gudg {

struct EmbeddedGraph {
    Graph graph;
    std::vector<Point2> pos;

    std::size_t size() const { return graph.size(); }
};

struct DuplicatePointError : InputError {
    VertexId first, second;
    DuplicatePointError(VertexId a, VertexId b)
        : InputError("duplicate point at indices " + std::to_string(a) + " and " + std::to_string(b)),
          first(a), second(b) {}
};

inline void require_injective(const std::vector<Point2>& pts) {
    std::vector<VertexId> order(pts.size());
    for (VertexId i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        return pts[a] != pts[b] ? pts[a] < pts[b] : a < b;
    });
    for (std::size_t k = 1; k < order.size(); ++k)
        if (pts[order[k]] == pts[order[k - 1]]) throw DuplicatePointError(order[k - 1], order[k]);
}

namespace detail {

// Uniform bucket grid with one-unit cells.
class PointGrid {
public:
    explicit PointGrid(const std::vector<Point2>& pts) {
        for (VertexId i = 0; i < pts.size(); ++i) cells_[key(cell(pts[i].x), cell(pts[i].y))].push_back(i);
    }

    // Calls f(j) for every point within `reach` cells of p in each axis.
    template <class F>
    void near(Point2 p, std::int64_t reach, F&& f) const {
        const std::int64_t cx = cell(p.x), cy = cell(p.y);
        for (std::int64_t dx = -reach; dx <= reach; ++dx)
            for (std::int64_t dy = -reach; dy <= reach; ++dy) {
                auto it = cells_.find(key(cx + dx, cy + dy));
                if (it == cells_.end()) continue;
                for (VertexId j : it->second) f(j);
            }
    }

private:
    static std::int64_t cell(std::int64_t c) {
        return c >= 0 ? c / kScale : -((-c + kScale - 1) / kScale);
    }
    static std::uint64_t key(std::int64_t x, std::int64_t y) {
        return (static_cast<std::uint64_t>(x + (1LL << 31)) << 32) ^ static_cast<std::uint64_t>(y + (1LL << 31));
    }

    std::unordered_map<std::uint64_t, std::vector<VertexId>> cells_;
};

inline bool gabriel_blocked(Point2 u, Point2 v, Point2 w) {
    return dist2(u, w) + dist2(w, v) <= dist2(u, v);
}

}  // namespace detail

inline std::vector<Edge> udg_edges(const std::vector<Point2>& pts) {
    detail::PointGrid grid(pts);
    std::vector<Edge> out;
    for (VertexId i = 0; i < pts.size(); ++i)
        grid.near(pts[i], 1, [&](VertexId j) {
            if (j > i && dist2(pts[i], pts[j]) <= kScale * kScale) out.push_back({i, j});
        });
    std::sort(out.begin(), out.end());
    return out;
}

inline EmbeddedGraph udg_from_points(const std::vector<Point2>& pts) {
    require_injective(pts);
    EmbeddedGraph g{Graph(pts.size()), pts};
    for (const Edge& e : udg_edges(pts)) g.graph.add_edge(e.u, e.v);
    return g;
}

inline EmbeddedGraph make_embedded(Graph graph, std::vector<Point2> pts) {
    if (graph.size() != pts.size()) throw InputError("embedding size does not match vertex count");
    require_injective(pts);
    return {std::move(graph), std::move(pts)};
}

// Returns the first witness vertex w blocking edge uv, if any.
inline std::optional<VertexId> gabriel_witness(const EmbeddedGraph& g, const detail::PointGrid& grid, Edge e) {
    const Point2 pu = g.pos[e.u], pv = g.pos[e.v];
    const std::int64_t d2 = dist2(pu, pv);
    std::optional<VertexId> best;
    auto test = [&](VertexId w) {
        if (w == e.u || w == e.v) return;
        if (detail::gabriel_blocked(pu, pv, g.pos[w]) && (!best || w < *best)) best = w;
    };
    if (d2 <= kScale * kScale) {
        grid.near(pu, 1, test);
    } else {
        for (VertexId w = 0; w < g.size(); ++w) test(w);
    }
    return best;
}

inline std::vector<Edge> gabriel_edges(const EmbeddedGraph& g) {
    detail::PointGrid grid(g.pos);
    std::vector<Edge> out;
    for (const Edge& e : g.graph.edges())
        if (!gabriel_witness(g, grid, e)) out.push_back(e);
    return out;
}

inline Graph subgraph_with_edges(std::size_t n, const std::vector<Edge>& edges) {
    Graph s(n);
    for (const Edge& e : edges) s.add_edge(e.u, e.v);
    return s;
}

// margin is in ticks (0.001 == 10).
inline ValidationReport is_gudg_embedding(const EmbeddedGraph& g, std::int64_t margin = 10) {
    if (margin < 0) throw InputError("non-edge margin must be non-negative");
    ValidationReport rep;
    if (g.pos.size() != g.size()) {
        rep.add("embedding", "point count differs from vertex count");
        return rep;
    }
    try {
        require_injective(g.pos);
    } catch (const DuplicatePointError& e) {
        rep.add("injective", e.what());
        return rep;
    }
    const std::int64_t one = kScale * kScale;
    const std::int64_t sep = (kScale + margin) * (kScale + margin);
    for (const Edge& e : g.graph.edges()) {
        const std::int64_t d2 = dist2(g.pos[e.u], g.pos[e.v]);
        if (d2 > one)
            rep.add("non-udg-edge", std::to_string(e.u) + "-" + std::to_string(e.v) +
                                        " squared length " + std::to_string(d2) + "e-8 > 1");
    }
    detail::PointGrid grid(g.pos);
    const std::int64_t reach = 1 + (margin + kScale - 1) / kScale;
    for (VertexId i = 0; i < g.size(); ++i) {
        std::vector<VertexId> close;
        grid.near(g.pos[i], reach, [&](VertexId j) {
            if (j <= i) return;
            const std::int64_t d2 = dist2(g.pos[i], g.pos[j]);
            if ((d2 < sep || d2 <= one) && !g.graph.has_edge(i, j)) close.push_back(j);
        });
        std::sort(close.begin(), close.end());
        for (VertexId j : close) {
            const std::int64_t d2 = dist2(g.pos[i], g.pos[j]);
            rep.add(d2 <= one ? "missing-udg-edge" : "non-edge-too-close",
                    std::to_string(i) + "-" + std::to_string(j) + " squared distance " +
                        std::to_string(d2) + "e-8 < " + std::to_string(sep) + "e-8");
        }
    }
    for (const Edge& e : g.graph.edges()) {
        if (auto w = gabriel_witness(g, grid, e))
            rep.add("non-gabriel", std::to_string(e.u) + "-" + std::to_string(e.v) + " blocked by " +
                                       std::to_string(*w));
    }
    return rep;
}

namespace detail {

inline std::vector<double> dijkstra(const Graph& g, const std::vector<Point2>& pos, double alpha,
                                    VertexId s) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> d(g.size(), inf);
    using Item = std::pair<double, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    d[s] = 0;
    pq.push({0.0, s});
    while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (du > d[u]) continue;
        for (VertexId w : g.neighbors(u)) {
            const double sq = static_cast<double>(dist2(pos[u], pos[w])) / static_cast<double>(kScale * kScale);
            const double nd = du + (alpha == 2.0 ? sq : std::pow(std::sqrt(sq), alpha));
            if (nd < d[w]) {
                d[w] = nd;
                pq.push({nd, w});
            }
        }
    }
    return d;
}

}  // namespace detail

// Max over connected pairs of cost_sub / cost_udg with edge cost |uv|^alpha.
inline double energy_stretch(const EmbeddedGraph& udg, const Graph& sub, double alpha) {
    if (alpha < 1) throw InputError("alpha must be >= 1");
    if (sub.size() != udg.size()) throw InputError("subgraph vertex count differs");
    for (const Edge& e : sub.edges())
        if (!udg.graph.has_edge(e.u, e.v))
            throw InputError("subgraph edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                             " not in graph");
    double worst = 1.0;
    for (VertexId s = 0; s < udg.size(); ++s) {
        const auto a = detail::dijkstra(udg.graph, udg.pos, alpha, s);
        const auto b = detail::dijkstra(sub, udg.pos, alpha, s);
        for (VertexId t = s + 1; t < udg.size(); ++t) {
            if (!std::isfinite(a[t])) continue;
            if (!std::isfinite(b[t])) return std::numeric_limits<double>::infinity();
            worst = std::max(worst, b[t] / a[t]);
        }
    }
    return worst;
}

}  // namespace gudg
