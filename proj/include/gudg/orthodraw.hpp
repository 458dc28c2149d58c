#pragma once

#include <array>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>

#include "gudg/sat3.hpp"

namespace gudg {

struct GridPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend constexpr auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

inline std::string to_string(GridPoint p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

using EdgePath = std::vector<GridPoint>;

// paths[k] belongs to graph edge k.
struct Drawing {
    std::vector<GridPoint> placement;
    std::vector<EdgePath> paths;

    std::size_t path_length(std::size_t k) const { return paths[k].size() - 1; }
};

struct DrawingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline ValidationReport validate_drawing(const DiGraph& g, const Drawing& d) {
    ValidationReport rep;
    if (d.placement.size() != g.n) {
        rep.add("placement", "expected " + std::to_string(g.n) + " placements, got " +
                                 std::to_string(d.placement.size()));
        return rep;
    }
    if (d.paths.size() != g.edges.size()) {
        rep.add("paths", "expected " + std::to_string(g.edges.size()) + " paths, got " + std::to_string(d.paths.size()));
        return rep;
    }
    std::map<GridPoint, std::size_t> vertex_at;
    for (std::size_t v = 0; v < g.n; ++v) {
        auto [it, fresh] = vertex_at.emplace(d.placement[v], v);
        if (!fresh)
            rep.add("placement", "vertices " + std::to_string(it->second) + " and " + std::to_string(v) +
                                     " share point " + to_string(d.placement[v]));
    }
    std::map<GridPoint, std::vector<std::size_t>> occupancy;
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        const auto& p = d.paths[k];
        const auto [u, v] = g.edges[k];
        const std::string tag = "path " + std::to_string(u) + "->" + std::to_string(v);
        if (p.size() < 2) {
            rep.add("path", tag + " has fewer than two points");
            continue;
        }
        if (p.front() != d.placement[u]) rep.add("path", tag + " does not start at its source placement");
        if (p.back() != d.placement[v]) rep.add("path", tag + " does not end at its target placement");
        std::set<GridPoint> seen;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (!seen.insert(p[i]).second) rep.add("path", tag + " repeats point " + to_string(p[i]));
            if (i > 0) {
                const auto dx = p[i].x - p[i - 1].x, dy = p[i].y - p[i - 1].y;
                if (std::abs(dx) + std::abs(dy) != 1)
                    rep.add("path", tag + " has a non-unit step at " + to_string(p[i]));
            }
            if (i > 0 && i + 1 < p.size()) {
                auto it = vertex_at.find(p[i]);
                if (it != vertex_at.end())
                    rep.add("path", tag + " passes through vertex " + std::to_string(it->second) + " at " +
                                        to_string(p[i]));
            }
            occupancy[p[i]].push_back(k);
        }
    }
    for (const auto& [pt, ks] : occupancy) {
        if (ks.size() < 2) continue;
        auto it = vertex_at.find(pt);
        for (std::size_t a = 0; a < ks.size(); ++a)
            for (std::size_t b = a + 1; b < ks.size(); ++b) {
                if (ks[a] == ks[b]) continue;
                bool shared_end = false;
                if (it != vertex_at.end()) {
                    const std::size_t w = it->second;
                    auto ends = [&](std::size_t k) {
                        return (g.edges[k].first == w && d.paths[k].front() == pt) ||
                               (g.edges[k].second == w && d.paths[k].back() == pt);
                    };
                    shared_end = ends(ks[a]) && ends(ks[b]);
                }
                if (!shared_end)
                    rep.add("crossing", "paths " + std::to_string(ks[a]) + " and " + std::to_string(ks[b]) +
                                            " share point " + to_string(pt));
            }
    }
    return rep;
}

enum class End { Source, Target };

enum class Direction { FromLeft, FromRight, FromTop, FromBottom, ToLeft, ToRight, ToTop, ToBottom };

inline std::string_view to_string(Direction d) {
    static constexpr std::array<std::string_view, 8> names{"from-left", "from-right", "from-top", "from-bottom",
                                                            "to-left",   "to-right",   "to-top",   "to-bottom"};
    return names[static_cast<int>(d)];
}

inline Direction edge_direction(const EdgePath& p, End end) {
    if (p.size() < 2) throw InputError("edge_direction: path has length 0");
    if (end == End::Source) {
        const GridPoint a = p[0], b = p[1];
        if (b.x > a.x) return Direction::FromLeft;
        if (b.x < a.x) return Direction::FromRight;
        if (b.y < a.y) return Direction::FromTop;
        if (b.y > a.y) return Direction::FromBottom;
    } else {
        const GridPoint a = p[p.size() - 2], b = p.back();
        if (b.x < a.x) return Direction::ToLeft;
        if (b.x > a.x) return Direction::ToRight;
        if (b.y > a.y) return Direction::ToTop;
        if (b.y < a.y) return Direction::ToBottom;
    }
    throw InputError("edge_direction: repeated point");
}

namespace detail {

inline constexpr std::array<GridPoint, 4> kSteps{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

// Shortest free grid route from a to b inside the box; nullopt if none.
inline std::optional<EdgePath> route(GridPoint a, GridPoint b, const std::set<GridPoint>& blocked, GridPoint lo,
                                     GridPoint hi) {
    std::map<GridPoint, GridPoint> parent;
    std::vector<GridPoint> queue{a};
    parent[a] = a;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const GridPoint c = queue[head];
        if (c == b) break;
        for (const auto& s : kSteps) {
            const GridPoint nx{c.x + s.x, c.y + s.y};
            if (nx.x < lo.x || nx.y < lo.y || nx.x > hi.x || nx.y > hi.y) continue;
            if (parent.count(nx)) continue;
            if (nx != b && blocked.count(nx)) continue;
            parent[nx] = c;
            queue.push_back(nx);
        }
    }
    if (!parent.count(b)) return std::nullopt;
    EdgePath p{b};
    while (p.back() != a) p.push_back(parent[p.back()]);
    std::reverse(p.begin(), p.end());
    return p;
}

}  // namespace detail

// Stacked-rows placement from BFS layers, then maze routing; retries with perturbed orders.
inline Drawing simple_orthogonal_draw(const DiGraph& g, unsigned attempts = 64) {
    std::vector<std::vector<std::size_t>> adj(g.n);
    for (const auto& [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (std::size_t v = 0; v < g.n; ++v)
        if (adj[v].size() > 4) throw DrawingError("no drawing found; vertex degree exceeds 4; supply one via file");
    std::mt19937_64 rng(0x5eed);
    for (unsigned attempt = 0; attempt < attempts; ++attempt) {
        const std::int64_t spacing = 2 + attempt % 4;
        std::vector<std::size_t> roots(g.n);
        for (std::size_t v = 0; v < g.n; ++v) roots[v] = v;
        if (attempt > 0) std::shuffle(roots.begin(), roots.end(), rng);
        std::vector<long> layer(g.n, -1);
        std::vector<std::vector<std::size_t>> rows;
        long base = 0;
        for (std::size_t r : roots) {
            if (layer[r] >= 0) continue;
            std::vector<std::size_t> q{r};
            layer[r] = base;
            for (std::size_t h = 0; h < q.size(); ++h) {
                const std::size_t u = q[h];
                if (static_cast<long>(rows.size()) <= layer[u]) rows.resize(layer[u] + 1);
                rows[layer[u]].push_back(u);
                auto nb = adj[u];
                if (attempt > 0) std::shuffle(nb.begin(), nb.end(), rng);
                for (std::size_t w : nb)
                    if (layer[w] < 0) {
                        layer[w] = layer[u] + 1;
                        q.push_back(w);
                    }
            }
            base = static_cast<long>(rows.size());
        }
        Drawing d;
        d.placement.resize(g.n);
        std::size_t widest = 0;
        for (const auto& row : rows) widest = std::max(widest, row.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::int64_t shift = static_cast<std::int64_t>(widest - rows[r].size()) * spacing / 2;
            for (std::size_t i = 0; i < rows[r].size(); ++i)
                d.placement[rows[r][i]] = {shift + static_cast<std::int64_t>(i) * spacing,
                                           -static_cast<std::int64_t>(r) * spacing};
        }
        std::vector<std::size_t> order(g.edges.size());
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
        auto manhattan = [&](std::size_t k) {
            const auto a = d.placement[g.edges[k].first], b = d.placement[g.edges[k].second];
            return std::abs(a.x - b.x) + std::abs(a.y - b.y);
        };
        if (attempt > 0) std::shuffle(order.begin(), order.end(), rng);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return manhattan(a) < manhattan(b);
        });
        std::set<GridPoint> blocked(d.placement.begin(), d.placement.end());
        GridPoint lo{0, 0}, hi{0, 0};
        for (const auto& p : d.placement) {
            lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
            hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
        }
        lo = {lo.x - 2 * spacing, lo.y - 2 * spacing};
        hi = {hi.x + 2 * spacing, hi.y + 2 * spacing};
        d.paths.assign(g.edges.size(), {});
        bool ok = true;
        for (std::size_t k : order) {
            const auto a = d.placement[g.edges[k].first], b = d.placement[g.edges[k].second];
            auto p = detail::route(a, b, blocked, lo, hi);
            if (!p) {
                ok = false;
                break;
            }
            for (std::size_t i = 1; i + 1 < p->size(); ++i) blocked.insert((*p)[i]);
            d.paths[k] = std::move(*p);
        }
        if (ok && validate_drawing(g, d).ok()) return d;
    }
    throw DrawingError("no drawing found; supply one via file");
}

inline void write_drawing(std::ostream& os, const DiGraph& g, const Drawing& d) {
    for (std::size_t v = 0; v < d.placement.size(); ++v)
        os << "n " << v << ' ' << d.placement[v].x << ' ' << d.placement[v].y << '\n';
    for (std::size_t k = 0; k < d.paths.size(); ++k) {
        os << "p " << g.edges[k].first << ' ' << g.edges[k].second;
        for (const auto& p : d.paths[k]) os << ' ' << p.x << ' ' << p.y;
        os << '\n';
    }
}

inline Drawing read_drawing(std::istream& is, const DiGraph& g) {
    Drawing d;
    std::vector<bool> placed(g.n, false), routed(g.edges.size(), false);
    d.placement.resize(g.n);
    d.paths.resize(g.edges.size());
    std::string line;
    std::size_t no = 0;
    while (std::getline(is, line)) {
        ++no;
        auto tok = split_ws(line);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (tok[0] == "n") {
            if (tok.size() != 4) throw ParseError(no, "expected 'n <vertex> <x> <y>'");
            const auto v = parse_int<std::size_t>(tok[1], no);
            if (v >= g.n) throw ParseError(no, "vertex " + std::to_string(v) + " out of range");
            if (placed[v]) throw ParseError(no, "vertex " + std::to_string(v) + " placed twice");
            placed[v] = true;
            d.placement[v] = {parse_int<std::int64_t>(tok[2], no), parse_int<std::int64_t>(tok[3], no)};
        } else if (tok[0] == "p") {
            if (tok.size() < 5 || (tok.size() - 3) % 2 != 0) throw ParseError(no, "expected 'p <u> <v> <x1> <y1> ...'");
            const auto u = parse_int<std::size_t>(tok[1], no), v = parse_int<std::size_t>(tok[2], no);
            auto k = g.find_edge(u, v);
            if (!k) throw ParseError(no, "no edge " + std::to_string(u) + "->" + std::to_string(v));
            if (routed[*k]) throw ParseError(no, "edge routed twice");
            routed[*k] = true;
            for (std::size_t i = 3; i + 1 < tok.size(); i += 2)
                d.paths[*k].push_back({parse_int<std::int64_t>(tok[i], no), parse_int<std::int64_t>(tok[i + 1], no)});
        } else {
            throw ParseError(no, "unknown record '" + std::string(tok[0]) + "'");
        }
    }
    for (std::size_t v = 0; v < g.n; ++v)
        if (!placed[v]) throw ParseError(no, "vertex " + std::to_string(v) + " has no placement");
    for (std::size_t k = 0; k < g.edges.size(); ++k)
        if (!routed[k])
            throw ParseError(no, "edge " + std::to_string(g.edges[k].first) + "->" +
                                     std::to_string(g.edges[k].second) + " has no path");
    return d;
}

}  // namespace gudg
