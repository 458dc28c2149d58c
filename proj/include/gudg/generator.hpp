#pragma once

#include <optional>
#include <random>

#include "gudg/shorten.hpp"

namespace gudg {

struct GenParams {
    std::size_t min_variables = 3;
    std::size_t max_variables = 4;
    std::size_t max_shortened_variables = 8;
    std::size_t max_attempts = 2000;
};

struct GeneratedInstance {
    SatInstance psi;
    Drawing drawing;
};

namespace detail {

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::size_t splits_needed(const EdgePath& p) {
    const std::size_t len = p.size() - 1;
    return len >= 3 ? (len - 1) / 2 : 0;
}

// Routes edges shortest-first; the summed split count, or nullopt if some edge cannot be routed.
inline std::optional<std::size_t> route_all(const DiGraph& g, Drawing& d, GridPoint lo, GridPoint hi) {
    std::vector<std::size_t> order(g.edges.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    auto manhattan = [&](std::size_t k) {
        const auto a = d.placement[g.edges[k].first], b = d.placement[g.edges[k].second];
        return std::abs(a.x - b.x) + std::abs(a.y - b.y);
    };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return manhattan(a) < manhattan(b); });
    std::set<GridPoint> blocked(d.placement.begin(), d.placement.end());
    d.paths.assign(g.edges.size(), {});
    std::size_t cost = 0;
    for (std::size_t k : order) {
        auto p = route(d.placement[g.edges[k].first], d.placement[g.edges[k].second], blocked, lo, hi);
        if (!p) return std::nullopt;
        for (std::size_t i = 1; i + 1 < p->size(); ++i) blocked.insert((*p)[i]);
        cost += splits_needed(*p);
        d.paths[k] = std::move(*p);
    }
    return cost;
}

}  // namespace detail

// Hill climbing over placements in a small box, minimising the splits shortening will need.
inline std::optional<Drawing> compact_drawing(std::mt19937_64& rng, const DiGraph& g, std::size_t iterations = 1500) {
    std::int64_t side = 2;
    while (side * side < static_cast<std::int64_t>(3 * g.n)) ++side;
    const GridPoint lo{-2, -2}, hi{side + 1, side + 1};
    std::vector<GridPoint> cells;
    for (std::int64_t x = 0; x < side; ++x)
        for (std::int64_t y = 0; y < side; ++y) cells.push_back({x, y});
    std::shuffle(cells.begin(), cells.end(), rng);
    Drawing cur;
    cur.placement.assign(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(g.n));
    auto cost = detail::route_all(g, cur, lo, hi);
    for (std::size_t it = 0; it < iterations && !(cost && *cost == 0); ++it) {
        Drawing next;
        next.placement = cur.placement;
        const std::size_t v = detail::uniform(rng, 0, g.n - 1);
        const GridPoint to = cells[detail::uniform(rng, 0, cells.size() - 1)];
        auto other = std::find(next.placement.begin(), next.placement.end(), to);
        if (other != next.placement.end()) *other = next.placement[v];
        next.placement[v] = to;
        const auto c = detail::route_all(g, next, lo, hi);
        if (c && (!cost || *c <= *cost)) {
            cur = std::move(next);
            cost = c;
        }
    }
    if (!cost || !validate_drawing(g, cur).ok()) return std::nullopt;
    return cur;
}

// One negative and one or two positive occurrences per variable, cut into clauses of two or three
// literals; retried until every clause is valid.  Planarity is not guaranteed.
inline SatInstance random_instance(std::mt19937_64& rng, std::size_t n) {
    if (n == 0) throw InputError("random_instance: need at least one variable");
    for (;;) {
        std::vector<Literal> pool;
        for (std::size_t v = 0; v < n; ++v) {
            pool.push_back({v, false});
            for (std::size_t k = detail::uniform(rng, 1, 2); k-- > 0;) pool.push_back({v, true});
        }
        std::shuffle(pool.begin(), pool.end(), rng);
        SatInstance psi;
        for (std::size_t v = 0; v < n; ++v) psi.variables.push_back("x" + std::to_string(v + 1));
        std::size_t at = 0;
        while (at < pool.size()) {
            const std::size_t left = pool.size() - at;
            std::size_t k = left == 4 ? 2 : left <= 3 ? left : detail::uniform(rng, 2, 3);
            psi.clauses.push_back({"c" + std::to_string(psi.clauses.size() + 1),
                                   std::vector<Literal>(pool.begin() + at, pool.begin() + at + k)});
            at += k;
        }
        for (auto& c : psi.clauses) std::sort(c.lits.begin(), c.lits.end());
        if (validate_instance(psi).ok()) return psi;
    }
}

// Formula first, then a drawing; kept only if the drawing exists and shortening stays within bounds.
inline GeneratedInstance generate_instance(std::mt19937_64& rng, const GenParams& prm) {
    for (std::size_t attempt = 0; attempt < prm.max_attempts; ++attempt) {
        auto psi = random_instance(rng, detail::uniform(rng, prm.min_variables, prm.max_variables));
        const auto g = clause_variable_graph(psi).graph;
        auto d = compact_drawing(rng, g);
        if (!d || shorten_edge_paths(psi, *d).psi.variables.size() > prm.max_shortened_variables) continue;
        return {std::move(psi), std::move(*d)};
    }
    throw InternalError("generate_instance: attempts exhausted");
}

}  // namespace gudg
