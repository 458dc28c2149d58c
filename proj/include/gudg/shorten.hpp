#pragma once

#include "gudg/orthodraw.hpp"

namespace gudg {

struct ShortenResult {
    SatInstance psi;
    Drawing drawing;
    std::size_t splits = 0;
};

namespace detail {

inline std::size_t next_fresh_index(const SatInstance& psi) {
    std::size_t k = 0;
    auto scan = [&](const std::string& name, char head) {
        if (name.size() > 2 && name[0] == head && name[1] == '#') {
            try {
                k = std::max<std::size_t>(k, std::stoul(name.substr(2)));
            } catch (...) {
            }
        }
    };
    for (const auto& v : psi.variables) scan(v, 'h');
    for (const auto& c : psi.clauses) scan(c.name, 'c');
    return k + 1;
}

}  // namespace detail

// Splits every edge path of length >= 3 until all have length <= 2.
// Positive x in c: c' = {x, !h}, c gets h.  Negative !x in c: c' = {!x, h}, c gets !h.
inline ShortenResult shorten_edge_paths(const SatInstance& psi, const Drawing& d) {
    const auto cvg0 = clause_variable_graph(psi);
    {
        auto rep = validate_drawing(cvg0.graph, d);
        if (!rep.ok()) throw InputError("shorten_edge_paths: invalid drawing: " + rep.violations.front().detail);
    }
    ShortenResult out{psi, {}, 0};
    // Work on (variable, clause) keyed paths; vertex placement by name role.
    std::vector<GridPoint> var_at(psi.variables.size()), clause_at(psi.clauses.size());
    for (std::size_t v = 0; v < psi.variables.size(); ++v) var_at[v] = d.placement[v];
    for (std::size_t c = 0; c < psi.clauses.size(); ++c) clause_at[c] = d.placement[cvg0.clause_vertex(c)];
    std::map<std::pair<std::size_t, std::size_t>, EdgePath> paths;
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t k = 0; k < cvg0.graph.edges.size(); ++k) {
        const auto [v, cv] = cvg0.graph.edges[k];
        paths[{v, cv - cvg0.variable_count}] = d.paths[k];
        order.push_back({v, cv - cvg0.variable_count});
    }
    std::size_t fresh = detail::next_fresh_index(psi);
    auto& P = out.psi;
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
        auto key = order[idx];
        while (paths[key].size() >= 4) {
            const EdgePath p = paths[key];
            const auto [x, c] = key;
            const std::size_t h = P.variables.size();
            P.variables.push_back("h#" + std::to_string(fresh));
            const std::size_t cp = P.clauses.size();
            Clause nc{"c#" + std::to_string(fresh), {}};
            ++fresh;
            Literal* lit = nullptr;
            for (auto& l : P.clauses[c].lits)
                if (l.var == x) lit = &l;
            if (!lit) throw InternalError("shorten_edge_paths: literal not found");
            const bool positive = lit->positive;
            nc.lits = {{x, positive}, {h, !positive}};
            lit->var = h;
            P.clauses.push_back(std::move(nc));
            var_at.push_back(p[2]);
            clause_at.push_back(p[1]);
            paths.erase(key);
            paths[{x, cp}] = {p[0], p[1]};
            paths[{h, cp}] = {p[2], p[1]};
            paths[{h, c}] = EdgePath(p.begin() + 2, p.end());
            key = {h, c};
            ++out.splits;
        }
    }
    const auto cvg = clause_variable_graph(P);
    out.drawing.placement.resize(cvg.graph.n);
    for (std::size_t v = 0; v < P.variables.size(); ++v) out.drawing.placement[v] = var_at[v];
    for (std::size_t c = 0; c < P.clauses.size(); ++c) out.drawing.placement[cvg.clause_vertex(c)] = clause_at[c];
    for (const auto& [v, cv] : cvg.graph.edges) out.drawing.paths.push_back(paths.at({v, cv - cvg.variable_count}));
    return out;
}

}  // namespace gudg
