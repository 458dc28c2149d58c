#pragma once

#include "gudg/catalog.hpp"
#include "gudg/graph_io.hpp"
#include "gudg/mdim.hpp"
#include "gudg/orthodraw.hpp"

namespace gudg {

enum class OwnerKind { Variable, Clause, Edge };

struct PlacedTile {
    const CatalogTile* tile = nullptr;
    Point2 offset;  // ticks

    Point2 at(VertexId v) const { return tile->tile.pos[v] + offset; }
    std::pair<Point2, Point2> slots(const TfPair& p) const { return {at(p.t), at(p.f)}; }
};

struct EdgeInfo {
    std::size_t var;
    std::size_t clause;
    Side var_side;     // side of the variable tile the path leaves through
    Side clause_side;  // side of the clause tile the path enters through
};

// Tiles for every CVG vertex and edge, indexed like the clause-variable graph.
struct Placement {
    SatInstance psi;
    Drawing drawing;
    std::vector<EdgeInfo> edges;
    std::vector<PlacedTile> variables, clauses, edge_tiles;
    std::map<Cell, std::pair<OwnerKind, std::size_t>> cells;  // doubled grid coordinates
};

namespace detail {

inline Side step_side(GridPoint from, GridPoint to) {
    if (to.x > from.x) return Side::Right;
    if (to.x < from.x) return Side::Left;
    if (to.y > from.y) return Side::Top;
    return Side::Bottom;
}

inline constexpr std::int64_t kHalfCell = 12 * kScale;

inline Point2 offset_of(GridPoint doubled) { return {doubled.x * kHalfCell, doubled.y * kHalfCell}; }

inline const TfPair* pair_on_side(const PlacedTile& p, Side s) {
    for (const auto& q : p.tile->tile.g().tf_pairs)
        if (side_of_pair(p.tile->tile, q) == s) return &q;
    return nullptr;
}

inline void claim(Placement& p, GridPoint c, OwnerKind k, std::size_t owner) {
    const Cell cell{static_cast<int>(c.x), static_cast<int>(c.y)};
    auto [it, fresh] = p.cells.emplace(cell, std::pair{k, owner});
    if (!fresh) throw DrawingError("grid cell " + to_string(c) + " claimed twice");
}

inline bool profile_matches(const CatalogTile& c, const std::map<Side, Polarity>& want, bool marks) {
    if (!c.type || c.tile.shape != Shape::Square) return false;
    const auto cv = connection_vector(c.tile);
    for (int s = 0; s < 4; ++s) {
        auto it = want.find(static_cast<Side>(s));
        if (it == want.end()) {
            if (cv[s].o != Orientation::Eps) return false;
        } else if (cv[s].o == Orientation::Eps || (marks && cv[s].mark != it->second)) {
            return false;
        }
    }
    return true;
}

inline std::string profile_string(const std::map<Side, Polarity>& want) {
    std::string s;
    for (const auto& [side, pol] : want) {
        if (!s.empty()) s += ",";
        s += std::string(side_name(side)) + (pol == Polarity::Plus ? "+" : pol == Polarity::Minus ? "-" : "");
    }
    return s;
}

// Edge tile whose t1/f1 end sits exactly on the variable pair's slots.
inline void choose_edge_tile(Placement& p, std::size_t k) {
    const EdgeInfo& e = p.edges[k];
    const EdgePath& path = p.drawing.paths[k];
    const PlacedTile& vt = p.variables[e.var];
    const TfPair* vp = pair_on_side(vt, e.var_side);
    const auto [T, F] = vt.slots(*vp);
    GridPoint anchor;
    Shape shape = Shape::Square;
    if (path.size() == 2) {
        anchor = {path[0].x + path[1].x, path[0].y + path[1].y};
    } else {
        anchor = {2 * path[1].x, 2 * path[1].y};
        shape = shape_from_cells({{static_cast<int>(path[0].x - path[1].x), static_cast<int>(path[0].y - path[1].y)},
                                  {0, 0},
                                  {static_cast<int>(path[2].x - path[1].x), static_cast<int>(path[2].y - path[1].y)}});
    }
    const Point2 off = offset_of(anchor);
    for (const auto& c : catalog().tiles) {
        if (c.kind != GadgetKind::Ge || c.tile.shape != shape) continue;
        const TfPair& head = *c.tile.g().pair(1);
        if (c.tile.pos[head.t] + off == T && c.tile.pos[head.f] + off == F) {
            p.edge_tiles[k] = {&c, off};
            return;
        }
    }
    throw InternalError("no edge tile for edge " + std::to_string(k) + " of shape " + std::string(shape_name(shape)));
}

inline std::size_t clause_conflicts(const Placement& p, std::size_t c, const PlacedTile& ct,
                                    std::vector<std::size_t>* where = nullptr) {
    std::size_t n = 0;
    for (std::size_t k = 0; k < p.edges.size(); ++k) {
        if (p.edges[k].clause != c) continue;
        const PlacedTile& et = p.edge_tiles[k];
        const TfPair& tail = *et.tile->tile.g().pair(37);
        const TfPair* cp = pair_on_side(ct, p.edges[k].clause_side);
        if (et.slots(tail) != ct.slots(*cp)) {
            ++n;
            if (where) where->push_back(k);
        }
    }
    return n;
}

}  // namespace detail

// Pair index of the variable tile used by CVG edge k, and of the clause tile.
inline int variable_pair_of(const Placement& p, std::size_t k) {
    return detail::pair_on_side(p.variables[p.edges[k].var], p.edges[k].var_side)->index;
}
inline int clause_pair_of(const Placement& p, std::size_t k) {
    return detail::pair_on_side(p.clauses[p.edges[k].clause], p.edges[k].clause_side)->index;
}

inline std::size_t orientation_conflicts(const Placement& p) {
    std::size_t n = 0;
    for (std::size_t c = 0; c < p.clauses.size(); ++c) n += detail::clause_conflicts(p, c, p.clauses[c]);
    for (std::size_t k = 0; k < p.edges.size(); ++k) {
        const PlacedTile& vt = p.variables[p.edges[k].var];
        const TfPair& head = *p.edge_tiles[k].tile->tile.g().pair(1);
        if (p.edge_tiles[k].slots(head) != vt.slots(*detail::pair_on_side(vt, p.edges[k].var_side))) ++n;
    }
    return n;
}

inline Placement select_tiles(const SatInstance& psi, const Drawing& d) {
    if (auto rep = validate_instance(psi); !rep.ok()) throw InputError("select_tiles: " + rep.str());
    const auto cvg = clause_variable_graph(psi);
    if (auto rep = validate_drawing(cvg.graph, d); !rep.ok()) throw InputError("select_tiles: " + rep.str());
    Placement p{psi, d, {}, {}, {}, {}, {}};
    for (std::size_t k = 0; k < cvg.graph.edges.size(); ++k) {
        const auto& path = d.paths[k];
        if (path.size() > 3) throw InputError("select_tiles: edge path longer than 2; shorten first");
        p.edges.push_back({cvg.graph.edges[k].first, cvg.graph.edges[k].second - cvg.variable_count,
                           detail::step_side(path[0], path[1]),
                           detail::step_side(path.back(), path[path.size() - 2])});
    }
    for (std::size_t u = 0; u < cvg.graph.n; ++u) {
        const GridPoint q{2 * d.placement[u].x, 2 * d.placement[u].y};
        detail::claim(p, q, cvg.is_variable(u) ? OwnerKind::Variable : OwnerKind::Clause,
                      cvg.is_variable(u) ? u : u - cvg.variable_count);
    }
    for (std::size_t k = 0; k < p.edges.size(); ++k) {
        const auto& path = d.paths[k];
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            detail::claim(p, {path[i].x + path[i + 1].x, path[i].y + path[i + 1].y}, OwnerKind::Edge, k);
        if (path.size() == 3) detail::claim(p, {2 * path[1].x, 2 * path[1].y}, OwnerKind::Edge, k);
    }

    for (std::size_t x = 0; x < psi.variables.size(); ++x) {
        std::map<Side, Polarity> want;
        std::size_t occ = 0;
        for (std::size_t k = 0; k < p.edges.size(); ++k) {
            if (p.edges[k].var != x) continue;
            ++occ;
            const bool positive = literal_of(psi, x, p.edges[k].clause)->positive;
            want[p.edges[k].var_side] = positive ? Polarity::Plus : Polarity::Minus;
        }
        const PlacedTile* found = nullptr;
        PlacedTile pt;
        for (const auto& c : catalog().tiles) {
            const bool kind_ok = occ == 3 ? c.kind == GadgetKind::G3v
                                          : (c.kind == GadgetKind::G2va || c.kind == GadgetKind::G2vb);
            if (!kind_ok || !detail::profile_matches(c, want, true)) continue;
            pt = {&c, detail::offset_of({2 * d.placement[x].x, 2 * d.placement[x].y})};
            found = &pt;
            break;
        }
        if (!found)
            throw InternalError("no variable tile for profile " + detail::profile_string(want) + " of " + psi.variables[x]);
        p.variables.push_back(pt);
    }
    for (std::size_t c = 0; c < psi.clauses.size(); ++c) {
        std::map<Side, Polarity> want;
        for (const auto& e : p.edges)
            if (e.clause == c) want[e.clause_side] = Polarity::None;
        const GadgetKind kind = psi.clauses[c].lits.size() == 3 ? GadgetKind::G3c : GadgetKind::G2c;
        PlacedTile pt;
        for (const auto& t : catalog().tiles)
            if (t.kind == kind && detail::profile_matches(t, want, false)) {
                pt = {&t, detail::offset_of({2 * d.placement[cvg.clause_vertex(c)].x, 2 * d.placement[cvg.clause_vertex(c)].y})};
                break;
            }
        if (!pt.tile)
            throw InternalError("no clause tile for profile " + detail::profile_string(want) + " of " + psi.clauses[c].name);
        p.clauses.push_back(pt);
    }
    p.edge_tiles.resize(p.edges.size());
    for (std::size_t k = 0; k < p.edges.size(); ++k) detail::choose_edge_tile(p, k);
    return p;
}

// Clause tiles are re-chosen among slot-preserving variants; the one conflict a 3-clause may keep is
// pushed to a negative literal and removed by flipping that variable's minus pair.
inline Placement resolve_orientation_conflicts(Placement p) {
    for (std::size_t k = 0; k < p.edges.size(); ++k) detail::choose_edge_tile(p, k);
    for (std::size_t c = 0; c < p.clauses.size(); ++c) {
        PlacedTile& ct = p.clauses[c];
        if (detail::clause_conflicts(p, c, ct) == 0) continue;
        std::vector<std::size_t> ks;
        for (std::size_t k = 0; k < p.edges.size(); ++k)
            if (p.edges[k].clause == c) ks.push_back(k);
        std::optional<std::size_t> free_edge;
        if (ks.size() == 3) {
            for (std::size_t k : ks)
                if (!literal_of(p.psi, p.edges[k].var, c)->positive) {
                    free_edge = k;
                    break;
                }
            ks.erase(std::find(ks.begin(), ks.end(), *free_edge));
        }
        const int pi = clause_pair_of(p, ks[0]);
        const int pj = clause_pair_of(p, ks[1]);
        auto fixed = [&](const PlacedTile& cand) {
            std::vector<std::size_t> where;
            detail::clause_conflicts(p, c, cand, &where);
            return std::find(where.begin(), where.end(), ks[0]) == where.end() &&
                   std::find(where.begin(), where.end(), ks[1]) == where.end();
        };
        if (!fixed(ct)) {
            bool done = false;
            for (const CatalogTile* alt : clause_variant_lookup(*ct.tile, pi, pj)) {
                const PlacedTile cand{alt, ct.offset};
                if (fixed(cand)) {
                    ct = cand;
                    done = true;
                    break;
                }
            }
            if (!done) throw InternalError("clause " + p.psi.clauses[c].name + ": no conflict-free variant");
        }
        if (!free_edge || detail::clause_conflicts(p, c, ct) == 0) continue;
        const std::size_t x = p.edges[*free_edge].var;
        p.variables[x].tile = &variable_flip_lookup(*p.variables[x].tile);
        detail::choose_edge_tile(p, *free_edge);
        if (detail::clause_conflicts(p, c, ct) != 0)
            throw InternalError("clause " + p.psi.clauses[c].name + ": conflict survives the variable flip");
    }
    if (const auto n = orientation_conflicts(p); n != 0)
        throw InternalError("resolve_orientation_conflicts: " + std::to_string(n) + " conflicts remain");
    return p;
}

struct GadgetCopy {
    std::string id;
    GadgetKind kind;
    OwnerKind owner_kind;
    std::size_t owner;
    std::string variant;
    std::map<std::string, VertexId, std::less<>> vertices;

    VertexId at(std::string_view name) const {
        auto it = vertices.find(name);
        if (it == vertices.end()) throw InputError("copy " + id + " has no vertex " + std::string(name));
        return it->second;
    }
};

struct Identification {
    VertexId kept;
    std::string removed;  // label of the edge-gadget vertex merged into `kept`
};

struct Assembly {
    EmbeddedGraph g;
    std::vector<std::string> labels;
    std::vector<GadgetCopy> copies;  // variables, then clauses, then edges
    std::vector<Identification> identifications;
    std::size_t budget = 0;
    std::size_t variable_count = 0;
    std::size_t clause_count = 0;
    std::vector<std::map<int, std::size_t>> clause_pair_var;  // per clause: pair index -> variable
    SatInstance psi;

    const GadgetCopy& variable_copy(std::size_t x) const { return copies.at(x); }
    const GadgetCopy& clause_copy(std::size_t c) const { return copies.at(variable_count + c); }
    std::map<VertexId, std::string> name_map() const {
        std::map<VertexId, std::string> m;
        for (VertexId v = 0; v < labels.size(); ++v) m[v] = labels[v];
        return m;
    }
    std::vector<CopyRecord> copy_records() const {
        std::vector<CopyRecord> out;
        for (const auto& c : copies) {
            CopyRecord r{std::string(kind_name(c.kind)), c.id, {}};
            for (const auto& [name, v] : c.vertices) r.vertices.push_back(v);
            std::sort(r.vertices.begin(), r.vertices.end());
            out.push_back(std::move(r));
        }
        return out;
    }
};

inline Assembly assemble(const Placement& p) {
    if (const auto n = orientation_conflicts(p); n != 0)
        throw InputError("assemble: placement has " + std::to_string(n) + " orientation conflicts");
    Assembly a;
    a.psi = p.psi;
    a.variable_count = p.variables.size();
    a.clause_count = p.clauses.size();
    a.budget = 4 * a.variable_count;
    a.g.graph = Graph(0);

    auto add_copy = [&](const PlacedTile& pt, std::string id, OwnerKind ok, std::size_t owner,
                        const std::map<VertexId, VertexId>& merged) {
        const Gadget& g = pt.tile->tile.g();
        GadgetCopy copy{std::move(id), g.kind, ok, owner, pt.tile->variant, {}};
        std::vector<VertexId> map(g.graph.size());
        for (VertexId v = 0; v < g.graph.size(); ++v) {
            if (auto it = merged.find(v); it != merged.end()) {
                map[v] = it->second;
                a.identifications.push_back({it->second, copy.id + "/" + g.names[v]});
            } else {
                map[v] = a.g.graph.add_vertex();
                a.g.pos.push_back(pt.at(v));
                a.labels.push_back(copy.id + "/" + g.names[v]);
            }
            copy.vertices.emplace(g.names[v], map[v]);
        }
        for (const Edge& e : g.graph.edges()) a.g.graph.add_edge(map[e.u], map[e.v]);
        a.copies.push_back(std::move(copy));
    };

    for (std::size_t x = 0; x < p.variables.size(); ++x)
        add_copy(p.variables[x], "x:" + p.psi.variables[x], OwnerKind::Variable, x, {});
    for (std::size_t c = 0; c < p.clauses.size(); ++c)
        add_copy(p.clauses[c], "c:" + p.psi.clauses[c].name, OwnerKind::Clause, c, {});
    a.clause_pair_var.resize(p.clauses.size());
    for (std::size_t k = 0; k < p.edges.size(); ++k) {
        const EdgeInfo& e = p.edges[k];
        const PlacedTile& et = p.edge_tiles[k];
        const Gadget& eg = et.tile->tile.g();
        const GadgetCopy& vc = a.copies[e.var];
        const GadgetCopy& cc = a.copies[a.variable_count + e.clause];
        const int vi = variable_pair_of(p, k);
        const int ci = clause_pair_of(p, k);
        a.clause_pair_var[e.clause][ci] = e.var;
        std::map<VertexId, VertexId> merged;
        auto join = [&](std::string_view mine, VertexId theirs, const std::string& owner) {
            const VertexId v = eg.id(mine);
            if (et.at(v) != a.g.pos[theirs])
                throw InternalError("identification mismatch between edge " + std::to_string(k) + " (" +
                                    et.tile->variant + ") and " + owner);
            merged[v] = theirs;
        };
        join("t1", vc.at(tf_name('t', vi, 14)), vc.id);
        join("f1", vc.at(tf_name('f', vi, 14)), vc.id);
        join("t37", cc.at(tf_name('t', ci, 15)), cc.id);
        join("f37", cc.at(tf_name('f', ci, 15)), cc.id);
        add_copy(et, "e:" + p.psi.variables[e.var] + ":" + p.psi.clauses[e.clause].name, OwnerKind::Edge, k, merged);
    }
    return a;
}

inline Assembly assemble(const SatInstance& psi, const Drawing& d) {
    return assemble(resolve_orientation_conflicts(select_tiles(psi, d)));
}

enum class ForcedChoice { ASide, BSide };

inline LandmarkSet forced_landmarks(const Assembly& a, const std::vector<ForcedChoice>& per_copy) {
    if (per_copy.size() != a.variable_count) throw InputError("forced_landmarks: one choice per variable copy");
    LandmarkSet out;
    for (std::size_t x = 0; x < a.variable_count; ++x)
        for (int i = 1; i <= 3; ++i)
            out.push_back(a.variable_copy(x).at((per_copy[x] == ForcedChoice::ASide ? "a" : "b") + std::to_string(i)));
    return out;
}

inline LandmarkSet forced_landmarks(const Assembly& a, ForcedChoice choice) {
    return forced_landmarks(a, std::vector<ForcedChoice>(a.variable_count, choice));
}

inline constexpr std::array<std::string_view, 5> kFourthGroup{"T1", "T2", "N1", "N2", "F"};

inline std::vector<std::vector<VertexId>> fourth_landmark_groups(const Assembly& a) {
    std::vector<std::vector<VertexId>> out;
    for (std::size_t x = 0; x < a.variable_count; ++x) {
        std::vector<VertexId> g;
        for (auto n : kFourthGroup) g.push_back(a.variable_copy(x).at(n));
        out.push_back(std::move(g));
    }
    return out;
}

inline LandmarkSet assignment_to_landmarks(const Assembly& a, const TruthAssignment& A,
                                           ForcedChoice choice = ForcedChoice::ASide) {
    if (A.size() != a.variable_count) throw InputError("assignment size mismatch");
    LandmarkSet s = forced_landmarks(a, choice);
    for (std::size_t x = 0; x < a.variable_count; ++x) s.push_back(a.variable_copy(x).at(A[x] ? "T1" : "F"));
    return s;
}

inline TruthAssignment landmarks_to_assignment(const Assembly& a, const LandmarkSet& S) {
    std::map<VertexId, std::size_t> owner;
    for (std::size_t x = 0; x < a.variable_count; ++x)
        for (const auto& [name, v] : a.variable_copy(x).vertices) owner.emplace(v, x);
    std::vector<std::vector<std::string>> per(a.variable_count);
    for (VertexId s : S) {
        auto it = owner.find(s);
        if (it == owner.end()) throw InputError("landmark " + a.labels.at(s) + " lies outside every variable copy");
        per[it->second].push_back(a.labels[s].substr(a.labels[s].find('/') + 1));
    }
    TruthAssignment A(a.variable_count);
    for (std::size_t x = 0; x < a.variable_count; ++x) {
        const auto& names = per[x];
        auto has = [&](std::string_view n) { return std::count(names.begin(), names.end(), n); };
        bool ok = names.size() == 4;
        for (int i = 1; i <= 3; ++i)
            ok &= has("a" + std::to_string(i)) + has("b" + std::to_string(i)) == 1;
        std::size_t fourth = 0;
        for (auto n : kFourthGroup) fourth += has(n);
        ok &= fourth == 1;
        if (!ok) throw InputError("landmarks in copy " + a.variable_copy(x).id + " do not have the forced-plus-one shape");
        A[x] = !has("F");
    }
    return A;
}

}  // namespace gudg
