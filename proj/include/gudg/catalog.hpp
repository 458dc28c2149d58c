#pragma once

#include "gudg/detail/tile_data.hpp"
#include "gudg/gadgets.hpp"

namespace gudg {

struct CatalogTile {
    Tile tile;
    std::string variant;
    GadgetKind kind;
    std::optional<TileType> type;  // square tiles only

    std::pair<Point2, Point2> slots(const TfPair& p) const { return {tile.pos[p.t], tile.pos[p.f]}; }
};

struct Catalog {
    std::vector<CatalogTile> tiles;

    const CatalogTile& find(std::string_view variant) const {
        for (const auto& t : tiles)
            if (t.variant == variant) return t;
        throw InputError("no catalog tile '" + std::string(variant) + "'");
    }
};

namespace detail {

struct DesignInfo {
    GadgetKind kind;
    Shape shape;
};

inline DesignInfo design_info(std::string_view id) {
    if (id[0] == 'B') return {GadgetKind::G3v, Shape::Square};
    if (id == "V11") return {GadgetKind::G2va, Shape::Square};
    if (id == "V12") return {GadgetKind::G2vb, Shape::Square};
    if (id[0] == 'C') return {GadgetKind::G3c, Shape::Square};
    if (id[0] == 'D') return {GadgetKind::G2c, Shape::Square};
    if (id == "E") return {GadgetKind::Ge, Shape::Square};
    if (id == "L") return {GadgetKind::Ge, Shape::P3};
    if (id == "P1") return {GadgetKind::Ge, Shape::P1};
    throw InternalError("unknown tile design " + std::string(id));
}

inline Tile tile_from_design(const TileDesign& d, GadgetKind kind, Shape shape) {
    Tile t{shared_gadget(kind), {}, shape};
    const Gadget& g = t.g();
    t.pos.assign(g.graph.size(), {});
    std::vector<bool> seen(g.graph.size(), false);
    for (const auto& p : d.points) {
        auto it = g.ids.find(p.name);
        if (it == g.ids.end()) continue;
        t.pos[it->second] = {p.x, p.y};
        seen[it->second] = true;
    }
    for (VertexId v = 0; v < seen.size(); ++v)
        if (!seen[v]) throw InternalError("design " + std::string(d.id) + " lacks vertex " + g.names[v]);
    return t;
}

inline void add_closure(Catalog& cat, const Tile& base, const std::string& id) {
    static const std::array<std::pair<const char*, std::vector<Transform>>, 8> group{{
        {"", {}},
        {":r90", {Transform::Rot90}},
        {":r180", {Transform::Rot180}},
        {":r270", {Transform::Rot270}},
        {":mH", {Transform::MirrorH}},
        {":mH.r90", {Transform::MirrorH, Transform::Rot90}},
        {":mV", {Transform::MirrorV}},
        {":mH.r270", {Transform::MirrorH, Transform::Rot270}},
    }};
    for (const auto& [suffix, ops] : group) {
        Tile t = base;
        for (Transform op : ops) t = transform(t, op);
        bool dup = false;
        for (const auto& c : cat.tiles)
            if (c.kind == t.g().kind && c.tile.shape == t.shape && c.tile.pos == t.pos) dup = true;
        if (dup) continue;
        CatalogTile ct{t, id + suffix, t.g().kind, std::nullopt};
        if (t.shape == Shape::Square) ct.type = tile_type(t);
        cat.tiles.push_back(std::move(ct));
    }
}

}  // namespace detail

// Every design under the dihedral group, plus the two-occurrence variants obtained from each
// three-occurrence design by dropping one positive path pair.  Built once; immutable.
inline const Catalog& catalog() {
    static const Catalog cat = [] {
        Catalog c;
        for (const auto& d : detail::kTileDesigns) {
            const auto info = detail::design_info(d.id);
            detail::add_closure(c, detail::tile_from_design(d, info.kind, info.shape), d.id);
        }
        // The edge gadget is symmetric under t_j <-> f_j, so each edge design also yields its swapped twin.
        for (const auto& d : detail::kTileDesigns) {
            const auto info = detail::design_info(d.id);
            if (info.kind != GadgetKind::Ge) continue;
            Tile t = detail::tile_from_design(d, info.kind, info.shape);
            const Gadget& g = t.g();
            Tile sw = t;
            for (int j = 1; j <= 37; ++j) {
                const auto tj = g.id("t" + std::to_string(j)), fj = g.id("f" + std::to_string(j));
                std::swap(sw.pos[tj], sw.pos[fj]);
            }
            detail::add_closure(c, sw, std::string(d.id) + "~");
        }
        for (const auto& d : detail::kTileDesigns) {
            if (detail::design_info(d.id).kind != GadgetKind::G3v) continue;
            detail::add_closure(c, detail::tile_from_design(d, GadgetKind::G2va, Shape::Square), std::string(d.id) + "-a");
            detail::add_closure(c, detail::tile_from_design(d, GadgetKind::G2vb, Shape::Square), std::string(d.id) + "-b");
        }
        return c;
    }();
    return cat;
}

inline TileType make_type(std::initializer_list<std::pair<Orientation, Polarity>> cs) {
    ConnectionVector cv{};
    int i = 0;
    for (auto [o, p] : cs) cv[i++] = {o, p};
    return cv;
}

struct TileTypeRow {
    TileType type;
    GadgetKind kind;
};

inline const std::vector<TileTypeRow>& tile_type_rows() {
    using O = Orientation;
    using P = Polarity;
    static const std::vector<TileTypeRow> rows = [] {
        const auto E = std::pair{O::Eps, P::None};
        auto v = [](O o, P p) { return std::pair{o, p}; };
        auto c = [](O o) { return std::pair{o, P::None}; };
        const auto TFp = v(O::TF, P::Plus), FTp = v(O::FT, P::Plus), TFm = v(O::TF, P::Minus), FTm = v(O::FT, P::Minus);
        const auto TF = c(O::TF), FT = c(O::FT);
        return std::vector<TileTypeRow>{
            {make_type({TFp, E, FTm, FTp}), GadgetKind::G3v},
            {make_type({TFp, E, TFm, FTp}), GadgetKind::G3v},
            {make_type({E, TFp, FTm, FTp}), GadgetKind::G3v},
            {make_type({E, TFp, TFm, FTp}), GadgetKind::G3v},
            {make_type({FTp, TFp, FTm, E}), GadgetKind::G3v},
            {make_type({FTp, TFp, TFm, E}), GadgetKind::G3v},
            {make_type({E, E, FTm, FTp}), GadgetKind::G2va},
            {make_type({E, E, TFm, FTp}), GadgetKind::G2vb},
            {make_type({FTp, E, FTm, E}), GadgetKind::G2va},
            {make_type({FTp, E, TFm, E}), GadgetKind::G2vb},
            {make_type({E, FTp, FTm, E}), GadgetKind::G2va},
            {make_type({E, FTp, TFm, E}), GadgetKind::G2vb},
            {make_type({TF, TF, FT, E}), GadgetKind::G3c},
            {make_type({TF, FT, FT, E}), GadgetKind::G3c},
            {make_type({TF, FT, TF, E}), GadgetKind::G3c},
            {make_type({FT, TF, FT, E}), GadgetKind::G3c},
            {make_type({FT, TF, TF, E}), GadgetKind::G3c},
            {make_type({FT, FT, TF, E}), GadgetKind::G3c},
            {make_type({TF, E, TF, E}), GadgetKind::G2c},
            {make_type({FT, E, FT, E}), GadgetKind::G2c},
            {make_type({TF, FT, E, E}), GadgetKind::G2c},
            {make_type({TF, TF, E, E}), GadgetKind::G2c},
            {make_type({FT, FT, E, E}), GadgetKind::G2c},
            {make_type({FT, E, TF, E}), GadgetKind::G2c},
            {make_type({TF, E, FT, E}), GadgetKind::G2c},
            {make_type({FT, TF, E, E}), GadgetKind::G2c},
        };
    }();
    return rows;
}

namespace detail {

inline const TfPair* pair_at(const CatalogTile& c, Point2 a, Point2 b) {
    for (const auto& p : c.tile.g().tf_pairs) {
        const auto [t, f] = c.slots(p);
        if ((t == a && f == b) || (t == b && f == a)) return &p;
    }
    return nullptr;
}

}  // namespace detail

// A variable tile with the minus pair's two slots exchanged and every plus pair kept in place.
inline const CatalogTile& variable_flip_lookup(const CatalogTile& in) {
    if (!is_variable_kind(in.kind)) throw InputError("variable_flip_lookup: not a variable tile");
    const Gadget& g = in.tile.g();
    const auto [mt, mf] = in.slots(*g.pair(1));
    const CatalogTile* best = nullptr;
    for (const auto& c : catalog().tiles) {
        if (!is_variable_kind(c.kind) || c.tile.shape != Shape::Square) continue;
        const Gadget& h = c.tile.g();
        if (h.tf_pairs.size() != g.tf_pairs.size()) continue;
        if (c.slots(*h.pair(1)) != std::pair{mf, mt}) continue;
        bool ok = true;
        for (const auto& p : g.tf_pairs) {
            if (p.polarity != Polarity::Plus) continue;
            const TfPair* q = detail::pair_at(c, in.tile.pos[p.t], in.tile.pos[p.f]);
            ok &= q && q->polarity == Polarity::Plus && c.slots(*q) == in.slots(p);
        }
        if (!ok) continue;
        if (c.kind == in.kind) return c;
        if (!best) best = &c;
    }
    if (!best) throw InternalError("variable_flip_lookup: no mate for " + in.variant);
    return *best;
}

// The three variants flipping (i only, j only, both) with all slot positions preserved.
// Pairs are matched by slot position, not by label.
inline std::array<const CatalogTile*, 3> clause_variant_lookup(const CatalogTile& in, int pi, int pj) {
    if (!is_clause_kind(in.kind)) throw InputError("clause_variant_lookup: not a clause tile");
    const Gadget& g = in.tile.g();
    const TfPair* a = g.pair(pi);
    const TfPair* b = g.pair(pj);
    if (!a || !b || pi == pj) throw InputError("clause_variant_lookup: need two distinct pairs of the tile");
    const auto [at, af] = in.slots(*a);
    const auto [bt, bf] = in.slots(*b);
    const std::array<std::pair<bool, bool>, 3> want{{{false, true}, {true, false}, {true, true}}};
    std::array<const CatalogTile*, 3> out{};
    for (std::size_t k = 0; k < 3; ++k) {
        const auto [fa, fb] = want[k];
        for (const auto& c : catalog().tiles) {
            if (c.kind != in.kind) continue;
            const TfPair* qa = detail::pair_at(c, at, af);
            const TfPair* qb = detail::pair_at(c, bt, bf);
            if (!qa || !qb) continue;
            if (c.slots(*qa) != (fa ? std::pair{af, at} : std::pair{at, af})) continue;
            if (c.slots(*qb) != (fb ? std::pair{bf, bt} : std::pair{bt, bf})) continue;
            bool same_sides = true;
            for (const auto& p : g.tf_pairs) same_sides &= detail::pair_at(c, in.tile.pos[p.t], in.tile.pos[p.f]) != nullptr;
            if (!same_sides) continue;
            out[k] = &c;
            break;
        }
        if (!out[k]) throw InternalError("clause_variant_lookup: no variant for " + in.variant);
    }
    return out;
}

}  // namespace gudg
