#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>

#include "gudg/geom_graph.hpp"

namespace gudg {

enum class GadgetKind { G3v, G2va, G2vb, G3c, G2c, Ge };

inline std::string_view kind_name(GadgetKind k) {
    static constexpr std::array<std::string_view, 6> names{"G3v", "G2va", "G2vb", "G3c", "G2c", "Ge"};
    return names[static_cast<int>(k)];
}

inline GadgetKind parse_kind(std::string_view s) {
    for (int k = 0; k < 6; ++k)
        if (kind_name(static_cast<GadgetKind>(k)) == s) return static_cast<GadgetKind>(k);
    throw InputError("unknown gadget kind '" + std::string(s) + "'");
}

inline bool is_variable_kind(GadgetKind k) { return k == GadgetKind::G3v || k == GadgetKind::G2va || k == GadgetKind::G2vb; }
inline bool is_clause_kind(GadgetKind k) { return k == GadgetKind::G3c || k == GadgetKind::G2c; }

enum class Polarity { Plus, Minus, None };

// For variable and clause gadgets `index` is the pair number i; for Ge it is 1 or 37 (the end).
struct TfPair {
    VertexId t;
    VertexId f;
    Polarity polarity;
    int index;
};

struct Gadget {
    GadgetKind kind;
    Graph graph;
    std::vector<std::string> names;
    std::map<std::string, VertexId, std::less<>> ids;
    std::vector<TfPair> tf_pairs;

    bool has(std::string_view name) const { return ids.find(name) != ids.end(); }
    VertexId id(std::string_view name) const {
        auto it = ids.find(name);
        if (it == ids.end()) throw InputError("gadget " + std::string(kind_name(kind)) + " has no vertex '" + std::string(name) + "'");
        return it->second;
    }
    const TfPair* pair(int index) const {
        for (const auto& p : tf_pairs)
            if (p.index == index) return &p;
        return nullptr;
    }
    bool is_tf_vertex(VertexId v) const {
        for (const auto& p : tf_pairs)
            if (p.t == v || p.f == v) return true;
        return false;
    }
};

inline std::string tf_name(char s, int i, int j) { return std::string(1, s) + std::to_string(i) + "," + std::to_string(j); }

namespace detail {

class GadgetBuilder {
public:
    explicit GadgetBuilder(GadgetKind k) { g_.kind = k; }

    VertexId add(const std::string& name) {
        const VertexId v = g_.graph.add_vertex();
        g_.names.push_back(name);
        g_.ids.emplace(name, v);
        return v;
    }
    void edge(std::string_view a, std::string_view b) { g_.graph.add_edge(g_.id(a), g_.id(b)); }
    void pair(std::string_view t, std::string_view f, Polarity p, int index) {
        g_.tf_pairs.push_back({g_.id(t), g_.id(f), p, index});
    }
    Gadget take() { return std::move(g_); }

private:
    Gadget g_;
};

// Clause pair k hangs off connector C_OF[k] which hangs off W_OF[k].
inline constexpr std::array<int, 4> kClauseConnector{0, 1, 3, 2};
inline constexpr std::array<int, 4> kClauseHub{0, 1, 2, 1};

}  // namespace detail

inline std::vector<int> present_pairs(GadgetKind k) {
    switch (k) {
        case GadgetKind::G3v:
        case GadgetKind::G3c: return {1, 2, 3};
        case GadgetKind::G2va:
        case GadgetKind::G2c: return {1, 2};
        case GadgetKind::G2vb: return {1, 3};
        case GadgetKind::Ge: return {};
    }
    return {};
}

inline Gadget make_gadget(GadgetKind kind) {
    detail::GadgetBuilder b(kind);
    if (is_variable_kind(kind)) {
        const auto pairs = present_pairs(kind);
        auto strands = [&](int i) { return std::find(pairs.begin(), pairs.end(), i) != pairs.end(); };
        for (const char* n : {"T1", "T2", "N1", "N2", "F"}) b.add(n);
        for (int i = 1; i <= 3; ++i) {
            b.add("a" + std::to_string(i));
            b.add("b" + std::to_string(i));
            for (char s : {'t', 'f'})
                for (int j = 0; j <= (strands(i) ? 14 : 0); ++j) b.add(tf_name(s, i, j));
        }
        b.edge("F", "t1,0");
        b.edge("T1", "T2");
        b.edge("T1", "t2,0");
        b.edge("T1", "t3,0");
        b.edge("T2", "N1");
        b.edge("T2", "t2,0");
        b.edge("T2", "t3,0");
        b.edge("f1,0", "f3,0");
        for (const char* n : {"N1", "F", "f1,0", "f2,0", "f3,0"}) b.edge("N2", n);
        for (int i = 1; i <= 3; ++i) {
            const std::string a = "a" + std::to_string(i), bb = "b" + std::to_string(i);
            b.edge(a, bb);
            b.edge(a, tf_name('f', i, 0));
            b.edge(bb, tf_name('f', i, 0));
            b.edge(tf_name('t', i, 0), tf_name('f', i, 0));
            if (!strands(i)) continue;
            for (char s : {'t', 'f'})
                for (int j = 0; j < 14; ++j) b.edge(tf_name(s, i, j), tf_name(s, i, j + 1));
            b.pair(tf_name('t', i, 14), tf_name('f', i, 14), i == 1 ? Polarity::Minus : Polarity::Plus, i);
        }
    } else if (is_clause_kind(kind)) {
        const auto pairs = present_pairs(kind);
        for (const char* n : {"m", "w1", "w2"}) b.add(n);
        for (int c = 1; c <= 3; ++c) {
            for (int k : pairs)
                if (detail::kClauseConnector[k] == c) b.add("c" + std::to_string(c));
        }
        for (int k : pairs)
            for (char s : {'t', 'f'})
                for (int j = 1; j <= 15; ++j) b.add(tf_name(s, k, j));
        b.edge("m", "w1");
        b.edge("m", "w2");
        for (int k : pairs) {
            const std::string c = "c" + std::to_string(detail::kClauseConnector[k]);
            b.edge("w" + std::to_string(detail::kClauseHub[k]), c);
            b.edge(c, tf_name('t', k, 1));
            b.edge("m", tf_name('f', k, 1));
            for (char s : {'t', 'f'})
                for (int j = 1; j < 15; ++j) b.edge(tf_name(s, k, j), tf_name(s, k, j + 1));
            b.pair(tf_name('t', k, 15), tf_name('f', k, 15), Polarity::None, k);
        }
    } else {
        for (char s : {'t', 'f'})
            for (int j = 1; j <= 37; ++j) b.add(std::string(1, s) + std::to_string(j));
        for (char s : {'t', 'f'})
            for (int j = 1; j < 37; ++j) b.edge(std::string(1, s) + std::to_string(j), std::string(1, s) + std::to_string(j + 1));
        b.pair("t1", "f1", Polarity::None, 1);
        b.pair("t37", "f37", Polarity::None, 37);
    }
    return b.take();
}

inline std::shared_ptr<const Gadget> shared_gadget(GadgetKind k) {
    static const std::array<std::shared_ptr<const Gadget>, 6> all = [] {
        std::array<std::shared_ptr<const Gadget>, 6> a;
        for (int i = 0; i < 6; ++i) a[i] = std::make_shared<const Gadget>(make_gadget(static_cast<GadgetKind>(i)));
        return a;
    }();
    return all[static_cast<int>(k)];
}

// ---- tiles -------------------------------------------------------------

// Square [-6,6]^2 or one of the six three-square polygons.
enum class Shape { Square, P1, P2, P3, P4, P5, P6 };

inline std::string_view shape_name(Shape s) {
    static constexpr std::array<std::string_view, 7> names{"square", "P1", "P2", "P3", "P4", "P5", "P6"};
    return names[static_cast<int>(s)];
}

struct Cell {
    int x, y;
    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

// Square centres of each shape in units of 12.
inline std::vector<Cell> shape_cells(Shape s) {
    switch (s) {
        case Shape::Square: return {{0, 0}};
        case Shape::P1: return {{-1, 0}, {0, 0}, {1, 0}};
        case Shape::P2: return {{0, -1}, {0, 0}, {0, 1}};
        case Shape::P3: return {{-1, 0}, {0, 0}, {0, -1}};
        case Shape::P4: return {{-1, 0}, {0, 0}, {0, 1}};
        case Shape::P5: return {{0, -1}, {0, 0}, {1, 0}};
        case Shape::P6: return {{0, 1}, {0, 0}, {1, 0}};
    }
    return {};
}

inline Shape shape_from_cells(std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end());
    for (int s = 0; s < 7; ++s) {
        auto c = shape_cells(static_cast<Shape>(s));
        std::sort(c.begin(), c.end());
        if (c == cells) return static_cast<Shape>(s);
    }
    throw InternalError("cells do not form a known shape");
}

struct Tile {
    std::shared_ptr<const Gadget> gadget;
    std::vector<Point2> pos;
    Shape shape = Shape::Square;

    const Gadget& g() const { return *gadget; }
    Point2 at(std::string_view name) const { return pos[gadget->id(name)]; }
    EmbeddedGraph embedded() const { return {gadget->graph, pos}; }
};

enum class Transform { Rot90, Rot180, Rot270, MirrorH, MirrorV };

inline std::string_view transform_name(Transform t) {
    static constexpr std::array<std::string_view, 5> names{"rot90", "rot180", "rot270", "mirrorH", "mirrorV"};
    return names[static_cast<int>(t)];
}

inline Point2 apply(Transform t, Point2 p) {
    switch (t) {
        case Transform::Rot90: return {-p.y, p.x};
        case Transform::Rot180: return {-p.x, -p.y};
        case Transform::Rot270: return {p.y, -p.x};
        case Transform::MirrorH: return {-p.x, p.y};
        case Transform::MirrorV: return {p.x, -p.y};
    }
    return p;
}

inline Tile transform(const Tile& tile, Transform op) {
    Tile out = tile;
    for (auto& p : out.pos) p = apply(op, p);
    std::vector<Cell> cells;
    for (Cell c : shape_cells(tile.shape)) {
        const Point2 q = apply(op, {c.x, c.y});
        cells.push_back({static_cast<int>(q.x), static_cast<int>(q.y)});
    }
    out.shape = shape_from_cells(cells);
    return out;
}

enum class Side { Top, Right, Bottom, Left };

inline std::string_view side_name(Side s) {
    static constexpr std::array<std::string_view, 4> names{"top", "right", "bottom", "left"};
    return names[static_cast<int>(s)];
}

inline Point2 outward(Side s) {
    switch (s) {
        case Side::Top: return {0, 1};
        case Side::Right: return {1, 0};
        case Side::Bottom: return {0, -1};
        case Side::Left: return {-1, 0};
    }
    return {};
}

inline Side opposite(Side s) { return static_cast<Side>((static_cast<int>(s) + 2) % 4); }

// Side on which two boundary slot points lie (both share the dominant coordinate).
inline Side side_of_points(Point2 a, Point2 b) {
    if (a.x == b.x && std::abs(a.x) > std::abs(a.y)) return a.x > 0 ? Side::Right : Side::Left;
    if (a.y == b.y && std::abs(a.y) > std::abs(a.x)) return a.y > 0 ? Side::Top : Side::Bottom;
    throw InputError("points do not lie on a common tile side");
}

inline Side side_of_pair(const Tile& t, const TfPair& p) { return side_of_points(t.pos[p.t], t.pos[p.f]); }

enum class Orientation { TF, FT, Eps };

inline std::string_view orientation_name(Orientation o) {
    static constexpr std::array<std::string_view, 3> names{"TF", "FT", "eps"};
    return names[static_cast<int>(o)];
}

// Clockwise traversal runs along each side in the direction of the outward normal turned clockwise.
inline Orientation orientation_of_points(Point2 t, Point2 f) {
    const Point2 n = outward(side_of_points(t, f));
    const Point2 dir{n.y, -n.x};
    const std::int64_t along = (t.x - f.x) * dir.x + (t.y - f.y) * dir.y;
    return along < 0 ? Orientation::TF : Orientation::FT;
}

inline Orientation orientation_of_pair(const Tile& t, const TfPair& p) {
    return orientation_of_points(t.pos[p.t], t.pos[p.f]);
}

struct Component {
    Orientation o = Orientation::Eps;
    Polarity mark = Polarity::None;

    friend constexpr auto operator<=>(const Component&, const Component&) = default;
};

using ConnectionVector = std::array<Component, 4>;
using TileType = ConnectionVector;

inline ConnectionVector connection_vector(const Tile& t) {
    if (t.shape != Shape::Square) throw InputError("connection vectors are defined for square tiles");
    ConnectionVector cv{};
    const bool variable = is_variable_kind(t.gadget->kind);
    for (const auto& p : t.gadget->tf_pairs) {
        const Side s = side_of_pair(t, p);
        auto& c = cv[static_cast<int>(s)];
        if (c.o != Orientation::Eps) throw InputError("two pairs on one side");
        c.o = orientation_of_pair(t, p);
        c.mark = variable ? p.polarity : Polarity::None;
    }
    return cv;
}

inline TileType canonical_type(const ConnectionVector& cv) {
    TileType best = cv;
    for (int d = 1; d < 4; ++d) {
        TileType r;
        for (int i = 0; i < 4; ++i) r[i] = cv[(i + d) % 4];
        best = std::min(best, r);
    }
    return best;
}

inline TileType tile_type(const Tile& t) { return canonical_type(connection_vector(t)); }

inline std::string to_string(const ConnectionVector& cv) {
    std::string s = "[";
    for (int i = 0; i < 4; ++i) {
        if (i) s += ",";
        s += "(";
        s += orientation_name(cv[i].o);
        s += ",";
        s += cv[i].mark == Polarity::Plus ? "+" : cv[i].mark == Polarity::Minus ? "-" : "0";
        s += ")";
    }
    return s + "]";
}

// ---- tile validation -----------------------------------------------------

namespace detail {

struct Segment {
    Point2 a, b;  // axis-aligned
};

inline std::int64_t dist2_to_segment(Point2 p, const Segment& s) {
    const std::int64_t x0 = std::min(s.a.x, s.b.x), x1 = std::max(s.a.x, s.b.x);
    const std::int64_t y0 = std::min(s.a.y, s.b.y), y1 = std::max(s.a.y, s.b.y);
    const std::int64_t cx = std::clamp(p.x, x0, x1), cy = std::clamp(p.y, y0, y1);
    return dist2(p, {cx, cy});
}

inline constexpr std::int64_t kHalf = 6 * kScale;
inline constexpr std::int64_t kCell = 12 * kScale;

inline std::vector<Segment> boundary(Shape s) {
    const auto cells = shape_cells(s);
    auto has = [&](Cell c) { return std::find(cells.begin(), cells.end(), c) != cells.end(); };
    std::vector<Segment> out;
    for (Cell c : cells) {
        const Point2 m{c.x * kCell, c.y * kCell};
        for (int k = 0; k < 4; ++k) {
            const Point2 n = outward(static_cast<Side>(k));
            if (has({c.x + static_cast<int>(n.x), c.y + static_cast<int>(n.y)})) continue;
            const Point2 mid{m.x + n.x * kHalf, m.y + n.y * kHalf};
            const Point2 along{-n.y * kHalf, n.x * kHalf};
            out.push_back({mid - along, mid + along});
        }
    }
    return out;
}

inline bool inside(Shape s, Point2 p) {
    for (Cell c : shape_cells(s)) {
        const Point2 m{c.x * kCell, c.y * kCell};
        if (std::abs(p.x - m.x) <= kHalf && std::abs(p.y - m.y) <= kHalf) return true;
    }
    return false;
}

// Admissible (slot a, slot b) positions: the outer sides of end squares (or all four sides of a square).
inline std::vector<std::pair<Side, Point2>> slot_sides(Shape s) {
    std::vector<std::pair<Side, Point2>> out;
    if (s == Shape::Square) {
        for (int k = 0; k < 4; ++k) out.push_back({static_cast<Side>(k), {0, 0}});
        return out;
    }
    for (Cell c : shape_cells(s)) {
        if (c.x == 0 && c.y == 0) continue;
        Side side = c.x > 0 ? Side::Right : c.x < 0 ? Side::Left : c.y > 0 ? Side::Top : Side::Bottom;
        out.push_back({side, {c.x * kCell, c.y * kCell}});
    }
    return out;
}

}  // namespace detail

inline ValidationReport validate_tile(const Tile& t, std::int64_t margin = 10) {
    ValidationReport rep = is_gudg_embedding(t.embedded(), margin);
    const Gadget& g = t.g();
    const auto segs = detail::boundary(t.shape);
    const auto sides = detail::slot_sides(t.shape);
    std::vector<Side> used;
    for (const auto& p : g.tf_pairs) {
        const Point2 a = t.pos[p.t], b = t.pos[p.f];
        bool ok = false;
        for (const auto& [side, centre] : sides) {
            const Point2 n = outward(side);
            const Point2 mid{centre.x + n.x * detail::kHalf, centre.y + n.y * detail::kHalf};
            const Point2 off{-n.y * kScale, n.x * kScale};
            if ((a == mid + off && b == mid - off) || (a == mid - off && b == mid + off)) {
                ok = true;
                if (std::find(used.begin(), used.end(), side) != used.end())
                    rep.add("slot", "two pairs on side " + std::string(side_name(side)));
                used.push_back(side);
            }
        }
        if (!ok) rep.add("slot", "pair " + g.names[p.t] + "/" + g.names[p.f] + " is not on a boundary slot");
    }
    if (t.gadget->kind == GadgetKind::Ge && t.shape != Shape::Square && used.size() == 2 && used[0] == used[1])
        rep.add("slot", "both ends on one side");
    for (VertexId v = 0; v < g.graph.size(); ++v) {
        if (g.is_tf_vertex(v)) continue;
        if (!detail::inside(t.shape, t.pos[v])) {
            rep.add("depth", g.names[v] + " lies outside the polygon");
            continue;
        }
        for (const auto& s : segs)
            if (detail::dist2_to_segment(t.pos[v], s) < kScale * kScale) {
                rep.add("depth", g.names[v] + " is closer than 1 to the boundary");
                break;
            }
    }
    return rep;
}

}  // namespace gudg
