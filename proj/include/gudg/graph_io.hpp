#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <set>

#include "gudg/geom_graph.hpp"

namespace gudg {

struct CopyRecord {
    std::string kind;
    std::string id;
    std::vector<VertexId> vertices;
};

// Embedded graph plus the optional `name` and `copy` sections.
struct GraphFile {
    EmbeddedGraph g;
    std::map<VertexId, std::string> names;
    std::vector<CopyRecord> copies;
};

inline void write_graph_file(std::ostream& os, const EmbeddedGraph& g,
                             const std::map<VertexId, std::string>& names = {},
                             const std::vector<CopyRecord>& copies = {}) {
    for (VertexId v = 0; v < g.size(); ++v)
        os << "v " << v << ' ' << format_decimal(g.pos[v].x) << ' ' << format_decimal(g.pos[v].y) << '\n';
    for (const Edge& e : g.graph.edges()) os << "e " << e.u << ' ' << e.v << '\n';
    for (const auto& [v, label] : names) os << "name " << v << ' ' << label << '\n';
    for (const auto& c : copies) {
        os << "copy " << c.kind << ' ' << c.id;
        for (VertexId v : c.vertices) os << ' ' << v;
        os << '\n';
    }
}

inline GraphFile read_graph_file(std::istream& is) {
    GraphFile out;
    std::map<VertexId, Point2> pts;
    std::vector<std::pair<std::size_t, Edge>> edges;
    std::string line;
    std::size_t no = 0;
    while (std::getline(is, line)) {
        ++no;
        auto tok = split_ws(line);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (tok[0] == "v") {
            if (tok.size() != 4) throw ParseError(no, "expected 'v <id> <x> <y>'");
            const auto id = parse_int<VertexId>(tok[1], no);
            Point2 p;
            try {
                p = {parse_decimal(tok[2]), parse_decimal(tok[3])};
            } catch (const InputError& e) {
                throw ParseError(no, e.what());
            }
            if (!pts.emplace(id, p).second) throw ParseError(no, "vertex " + std::to_string(id) + " repeated");
        } else if (tok[0] == "e") {
            if (tok.size() != 3) throw ParseError(no, "expected 'e <u> <v>'");
            edges.push_back({no, {parse_int<VertexId>(tok[1], no), parse_int<VertexId>(tok[2], no)}});
        } else if (tok[0] == "name") {
            if (tok.size() != 3) throw ParseError(no, "expected 'name <id> <label>'");
            out.names[parse_int<VertexId>(tok[1], no)] = std::string(tok[2]);
        } else if (tok[0] == "copy") {
            if (tok.size() < 3) throw ParseError(no, "expected 'copy <kind> <id> <vertices...>'");
            CopyRecord c{std::string(tok[1]), std::string(tok[2]), {}};
            for (std::size_t k = 3; k < tok.size(); ++k) c.vertices.push_back(parse_int<VertexId>(tok[k], no));
            out.copies.push_back(std::move(c));
        } else {
            throw ParseError(no, "unknown record '" + std::string(tok[0]) + "'");
        }
    }
    std::vector<Point2> pos;
    for (const auto& [id, p] : pts) {
        if (id != pos.size()) throw ParseError(no, "vertex ids must be 0.." + std::to_string(pts.size() - 1));
        pos.push_back(p);
    }
    Graph g(pos.size());
    for (const auto& [ln, e] : edges) {
        if (e.u >= pos.size() || e.v >= pos.size()) throw ParseError(ln, "edge endpoint out of range");
        if (e.u == e.v) throw ParseError(ln, "self-loop");
        if (!g.add_edge(e.u, e.v)) throw ParseError(ln, "duplicate edge");
    }
    for (const auto& [v, _] : out.names)
        if (v >= pos.size()) throw ParseError(no, "name for unknown vertex " + std::to_string(v));
    for (const auto& c : out.copies)
        for (VertexId v : c.vertices)
            if (v >= pos.size()) throw ParseError(no, "copy '" + c.id + "' lists unknown vertex");
    try {
        out.g = make_embedded(std::move(g), std::move(pos));
    } catch (const InputError& e) {
        throw ParseError(no, e.what());
    }
    return out;
}

inline void write_landmarks(std::ostream& os, const std::vector<VertexId>& s) {
    for (VertexId v : s) os << "s " << v << '\n';
}

inline std::vector<VertexId> read_landmarks(std::istream& is, std::size_t n) {
    std::vector<VertexId> out;
    std::set<VertexId> seen;
    std::string line;
    std::size_t no = 0;
    while (std::getline(is, line)) {
        ++no;
        auto tok = split_ws(line);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (tok[0] != "s" || tok.size() != 2) throw ParseError(no, "expected 's <id>'");
        const auto v = parse_int<VertexId>(tok[1], no);
        if (v >= n) throw ParseError(no, "landmark " + std::to_string(v) + " out of range");
        if (!seen.insert(v).second) throw ParseError(no, "duplicate landmark " + std::to_string(v));
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gudg
