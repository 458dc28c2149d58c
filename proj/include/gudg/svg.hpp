#pragma once

#include <ostream>
#include <set>

#include "gudg/geom_graph.hpp"

namespace gudg {

namespace detail {

inline std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace detail

struct SvgOptions {
    double px_per_unit = 24.0;
    double vertex_radius = 0.12;  // units
    bool labels = false;
};

// UDG edges of the point set: solid when Gabriel, dashed otherwise.  Graph edges that are not
// UDG edges are drawn red.
inline void write_svg(std::ostream& os, const EmbeddedGraph& g, const std::vector<std::string>& labels = {},
                      SvgOptions opt = {}) {
    const auto udg = udg_from_points(g.pos);
    const auto gab = gabriel_edges(udg);
    const std::set<Edge> gabriel(gab.begin(), gab.end());
    std::int64_t x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    for (std::size_t i = 0; i < g.pos.size(); ++i) {
        const Point2 p = g.pos[i];
        if (i == 0 || p.x < x0) x0 = p.x;
        if (i == 0 || p.y < y0) y0 = p.y;
        if (i == 0 || p.x > x1) x1 = p.x;
        if (i == 0 || p.y > y1) y1 = p.y;
    }
    const double s = opt.px_per_unit / static_cast<double>(kScale);
    const double pad = opt.px_per_unit;
    auto X = [&](std::int64_t x) { return pad + static_cast<double>(x - x0) * s; };
    auto Y = [&](std::int64_t y) { return pad + static_cast<double>(y1 - y) * s; };
    const double w = 2 * pad + static_cast<double>(x1 - x0) * s, h = 2 * pad + static_cast<double>(y1 - y0) * s;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
       << ' ' << h << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    const double sw = opt.px_per_unit * 0.04;
    auto line = [&](const Edge& e, const char* style) {
        os << "<line x1=\"" << X(g.pos[e.u].x) << "\" y1=\"" << Y(g.pos[e.u].y) << "\" x2=\"" << X(g.pos[e.v].x)
           << "\" y2=\"" << Y(g.pos[e.v].y) << "\" " << style << "/>\n";
    };
    const std::string solid = "stroke=\"black\" stroke-width=\"" + std::to_string(sw) + "\"";
    const std::string dashed = solid + " stroke-dasharray=\"" + std::to_string(4 * sw) + "," + std::to_string(3 * sw) + "\"";
    const std::string bad = "stroke=\"red\" stroke-width=\"" + std::to_string(2 * sw) + "\"";
    for (const Edge& e : udg.graph.edges()) line(e, gabriel.count(e) ? solid.c_str() : dashed.c_str());
    for (const Edge& e : g.graph.edges())
        if (!udg.graph.has_edge(e.u, e.v)) line(e, bad.c_str());
    const double r = opt.vertex_radius * opt.px_per_unit;
    for (std::size_t i = 0; i < g.pos.size(); ++i) {
        os << "<circle cx=\"" << X(g.pos[i].x) << "\" cy=\"" << Y(g.pos[i].y) << "\" r=\"" << r << "\"/>\n";
        if (opt.labels && i < labels.size())
            os << "<text x=\"" << X(g.pos[i].x) + r << "\" y=\"" << Y(g.pos[i].y) - r << "\" font-size=\"" << 2 * r
               << "\">" << detail::xml_escape(labels[i]) << "</text>\n";
    }
    os << "</svg>\n";
}

}  // namespace gudg
