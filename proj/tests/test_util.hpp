#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "gudg/gudg.hpp"

namespace testutil {

using namespace gudg;

inline Point2 pt(double x, double y) { return {std::llround(x * kScale), std::llround(y * kScale)}; }

inline std::string corpus(const std::string& rel) { return std::string(CORPUS_DIR) + "/" + rel; }

inline SatInstance load_cnf(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("missing " + path);
    return read_dimacs(is, {true});
}

inline Drawing load_draw(const std::string& path, const SatInstance& psi) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("missing " + path);
    return read_drawing(is, clause_variable_graph(psi).graph);
}

struct Instance {
    std::string name;
    SatInstance psi;
    Drawing d;
};

inline Instance load_instance(const std::string& stem) {
    auto psi = load_cnf(corpus(stem + ".cnf"));
    auto d = load_draw(corpus(stem + ".draw"), psi);
    return {stem, std::move(psi), std::move(d)};
}

inline std::vector<std::string> random_stems() {
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(corpus("random")))
        if (e.path().extension() == ".cnf") out.push_back("random/" + e.path().stem().string());
    std::sort(out.begin(), out.end());
    return out;
}

// Floyd-Warshall; independent of the BFS under test.
inline std::vector<std::vector<long>> all_pairs(const Graph& g) {
    const std::size_t n = g.size();
    const long inf = 1L << 40;
    std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline std::vector<Point2> random_points(std::mt19937_64& rng, std::size_t n, double side) {
    std::uniform_int_distribution<std::int64_t> coord(0, static_cast<std::int64_t>(side * kScale));
    std::set<Point2> seen;
    std::vector<Point2> pts;
    while (pts.size() < n) {
        Point2 p{coord(rng), coord(rng)};
        if (seen.insert(p).second) pts.push_back(p);
    }
    return pts;
}

inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p) {
    for (;;) {
        Graph g(n);
        std::bernoulli_distribution coin(p);
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        if (is_connected(g)) return g;
    }
}

inline Graph path_graph(std::size_t n) {
    Graph g(n);
    for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(std::size_t n) {
    Graph g = path_graph(n);
    g.add_edge(static_cast<VertexId>(n - 1), 0);
    return g;
}

inline Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace testutil
