#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gudg/core.hpp"

namespace gudg {

using VertexId = std::uint32_t;

struct Edge {
    VertexId u;
    VertexId v;

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr Edge make_edge(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n) {}

    std::size_t size() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    VertexId add_vertex() {
        adj_.emplace_back();
        return static_cast<VertexId>(adj_.size() - 1);
    }

    // Returns false if the edge was already present.
    bool add_edge(VertexId u, VertexId v) {
        check(u);
        check(v);
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        if (has_edge(u, v)) return false;
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++edge_count_;
        return true;
    }

    bool has_edge(VertexId u, VertexId v) const {
        check(u);
        check(v);
        const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
        const VertexId other = adj_[u].size() <= adj_[v].size() ? v : u;
        return std::find(a.begin(), a.end(), other) != a.end();
    }

    std::span<const VertexId> neighbors(VertexId v) const {
        check(v);
        return adj_[v];
    }

    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    std::size_t max_degree() const {
        std::size_t d = 0;
        for (const auto& a : adj_) d = std::max(d, a.size());
        return d;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (VertexId u = 0; u < adj_.size(); ++u)
            for (VertexId v : adj_[u])
                if (u < v) out.push_back({u, v});
        std::sort(out.begin(), out.end());
        return out;
    }

    void check(VertexId v) const {
        if (v >= adj_.size())
            throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
    }

private:
    std::vector<std::vector<VertexId>> adj_;
    std::size_t edge_count_ = 0;
};

// Hop count or infinity. Finite counts are always < 2^32 - 1 since |V| fits in VertexId.
class Hops {
public:
    constexpr Hops() = default;
    constexpr explicit Hops(std::uint32_t v) : v_(v) {}
    static constexpr Hops infinity() { return Hops(kInf); }

    constexpr bool finite() const { return v_ != kInf; }
    std::uint32_t value() const {
        if (!finite()) throw std::domain_error("infinite distance has no value");
        return v_;
    }
    constexpr std::uint32_t raw() const { return v_; }

    friend constexpr auto operator<=>(const Hops&, const Hops&) = default;

    std::string str() const { return finite() ? std::to_string(v_) : "inf"; }

private:
    static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t v_ = kInf;
};

inline std::vector<Hops> bfs_distances(const Graph& g, VertexId source) {
    g.check(source);
    std::vector<Hops> d(g.size(), Hops::infinity());
    std::vector<VertexId> queue;
    queue.reserve(g.size());
    d[source] = Hops(0);
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId u = queue[head];
        const Hops next(d[u].raw() + 1);
        for (VertexId w : g.neighbors(u)) {
            if (!d[w].finite()) {
                d[w] = next;
                queue.push_back(w);
            }
        }
    }
    return d;
}

// Distance to the nearest vertex of a source set.
inline std::vector<Hops> multi_source_bfs(const Graph& g, std::span<const VertexId> sources) {
    std::vector<Hops> d(g.size(), Hops::infinity());
    std::vector<VertexId> queue;
    for (VertexId s : sources) {
        g.check(s);
        if (!d[s].finite()) {
            d[s] = Hops(0);
            queue.push_back(s);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId u = queue[head];
        const Hops next(d[u].raw() + 1);
        for (VertexId w : g.neighbors(u)) {
            if (!d[w].finite()) {
                d[w] = next;
                queue.push_back(w);
            }
        }
    }
    return d;
}

inline bool is_connected(const Graph& g) {
    if (g.size() <= 1) return true;
    const auto d = bfs_distances(g, 0);
    return std::all_of(d.begin(), d.end(), [](Hops h) { return h.finite(); });
}

// Rows of hop distances for a set of sources; a full matrix holds every row.
class DistanceMatrix {
public:
    DistanceMatrix() = default;

    static DistanceMatrix from_sources(const Graph& g, std::span<const VertexId> sources) {
        DistanceMatrix dm;
        dm.n_ = g.size();
        dm.row_of_.assign(g.size(), -1);
        for (VertexId s : sources) {
            g.check(s);
            if (dm.row_of_[s] >= 0) continue;
            dm.row_of_[s] = static_cast<std::int64_t>(dm.data_.size() / std::max<std::size_t>(dm.n_, 1));
            auto row = bfs_distances(g, s);
            dm.data_.insert(dm.data_.end(), row.begin(), row.end());
        }
        return dm;
    }

    std::size_t size() const { return n_; }
    bool has_row(VertexId s) const { return s < n_ && row_of_[s] >= 0; }

    std::span<const Hops> row(VertexId s) const {
        if (s >= n_) throw std::out_of_range("vertex id " + std::to_string(s) + " out of range");
        if (row_of_[s] < 0) throw std::out_of_range("no distance row for vertex " + std::to_string(s));
        return {data_.data() + static_cast<std::size_t>(row_of_[s]) * n_, n_};
    }

    Hops operator()(VertexId s, VertexId v) const {
        if (v >= n_) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
        if (!has_row(s) && has_row(v)) return row(v)[s];
        return row(s)[v];
    }

private:
    std::size_t n_ = 0;
    std::vector<std::int64_t> row_of_;
    std::vector<Hops> data_;
};

inline DistanceMatrix distance_matrix(const Graph& g) {
    std::vector<VertexId> all(g.size());
    for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
    return DistanceMatrix::from_sources(g, all);
}

}  // namespace gudg
