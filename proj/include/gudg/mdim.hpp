#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>

#include "gudg/graph.hpp"

namespace gudg {

using LandmarkSet = std::vector<VertexId>;
using VertexPair = std::pair<VertexId, VertexId>;

inline bool resolves(const DistanceMatrix& dm, VertexId s, VertexId u, VertexId v) {
    const auto r = dm.row(s);
    if (u >= r.size() || v >= r.size()) throw std::out_of_range("vertex id out of range");
    return r[u] != r[v];
}

namespace detail {

// Classes of vertices with identical distance vectors to S, each sorted, classes sorted by first member.
inline std::vector<std::vector<VertexId>> signature_classes(const DistanceMatrix& dm, const LandmarkSet& S) {
    const std::size_t n = dm.size();
    std::vector<std::span<const Hops>> rows;
    for (VertexId s : S) rows.push_back(dm.row(s));
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto less = [&](VertexId a, VertexId b) {
        for (const auto& r : rows)
            if (r[a] != r[b]) return r[a] < r[b];
        return a < b;
    };
    std::sort(order.begin(), order.end(), less);
    std::vector<std::vector<VertexId>> classes;
    for (std::size_t k = 0; k < n; ++k) {
        bool same = k > 0;
        if (same)
            for (const auto& r : rows)
                if (r[order[k]] != r[order[k - 1]]) {
                    same = false;
                    break;
                }
        if (!same) classes.emplace_back();
        classes.back().push_back(order[k]);
    }
    std::sort(classes.begin(), classes.end());
    return classes;
}

}  // namespace detail

// Empty optional means S resolves every pair; otherwise the lexicographically smallest unsolved pair.
inline std::optional<VertexPair> is_resolving(const DistanceMatrix& dm, const LandmarkSet& S) {
    std::optional<VertexPair> best;
    for (const auto& c : detail::signature_classes(dm, S)) {
        if (c.size() < 2) continue;
        VertexPair p{c[0], c[1]};
        if (!best || p < *best) best = p;
    }
    return best;
}

inline std::vector<VertexPair> unsolved_pairs(const DistanceMatrix& dm, const LandmarkSet& S) {
    std::vector<VertexPair> out;
    for (const auto& c : detail::signature_classes(dm, S))
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) out.push_back({c[i], c[j]});
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

class PairBits {
public:
    explicit PairBits(std::size_t bits = 0) : w_((bits + 63) / 64, 0) {}
    void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1; }
    void operator|=(const PairBits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    }
    bool covers(const PairBits& need) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (need.w_[k] & ~w_[k]) return false;
        return true;
    }
    bool all(std::size_t bits) const {
        for (std::size_t i = 0; i < bits; ++i)
            if (!test(i)) return false;
        return true;
    }

private:
    std::vector<std::uint64_t> w_;
};

}  // namespace detail

struct MetricDimensionResult {
    bool exceeded = false;  // true when no resolving set of size <= upper_bound exists
    std::size_t k = 0;
    LandmarkSet set;
};

inline MetricDimensionResult metric_dimension_exact(const Graph& g,
                                                    std::optional<std::size_t> upper_bound = std::nullopt) {
    if (!is_connected(g)) throw InputError("metric_dimension_exact: graph is disconnected");
    const std::size_t n = g.size();
    if (n <= 1) return {false, 0, {}};
    const DistanceMatrix dm = distance_matrix(g);

    std::vector<VertexPair> pairs;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) pairs.push_back({u, v});
    const std::size_t P = pairs.size();
    std::vector<detail::PairBits> by(n, detail::PairBits(P));
    // last[p]: largest vertex id resolving pair p.
    std::vector<VertexId> last(P, 0);
    for (std::size_t p = 0; p < P; ++p)
        for (VertexId s = 0; s < n; ++s)
            if (dm(s, pairs[p].first) != dm(s, pairs[p].second)) {
                by[s].set(p);
                last[p] = s;
            }

    // Twins: vertices whose rows agree off their own entries; each class needs all but one member.
    std::vector<int> twin_class(n, -1);
    std::size_t lower = 0;
    {
        int next = 0;
        for (VertexId u = 0; u < n; ++u) {
            if (twin_class[u] >= 0) continue;
            twin_class[u] = next;
            std::size_t size = 1;
            for (VertexId v = u + 1; v < n; ++v) {
                if (twin_class[v] >= 0) continue;
                bool twin = true;
                for (VertexId x = 0; x < n && twin; ++x)
                    if (x != u && x != v && dm(u, x) != dm(v, x)) twin = false;
                if (twin) {
                    twin_class[v] = next;
                    ++size;
                }
            }
            lower += size - 1;
            ++next;
        }
        lower = std::max<std::size_t>(lower, 1);
    }

    LandmarkSet chosen;
    std::function<bool(VertexId, std::size_t, const detail::PairBits&)> dfs =
        [&](VertexId from, std::size_t left, const detail::PairBits& done) -> bool {
        std::optional<std::size_t> open;
        for (std::size_t p = 0; p < P; ++p) {
            if (done.test(p)) continue;
            if (last[p] < from) return false;
            if (!open) open = p;
        }
        if (!open) return true;
        if (left == 0) return false;
        for (VertexId s = from; s < n; ++s) {
            detail::PairBits next = done;
            next |= by[s];
            chosen.push_back(s);
            if (dfs(s + 1, left - 1, next)) return true;
            chosen.pop_back();
        }
        return false;
    };

    const std::size_t cap = upper_bound ? std::min(*upper_bound, n - 1) : n - 1;
    for (std::size_t k = lower; k <= cap; ++k) {
        chosen.clear();
        if (dfs(0, k, detail::PairBits(P))) return {false, chosen.size(), chosen};
    }
    return {true, 0, {}};
}

// One vertex per group added to `forced`; returns the first selection (lexicographic in group order) that resolves.
inline std::optional<LandmarkSet> restricted_min_resolving(const DistanceMatrix& dm, const LandmarkSet& forced,
                                                           const std::vector<std::vector<VertexId>>& groups) {
    {
        std::vector<VertexId> all;
        for (const auto& gr : groups) all.insert(all.end(), gr.begin(), gr.end());
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw InputError("restricted_min_resolving: groups are not disjoint");
    }
    const auto open = unsolved_pairs(dm, forced);
    const std::size_t P = open.size();
    std::vector<std::vector<detail::PairBits>> masks(groups.size());
    for (std::size_t gi = 0; gi < groups.size(); ++gi)
        for (VertexId c : groups[gi]) {
            detail::PairBits b(P);
            const auto r = dm.row(c);
            for (std::size_t p = 0; p < P; ++p)
                if (r[open[p].first] != r[open[p].second]) b.set(p);
            masks[gi].push_back(std::move(b));
        }
    // suffix[gi]: union of everything groups gi.. can resolve.
    std::vector<detail::PairBits> suffix(groups.size() + 1, detail::PairBits(P));
    for (std::size_t gi = groups.size(); gi-- > 0;) {
        suffix[gi] = suffix[gi + 1];
        for (const auto& m : masks[gi]) suffix[gi] |= m;
    }
    std::vector<std::size_t> pick(groups.size(), 0);
    std::function<bool(std::size_t, const detail::PairBits&)> dfs = [&](std::size_t gi,
                                                                        const detail::PairBits& done) {
        detail::PairBits reach = done;
        reach |= suffix[gi];
        if (!reach.all(P)) return false;
        if (gi == groups.size()) return true;
        for (std::size_t k = 0; k < groups[gi].size(); ++k) {
            detail::PairBits next = done;
            next |= masks[gi][k];
            pick[gi] = k;
            if (dfs(gi + 1, next)) return true;
        }
        return false;
    };
    if (groups.empty()) {
        if (P == 0) return forced;
        return std::nullopt;
    }
    if (!dfs(0, detail::PairBits(P))) return std::nullopt;
    LandmarkSet out = forced;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) out.push_back(groups[gi][pick[gi]]);
    return out;
}

inline LandmarkSet greedy_resolving(const DistanceMatrix& dm) {
    const std::size_t n = dm.size();
    LandmarkSet S;
    std::vector<std::vector<VertexId>> classes{{}};
    for (VertexId v = 0; v < n; ++v) classes[0].push_back(v);
    auto open_pairs = [](const std::vector<std::vector<VertexId>>& cs) {
        std::size_t total = 0;
        for (const auto& c : cs) total += c.size() * (c.size() - 1) / 2;
        return total;
    };
    auto refine = [&](const std::vector<std::vector<VertexId>>& cs, VertexId s) {
        std::vector<std::vector<VertexId>> out;
        const auto r = dm.row(s);
        for (const auto& c : cs) {
            std::map<Hops, std::vector<VertexId>> split;
            for (VertexId v : c) split[r[v]].push_back(v);
            for (auto& [_, part] : split) out.push_back(std::move(part));
        }
        return out;
    };
    while (open_pairs(classes) > 0) {
        std::size_t best_left = open_pairs(classes);
        std::optional<VertexId> best;
        for (VertexId s = 0; s < n; ++s) {
            if (std::find(S.begin(), S.end(), s) != S.end()) continue;
            const std::size_t left = open_pairs(refine(classes, s));
            if (left < best_left) {
                best_left = left;
                best = s;
            }
        }
        if (!best) throw InternalError("greedy_resolving: no progress");
        S.push_back(*best);
        classes = refine(classes, *best);
    }
    std::sort(S.begin(), S.end());
    return S;
}

}  // namespace gudg
