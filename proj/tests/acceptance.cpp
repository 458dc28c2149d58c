// Acceptance run: one PASS/FAIL line per criterion.
#include <CLI11.hpp>

#include <chrono>
#include <deque>
#include <functional>
#include <iostream>

#include "test_util.hpp"

using namespace gudg;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass;
    std::string detail;
};

// Plain queue BFS from a source set, kept separate from the library's traversal.
std::vector<long> hops(const Graph& g, const std::vector<VertexId>& src) {
    std::vector<long> d(g.size(), -1);
    std::deque<VertexId> q;
    for (VertexId s : src) {
        d[s] = 0;
        q.push_back(s);
    }
    while (!q.empty()) {
        const VertexId u = q.front();
        q.pop_front();
        for (VertexId w : g.neighbors(u))
            if (d[w] < 0) {
                d[w] = d[u] + 1;
                q.push_back(w);
            }
    }
    return d;
}

std::vector<testutil::Instance> full_corpus() {
    std::vector<testutil::Instance> out;
    for (const char* s : {"xyz", "xyz_long", "unsat"}) out.push_back(testutil::load_instance(s));
    for (const auto& s : testutil::random_stems()) out.push_back(testutil::load_instance(s));
    return out;
}

Assembly assembled(const testutil::Instance& inst) { return run_pipeline(inst.psi, inst.d).assembly; }

Outcome variable_distances() {
    std::size_t copies = 0, rows = 0, skipped = 0, bad = 0;
    double worst = 0;
    std::string first;
    for (const auto& inst : full_corpus()) {
        const auto a = assembled(inst);
        for (std::size_t x = 0; x < a.variable_count; ++x) {
            const auto t0 = Clock::now();
            const auto& copy = a.variable_copy(x);
            std::array<std::vector<long>, 3> from;
            for (int i = 0; i < 3; ++i) from[i] = hops(a.g.graph, {copy.at("a" + std::to_string(i + 1))});
            std::set<std::string> seen;
            std::size_t here = 0;
            for (const auto& r : kVariableDistances) {
                if (!seen.insert(r.name).second) continue;
                auto it = copy.vertices.find(r.name);
                if (it == copy.vertices.end()) {
                    ++skipped;
                    continue;
                }
                ++here;
                for (int i = 0; i < 3; ++i)
                    if (from[i][it->second] != r.d[i]) {
                        ++bad;
                        if (first.empty()) first = copy.id + "/" + r.name;
                    }
            }
            if (copy.kind == GadgetKind::G3v && here != 22) {
                ++bad;
                if (first.empty()) first = copy.id + " has " + std::to_string(here) + " rows";
            }
            rows += here;
            ++copies;
            worst = std::max(worst, seconds_since(t0));
        }
    }
    const bool pass = bad == 0 && worst < 1.0 && copies > 0;
    return {pass, std::to_string(copies) + " copies, " + std::to_string(rows) + " rows checked, " +
                      std::to_string(skipped) + " rows absent from two-pair copies, " + std::to_string(bad) +
                      " mismatches" + (first.empty() ? "" : " (first " + first + ")") +
                      ", slowest copy " + std::to_string(worst) + " s (limit 1 s)"};
}

Outcome clause_distances() {
    const auto t0 = Clock::now();
    const auto a = assembled(testutil::load_instance("xyz"));
    const auto forced = forced_landmarks(a, ForcedChoice::ASide);
    std::size_t three = 0, rows = 0, bad = 0;
    std::vector<std::string> misses;
    for (std::size_t c = 0; c < a.clause_count; ++c) {
        const auto& copy = a.clause_copy(c);
        if (copy.kind != GadgetKind::G3c) continue;
        ++three;
        std::array<std::vector<long>, 3> col;
        for (int k = 1; k <= 3; ++k) {
            const std::size_t x = a.clause_pair_var[c].at(k);
            col[k - 1] = hops(a.g.graph, {forced.begin() + 3 * x, forced.begin() + 3 * x + 3});
        }
        for (const auto& r : kClauseDistances) {
            ++rows;
            const VertexId v = copy.at(r.name);
            bool ok = true;
            std::string got;
            for (int k = 0; k < 3; ++k) {
                ok &= col[k][v] == r.d[k];
                got += (k ? "," : "") + std::to_string(col[k][v]);
            }
            if (!ok) {
                ++bad;
                misses.push_back(copy.id + "/" + r.name + " got (" + got + ")");
            }
        }
    }
    const double dt = seconds_since(t0);
    std::string d = std::to_string(three) + " three-literal clause copies, " + std::to_string(kClauseDistances.size()) +
                    " rows each, " + std::to_string(rows - bad) + "/" +
                    std::to_string(rows) + " match, " + std::to_string(dt) + " s (limit 5 s)";
    for (std::size_t i = 0; i < std::min<std::size_t>(misses.size(), 3); ++i) d += (i ? "; " : "; mismatches: ") + misses[i];
    return {three > 0 && bad == 0 && dt < 5.0, d};
}

// Brute-force embedding check: every pair for the disk condition, every third vertex for Gabriel.
std::string brute_gudg(const EmbeddedGraph& g, std::int64_t margin) {
    const std::int64_t r2 = kScale * kScale, far2 = (kScale + margin) * (kScale + margin);
    const std::size_t n = g.size();
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) {
            const auto d2 = dist2(g.pos[u], g.pos[v]);
            const bool e = g.graph.has_edge(u, v);
            if (e && d2 > r2) return "long edge";
            if (!e && d2 < far2) return "close non-edge";
        }
    for (const Edge& e : g.graph.edges())
        for (VertexId w = 0; w < n; ++w) {
            if (w == e.u || w == e.v) continue;
            if (dist2(g.pos[e.u], g.pos[w]) + dist2(g.pos[w], g.pos[e.v]) <= dist2(g.pos[e.u], g.pos[e.v]))
                return "non-Gabriel edge";
        }
    return {};
}

Outcome gudg_validity() {
    std::size_t n = 0, bad = 0, maxdeg = 0, biggest = 0;
    std::string first;
    for (const auto& inst : full_corpus()) {
        const auto a = assembled(inst);
        ++n;
        const auto rep = is_gudg_embedding(a.g, 10);
        const auto brute = brute_gudg(a.g, 10);
        const std::size_t deg = a.g.graph.max_degree();
        maxdeg = std::max(maxdeg, deg);
        biggest = std::max(biggest, a.g.size());
        if (!rep.ok() || !brute.empty() || deg > 6) {
            ++bad;
            if (first.empty()) first = inst.name + (rep.ok() ? "" : " " + rep.str()) + " " + brute;
        }
    }
    return {n >= 20 && bad == 0, std::to_string(n) + " instances, margin 0.001, " + std::to_string(bad) +
                                     " invalid, max degree " + std::to_string(maxdeg) + ", largest " +
                                     std::to_string(biggest) + " vertices" + (first.empty() ? "" : "; " + first)};
}

Outcome lemma_suites() {
    std::size_t n = 0, checks = 0, bad = 0;
    std::string first;
    for (const auto& inst : full_corpus()) {
        const auto a = assembled(inst);
        ++n;
        for (const auto& r : {lemma_min3(a), lemma_resolve_all(a, ForcedChoice::ASide),
                              lemma_resolve_all(a, ForcedChoice::BSide), lemma_T1T2(a)}) {
            checks += r.checks.size();
            bad += r.failed();
            if (!r.ok() && first.empty()) first = inst.name + ": " + r.text();
        }
    }
    return {bad == 0, std::to_string(n) + " instances, both forced flags, " + std::to_string(checks) + " checks, " +
                          std::to_string(bad) + " failed" + (first.empty() ? "" : "; " + first)};
}

Outcome theorem() {
    const auto t0 = Clock::now();
    std::size_t random = 0, total = 0, agree = 0, checks = 0, bad = 0, too_big = 0;
    std::string first;
    std::vector<testutil::Instance> list{testutil::load_instance("xyz"), testutil::load_instance("unsat")};
    for (const auto& s : testutil::random_stems()) list.push_back(testutil::load_instance(s));
    for (const auto& inst : list) {
        const auto a = assembled(inst);
        if (a.variable_count > kMaxTheoremVariables) {
            ++too_big;
            continue;
        }
        random += inst.name.rfind("random/", 0) == 0;
        ++total;
        const auto r = theorem_equivalence(a);
        checks += r.checks.size();
        bad += r.failed();
        bool agreed = true;
        for (const auto& c : r.checks)
            if (c.name == "restricted-search-agrees") agreed = c.pass;
        agree += agreed;
        if (!r.ok() && first.empty()) first = inst.name + ": " + r.text();
    }
    return {random >= 20 && too_big == 0 && bad == 0 && agree == total,
            std::to_string(total) + " instances (" + std::to_string(random) + " random, xyz, unsat), agreement " +
                std::to_string(agree) + "/" + std::to_string(total) + ", " + std::to_string(checks) + " checks, " +
                std::to_string(bad) + " failed, " + std::to_string(seconds_since(t0)) + " s" +
                (first.empty() ? "" : "; " + first)};
}

// Smallest k by trying every k-subset; the first set in lexicographic order.
std::pair<std::size_t, std::vector<VertexId>> exhaustive_md(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<std::vector<long>> d(n);
    for (VertexId v = 0; v < n; ++v) d[v] = hops(g, {v});
    auto resolving = [&](const std::vector<VertexId>& S) {
        std::set<std::vector<long>> codes;
        for (VertexId v = 0; v < n; ++v) {
            std::vector<long> c;
            for (VertexId s : S) c.push_back(d[s][v]);
            if (!codes.insert(c).second) return false;
        }
        return true;
    };
    if (n <= 1) return {0, {}};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
        do {
            std::vector<VertexId> S;
            for (VertexId v = 0; v < n; ++v)
                if (pick[v]) S.push_back(v);
            if (resolving(S)) return {k, S};
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return {n, {}};
}

Outcome solver_oracle() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<std::size_t> size(2, 12);
    std::uniform_real_distribution<double> dens(0.12, 0.7);
    std::size_t bad = 0, sum_k = 0;
    std::string first;
    for (int rep = 0; rep < 200; ++rep) {
        const auto g = testutil::random_connected_graph(rng, size(rng), dens(rng));
        const auto want = exhaustive_md(g);
        const auto got = metric_dimension_exact(g);
        sum_k += got.k;
        // witness verified by the oracle's own distance codes
        std::set<std::vector<long>> codes;
        for (VertexId v = 0; v < g.size(); ++v) {
            std::vector<long> c;
            for (VertexId s : got.set) c.push_back(hops(g, {s})[v]);
            codes.insert(c);
        }
        const bool ok = got.k == want.first && got.set.size() == got.k && codes.size() == g.size();
        if (!ok) {
            ++bad;
            if (first.empty())
                first = "graph " + std::to_string(rep) + ": k " + std::to_string(got.k) + " vs " + std::to_string(want.first);
        }
    }
    const double dt = seconds_since(t0);
    return {bad == 0 && dt < 60.0, "200 graphs of <= 12 vertices, " + std::to_string(bad) + " disagreements, mean k " +
                                       std::to_string(double(sum_k) / 200) + ", " + std::to_string(dt) +
                                       " s (limit 60 s)" + (first.empty() ? "" : "; " + first)};
}

bool models_exist(const SatInstance& psi) {
    const std::size_t n = psi.variables.size();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        bool all = true;
        for (const auto& c : psi.clauses) {
            bool any = false;
            for (const auto& l : c.lits) any |= bool((m >> l.var) & 1) == l.positive;
            all &= any;
            if (!all) break;
        }
        if (all) return true;
    }
    return false;
}

Outcome preprocessing() {
    std::mt19937_64 rng(7070);
    std::size_t done = 0, bad = 0, skipped = 0, splits = 0, longest_in = 0, most_vars = 0;
    std::string first;
    while (done < 100) {
        const auto psi = random_instance(rng, 2 + rng() % 4);
        const auto found = compact_drawing(rng, clause_variable_graph(psi).graph);
        if (!found) {
            ++skipped;
            continue;
        }
        const Drawing& d = *found;
        for (std::size_t k = 0; k < d.paths.size(); ++k) longest_in = std::max(longest_in, d.path_length(k));
        const auto r = shorten_edge_paths(psi, d);
        splits += r.splits;
        most_vars = std::max(most_vars, r.psi.variables.size());
        std::size_t longest = 0;
        for (std::size_t k = 0; k < r.drawing.paths.size(); ++k) longest = std::max(longest, r.drawing.path_length(k));
        const bool ok = longest <= 2 && validate_instance(r.psi).ok() &&
                        validate_drawing(clause_variable_graph(r.psi).graph, r.drawing).ok() &&
                        models_exist(psi) == models_exist(r.psi);
        if (!ok) {
            ++bad;
            if (first.empty()) first = "instance " + std::to_string(done);
        }
        ++done;
    }
    return {bad == 0, "100 instances (" + std::to_string(skipped) + " undrawable skipped), longest input path " +
                          std::to_string(longest_in) + ", " + std::to_string(splits) + " splits, up to " +
                          std::to_string(most_vars) + " variables after shortening, " +
                          std::to_string(bad) + " failed" + (first.empty() ? "" : "; " + first)};
}

// Energy of cheapest paths by Floyd-Warshall over |uv|^alpha, Gabriel edges by triple scan.
double stretch_oracle(const std::vector<Point2>& pts, double alpha) {
    const std::size_t n = pts.size();
    const double inf = std::numeric_limits<double>::infinity();
    auto cost = [&](VertexId u, VertexId v) {
        return std::pow(std::sqrt(double(dist2(pts[u], pts[v]))) / double(kScale), alpha);
    };
    std::vector<std::vector<double>> a(n, std::vector<double>(n, inf)), b = a;
    for (VertexId u = 0; u < n; ++u) {
        a[u][u] = b[u][u] = 0;
        for (VertexId v = 0; v < n; ++v) {
            if (u == v || dist2(pts[u], pts[v]) > kScale * kScale) continue;
            a[u][v] = cost(u, v);
            bool gab = true;
            for (VertexId w = 0; w < n && gab; ++w)
                if (w != u && w != v) gab = dist2(pts[u], pts[w]) + dist2(pts[w], pts[v]) > dist2(pts[u], pts[v]);
            if (gab) b[u][v] = a[u][v];
        }
    }
    for (auto* m : {&a, &b})
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) (*m)[i][j] = std::min((*m)[i][j], (*m)[i][k] + (*m)[k][j]);
    double worst = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::isfinite(a[i][j])) worst = std::max(worst, b[i][j] / a[i][j]);
    return worst;
}

Outcome spanner() {
    std::mt19937_64 rng(4040);
    double worst2 = 0, worst_oracle = 0, worst1 = 1;
    for (int rep = 0; rep < 50; ++rep) {
        const auto pts = testutil::random_points(rng, 40, 4.0);
        const auto udg = udg_from_points(pts);
        const auto gab = subgraph_with_edges(pts.size(), gabriel_edges(udg));
        worst2 = std::max(worst2, std::abs(energy_stretch(udg, gab, 2.0) - 1));
        worst_oracle = std::max(worst_oracle, std::abs(stretch_oracle(pts, 2.0) - 1));
        worst1 = std::max(worst1, energy_stretch(udg, gab, 1.0));
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "50 UDGs of 40 points, max |stretch-1| at alpha 2: %.3g (oracle %.3g, tol 1e-9); alpha 1 max stretch %.6f (reported only)",
                  worst2, worst_oracle, worst1);
    return {worst2 <= 1e-9 && worst_oracle <= 1e-9, buf};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int only = 0;
    app.add_option("--criterion", only, "run one criterion (1-8)")->check(CLI::Range(1, 8));
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<const char*, std::function<Outcome()>>> all{
        {"variable gadget distances", variable_distances}, {"clause gadget distances", clause_distances},
        {"GUDG validity", gudg_validity},   {"lemma suites", lemma_suites},
        {"theorem equivalence", theorem},   {"solver oracle", solver_oracle},
        {"preprocessing", preprocessing},   {"spanner property", spanner},
    };
    bool ok = true;
    for (int i = 1; i <= 8; ++i) {
        if (only && only != i) continue;
        Outcome o;
        try {
            o = all[i - 1].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        ok &= o.pass;
        std::cout << "C" << i << ' ' << (o.pass ? "PASS" : "FAIL") << ' ' << all[i - 1].first << ": " << o.detail << std::endl;
    }
    return ok ? 0 : 1;
}
