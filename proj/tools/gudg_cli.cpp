#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "gudg/gudg.hpp"

namespace fs = std::filesystem;
using namespace gudg;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw InputError("cannot open " + path);
    return is;
}

// Writes to `path`, or stdout when path is empty or "-".
template <class F>
void with_out(const std::string& path, F&& f) {
    if (path.empty() || path == "-") {
        f(std::cout);
        return;
    }
    if (fs::path(path).has_parent_path()) fs::create_directories(fs::path(path).parent_path());
    std::ofstream os(path);
    if (!os) throw InputError("cannot write " + path);
    f(os);
}

SatInstance load_cnf(const std::string& path, bool allow_reserved = true) {
    auto is = open_in(path);
    return read_dimacs(is, {allow_reserved});
}

Drawing load_drawing(const std::string& path, const SatInstance& psi) {
    auto is = open_in(path);
    return read_drawing(is, clause_variable_graph(psi).graph);
}

Drawing drawing_for(const SatInstance& psi, const std::string& path) {
    if (!path.empty()) return load_drawing(path, psi);
    return simple_orthogonal_draw(clause_variable_graph(psi).graph);
}

GraphFile load_graph(const std::string& path) {
    auto is = open_in(path);
    return read_graph_file(is);
}

void print_report(const ValidationReport& rep) {
    for (const auto& v : rep.violations) std::cout << v.kind << ": " << v.detail << '\n';
    std::cout << (rep.ok() ? "ok" : std::to_string(rep.violations.size()) + " violations") << '\n';
}

ForcedChoice parse_choice(const std::string& s) {
    if (s == "a") return ForcedChoice::ASide;
    if (s == "b") return ForcedChoice::BSide;
    throw InputError("forced-landmark flag must be 'a' or 'b'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gabriel unit disk graph reduction toolkit"};
    app.require_subcommand(1);

    std::string cnf, drawing, graph, out, out2, report, json_out, landmarks, tile, forced = "a";
    std::string margin = "0.001";
    std::size_t upper = 0, count = 20, max_vars = 8, min_vars = 3, variables = 4;
    std::uint64_t seed = 1;
    bool labels = false;

    auto* validate = app.add_subcommand("validate-instance", "check the 1-negative planar 3-SAT restrictions");
    validate->add_option("cnf", cnf, "DIMACS file")->required();
    validate->add_option("--drawing", drawing, "also validate this grid drawing");

    auto* draw = app.add_subcommand("draw", "compute an orthogonal grid drawing of the clause-variable graph");
    draw->add_option("cnf", cnf)->required();
    draw->add_option("-o,--out", out, "drawing file (default stdout)");

    auto* shorten = app.add_subcommand("shorten", "split edge paths until all have length <= 2");
    shorten->add_option("cnf", cnf)->required();
    shorten->add_option("drawing", drawing)->required();
    shorten->add_option("-o,--out", out, "shortened DIMACS file")->required();
    shorten->add_option("--drawing-out", out2, "shortened drawing")->required();

    auto* assemble_cmd = app.add_subcommand("assemble", "build H_psi with its embedding");
    assemble_cmd->add_option("cnf", cnf)->required();
    assemble_cmd->add_option("drawing", drawing, "grid drawing (computed when omitted)");
    assemble_cmd->add_option("-o,--out", out, "graph file (default stdout)");
    assemble_cmd->add_option("--landmarks", landmarks, "write the forced landmarks here");
    assemble_cmd->add_option("--forced", forced, "forced-landmark side: a or b");

    auto* check = app.add_subcommand("check-gudg", "validate an embedding as a Gabriel unit disk graph");
    check->add_option("graph", graph)->required();
    check->add_option("--margin", margin, "non-edge margin");

    auto* solve = app.add_subcommand("solve-md", "exact metric dimension");
    solve->add_option("graph", graph)->required();
    solve->add_option("--upper", upper, "give up above this size");
    solve->add_option("--check", landmarks, "only test whether this landmark file resolves the graph");

    auto* verify = app.add_subcommand("verify-reduction", "run every verification suite on the pipeline");
    verify->add_option("cnf", cnf)->required();
    verify->add_option("drawing", drawing, "grid drawing (computed when omitted)");
    verify->add_option("--report", report, "text report file");
    verify->add_option("--json", json_out, "JSON summary file");
    verify->add_option("--margin", margin, "non-edge margin");

    auto* svg = app.add_subcommand("export-svg", "render an embedded graph or a catalog tile");
    svg->add_option("graph", graph, "graph file");
    svg->add_option("--tile", tile, "catalog variant id instead of a graph file");
    svg->add_option("-o,--out", out, "SVG file (default stdout)");
    svg->add_flag("--labels", labels, "print vertex names");

    auto* gen = app.add_subcommand("gen-corpus", "write random valid instances with drawings");
    gen->add_option("--seed", seed);
    gen->add_option("--count", count);
    gen->add_option("--min-variables", min_vars, "fewest variables per formula");
    gen->add_option("--variables", variables, "most variables per formula");
    gen->add_option("--max-vars", max_vars, "bound on variables after shortening");
    gen->add_option("-o,--out", out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        const std::int64_t margin_ticks = parse_decimal(margin);

        if (*validate) {
            const auto psi = load_cnf(cnf);
            auto rep = validate_instance(psi);
            if (!drawing.empty()) {
                const auto d = load_drawing(drawing, psi);
                for (auto& v : validate_drawing(clause_variable_graph(psi).graph, d).violations) rep.violations.push_back(v);
            }
            print_report(rep);
            return rep.ok() ? kOk : kVerifyFailed;
        }
        if (*draw) {
            const auto psi = load_cnf(cnf);
            const auto g = clause_variable_graph(psi).graph;
            const auto d = simple_orthogonal_draw(g);
            with_out(out, [&](std::ostream& os) { write_drawing(os, g, d); });
            return kOk;
        }
        if (*shorten) {
            const auto psi = load_cnf(cnf);
            const auto r = shorten_edge_paths(psi, load_drawing(drawing, psi));
            with_out(out, [&](std::ostream& os) { write_dimacs(os, r.psi); });
            with_out(out2, [&](std::ostream& os) { write_drawing(os, clause_variable_graph(r.psi).graph, r.drawing); });
            std::cout << r.splits << " splits\n";
            return kOk;
        }
        if (*assemble_cmd) {
            const auto psi = load_cnf(cnf);
            const auto p = run_pipeline(psi, drawing_for(psi, drawing));
            const auto& a = p.assembly;
            with_out(out, [&](std::ostream& os) { write_graph_file(os, a.g, a.name_map(), a.copy_records()); });
            if (!landmarks.empty())
                with_out(landmarks, [&](std::ostream& os) { write_landmarks(os, forced_landmarks(a, parse_choice(forced))); });
            std::cerr << a.g.size() << " vertices, " << a.g.graph.edge_count() << " edges, budget " << a.budget << '\n';
            return kOk;
        }
        if (*check) {
            const auto gf = load_graph(graph);
            const auto rep = is_gudg_embedding(gf.g, margin_ticks);
            print_report(rep);
            std::cout << "max degree " << gf.g.graph.max_degree() << '\n';
            return rep.ok() ? kOk : kVerifyFailed;
        }
        if (*solve) {
            const auto gf = load_graph(graph);
            if (!landmarks.empty()) {
                auto is = open_in(landmarks);
                const auto S = read_landmarks(is, gf.g.size());
                const auto bad = is_resolving(distance_matrix(gf.g.graph), S);
                if (bad) std::cout << "unsolved " << bad->first << ' ' << bad->second << '\n';
                else std::cout << "resolving\n";
                return bad ? kVerifyFailed : kOk;
            }
            const auto r = metric_dimension_exact(gf.g.graph, upper ? std::optional<std::size_t>(upper) : std::nullopt);
            if (r.exceeded) {
                std::cout << "exceeded " << upper << '\n';
                return kVerifyFailed;
            }
            std::cout << "k " << r.k << '\n';
            write_landmarks(std::cout, r.set);
            return kOk;
        }
        if (*verify) {
            const auto psi = load_cnf(cnf);
            const auto p = run_pipeline(psi, drawing_for(psi, drawing));
            const auto suites = run_all_suites(p.assembly, margin_ticks);
            bool ok = true;
            std::string text;
            nlohmann::json j = nlohmann::json::array();
            for (const auto& s : suites) {
                ok &= s.ok();
                text += s.text();
                j.push_back(s.json());
            }
            std::cout << text;
            if (!report.empty()) with_out(report, [&](std::ostream& os) { os << text; });
            if (!json_out.empty()) with_out(json_out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
            if (!ok) std::cerr << "verification failed" << (report.empty() ? "" : "; see " + report) << '\n';
            return ok ? kOk : kVerifyFailed;
        }
        if (*svg) {
            if (tile.empty() == graph.empty()) throw InputError("export-svg needs exactly one of a graph file or --tile");
            if (!tile.empty()) {
                const auto& t = catalog().find(tile);
                with_out(out, [&](std::ostream& os) { write_svg(os, t.tile.embedded(), t.tile.g().names, {24.0, 0.12, labels}); });
            } else {
                const auto gf = load_graph(graph);
                std::vector<std::string> names(gf.g.size());
                for (const auto& [v, n] : gf.names) names[v] = n;
                with_out(out, [&](std::ostream& os) { write_svg(os, gf.g, names, {24.0, 0.12, labels}); });
            }
            return kOk;
        }
        if (*gen) {
            std::mt19937_64 rng(seed);
            GenParams prm;
            prm.min_variables = min_vars;
            prm.max_variables = variables;
            prm.max_shortened_variables = max_vars;
            if (min_vars == 0 || min_vars > variables) throw InputError("need 1 <= --min-variables <= --variables");
            fs::create_directories(out);
            std::size_t made = 0;
            while (made < count) {
                auto inst = generate_instance(rng, prm);
                char stem[32];
                std::snprintf(stem, sizeof stem, "rand_%02zu", made);
                const auto g = clause_variable_graph(inst.psi).graph;
                with_out((fs::path(out) / (std::string(stem) + ".cnf")).string(), [&](std::ostream& os) { write_dimacs(os, inst.psi); });
                with_out((fs::path(out) / (std::string(stem) + ".draw")).string(), [&](std::ostream& os) { write_drawing(os, g, inst.drawing); });
                ++made;
            }
            std::cout << made << " instances\n";
            return kOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DrawingError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kVerifyFailed;
    }
    return kUsage;
}
