#include <gtest/gtest.h>

#include <sys/wait.h>

#include "test_util.hpp"

using namespace gudg;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

class Cli : public ::testing::Test {
protected:
    fs::path dir;

    void SetUp() override {
        dir = fs::temp_directory_path() /
              ("gudg_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()) + "_" +
               std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string p(const std::string& name) const { return (dir / name).string(); }

    Outcome run(const std::string& args) const {
        const std::string cmd = std::string(GUDG_CLI) + " " + args + " >" + p("stdout") + " 2>" + p("stderr");
        const int st = std::system(cmd.c_str());
        return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, slurp(p("stdout")), slurp(p("stderr"))};
    }

    static std::string slurp(const std::string& path) {
        std::ifstream is(path, std::ios::binary);
        std::stringstream ss;
        ss << is.rdbuf();
        return ss.str();
    }

    void write(const std::string& name, const std::string& text) const { std::ofstream(p(name)) << text; }
};

std::string cnf(const std::string& stem) { return testutil::corpus(stem + ".cnf"); }
std::string draw(const std::string& stem) { return testutil::corpus(stem + ".draw"); }

}  // namespace

TEST_F(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("no-such-command").code, 2);
    EXPECT_EQ(run("solve-md").code, 2);
    EXPECT_EQ(run("--help").code, 0);
    EXPECT_EQ(run("validate-instance " + p("missing.cnf")).code, 2);
}

TEST_F(Cli, ValidateInstance) {
    EXPECT_EQ(run("validate-instance " + cnf("xyz") + " --drawing " + draw("xyz")).code, 0);
    write("bad.cnf", "p cnf 3 2\n1 2 3 0\n-1 -2 0\n");
    const auto r = run("validate-instance " + p("bad.cnf"));
    EXPECT_EQ(r.code, 1);
    EXPECT_NE((r.out + r.err).find("no-negative"), std::string::npos) << r.out << r.err;
}

TEST_F(Cli, ParseErrorReportsLine) {
    write("broken.cnf", "c fine\np cnf 2 1\n1 zz 0\n");
    const auto r = run("validate-instance " + p("broken.cnf"));
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST_F(Cli, DrawShortenAssembleCheck) {
    ASSERT_EQ(run("draw " + cnf("xyz") + " -o " + p("xyz.draw")).code, 0);
    EXPECT_EQ(run("validate-instance " + cnf("xyz") + " --drawing " + p("xyz.draw")).code, 0);
    const auto s = run("shorten " + cnf("xyz_long") + " " + draw("xyz_long") + " -o " + p("s.cnf") + " --drawing-out " +
                       p("s.draw"));
    ASSERT_EQ(s.code, 0) << s.err;
    EXPECT_EQ(run("validate-instance " + p("s.cnf") + " --drawing " + p("s.draw")).code, 0);
    const auto a = run("assemble " + cnf("xyz") + " " + draw("xyz") + " -o " + p("h.graph") + " --landmarks " + p("f.lm"));
    ASSERT_EQ(a.code, 0) << a.err;
    const auto c = run("check-gudg " + p("h.graph"));
    EXPECT_EQ(c.code, 0) << c.out;
    EXPECT_NE(c.out.find("max degree"), std::string::npos);

    std::ifstream gs(p("h.graph"));
    const auto gf = read_graph_file(gs);
    std::ifstream ls(p("f.lm"));
    EXPECT_EQ(read_landmarks(ls, gf.g.size()).size(), 9u);
    EXPECT_FALSE(gf.copies.empty());
}

TEST_F(Cli, CheckGudgRejectsMissingEdge) {
    write("g.graph", "v 0 0 0\nv 1 1 0\nv 2 5 0\n");
    const auto r = run("check-gudg " + p("g.graph"));
    EXPECT_EQ(r.code, 1);
}

TEST_F(Cli, SolveMdMatchesLibrary) {
    std::mt19937_64 rng(31);
    const auto g = testutil::random_connected_graph(rng, 10, 0.3);
    EmbeddedGraph eg{g, {}};
    for (VertexId v = 0; v < g.size(); ++v) eg.pos.push_back({static_cast<std::int64_t>(v) * 3 * kScale, 0});
    {
        std::ofstream os(p("g.graph"));
        write_graph_file(os, eg);
    }
    const auto r = run("solve-md " + p("g.graph"));
    ASSERT_EQ(r.code, 0) << r.err;
    const auto want = metric_dimension_exact(g);
    EXPECT_EQ(r.out.rfind("k " + std::to_string(want.k) + "\n", 0), 0u) << r.out;
    std::stringstream body(r.out.substr(r.out.find('\n') + 1));
    const auto S = read_landmarks(body, g.size());
    EXPECT_EQ(S.size(), want.k);
    EXPECT_FALSE(is_resolving(distance_matrix(g), S).has_value());

    std::ofstream(p("one.lm")) << "s 0\n";
    const auto chk = run("solve-md " + p("g.graph") + " --check " + p("one.lm"));
    EXPECT_EQ(chk.code, want.k == 1 && !is_resolving(distance_matrix(g), {0}) ? 0 : 1);
    if (want.k > 1) { EXPECT_EQ(run("solve-md " + p("g.graph") + " --upper 1").code, 1); }
}

TEST_F(Cli, VerifyReductionReports) {
    const auto r = run("verify-reduction " + cnf("unsat") + " " + draw("unsat") + " --json " + p("r.json") + " --report " +
                       p("r.txt"));
    std::ifstream js(p("r.json"));
    const auto j = nlohmann::json::parse(js);
    ASSERT_TRUE(j.is_array());
    bool all = true;
    bool theorem = false;
    for (const auto& s : j) {
        all &= s["failed"] == 0;
        theorem |= s["suite"] == "theorem_equivalence";
    }
    EXPECT_TRUE(theorem);
    EXPECT_EQ(r.code, all ? 0 : 1);
    EXPECT_EQ(slurp(p("r.txt")), r.out);

    // three-literal clauses trip the last-strand rows of the clause table
    const auto f = run("verify-reduction " + cnf("xyz") + " " + draw("xyz"));
    EXPECT_EQ(f.code, 1);
    EXPECT_NE(f.out.find("FAIL golden_clause_distances"), std::string::npos);
    EXPECT_NE(f.out.find("theorem_equivalence: "), std::string::npos);
}

TEST_F(Cli, ExportSvg) {
    ASSERT_EQ(run("export-svg --tile B1 -o " + p("b1.svg")).code, 0);
    const auto tile = slurp(p("b1.svg"));
    EXPECT_EQ(tile.rfind("<svg", 0), 0u);
    ASSERT_EQ(run("assemble " + cnf("xyz") + " " + draw("xyz") + " -o " + p("h.graph")).code, 0);
    ASSERT_EQ(run("export-svg " + p("h.graph") + " -o " + p("h.svg")).code, 0);
    EXPECT_EQ(slurp(p("h.svg")).find("stroke-dasharray"), std::string::npos);
    // the middle point blocks the long side, which is drawn dashed
    write("tri.graph", "v 0 0 0\nv 1 1 0\nv 2 0.5 0.1\ne 0 2\ne 1 2\n");
    ASSERT_EQ(run("export-svg " + p("tri.graph") + " -o " + p("tri.svg")).code, 0);
    const auto tri = slurp(p("tri.svg"));
    EXPECT_NE(tri.find("stroke-dasharray"), std::string::npos);
    EXPECT_EQ(std::count(tri.begin(), tri.end(), '\n') - 3, 6);
    EXPECT_EQ(run("export-svg").code, 2);
    EXPECT_EQ(run("export-svg --tile nope").code, 2);
}

TEST_F(Cli, GenCorpusIsDeterministic) {
    ASSERT_EQ(run("gen-corpus --seed 5 --count 3 -o " + p("a")).code, 0);
    ASSERT_EQ(run("gen-corpus --seed 5 --count 3 -o " + p("b")).code, 0);
    for (const char* f : {"rand_00.cnf", "rand_00.draw", "rand_02.cnf", "rand_02.draw"}) {
        const auto x = slurp(p(std::string("a/") + f));
        EXPECT_FALSE(x.empty());
        EXPECT_EQ(x, slurp(p(std::string("b/") + f))) << f;
    }
    EXPECT_EQ(run("validate-instance " + p("a/rand_01.cnf") + " --drawing " + p("a/rand_01.draw")).code, 0);
    EXPECT_EQ(run("gen-corpus --min-variables 5 --variables 3 -o " + p("c")).code, 2);
}
