#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "ftreach/cli_app.hpp"
#include "ftreach/dual_oracle.hpp"
#include "ftreach/instances.hpp"
#include "ftreach/serialize.hpp"
#include "ftreach/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace ftreach;
using namespace ftreach::test;

namespace {

const Providers kBaseline{};

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("ftreach_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int &counter() {
        static int value = 0;
        return value;
    }
    std::string file(const std::string &name) const { return (path / name).string(); }
};

void put(const std::string &path, const std::string &text) {
    std::ofstream os(path, std::ios::binary);
    os << text;
}

std::string slurp(const std::string &path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream buf;
    buf << is.rdbuf();
    return buf.str();
}

// Round-trip a structure through its text form and require identical
// answers on an exhaustive two-failure query sweep.
void require_round_trip(const AnyStructure &structure, const DiGraph &g,
                        const PairList &pairs, FailMode mode, int k) {
    std::ostringstream os;
    save_structure(os, structure);
    std::istringstream is(os.str());
    AnyStructure loaded = load_structure(is);
    CHECK(loaded.kind == structure.kind);
    CHECK(loaded.words() == structure.words());

    std::ostringstream os2;
    save_structure(os2, loaded);
    CHECK(os.str() == os2.str());

    OracleFn fn = [&](VertexPair p, const std::vector<EdgeId> &edge_ids,
                      const std::vector<VertexId> &vertex_ids) {
        EdgeList edges;
        for (EdgeId e : edge_ids) edges.push_back(g.edge(e));
        bool got = loaded.query(p, edges, vertex_ids);
        bool want = structure.query(p, edges, vertex_ids);
        CHECK(got == want);
        return got;
    };
    check_oracle(fn, g, pairs, mode, k);
}

} // namespace

TEST_CASE("round-trip every structure kind") {
    DiGraph g = gen_random_digraph(8, 0.35, 5);
    PairList pairs{{0, 7}, {3, 2}, {5, 5}, {1, 6}};

    AnyStructure skel;
    skel.kind = "pair-skel";
    skel.skeletons = build_stored_skeletons(g, pairs);
    require_round_trip(skel, g, pairs, FailMode::Edge, 2);

    AnyStructure dual;
    dual.kind = "dual-oracle";
    dual.dual = build_dual_oracle(g, pairs, kBaseline);
    require_round_trip(dual, g, pairs, FailMode::Edge, 2);

    AnyStructure vfo;
    vfo.kind = "ftro1-vertex";
    vfo.vertex_oracle = build_vertex_ftro(g, pairs);
    require_round_trip(vfo, g, pairs, FailMode::Vertex, 1);

    AnyStructure efo;
    efo.kind = "ftro1-edge";
    efo.edge_oracle = build_edge_ftro(g, pairs);
    require_round_trip(efo, g, pairs, FailMode::Edge, 1);
}

TEST_CASE("structure queries reject the wrong failure mode") {
    DiGraph g = diamond();
    PairList pairs{{0, 3}};

    AnyStructure dual;
    dual.kind = "dual-oracle";
    dual.dual = build_dual_oracle(g, pairs, kBaseline);
    CHECK_THROWS_AS(dual.query({0, 3}, {}, {1}), input_error);

    AnyStructure efo;
    efo.kind = "ftro1-edge";
    efo.edge_oracle = build_edge_ftro(g, pairs);
    CHECK_THROWS_AS(efo.query({0, 3}, {{0, 1}, {0, 2}}, {}), input_error);
    CHECK(efo.query({0, 3}, {}, {})); // base reachability

    AnyStructure vfo;
    vfo.kind = "ftro1-vertex";
    vfo.vertex_oracle = build_vertex_ftro(g, pairs);
    CHECK_THROWS_AS(vfo.query({0, 3}, {}, {1, 2}), input_error);
    CHECK(vfo.query({0, 3}, {}, {1}));
    CHECK_THROWS_AS(vfo.query({1, 3}, {}, {2}), input_error);
}

TEST_CASE("round-trip stored subgraph kinds") {
    DiGraph g = gen_random_digraph(7, 0.3, 11);
    for (const std::string &kind : {"dual-preserver", "k-ftrs"}) {
        AnyStructure s;
        s.kind = kind;
        StoredSubgraph stored;
        stored.kind = kind;
        stored.k = 3;
        stored.ell = 5;
        stored.sampled = {0, 2, 4};
        stored.sub = g;
        s.stored = std::move(stored);
        std::ostringstream os;
        save_structure(os, s);
        std::istringstream is(os.str());
        AnyStructure loaded = load_structure(is);
        CHECK(loaded.kind == kind);
        CHECK(loaded.stored->k == 3);
        CHECK(loaded.stored->ell == 5);
        CHECK(loaded.stored->sampled == std::vector<VertexId>{0, 2, 4});
        CHECK(loaded.stored->sub.format_string() == g.format_string());
    }
}

TEST_CASE("vertex-failure query lines against a saved oracle") {
    TempDir dir;
    auto graph = dir.file("g.txt");
    auto pairs = dir.file("p.txt");
    auto structure = dir.file("vfo.ftreach");
    auto queries = dir.file("q.txt");
    DiGraph loopy = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {2, 1}});
    put(graph, loopy.format_string());
    put(pairs, "0 3\n");
    REQUIRE(run_command({"build", "--structure", "ftro1-vertex", "--graph", graph,
                         "--pairs", pairs, "--out", structure}) == 0);
    put(queries, "0 3 V 1\n0 3 V 2\n0 3 E\n");
    std::ostringstream captured;
    auto *old = std::cout.rdbuf(captured.rdbuf());
    int rc = run_command({"query", "--structure", "ftro1-vertex", "--in", structure,
                          "--queries", queries});
    std::cout.rdbuf(old);
    CHECK(rc == 0);
    CHECK(captured.str() == "0\n0\n1\n");
}

TEST_CASE("preserver builds can export their subgraph as a plain graph file") {
    TempDir dir;
    auto graph = dir.file("g.txt");
    auto pairs = dir.file("p.txt");
    put(graph, diamond().format_string());
    put(pairs, "0 3\n");
    auto out = dir.file("pres.ftreach");
    auto out_graph = dir.file("pres.txt");
    REQUIRE(run_command({"build", "--structure", "dual-preserver", "--graph", graph,
                         "--pairs", pairs, "--out", out, "--out-graph", out_graph}) == 0);
    DiGraph kept = DiGraph::parse_string(slurp(out_graph));
    CHECK(kept.n() == 4);
    CHECK(kept.m() == 4); // both routes are essential under one failure
}

TEST_CASE("FTREACH_BUDGET caps exhaustive verification") {
    TempDir dir;
    auto graph = dir.file("g.txt");
    auto pairs = dir.file("p.txt");
    put(graph, diamond().format_string());
    put(pairs, "0 3\n");
    setenv("FTREACH_BUDGET", "2", 1);
    CHECK(run_command({"verify", "--structure", "pair-skel", "--graph", graph, "--pairs",
                       pairs, "--exhaustive"}) == 2);
    unsetenv("FTREACH_BUDGET");
    CHECK(run_command({"verify", "--structure", "pair-skel", "--graph", graph, "--pairs",
                       pairs, "--exhaustive"}) == 0);
}

TEST_CASE("gen emits the expected hard2 header") {
    TempDir dir;
    auto graph = dir.file("g.txt");
    auto pairs = dir.file("p.txt");
    int rc = run_command({"gen", "--family", "hard2", "--N", "2", "--r", "2",
                          "--out-graph", graph, "--out-pairs", pairs});
    CHECK(rc == 0);
    std::string text = slurp(graph);
    CHECK(text.substr(0, 5) == "8 12\n");
    CHECK(slurp(pairs) == "0 5\n0 7\n2 5\n2 7\n");
}

TEST_CASE("build, query, and verify a dual oracle end to end") {
    TempDir dir;
    auto graph = dir.file("g.txt");
    auto pairs = dir.file("p.txt");
    auto structure = dir.file("oracle.ftreach");
    auto queries = dir.file("q.txt");
    REQUIRE(run_command({"gen", "--family", "hard2", "--N", "2", "--r", "2",
                         "--out-graph", graph, "--out-pairs", pairs}) == 0);
    REQUIRE(run_command({"build", "--structure", "dual-oracle", "--graph", graph,
                         "--pairs", pairs, "--out", structure}) == 0);
    CHECK(slurp(structure).rfind("FTREACH v1 dual-oracle\n", 0) == 0);

    put(queries, "0 7 E 0 1 6 7\n0 7 E 0 4 2 3\n0 7 E\n# comment line\n");
    {
        std::ostringstream captured;
        auto *old = std::cout.rdbuf(captured.rdbuf());
        int rc = run_command({"query", "--structure", "dual-oracle", "--in", structure,
                              "--queries", queries});
        std::cout.rdbuf(old);
        CHECK(rc == 0);
        CHECK(captured.str() == "0\n1\n1\n");
    }

    CHECK(run_command({"verify", "--structure", "dual-oracle", "--graph", graph,
                       "--pairs", pairs, "--k", "2", "--exhaustive"}) == 0);
}

TEST_CASE("verify flags a broken subgraph input") {
    TempDir dir;
    auto graph = dir.file("g.txt");
    auto pairs = dir.file("p.txt");
    put(graph, diamond().format_string());
    put(pairs, "0 3\n");
    CHECK(run_command({"verify", "--structure", "pair-skel", "--graph", graph, "--pairs",
                       pairs, "--exhaustive"}) == 0);
    CHECK(run_command({"verify", "--structure", "ftro1-vertex", "--graph", graph,
                       "--pairs", pairs}) == 0);
    CHECK(run_command({"verify", "--structure", "ftro1-edge", "--graph", graph, "--pairs",
                       pairs}) == 0);
    CHECK(run_command({"verify", "--structure", "dual-preserver", "--graph", graph,
                       "--pairs", pairs}) == 0);
    CHECK(run_command({"verify", "--structure", "k-ftrs", "--graph", graph, "--pairs",
                       pairs, "--k", "2"}) == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_command({}) == 2);
    CHECK(run_command({"bogus"}) == 2);
    CHECK(run_command({"gen", "--family", "nope"}) == 2);
    TempDir dir;
    auto graph = dir.file("g.txt");
    put(graph, "2 1\n0 0\n"); // self loop: parse error
    auto pairs = dir.file("p.txt");
    put(pairs, "0 1\n");
    CHECK(run_command({"build", "--structure", "dual-oracle", "--graph", graph, "--pairs",
                       pairs, "--out", dir.file("x")}) == 2);
}

TEST_CASE("bench CSV is deterministic and well-formed") {
    TempDir dir;
    auto csv1 = dir.file("a.csv");
    auto csv2 = dir.file("b.csv");
    std::vector<std::string> cmd{"bench",  "--suite",     "scaling", "--family",
                                 "hard2",  "--sizes",     "2x2,3x2", "--seed",
                                 "9",      "--structures", "dual-oracle,ftro1-vertex"};
    auto with_out = [&](const std::string &out) {
        auto c = cmd;
        c.push_back("--out");
        c.push_back(out);
        return c;
    };
    REQUIRE(run_command(with_out(csv1)) == 0);
    REQUIRE(run_command(with_out(csv2)) == 0);
    std::string a = slurp(csv1);
    CHECK(a == slurp(csv2));
    CHECK(a.rfind("structure,n,m,pairs,k,words,edges_kept,build_ms,seed\n", 0) == 0);
    CHECK(std::count(a.begin(), a.end(), '\n') == 5); // header + 2 sizes x 2 structures
}
