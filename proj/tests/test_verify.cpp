#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "ftreach/instances.hpp"
#include "ftreach/verify.hpp"

#include <random>

using namespace ftreach;
using namespace ftreach::test;

namespace {

Subgraph whole(const DiGraph &g) {
    Subgraph s(g);
    for (EdgeId e = 0; e < g.m(); ++e) s.add(e);
    return s;
}

} // namespace

TEST_CASE("identity subgraph always passes") {
    DiGraph g = diamond();
    CheckReport report = is_k_ftrs(g, whole(g), {{0, 3}, {1, 3}, {2, 0}}, 2);
    CHECK(report.pass());
    CHECK(report.total_queries == 3 * failure_set_count(g.m(), 2));
}

TEST_CASE("missing diamond edge is caught at the right failure set") {
    DiGraph g = diamond();
    Subgraph h = whole(g);
    h.remove(*g.find_edge(2, 3));
    CheckReport report = is_k_ftrs(g, h, {{0, 3}}, 1);
    REQUIRE_FALSE(report.pass());
    bool found = false;
    for (const Mismatch &mm : report.mismatches)
        if (mm.failed_edges == std::vector<EdgeId>{*g.find_edge(1, 3)}) found = true;
    CHECK(found);
}

TEST_CASE("chain passes under two failures") {
    DiGraph g = chain3();
    CHECK(is_k_ftrs(g, whole(g), {{0, 2}}, 2).pass());
}

TEST_CASE("budget guard demands a sampling request") {
    DiGraph g = gen_random_digraph(12, 0.5, 1);
    CheckOptions opts;
    opts.budget = 10;
    CHECK_THROWS_AS(is_k_ftrs(g, whole(g), {{0, 1}}, 2, opts), budget_error);
    opts.sample = 500;
    CheckReport report = is_k_ftrs(g, whole(g), {{0, 1}}, 2, opts);
    CHECK(report.sampled);
    CHECK(report.pass());
}

TEST_CASE("deletion monotonicity of the brute-force oracle") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        DiGraph g = gen_random_digraph(8, 0.35, 1000 + trial);
        if (g.m() < 2) continue;
        VertexId s = static_cast<VertexId>(rng() % g.n());
        VertexId t = static_cast<VertexId>(rng() % g.n());
        EdgeId a = static_cast<EdgeId>(rng() % g.m());
        EdgeId b = static_cast<EdgeId>(rng() % g.m());
        // a superset of failures never restores reachability
        if (!brute_reachable_edges(g, s, t, {a}))
            CHECK_FALSE(brute_reachable_edges(g, s, t, {a, b}));
        if (brute_reachable_edges(g, s, t, {a, b})) {
            CHECK(brute_reachable_edges(g, s, t, {a}));
            CHECK(brute_reachable_edges(g, s, t, {b}));
        }
    }
}

TEST_CASE("check_oracle flags a lying oracle") {
    DiGraph g = diamond();
    OracleFn liar = [](VertexPair, const std::vector<EdgeId> &, const std::vector<VertexId> &) {
        return true;
    };
    CheckReport report = check_oracle(liar, g, {{0, 3}}, FailMode::Edge, 2);
    CHECK_FALSE(report.pass());

    OracleFn honest = [&](VertexPair p, const std::vector<EdgeId> &failed,
                          const std::vector<VertexId> &) {
        return brute_reachable_edges(g, p.s, p.t, failed);
    };
    CHECK(check_oracle(honest, g, {{0, 3}, {1, 2}}, FailMode::Edge, 2).pass());

    OracleFn honest_v = [&](VertexPair p, const std::vector<EdgeId> &,
                            const std::vector<VertexId> &failed) {
        return brute_reachable_vertices(g, p.s, p.t, failed);
    };
    CHECK(check_oracle(honest_v, g, {{0, 3}}, FailMode::Vertex, 1).pass());
}

TEST_CASE("vertex-failure brute force treats endpoints as fatal") {
    DiGraph g = chain3();
    CHECK_FALSE(brute_reachable_vertices(g, 0, 2, {0}));
    CHECK_FALSE(brute_reachable_vertices(g, 0, 2, {2}));
    CHECK_FALSE(brute_reachable_vertices(g, 0, 2, {1}));
    CHECK(brute_reachable_vertices(g, 0, 0, {1}));
    CHECK_FALSE(brute_reachable_vertices(g, 0, 0, {0}));
}

TEST_CASE("mismatch description format") {
    DiGraph g = diamond();
    Mismatch mm{{0, 3}, {0, 1}, {}, true, false};
    CHECK(describe(mm, g) == "pair 0 3 F (0,1) (1,3) expected 1 got 0");
}
