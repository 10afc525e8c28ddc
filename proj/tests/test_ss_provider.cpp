#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "ftreach/instances.hpp"
#include "ftreach/ss_provider.hpp"
#include "ftreach/verify.hpp"

using namespace ftreach;
using namespace ftreach::test;

namespace {

// Exhaustive contract check: subgraph answers equal host answers for every
// vertex and every failure set of size <= k.
bool provider_correct(const DiGraph &g, const SsFtrs &f) {
    Subgraph sub(g);
    sub.add_all(f.kept_host_ids);
    std::vector<EdgeId> ids;
    std::function<bool(EdgeId, int)> rec = [&](EdgeId start, int depth) {
        auto blocked = edge_id_mask(g, ids);
        auto host = reach_mask(g, f.root, f.dir, blocked);
        std::vector<char> sub_blocked = blocked;
        for (EdgeId e = 0; e < g.m(); ++e)
            if (!sub.has(e)) sub_blocked[e] = 1;
        if (host != reach_mask(g, f.root, f.dir, sub_blocked)) return false;
        if (depth == f.k) return true;
        for (EdgeId e = start; e < g.m(); ++e) {
            ids.push_back(e);
            bool ok = rec(e + 1, depth + 1);
            ids.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    return rec(0, 0);
}

} // namespace

TEST_CASE("diamond keeps all edges under one failure") {
    DiGraph g = diamond();
    SsFtrs f = ss_ftrs_baseline(g, 0, 1, Dir::FromRoot, kDefaultProviderBudget);
    CHECK(f.pruned);
    CHECK(f.kept_host_ids.size() == 4);
    CHECK(provider_correct(g, f));
}

TEST_CASE("chain with a shortcut keeps the shortcut for k=1") {
    DiGraph g = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    SsFtrs f = ss_ftrs_baseline(g, 0, 1, Dir::FromRoot, kDefaultProviderBudget);
    CHECK(f.kept_host_ids.size() == 3);
    CHECK(provider_correct(g, f));
}

TEST_CASE("plain reachability pruning drops the redundant route") {
    DiGraph g = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    SsFtrs f = ss_ftrs_baseline(g, 0, 0, Dir::FromRoot, kDefaultProviderBudget);
    CHECK(f.kept_host_ids.size() == 2);
    // descending-id pruning drops (0,2) first, so the chain survives
    CHECK(f.kept_host_ids == std::vector<EdgeId>{0, 1});
    CHECK(provider_correct(g, f));
}

TEST_CASE("to-root direction works symmetrically") {
    DiGraph g = chain3();
    SsFtrs f = ss_ftrs_baseline(g, 2, 1, Dir::ToRoot, kDefaultProviderBudget);
    CHECK(provider_correct(g, f));
    SsFtro o = ss_ftro_baseline(g, 2, Dir::ToRoot, kDefaultProviderBudget);
    CHECK_FALSE(o.query(0, {{1, 2}}));
    CHECK(o.query(0, {}));
}

TEST_CASE("oracle answers match brute force exhaustively") {
    for (std::uint64_t seed : {11, 12, 13}) {
        DiGraph g = gen_random_digraph(8, 0.3, seed);
        for (VertexId root : {0, 3}) {
            SsFtro oracle = ss_ftro_baseline(g, root, Dir::FromRoot, kDefaultProviderBudget);
            PairList pairs;
            for (VertexId v = 0; v < g.n(); ++v) pairs.push_back({root, v});
            OracleFn fn = [&](VertexPair p, const std::vector<EdgeId> &failed,
                              const std::vector<VertexId> &) {
                EdgeList edges;
                for (EdgeId e : failed) edges.push_back(g.edge(e));
                return oracle.query(p.t, edges);
            };
            CHECK(check_oracle(fn, g, pairs, FailMode::Edge, 2).pass());
        }
    }
}

TEST_CASE("tiny budget falls back to the whole graph, which stays correct") {
    DiGraph g = gen_random_digraph(9, 0.35, 3);
    SsFtrs f = ss_ftrs_baseline(g, 0, 2, Dir::FromRoot, 1);
    CHECK_FALSE(f.pruned);
    CHECK(f.kept_host_ids.size() == static_cast<std::size_t>(g.m()));
    CHECK(provider_correct(g, f));
}

TEST_CASE("query rejects more than two failures") {
    DiGraph g = diamond();
    SsFtro o = ss_ftro_baseline(g, 0, Dir::FromRoot, kDefaultProviderBudget);
    CHECK(o.query(3, {{0, 1}}));
    CHECK_FALSE(o.query(3, {{0, 1}, {0, 2}}));
    CHECK_THROWS_AS(o.query(3, {{0, 1}, {0, 2}, {1, 3}}), input_error);
}

TEST_CASE("provider selection by name") {
    CHECK(Providers::by_name("baseline").name() == "baseline");
    CHECK(Providers::by_name("whole-graph").name() == "whole-graph");
    CHECK_THROWS_AS(Providers::by_name("bogus"), input_error);
    DiGraph g = diamond();
    SsFtrs f = Providers::by_name("whole-graph").ftrs(g, 0, 2, Dir::FromRoot);
    CHECK(f.kept_host_ids.size() == 4);
}
