#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "ftreach/dual_oracle.hpp"
#include "ftreach/instances.hpp"
#include "ftreach/verify.hpp"

#include <atomic>
#include <thread>

using namespace ftreach;
using namespace ftreach::test;

namespace {

const Providers kBaseline{};

OracleFn adapt(const DualOracle &oracle, const DiGraph &g) {
    return [&](VertexPair p, const std::vector<EdgeId> &failed,
               const std::vector<VertexId> &) {
        EdgeList edges;
        for (EdgeId e : failed) edges.push_back(g.edge(e));
        return oracle.query(p, edges);
    };
}

} // namespace

TEST_CASE("aux graph on fixtures") {
    DiGraph g = diamond();
    AuxGraph aux = aux_graph(build_pair_skeleton(g, 0, 3), 10);
    CHECK(aux.graph.n() == 4);
    CHECK(aux.path_edge_count == 4);
    CHECK(aux.aux_edge_count == 0);

    DiGraph c = chain3();
    aux = aux_graph(build_pair_skeleton(c, 0, 2), 1);
    CHECK(aux.graph.n() == 2);
    CHECK(aux.graph.m() == 0);

    DiGraph x = cross6();
    aux = aux_graph(build_pair_skeleton(x, 0, 5), 2);
    REQUIRE(aux.aux_of.count(1));
    REQUIRE(aux.aux_of.count(4));
    CHECK(aux.graph.find_edge(aux.aux_of.at(1), aux.aux_of.at(4)).has_value());
    CHECK(aux.aux_edge_count == 1);
}

TEST_CASE("slack level covers easy fixtures outright") {
    DiGraph g = diamond();
    DualOracleSlack level = build_dual_oracle_slack(g, {{0, 3}}, kBaseline);
    CHECK(level.covered == PairList{{0, 3}});
    CHECK(query_slack(level, {0, 3}, {{0, 1}}));
    CHECK_FALSE(query_slack(level, {0, 3}, {{0, 1}, {2, 3}}));
    CHECK_FALSE(query_slack(level, {0, 3}, {{0, 1}, {0, 2}}));
    CHECK_THROWS_AS(query_slack(level, {1, 3}, {}), input_error);

    DiGraph c = chain3();
    level = build_dual_oracle_slack(c, {{0, 2}}, kBaseline);
    CHECK(level.covered == PairList{{0, 2}});
    CHECK_FALSE(query_slack(level, {0, 2}, {{0, 1}}));

    DiGraph x = cross6();
    level = build_dual_oracle_slack(x, {{0, 5}}, kBaseline);
    CHECK(query_slack(level, {0, 5}, {{1, 2}, {3, 4}}));
}

TEST_CASE("hard instance pairs are all short-strand covered") {
    HardInstance inst = gen_hard_dual(2, 2);
    DualOracleSlack level = build_dual_oracle_slack(inst.graph, inst.pairs, kBaseline);
    CHECK(level.covered.size() == 4);
}

TEST_CASE("full oracle on the hard instance") {
    HardInstance inst = gen_hard_dual(2, 2);
    DualOracle oracle = build_dual_oracle(inst.graph, inst.pairs, kBaseline);
    CHECK_FALSE(oracle.query({0, 7}, {{0, 1}, {6, 7}}));
    CHECK(oracle.query({0, 7}, {{0, 4}, {2, 3}}));
    CHECK(oracle.query({0, 7}, {}));
    CHECK_THROWS_AS(oracle.query({3, 3}, {}), input_error);
    CHECK(check_oracle(adapt(oracle, inst.graph), inst.graph, inst.pairs, FailMode::Edge, 2)
              .pass());
}

TEST_CASE("oracle equals brute force exhaustively on random graphs") {
    for (std::uint64_t seed = 200; seed < 212; ++seed) {
        DiGraph g = gen_random_digraph(9, seed % 2 ? 0.2 : 0.35, seed);
        PairList pairs;
        for (VertexId s = 0; s < g.n() && pairs.size() < 5; ++s)
            for (VertexId t = 0; t < g.n() && pairs.size() < 5; ++t)
                if (s != t) pairs.push_back({s, t});
        DualOracle oracle = build_dual_oracle(g, pairs, kBaseline);
        CHECK(check_oracle(adapt(oracle, g), g, pairs, FailMode::Edge, 2).pass());
    }
}

TEST_CASE("exhaustive two-failure equivalence at n = 16") {
    DiGraph g = gen_random_digraph(16, 0.22, 2024);
    PairList pairs;
    for (VertexId s = 0; s < g.n() && pairs.size() < 12; ++s)
        for (VertexId t = 0; t < g.n() && pairs.size() < 12; ++t)
            if (s != t && (s + t) % 3 == 0) pairs.push_back({s, t});
    DualOracle oracle = build_dual_oracle(g, pairs, kBaseline);
    CHECK(check_oracle(adapt(oracle, g), g, pairs, FailMode::Edge, 2).pass());
}

TEST_CASE("trivial and unreachable pairs answer constantly") {
    DiGraph g = chain3();
    DualOracle oracle = build_dual_oracle(g, {{1, 1}, {2, 0}, {0, 2}}, kBaseline);
    CHECK(oracle.query({1, 1}, {{0, 1}, {1, 2}}));
    CHECK_FALSE(oracle.query({2, 0}, {}));
    CHECK(oracle.query({0, 2}, {}));
}

TEST_CASE("slack coverage stays above three fifths at every level") {
    for (std::uint64_t seed = 300; seed < 306; ++seed) {
        DiGraph g = gen_random_digraph(10, 0.35, seed);
        PairList pairs;
        for (VertexId s = 0; s < g.n(); ++s)
            for (VertexId t = 0; t < g.n(); ++t)
                if (s != t && pairs.size() < 8) pairs.push_back({s, t});
        DualOracle oracle = build_dual_oracle(g, pairs, kBaseline);
        for (std::size_t li = 0; li < oracle.lifted.levels.size(); ++li) {
            std::size_t input = oracle.lifted.level_inputs[li];
            std::size_t covered = oracle.lifted.level_covered[li];
            CHECK(5 * covered >= 3 * input);
        }
    }
}

TEST_CASE("every flagged aux edge has a replayable off-strand witness") {
    for (std::uint64_t seed = 600; seed < 610; ++seed) {
        DiGraph g = gen_random_digraph(9, 0.3, seed);
        for (VertexId t = 1; t < g.n(); ++t) {
            if (!reachable(g, 0, t)) continue;
            PairSkeleton sk = build_pair_skeleton(g, 0, t);
            for (int L : {1, 2, 4}) {
                AuxGraph aux = aux_graph(sk, L);
                std::vector<char> blocked(g.m(), 1);
                for (EdgeId e = 0; e < g.m(); ++e)
                    if (sk.kept.has(e)) blocked[e] = 0;
                for (EdgeId e : sk.strands.p1_edges) blocked[e] = 1;
                for (EdgeId e : sk.strands.p2_edges) blocked[e] = 1;
                for (EdgeId ae = 0; ae < aux.graph.m(); ++ae) {
                    if (!aux.off_strand[ae]) continue;
                    const Edge &e = aux.graph.edge(ae);
                    CHECK(reach_mask(g, aux.origin[e.tail], Dir::FromRoot,
                                     blocked)[aux.origin[e.head]]);
                }
            }
        }
    }
}

TEST_CASE("lifted query matches the owning slack level directly") {
    DiGraph g = gen_random_digraph(10, 0.3, 777);
    PairList pairs;
    for (VertexId s = 0; s < g.n(); ++s)
        for (VertexId t = 0; t < g.n(); ++t)
            if (s != t && pairs.size() < 7) pairs.push_back({s, t});
    DualOracle oracle = build_dual_oracle(g, pairs, kBaseline);
    for (const auto &[pair, where] : oracle.lifted.route) {
        auto [kind, idx] = where;
        if (kind != 0) continue;
        for (EdgeId a = 0; a < g.m(); a += 3) {
            EdgeList failures{g.edge(a)};
            CHECK(oracle.query(pair, failures) ==
                  query_slack(oracle.lifted.levels[idx], pair, failures));
        }
    }
}

// One strand is a single edge, the other is long enough that its middle
// falls outside both L-segments. The long strand still needs hub coverage
// even though its partner is short.
TEST_CASE("mixed short/long strands keep the long route answerable") {
    DiGraph g = make_graph(12, {{0, 1},
                                {0, 2},
                                {2, 3},
                                {3, 4},
                                {4, 5},
                                {5, 6},
                                {6, 7},
                                {7, 8},
                                {8, 1}});
    PairList pairs{{0, 1}};
    for (VertexId v = 2; v <= 9; ++v) pairs.push_back({v, v}); // pad to nine pairs
    DualOracleSlack level = build_dual_oracle_slack(g, pairs, kBaseline);
    CHECK(level.L == 4);
    REQUIRE(level.record_of.count({0, 1}));
    CHECK(query_slack(level, {0, 1}, {{0, 1}}));                // long strand survives
    CHECK_FALSE(query_slack(level, {0, 1}, {{0, 1}, {4, 5}})); // both routes cut
    CHECK(query_slack(level, {0, 1}, {{4, 5}, {5, 6}}));       // direct edge survives

    DualOracle oracle = build_dual_oracle(g, pairs, kBaseline);
    CHECK(check_oracle(adapt(oracle, g), g, pairs, FailMode::Edge, 2).pass());
}

TEST_CASE("chord-heavy chains: exhaustive equivalence for oracle and preserver") {
    std::mt19937_64 rng(99221);
    for (int trial = 0; trial < 24; ++trial) {
        int n = 8 + trial % 6;
        DiGraph g = chordal_chain(n, trial % 2 ? 0.05 : 0.12, 5000 + trial);
        PairList pairs{{0, n - 1}};
        for (int extra = 0; extra < 6; ++extra) {
            VertexPair p{static_cast<VertexId>(rng() % n), static_cast<VertexId>(rng() % n)};
            if (p.s != p.t) pairs.push_back(p);
        }
        DualOracle oracle = build_dual_oracle(g, pairs, kBaseline);
        CHECK(check_oracle(adapt(oracle, g), g, pairs, FailMode::Edge, 2).pass());
    }
}

TEST_CASE("regression corpus graph with a mixed-strand pair") {
    DiGraph g = DiGraph::parse_string(
        "10 28\n0 6\n0 9\n1 0\n1 4\n1 5\n1 6\n2 5\n2 8\n3 0\n3 1\n3 2\n3 6\n3 7\n3 8\n"
        "4 2\n4 8\n5 2\n6 5\n7 3\n8 4\n8 7\n9 0\n9 1\n9 2\n9 4\n9 6\n9 7\n9 8\n");
    PairList pairs{{0, 1}, {0, 6}, {1, 4}, {1, 9}, {2, 2}, {2, 7}};
    DualOracle oracle = build_dual_oracle(g, pairs, kBaseline);
    CHECK(oracle.query({0, 1}, {{0, 9}}));
    CHECK(check_oracle(adapt(oracle, g), g, pairs, FailMode::Edge, 2).pass());
}

TEST_CASE("failing a strand edge spares its off-strand twin") {
    // 0->1 is a strand edge and also reachable off-strand through 3. Killing
    // both strands must still answer true via the off-strand route.
    DiGraph g = make_graph(4, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1}});
    DualOracleSlack level = build_dual_oracle_slack(g, {{0, 1}}, kBaseline);
    CHECK(query_slack(level, {0, 1}, {{0, 1}, {0, 2}}));
    CHECK(query_slack(level, {0, 1}, {{0, 1}, {2, 1}}));
    CHECK(query_slack(level, {0, 1}, {{0, 2}, {3, 1}}));
    CHECK(query_slack(level, {0, 1}, {{0, 1}, {3, 1}}));

    const auto &rec = level.records[level.record_of.at({0, 1})];
    auto merged = rec.aux.graph.find_edge(rec.aux.aux_of.at(0), rec.aux.aux_of.at(1));
    REQUIRE(merged.has_value());
    CHECK(rec.aux.off_strand[*merged]);
}

TEST_CASE("query rejects a third failure") {
    DiGraph g = diamond();
    DualOracle oracle = build_dual_oracle(g, {{0, 3}}, kBaseline);
    CHECK_THROWS_AS(oracle.query({0, 3}, {{0, 1}, {0, 2}, {1, 3}}), input_error);
}

TEST_CASE("vertex splitting turns the oracle into a two-vertex-failure oracle") {
    for (std::uint64_t seed = 950; seed < 956; ++seed) {
        DiGraph g = gen_random_digraph(8, 0.3, seed);
        SplitVertices sv = split_vertices(g);
        PairList pairs, split_pairs;
        for (VertexId s = 0; s < g.n() && pairs.size() < 4; ++s)
            for (VertexId t = 0; t < g.n() && pairs.size() < 4; ++t)
                if (s != t) {
                    pairs.push_back({s, t});
                    split_pairs.push_back(
                        {SplitVertices::out_of(s), SplitVertices::in_of(t)});
                }
        DualOracle oracle = build_dual_oracle(sv.graph, split_pairs, kBaseline);
        for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
            for (VertexId x = 0; x < g.n(); ++x) {
                for (VertexId y = x; y < g.n(); ++y) {
                    if (x == pairs[pi].s || x == pairs[pi].t || y == pairs[pi].s ||
                        y == pairs[pi].t)
                        continue;
                    EdgeList failures{{SplitVertices::in_of(x), SplitVertices::out_of(x)}};
                    std::vector<VertexId> failed{x};
                    if (y != x) {
                        failures.push_back(
                            {SplitVertices::in_of(y), SplitVertices::out_of(y)});
                        failed.push_back(y);
                    }
                    CHECK(oracle.query(split_pairs[pi], failures) ==
                          brute_reachable_vertices(g, pairs[pi].s, pairs[pi].t, failed));
                }
            }
        }
    }
}

TEST_CASE("a built oracle serves concurrent readers") {
    DiGraph g = gen_random_digraph(9, 0.3, 321);
    PairList pairs;
    for (VertexId s = 0; s < g.n(); ++s)
        for (VertexId t = 0; t < g.n(); ++t)
            if (s != t && reachable(g, s, t) && pairs.size() < 6) pairs.push_back({s, t});
    REQUIRE(!pairs.empty());
    DualOracle oracle = build_dual_oracle(g, pairs, kBaseline);

    std::vector<std::vector<char>> expected(pairs.size());
    for (std::size_t pi = 0; pi < pairs.size(); ++pi)
        for (EdgeId e = 0; e < g.m(); ++e)
            expected[pi].push_back(oracle.query(pairs[pi], {g.edge(e)}) ? 1 : 0);

    std::atomic<int> disagreements{0};
    std::vector<std::thread> readers;
    for (int worker = 0; worker < 4; ++worker) {
        readers.emplace_back([&] {
            for (int round = 0; round < 50; ++round)
                for (std::size_t pi = 0; pi < pairs.size(); ++pi)
                    for (EdgeId e = 0; e < g.m(); ++e)
                        if ((oracle.query(pairs[pi], {g.edge(e)}) ? 1 : 0) !=
                            expected[pi][e])
                            ++disagreements;
        });
    }
    for (auto &reader : readers) reader.join();
    CHECK(disagreements == 0);
}

TEST_CASE("duplicate input pairs collapse to one record") {
    DiGraph g = diamond();
    DualOracleSlack level = build_dual_oracle_slack(g, {{0, 3}, {0, 3}, {0, 3}}, kBaseline);
    CHECK(level.covered.size() == 1);
    CHECK(level.records.size() == 1);
}
