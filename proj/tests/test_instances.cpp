#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ftreach/graph_core.hpp"
#include "ftreach/instances.hpp"

using namespace ftreach;

TEST_CASE("hard2 layout and counts") {
    HardInstance inst = gen_hard_dual(2, 2);
    CHECK(inst.graph.n() == 8);
    CHECK(inst.graph.m() == 12);
    CHECK(inst.a(1) == 0);
    CHECK(inst.b(2) == 7);
    CHECK(inst.p(1, 1) == 0);
    CHECK(inst.q(1, 2) == 6);
    CHECK(inst.pairs.size() == 4);

    HardInstance tiny = gen_hard_dual(1, 1);
    CHECK(tiny.graph.n() == 2);
    CHECK(tiny.graph.m() == 1);

    HardInstance wide = gen_hard_dual(3, 2);
    CHECK(wide.graph.n() == 12);
    CHECK(wide.graph.m() == 20);

    CHECK_THROWS_AS(gen_hard_dual(0, 2), input_error);
}

TEST_CASE("every bipartite edge has a working witness") {
    for (auto [N, r] : {std::pair{2, 2}, std::pair{3, 3}, std::pair{1, 4}}) {
        HardInstance inst = gen_hard_dual(N, r);
        for (int k = 1; k <= N; ++k)
            for (int i = 1; i <= r; ++i)
                for (int j = 1; j <= r; ++j)
                    CHECK(check_witness(inst, essential_edge_witness(inst, k, i, j)));
    }
    HardInstance inst = gen_hard_dual(2, 2);
    CHECK_THROWS_AS(essential_edge_witness(inst, 3, 1, 1), input_error);

    EssentialWitness w = essential_edge_witness(inst, 1, 1, 2);
    CHECK(w.edge == Edge{0, 6});
    CHECK(w.pair == VertexPair{0, 7});
    REQUIRE(w.failures.size() == 1); // k = 1 omits the column-side failure
    CHECK(w.failures[0] == Edge{0, 1});

    w = essential_edge_witness(inst, 2, 1, 2);
    CHECK(w.edge == Edge{1, 7});
    REQUIRE(w.failures.size() == 1);
    CHECK(w.failures[0] == Edge{6, 7});
}

TEST_CASE("multi-failure extension attaches binary trees") {
    HardMulti hm = gen_hard_multi(1, 1, 1);
    CHECK(hm.base.graph.n() == 4);
    CHECK(hm.graph.n() == 6); // one new internal node per 3-node tree
    CHECK(hm.sources.size() == 1);
    CHECK(hm.sinks.size() == 1);
    CHECK(hm.graph.m() == hm.base.graph.m() + 2 * 2); // 2^{k+1}-2 per tree

    HardMulti wide = gen_hard_multi(2, 1, 2);
    CHECK(wide.base.r == 4);
    CHECK(wide.sources.size() == 2);
    CHECK(wide.sinks.size() == 2);
    CHECK(wide.pairs.size() == 4);

    CHECK_THROWS_AS(gen_hard_multi(1000, 20, 100), input_error);
}

TEST_CASE("designated tree failures funnel through one column pair") {
    HardMulti hm = gen_hard_multi(1, 1, 1);
    const DiGraph &g = hm.graph;
    VertexId x = hm.sources[0], y = hm.sinks[0];
    // pick a = a_1, b = b_1; fail the sibling tree edges
    VertexId a = hm.base.a(1), b = hm.base.b(1);
    std::vector<EdgeId> f0;
    for (EdgeId e = 0; e < g.m(); ++e) {
        const Edge &ed = g.edge(e);
        if (ed.tail == x && ed.head != a) f0.push_back(e);
        if (ed.head == y && ed.tail != b) f0.push_back(e);
    }
    CHECK(f0.size() == 2); // 2k failures
    CHECK(reachable_ids(g, x, y, f0));
    // removing a or b on top of the tree failures disconnects the pair
    std::vector<char> removed(g.n(), 0);
    removed[a] = 1;
    CHECK_FALSE(reach_mask(g, x, Dir::FromRoot, edge_id_mask(g, f0), removed)[y]);
    removed[a] = 0;
    removed[b] = 1;
    CHECK_FALSE(reach_mask(g, x, Dir::FromRoot, edge_id_mask(g, f0), removed)[y]);
}

TEST_CASE("random generators are seeded and respect p") {
    CHECK(gen_random_digraph(6, 0.0, 3).m() == 0);
    CHECK(gen_random_dag(3, 1.0, 3).m() == 3);
    DiGraph a = gen_random_digraph(10, 0.3, 42);
    DiGraph b = gen_random_digraph(10, 0.3, 42);
    CHECK(a.format_string() == b.format_string());
    DiGraph c = gen_random_digraph(10, 0.3, 43);
    CHECK(a.format_string() != c.format_string());
    DiGraph dag = gen_random_dag(12, 0.5, 9);
    for (const Edge &e : dag.edges()) CHECK(e.tail < e.head);
}
