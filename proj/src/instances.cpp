#include "ftreach/instances.hpp"

#include "ftreach/graph_core.hpp"

#include <random>

namespace ftreach {

HardInstance gen_hard_dual(int N, int r) {
    if (N < 1 || r < 1) throw input_error("hard instance needs N, r >= 1");
    HardInstance inst;
    inst.N = N;
    inst.r = r;
    inst.graph = DiGraph(2 * N * r);
    for (int i = 1; i <= r; ++i)
        for (int k = 1; k < N; ++k)
            inst.graph.add_edge(inst.p(k, i), inst.p(k + 1, i));
    for (int j = 1; j <= r; ++j)
        for (int k = 1; k < N; ++k)
            inst.graph.add_edge(inst.q(k, j), inst.q(k + 1, j));
    for (int k = 1; k <= N; ++k)
        for (int i = 1; i <= r; ++i)
            for (int j = 1; j <= r; ++j)
                inst.graph.add_edge(inst.p(k, i), inst.q(k, j));
    for (int i = 1; i <= r; ++i) inst.S.push_back(inst.a(i));
    for (int j = 1; j <= r; ++j) inst.S.push_back(inst.b(j));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            inst.pairs.push_back({inst.a(i), inst.b(j)});
    return inst;
}

HardMulti gen_hard_multi(int rho, int k, int N) {
    if (rho < 1 || k < 1 || N < 1) throw input_error("hard multi needs rho, k, N >= 1");
    long long r = (1LL << k) * rho;
    if (r * N > 1'000'000) throw input_error("hard multi parameters too large");

    HardMulti out;
    out.rho = rho;
    out.k = k;
    out.N = N;
    out.base = gen_hard_dual(N, static_cast<int>(r));

    const int leaves = 1 << k;          // leaves per tree
    const int internal = leaves - 1;    // new nodes per tree
    int next = out.base.graph.n();
    DiGraph g(out.base.graph.n() + 2 * rho * internal);
    for (const Edge &e : out.base.graph.edges()) g.add_edge(e.tail, e.head);

    // Heap-indexed complete binary tree; nodes 1..leaves-1 are new internal
    // nodes, nodes leaves..2*leaves-1 map onto existing column endpoints.
    auto attach = [&](int group, bool out_directed) {
        std::vector<VertexId> node(2 * leaves);
        for (int idx = 1; idx < leaves; ++idx) node[idx] = next++;
        for (int idx = leaves; idx < 2 * leaves; ++idx) {
            int member = group * leaves + (idx - leaves) + 1; // 1-based within S half
            node[idx] = out_directed ? out.base.a(member) : out.base.b(member);
        }
        for (int idx = 1; idx < leaves; ++idx) {
            if (out_directed) {
                g.add_edge(node[idx], node[2 * idx]);
                g.add_edge(node[idx], node[2 * idx + 1]);
            } else {
                g.add_edge(node[2 * idx], node[idx]);
                g.add_edge(node[2 * idx + 1], node[idx]);
            }
        }
        return node[1];
    };

    for (int j = 0; j < rho; ++j) out.sources.push_back(attach(j, true));
    for (int j = 0; j < rho; ++j) out.sinks.push_back(attach(j, false));
    out.graph = std::move(g);
    for (VertexId x : out.sources)
        for (VertexId y : out.sinks) out.pairs.push_back({x, y});
    return out;
}

EssentialWitness essential_edge_witness(const HardInstance &inst, int k, int i, int j) {
    if (k < 1 || k > inst.N || i < 1 || i > inst.r || j < 1 || j > inst.r)
        throw input_error("witness indices out of range");
    EssentialWitness w;
    w.edge = {inst.p(k, i), inst.q(k, j)};
    w.pair = {inst.a(i), inst.b(j)};
    if (k < inst.N) w.failures.push_back({inst.p(k, i), inst.p(k + 1, i)});
    if (k > 1) w.failures.push_back({inst.q(k - 1, j), inst.q(k, j)});
    return w;
}

bool check_witness(const HardInstance &inst, const EssentialWitness &w) {
    const DiGraph &g = inst.graph;
    auto failed = g.resolve(w.failures);
    if (!reachable_ids(g, w.pair.s, w.pair.t, failed)) return false;
    auto with_edge = failed;
    with_edge.push_back(*g.find_edge(w.edge.tail, w.edge.head));
    return !reachable_ids(g, w.pair.s, w.pair.t, with_edge);
}

namespace {

// rng() mapped into [0,1); avoids distribution portability differences.
double unit_real(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

DiGraph gen_random(int n, double p, std::uint64_t seed, bool dag_only) {
    if (n < 0 || p < 0.0 || p > 1.0) throw input_error("bad random graph parameters");
    std::mt19937_64 rng(seed);
    DiGraph g(n);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = 0; v < n; ++v) {
            if (u == v) continue;
            if (dag_only && u >= v) continue;
            if (unit_real(rng) < p) g.add_edge(u, v);
        }
    }
    return g;
}

} // namespace

DiGraph gen_random_digraph(int n, double p, std::uint64_t seed) {
    return gen_random(n, p, seed, false);
}

DiGraph gen_random_dag(int n, double p, std::uint64_t seed) {
    return gen_random(n, p, seed, true);
}

} // namespace ftreach
