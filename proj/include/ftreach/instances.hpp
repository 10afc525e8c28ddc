#pragma once

#include "ftreach/digraph.hpp"

#include <cstdint>
#include <vector>

namespace ftreach {

// Layered lower-bound family: 2r vertex-disjoint directed paths of N
// vertices each, with a complete bipartite jump between the left and right
// columns at every level. Every bipartite edge is essential for the
// (a_i, b_j) pairs under two failures.
struct HardInstance {
    int N = 0;
    int r = 0;
    DiGraph graph;
    std::vector<VertexId> S;  // a_1..a_r, b_1..b_r
    PairList pairs;           // (a_i, b_j) for all i, j

    // 1-based accessors matching the layout p_{k,i}, q_{k,j}.
    VertexId p(int k, int i) const { return (i - 1) * N + (k - 1); }
    VertexId q(int k, int j) const { return r * N + (j - 1) * N + (k - 1); }
    VertexId a(int i) const { return p(1, i); }
    VertexId b(int j) const { return q(N, j); }
};

struct EssentialWitness {
    Edge edge;
    VertexPair pair;
    EdgeList failures; // one or two path edges
};

struct HardMulti {
    int rho = 0, k = 0, N = 0;
    HardInstance base; // r = 2^k * rho
    DiGraph graph;     // base graph plus the binary trees
    std::vector<VertexId> sources; // x_1..x_rho
    std::vector<VertexId> sinks;   // y_1..y_rho
    PairList pairs;                // (x_i, y_j)
};

HardInstance gen_hard_dual(int N, int r);
HardMulti gen_hard_multi(int rho, int k, int N);

EssentialWitness essential_edge_witness(const HardInstance &inst, int k, int i, int j);
// True iff reachability under the witness failures flips when the witness
// edge is deleted.
bool check_witness(const HardInstance &inst, const EssentialWitness &w);

DiGraph gen_random_digraph(int n, double p, std::uint64_t seed);
DiGraph gen_random_dag(int n, double p, std::uint64_t seed);

} // namespace ftreach
