#pragma once

#include "ftreach/digraph.hpp"
#include "ftreach/graph_core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ftreach {

// Single-root reachability subgraph resilient to k edge failures:
// for every failure set of at most k edges and every vertex v, reachability
// between the root and v (in the stated direction) matches the host graph.
struct SsFtrs {
    VertexId root = -1;
    Dir dir = Dir::FromRoot;
    int k = 0;
    bool pruned = false; // false when the work budget forced the whole graph
    DiGraph sub;         // materialized, same vertex ids as the host
    std::vector<EdgeId> kept_host_ids;

    std::size_t words() const { return 4 + 2 * sub.m(); }
};

// Single-root reachability oracle for up to two edge failures, backed by a
// stored subgraph; query cost is one search over the stored edges.
struct SsFtro {
    SsFtrs base;

    bool query(VertexId v, const EdgeList &failures) const;
    std::size_t words() const { return base.words(); }
};

// Drops edges greedily (descending edge id) while the exhaustive failure
// check still passes. Falls back to the whole graph when the estimated work
// n * C(m,k) * (n+m) exceeds the budget.
SsFtrs ss_ftrs_baseline(const DiGraph &g, VertexId root, int k, Dir dir,
                        long long budget);

SsFtro ss_ftro_baseline(const DiGraph &g, VertexId root, Dir dir, long long budget);

inline constexpr long long kDefaultProviderBudget = 10'000'000;

// Provider selection shared by the pairwise builders. "baseline" prunes,
// "whole-graph" stores the host graph unmodified.
struct Providers {
    bool whole_graph = false;
    long long budget = kDefaultProviderBudget;

    SsFtrs ftrs(const DiGraph &g, VertexId root, int k, Dir dir) const;
    SsFtro ftro(const DiGraph &g, VertexId root, Dir dir) const;

    static Providers by_name(const std::string &name);
    std::string name() const { return whole_graph ? "whole-graph" : "baseline"; }
};

} // namespace ftreach
