#pragma once

#include "ftreach/digraph.hpp"
#include "ftreach/graph_core.hpp"
#include "ftreach/ss_provider.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ftreach {

struct KFtrsParams {
    int k = 2;
    long long ell = 0;    // 0: pick from k, n, |P|
    double sample_c = 4.0;
    std::uint64_t seed = 1;
};

long long default_ell(int k, int n, std::size_t pair_count);

// Two s-t paths in g minus the failed edges, meeting only at cut elements of
// the surviving graph.
StrandPair disjoint_paths_after(const DiGraph &g, const std::vector<EdgeId> &failed_ids,
                                VertexId s, VertexId t);

// Failure families B_0..B_{k-1}: sets keeping the pair within distance ell,
// grown by branching on one fixed shortest path per parent set. `admitted`
// flags which replacement path of each set stays short enough to store.
struct ShortFailureSets {
    struct Admitted {
        std::vector<EdgeId> failures; // canonically sorted
        bool keep_first = false;      // |Q1| <= ell
        bool keep_second = false;     // |Q2| <= ell
    };
    std::vector<std::vector<std::vector<EdgeId>>> levels;
    std::vector<Admitted> admitted;

    std::size_t level_size(int r) const { return levels.at(r).size(); }
};

ShortFailureSets enumerate_short_failure_sets(const DiGraph &g, VertexId s, VertexId t,
                                              int k, long long ell);

struct KFtrsResult {
    Subgraph sub;
    std::vector<VertexId> sampled; // hub vertices
    long long ell = 0;
    std::size_t words() const { return 2 + sampled.size() + sub.edge_count(); }
};

KFtrsResult build_k_ftrs(const DiGraph &g, const PairList &pairs,
                         const KFtrsParams &params, const Providers &providers);

} // namespace ftreach
