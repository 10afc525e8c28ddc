#pragma once

#include "ftreach/digraph.hpp"
#include "ftreach/lifting.hpp"
#include "ftreach/ss_provider.hpp"

#include <vector>

namespace ftreach {

// One slack round of the dual-failure preserver, with the internals the
// sparsity argument rests on kept for inspection.
struct DualPreserverBuild {
    int L = 1;                           // segment length in vertices
    std::vector<VertexId> hitting;       // hub vertices, pick order
    PairList covered;                    // pairs this round answers for
    std::vector<VertexId> heavy;         // extracted high-frequency vertices
    long long heavy_threshold = 0;       // ceil(sqrt(L * covered))
    std::size_t initial_path_count = 0;  // coupling-path pool before extraction
    long long final_max_frequency = 0;
    Subgraph segments;
    Subgraph hub_ftrs;
    Subgraph heavy_ftrs;
    Subgraph surviving_paths;
    Subgraph result;
};

DualPreserverBuild build_dual_preserver_slack(const DiGraph &g, const PairList &pairs,
                                              const Providers &providers);

Subgraph build_dual_preserver(const DiGraph &g, const PairList &pairs,
                              const Providers &providers);

} // namespace ftreach
