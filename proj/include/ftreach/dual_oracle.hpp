#pragma once

#include "ftreach/digraph.hpp"
#include "ftreach/graph_core.hpp"
#include "ftreach/lifting.hpp"
#include "ftreach/pair_skeleton.hpp"
#include "ftreach/ss_provider.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace ftreach {

// Compressed per-pair graph on the first-L/last-L strand segments. An
// auxiliary edge (u,v) stands for a u-v path in the skeleton that avoids all
// strand edges; parallel path/auxiliary edges are merged, and the flag
// records which edges carry an off-strand witness. A failure (x,y) may only
// delete a pure path edge: an off-strand witness never contains a strand
// edge, so it survives any failure aimed at the strand copy.
struct AuxGraph {
    DiGraph graph;                 // vertices 0..|segments|-1
    std::vector<VertexId> origin;  // aux id -> host vertex
    std::map<VertexId, int> aux_of; // host vertex -> aux id
    std::vector<char> off_strand;  // per aux-graph edge
    int path_edge_count = 0;
    int aux_edge_count = 0;        // ordered pairs with an off-strand witness
};

AuxGraph aux_graph(const PairSkeleton &sk, int L);

// One slack level of the dual-failure oracle. Covers the pairs in `covered`.
struct DualOracleSlack {
    struct PairRecord {
        VertexPair pair;
        bool unreachable = false;
        bool trivial = false; // s == t
        std::array<std::optional<VertexId>, 4> table; // hub per strand segment
        AuxGraph aux;
        SsFtro aux_oracle; // from-s oracle over the aux graph
    };

    int L = 1;
    std::vector<VertexId> hitting;           // hub vertices, pick order
    std::vector<SsFtro> to_hub, from_hub;    // aligned with hitting
    std::map<VertexId, int> hub_index;
    std::vector<PairRecord> records;
    std::map<VertexPair, int> record_of;
    PairList covered;

    std::size_t words() const;
};

DualOracleSlack build_dual_oracle_slack(const DiGraph &g, const PairList &pairs,
                                        const Providers &providers);

bool query_slack(const DualOracleSlack &oracle, VertexPair pair, const EdgeList &failures);

// Full pairwise oracle: slack levels plus subgraph-backed single-pair bases.
struct DualOracle {
    struct PairBase {
        VertexPair pair;
        bool unreachable = false;
        bool trivial = false;
        DiGraph sub; // materialized skeleton edges

        std::size_t words() const { return 4 + 2 * sub.m(); }
    };

    LiftedOracle<DualOracleSlack, PairBase> lifted;

    bool query(VertexPair pair, const EdgeList &failures) const;
    std::size_t words() const;
};

DualOracle build_dual_oracle(const DiGraph &g, const PairList &pairs,
                             const Providers &providers);

} // namespace ftreach
