#pragma once

#include "ftreach/digraph.hpp"
#include "ftreach/graph_core.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace ftreach {

// A path from the earliest strand vertex that reaches `target` without using
// strand edges. `path` is empty when the anchor is the target itself.
struct CouplingRecord {
    VertexId anchor = -1;
    int anchor_strand = 0;              // 1 or 2
    VertexId target = -1;
    std::vector<VertexId> path;         // anchor..target, empty if trivial
    std::vector<EdgeId> path_edges;
};

using CouplingKey = std::pair<VertexId, int>; // (target vertex, anchor strand)

// strand prefix ∘ one coupling path ∘ strand suffix
struct NicePath {
    int prefix_strand = 0;
    int suffix_strand = 0;
    VertexId anchor = -1;  // where the prefix ends
    VertexId target = -1;  // where the suffix starts
    std::vector<VertexId> vertices;
};

// Sparse single-pair subgraph that preserves s-t reachability under any two
// edge failures: two maximally disjoint strands plus the coupling paths that
// survive the monotone-anchor filter.
struct PairSkeleton {
    const DiGraph *host = nullptr;
    VertexId s = -1, t = -1;
    StrandPair strands;
    std::map<CouplingKey, CouplingRecord> couplings; // every defined anchor
    std::set<CouplingKey> essential;                 // kept in the subgraph
    Subgraph kept;

    std::size_t words() const;
};

PairSkeleton build_pair_skeleton(const DiGraph &g, VertexId s, VertexId t);

// Searches the skeleton for a surviving nice path under at most two failed
// edges (given by host edge id). Returns nullopt when none exists.
std::optional<NicePath> find_nice_path(const PairSkeleton &sk,
                                       const std::vector<EdgeId> &failed_ids);

} // namespace ftreach
