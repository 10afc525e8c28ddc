#pragma once

#include "ftreach/digraph.hpp"
#include "ftreach/graph_core.hpp"

#include <map>
#include <set>
#include <vector>

namespace ftreach {

// Rooted forest over positions 0..size-1 with jump pointers for LCA and
// level-ancestor lookups.
struct ForestIndex {
    std::vector<int> parent; // -1 at roots
    std::vector<int> depth;
    std::vector<int> root;
    std::vector<std::vector<int>> up;

    void build(const std::vector<int> &parents);
    int ancestor_at_depth(int node, int target_depth) const;
    int lca(int a, int b) const; // -1 when the nodes sit in different trees
};

// Answers y->z reachability in G-x in constant probes, for any x, y, z drawn
// from an ordered cut-vertex subset of one pair. Predecessor/successor
// forests record strong connectivity with the earlier/later part of the
// order removed; hmap holds the earliest order position each member can
// still reach.
struct CutSetAPR {
    std::vector<VertexId> order; // sigma
    std::map<VertexId, int> pos;
    std::vector<int> pred_parent, succ_parent; // by position, -1 root
    std::vector<int> hmap;                     // by position
    ForestIndex pred_index, succ_index;

    bool contains(VertexId v) const { return pos.count(v) != 0; }
    std::size_t words() const {
        return order.size() * 4 + pred_index.up.size() * order.size() * 2;
    }
};

CutSetAPR build_cutset_apr(const DiGraph &g, VertexId s, VertexId t,
                           const std::vector<VertexId> &cut_subset);

enum class OrderDir { Successor, Predecessor };

// Immediate successor (predecessor) of x that stays strongly connected to y
// once x is removed.
VertexId order_neighbor(const CutSetAPR &apr, VertexId x, VertexId y, OrderDir dir);

bool apr_query(const CutSetAPR &apr, VertexId x, VertexId y, VertexId z);

struct VertexFailOracle {
    int n = 0; // host vertex count
    int alpha = 1;
    PairList pairs; // deduplicated, build order
    std::map<VertexPair, int> pair_index;
    std::vector<char> base_reachable, trivial;
    std::vector<int> core_pairs;                  // indices into pairs
    std::vector<std::vector<VertexId>> groups;    // V_i, owner-order
    std::map<VertexId, int> group_of;             // F
    std::vector<CutSetAPR> aprs;                  // per group
    // first/last cut vertex of each pair inside each group; (-1,-1) = none
    std::vector<std::vector<std::pair<VertexId, VertexId>>> span;
    std::vector<std::vector<VertexId>> leftover;  // CV(p) \ V_Q, ascending

    std::size_t words() const;
};

VertexFailOracle build_vertex_ftro(const DiGraph &g, const PairList &pairs);
bool vertex_query(const VertexFailOracle &oracle, VertexPair pair, VertexId x);

struct EdgeFailOracle {
    const DiGraph *host = nullptr;
    std::set<Edge> cut_edges;      // C
    std::set<Edge> strong_cut_edges; // C0
    std::map<Edge, VertexId> mid_of; // C0 edge -> inserted vertex
    SplitEdges split;
    VertexFailOracle inner; // built on the split graph

    std::size_t words() const;
};

EdgeFailOracle build_edge_ftro(const DiGraph &g, const PairList &pairs);
bool edge_query(const EdgeFailOracle &oracle, VertexPair pair, Edge e);

} // namespace ftreach
