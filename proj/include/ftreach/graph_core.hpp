#pragma once

#include "ftreach/digraph.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ftreach {

enum class Dir { FromRoot, ToRoot };

// Ordered cut elements of a pair: vertices include s and t and follow their
// position on one fixed s-t path; edges are those whose removal breaks
// reachability, in the same order.
struct CutElements {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
};

// Two s-t paths that intersect only at (s,t) cut-edges and cut-vertices.
struct StrandPair {
    std::vector<VertexId> p1, p2;           // vertex sequences, s..t
    std::vector<EdgeId> p1_edges, p2_edges; // aligned edge ids
    std::vector<VertexId> shared_vertices;  // in path order
    std::vector<EdgeId> shared_edges;
};

struct SplitVertices {
    DiGraph graph; // 2n vertices: v_in = 2v, v_out = 2v+1
    static VertexId in_of(VertexId v) { return 2 * v; }
    static VertexId out_of(VertexId v) { return 2 * v + 1; }
    std::vector<EdgeId> split_edge_of; // per original vertex
};

struct SplitEdges {
    DiGraph graph;                    // original ids 0..n-1 plus one mid per split edge
    std::vector<std::pair<EdgeId, VertexId>> mid_of; // (original edge id, mid vertex)
    std::optional<VertexId> mid(EdgeId e) const {
        for (const auto &kv : mid_of)
            if (kv.first == e) return kv.second;
        return std::nullopt;
    }
};

// Forward/backward reachability mask from src, skipping blocked edges and
// removed vertices. blocked_edges is indexed by edge id and may be empty.
std::vector<char> reach_mask(const DiGraph &g, VertexId src, Dir dir,
                             const std::vector<char> &blocked_edges = {},
                             const std::vector<char> &removed_vertices = {});

std::vector<char> edge_id_mask(const DiGraph &g, const std::vector<EdgeId> &ids);

// Lowest-edge-id BFS: shortest s-t path as edge ids, or nullopt.
std::optional<std::vector<EdgeId>> bfs_path(const DiGraph &g, VertexId s, VertexId t,
                                            const std::vector<char> &blocked_edges = {});

std::vector<VertexId> path_vertices(const DiGraph &g, VertexId s,
                                    const std::vector<EdgeId> &path_edges);

bool reachable(const DiGraph &g, VertexId s, VertexId t, const EdgeList &failures = {});
bool reachable_ids(const DiGraph &g, VertexId s, VertexId t,
                   const std::vector<EdgeId> &failed_ids);
bool reachable_in(const Subgraph &h, VertexId s, VertexId t,
                  const std::vector<EdgeId> &failed_ids);

// Reachability with a single vertex removed; failing s or t answers false
// unless s == t == the surviving trivial case (s == t && x != s).
bool reachable_minus_vertex(const DiGraph &g, VertexId s, VertexId t, VertexId x);

CutElements cut_elements(const DiGraph &g, VertexId s, VertexId t);
// Variant used on a graph with pre-failed edges.
CutElements cut_elements_filtered(const DiGraph &g, VertexId s, VertexId t,
                                  const std::vector<char> &blocked_edges);

StrandPair strands(const DiGraph &g, VertexId s, VertexId t);
StrandPair strands_filtered(const DiGraph &g, VertexId s, VertexId t,
                            const std::vector<char> &blocked_edges);

bool strongly_connected(const DiGraph &g, VertexId u, VertexId v,
                        const std::vector<VertexId> &removed);
bool strongly_connected_mask(const DiGraph &g, VertexId u, VertexId v,
                             const std::vector<char> &removed_vertices,
                             const std::vector<char> &blocked_edges = {});

SplitVertices split_vertices(const DiGraph &g);
SplitEdges split_edges(const DiGraph &g, const std::vector<EdgeId> &e0);

} // namespace ftreach
