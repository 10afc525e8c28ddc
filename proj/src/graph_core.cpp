#include "ftreach/graph_core.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace ftreach {

std::vector<char> edge_id_mask(const DiGraph &g, const std::vector<EdgeId> &ids) {
    std::vector<char> mask(g.m(), 0);
    for (EdgeId e : ids) mask.at(e) = 1;
    return mask;
}

std::vector<char> reach_mask(const DiGraph &g, VertexId src, Dir dir,
                             const std::vector<char> &blocked_edges,
                             const std::vector<char> &removed_vertices) {
    std::vector<char> seen(g.n(), 0);
    if (!g.has_vertex(src)) return seen;
    if (!removed_vertices.empty() && removed_vertices[src]) return seen;
    std::deque<VertexId> q{src};
    seen[src] = 1;
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop_front();
        const auto &adj = dir == Dir::FromRoot ? g.out(u) : g.in(u);
        for (EdgeId e : adj) {
            if (!blocked_edges.empty() && blocked_edges[e]) continue;
            VertexId v = dir == Dir::FromRoot ? g.edge(e).head : g.edge(e).tail;
            if (!removed_vertices.empty() && removed_vertices[v]) continue;
            if (!seen[v]) {
                seen[v] = 1;
                q.push_back(v);
            }
        }
    }
    return seen;
}

std::optional<std::vector<EdgeId>> bfs_path(const DiGraph &g, VertexId s, VertexId t,
                                            const std::vector<char> &blocked_edges) {
    if (!g.has_vertex(s) || !g.has_vertex(t)) return std::nullopt;
    if (s == t) return std::vector<EdgeId>{};
    std::vector<EdgeId> parent(g.n(), -1);
    std::vector<char> seen(g.n(), 0);
    std::deque<VertexId> q{s};
    seen[s] = 1;
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop_front();
        for (EdgeId e : g.out(u)) {
            if (!blocked_edges.empty() && blocked_edges[e]) continue;
            VertexId v = g.edge(e).head;
            if (seen[v]) continue;
            seen[v] = 1;
            parent[v] = e;
            if (v == t) {
                std::vector<EdgeId> path;
                for (VertexId w = t; w != s; w = g.edge(parent[w]).tail)
                    path.push_back(parent[w]);
                std::reverse(path.begin(), path.end());
                return path;
            }
            q.push_back(v);
        }
    }
    return std::nullopt;
}

std::vector<VertexId> path_vertices(const DiGraph &g, VertexId s,
                                    const std::vector<EdgeId> &path_edges) {
    std::vector<VertexId> verts{s};
    for (EdgeId e : path_edges) verts.push_back(g.edge(e).head);
    return verts;
}

bool reachable_ids(const DiGraph &g, VertexId s, VertexId t,
                   const std::vector<EdgeId> &failed_ids) {
    if (!g.has_vertex(s) || !g.has_vertex(t)) throw input_error("unknown vertex");
    if (s == t) return true;
    auto mask = edge_id_mask(g, failed_ids);
    return reach_mask(g, s, Dir::FromRoot, mask)[t] != 0;
}

bool reachable(const DiGraph &g, VertexId s, VertexId t, const EdgeList &failures) {
    return reachable_ids(g, s, t, g.resolve(failures));
}

bool reachable_in(const Subgraph &h, VertexId s, VertexId t,
                  const std::vector<EdgeId> &failed_ids) {
    const DiGraph &g = h.parent();
    if (!g.has_vertex(s) || !g.has_vertex(t)) throw input_error("unknown vertex");
    if (s == t) return true;
    std::vector<char> blocked(g.m(), 0);
    for (EdgeId e = 0; e < g.m(); ++e)
        if (!h.has(e)) blocked[e] = 1;
    for (EdgeId e : failed_ids) blocked.at(e) = 1;
    return reach_mask(g, s, Dir::FromRoot, blocked)[t] != 0;
}

bool reachable_minus_vertex(const DiGraph &g, VertexId s, VertexId t, VertexId x) {
    if (!g.has_vertex(s) || !g.has_vertex(t) || !g.has_vertex(x))
        throw input_error("unknown vertex");
    if (x == s || x == t) return false;
    if (s == t) return true;
    std::vector<char> removed(g.n(), 0);
    removed[x] = 1;
    return reach_mask(g, s, Dir::FromRoot, {}, removed)[t] != 0;
}

CutElements cut_elements_filtered(const DiGraph &g, VertexId s, VertexId t,
                                  const std::vector<char> &blocked_edges) {
    auto path = bfs_path(g, s, t, blocked_edges);
    if (!path) throw input_error("cut_elements: t unreachable from s");
    CutElements out;
    if (s == t) {
        out.vertices.push_back(s);
        return out;
    }
    auto verts = path_vertices(g, s, *path);
    for (VertexId v : verts) {
        if (v == s || v == t) {
            out.vertices.push_back(v);
            continue;
        }
        std::vector<char> removed(g.n(), 0);
        removed[v] = 1;
        if (!reach_mask(g, s, Dir::FromRoot, blocked_edges, removed)[t])
            out.vertices.push_back(v);
    }
    for (EdgeId e : *path) {
        std::vector<char> blocked = blocked_edges.empty()
                                        ? std::vector<char>(g.m(), 0)
                                        : blocked_edges;
        blocked[e] = 1;
        if (!reach_mask(g, s, Dir::FromRoot, blocked)[t]) out.edges.push_back(e);
    }
    return out;
}

CutElements cut_elements(const DiGraph &g, VertexId s, VertexId t) {
    if (!g.has_vertex(s) || !g.has_vertex(t)) throw input_error("unknown vertex");
    return cut_elements_filtered(g, s, t, {});
}

namespace {

// Unit-capacity style flow network used only to extract two maximally
// disjoint s-t paths. Cut elements get capacity 2 so both paths may share
// them; everything else gets capacity 1.
class StrandFlow {
public:
    StrandFlow(const DiGraph &g, const std::vector<char> &blocked,
               const std::vector<char> &cut_vertex, const std::vector<char> &cut_edge)
        : g_(g), adj_(2 * g.n()) {
        for (VertexId v = 0; v < g.n(); ++v)
            add_arc(SplitVertices::in_of(v), SplitVertices::out_of(v),
                    cut_vertex[v] ? 2 : 1);
        for (EdgeId e = 0; e < g.m(); ++e) {
            if (!blocked.empty() && blocked[e]) {
                add_arc(0, 0, 0); // keep arc indices aligned with edge ids
                continue;
            }
            add_arc(SplitVertices::out_of(g.edge(e).tail),
                    SplitVertices::in_of(g.edge(e).head), cut_edge[e] ? 2 : 1);
        }
    }

    // Augments along lowest-arc-id BFS paths until the target value is met.
    bool run(VertexId source, VertexId sink, int target) {
        int value = 0;
        while (value < target) {
            int pushed = augment(source, sink, target - value);
            if (pushed == 0) return false;
            value += pushed;
        }
        cancel_cycles();
        return true;
    }

    // Extracts one source-sink path from the remaining flow, erasing it.
    // Returns alternating arc ids.
    std::vector<int> extract(VertexId source, VertexId sink) {
        std::vector<int> arcs_taken;
        VertexId u = source;
        while (u != sink) {
            int found = -1;
            for (int a : adj_[u]) {
                if (a % 2 == 0 && flow_[a] > 0) {
                    found = a;
                    break;
                }
            }
            if (found < 0) throw std::logic_error("flow decomposition ran dry");
            --flow_[found];
            arcs_taken.push_back(found);
            u = to_[found];
        }
        return arcs_taken;
    }

    int n_split_arcs() const { return g_.n(); }

private:
    const DiGraph &g_;
    std::vector<int> to_, cap_, flow_;
    std::vector<std::vector<int>> adj_;

    void add_arc(int u, int v, int cap) {
        adj_[u].push_back(static_cast<int>(to_.size()));
        to_.push_back(v);
        cap_.push_back(cap);
        flow_.push_back(0);
        adj_[v].push_back(static_cast<int>(to_.size()));
        to_.push_back(u);
        cap_.push_back(0);
        flow_.push_back(0);
    }

    int residual(int a) const { return cap_[a] - flow_[a]; }

    int augment(VertexId source, VertexId sink, int want) {
        std::vector<int> parent_arc(adj_.size(), -1);
        std::vector<char> seen(adj_.size(), 0);
        std::deque<VertexId> q{source};
        seen[source] = 1;
        while (!q.empty() && !seen[sink]) {
            VertexId u = q.front();
            q.pop_front();
            for (int a : adj_[u]) {
                if (residual(a) <= 0) continue;
                VertexId v = to_[a];
                if (seen[v]) continue;
                seen[v] = 1;
                parent_arc[v] = a;
                q.push_back(v);
            }
        }
        if (!seen[sink]) return 0;
        int bottleneck = want;
        for (VertexId v = sink; v != source;) {
            int a = parent_arc[v];
            bottleneck = std::min(bottleneck, residual(a));
            v = to_[a ^ 1];
        }
        for (VertexId v = sink; v != source;) {
            int a = parent_arc[v];
            flow_[a] += bottleneck;
            flow_[a ^ 1] -= bottleneck;
            v = to_[a ^ 1];
        }
        return bottleneck;
    }

    // Removes directed cycles from the flow support so decomposition yields
    // simple paths.
    void cancel_cycles() {
        const int nn = static_cast<int>(adj_.size());
        while (true) {
            std::vector<int> state(nn, 0); // 0 new, 1 on stack, 2 done
            std::vector<int> via(nn, -1);  // arc that entered the node
            std::vector<int> cycle = find_cycle(state, via);
            if (cycle.empty()) return;
            int f = flow_[cycle.front()];
            for (int a : cycle) f = std::min(f, flow_[a]);
            for (int a : cycle) {
                flow_[a] -= f;
                flow_[a ^ 1] += f;
            }
        }
    }

    std::vector<int> find_cycle(std::vector<int> &state, std::vector<int> &via) {
        const int nn = static_cast<int>(adj_.size());
        for (int start = 0; start < nn; ++start) {
            if (state[start]) continue;
            std::vector<int> node_stack{start};
            std::vector<size_t> iter_stack{0};
            state[start] = 1;
            while (!node_stack.empty()) {
                int u = node_stack.back();
                size_t &idx = iter_stack.back();
                bool descended = false;
                while (idx < adj_[u].size()) {
                    int a = adj_[u][idx++];
                    if (a % 2 != 0 || flow_[a] <= 0) continue;
                    int v = to_[a];
                    if (state[v] == 1) {
                        std::vector<int> cycle{a};
                        for (int w = u; w != v; w = to_[via[w] ^ 1])
                            cycle.push_back(via[w]);
                        return cycle;
                    }
                    if (state[v] == 0) {
                        state[v] = 1;
                        via[v] = a;
                        node_stack.push_back(v);
                        iter_stack.push_back(0);
                        descended = true;
                        break;
                    }
                }
                if (!descended) {
                    state[u] = 2;
                    node_stack.pop_back();
                    iter_stack.pop_back();
                }
            }
        }
        return {};
    }
};

StrandPair strands_impl(const DiGraph &g, VertexId s, VertexId t,
                        const std::vector<char> &blocked) {
    auto probe = bfs_path(g, s, t, blocked);
    if (!probe) throw input_error("strands: t unreachable from s");
    StrandPair out;
    if (s == t) {
        out.p1 = out.p2 = {s};
        out.shared_vertices = {s};
        return out;
    }
    CutElements cuts = cut_elements_filtered(g, s, t, blocked);
    std::vector<char> cut_vertex(g.n(), 0), cut_edge(g.m(), 0);
    for (VertexId v : cuts.vertices) cut_vertex[v] = 1;
    for (EdgeId e : cuts.edges) cut_edge[e] = 1;

    StrandFlow net(g, blocked, cut_vertex, cut_edge);
    // A unit-capacity bottleneck would itself be a cut element and carry
    // capacity 2, so value 2 is always attainable.
    if (!net.run(SplitVertices::out_of(s), SplitVertices::in_of(t), 2))
        throw std::logic_error("strand flow fell short of value 2");

    auto decode = [&](const std::vector<int> &arcs, std::vector<VertexId> &verts,
                      std::vector<EdgeId> &edges) {
        verts.push_back(s);
        for (int a : arcs) {
            int fwd = a / 2;
            if (fwd < net.n_split_arcs()) continue; // vertex split arc
            EdgeId e = fwd - net.n_split_arcs();
            edges.push_back(e);
            verts.push_back(g.edge(e).head);
        }
    };
    decode(net.extract(SplitVertices::out_of(s), SplitVertices::in_of(t)), out.p1,
           out.p1_edges);
    decode(net.extract(SplitVertices::out_of(s), SplitVertices::in_of(t)), out.p2,
           out.p2_edges);

    std::unordered_set<VertexId> in_p2(out.p2.begin(), out.p2.end());
    for (VertexId v : out.p1)
        if (in_p2.count(v)) out.shared_vertices.push_back(v);
    std::unordered_set<EdgeId> in_p2e(out.p2_edges.begin(), out.p2_edges.end());
    for (EdgeId e : out.p1_edges)
        if (in_p2e.count(e)) out.shared_edges.push_back(e);
    return out;
}

} // namespace

StrandPair strands(const DiGraph &g, VertexId s, VertexId t) {
    if (!g.has_vertex(s) || !g.has_vertex(t)) throw input_error("unknown vertex");
    return strands_impl(g, s, t, {});
}

StrandPair strands_filtered(const DiGraph &g, VertexId s, VertexId t,
                            const std::vector<char> &blocked_edges) {
    if (!g.has_vertex(s) || !g.has_vertex(t)) throw input_error("unknown vertex");
    return strands_impl(g, s, t, blocked_edges);
}

bool strongly_connected_mask(const DiGraph &g, VertexId u, VertexId v,
                             const std::vector<char> &removed_vertices,
                             const std::vector<char> &blocked_edges) {
    if (!removed_vertices.empty() && (removed_vertices[u] || removed_vertices[v]))
        throw input_error("strongly_connected: endpoint removed");
    if (u == v) return true;
    return reach_mask(g, u, Dir::FromRoot, blocked_edges, removed_vertices)[v] &&
           reach_mask(g, v, Dir::FromRoot, blocked_edges, removed_vertices)[u];
}

bool strongly_connected(const DiGraph &g, VertexId u, VertexId v,
                        const std::vector<VertexId> &removed) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) throw input_error("unknown vertex");
    std::vector<char> mask(g.n(), 0);
    for (VertexId x : removed) {
        if (!g.has_vertex(x)) throw input_error("unknown vertex in removed set");
        mask[x] = 1;
    }
    return strongly_connected_mask(g, u, v, mask);
}

SplitVertices split_vertices(const DiGraph &g) {
    SplitVertices out;
    out.graph = DiGraph(2 * g.n());
    out.split_edge_of.resize(g.n());
    for (VertexId v = 0; v < g.n(); ++v)
        out.split_edge_of[v] =
            out.graph.add_edge(SplitVertices::in_of(v), SplitVertices::out_of(v));
    for (EdgeId e = 0; e < g.m(); ++e)
        out.graph.add_edge(SplitVertices::out_of(g.edge(e).tail),
                           SplitVertices::in_of(g.edge(e).head));
    return out;
}

SplitEdges split_edges(const DiGraph &g, const std::vector<EdgeId> &e0) {
    std::vector<EdgeId> sorted(e0);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (EdgeId e : sorted)
        if (e < 0 || e >= g.m()) throw input_error("split_edges: unknown edge id");

    SplitEdges out;
    out.graph = DiGraph(g.n() + static_cast<int>(sorted.size()));
    std::vector<char> is_split(g.m(), 0);
    std::vector<VertexId> mid(g.m(), -1);
    for (size_t i = 0; i < sorted.size(); ++i) {
        is_split[sorted[i]] = 1;
        mid[sorted[i]] = g.n() + static_cast<VertexId>(i);
        out.mid_of.emplace_back(sorted[i], mid[sorted[i]]);
    }
    for (EdgeId e = 0; e < g.m(); ++e) {
        const Edge &ed = g.edge(e);
        if (is_split[e]) {
            out.graph.add_edge(ed.tail, mid[e]);
            out.graph.add_edge(mid[e], ed.head);
        } else {
            out.graph.add_edge(ed.tail, ed.head);
        }
    }
    return out;
}

} // namespace ftreach
