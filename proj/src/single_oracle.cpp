#include "ftreach/single_oracle.hpp"

#include <algorithm>

namespace ftreach {

void ForestIndex::build(const std::vector<int> &parents) {
    const int n = static_cast<int>(parents.size());
    parent = parents;
    depth.assign(n, -1);
    root.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (depth[v] >= 0) continue;
        std::vector<int> chain;
        int w = v;
        while (w != -1 && depth[w] < 0) {
            chain.push_back(w);
            w = parent[w];
        }
        int d, r;
        if (w == -1) {
            d = -1;
            r = chain.back();
        } else {
            d = depth[w];
            r = root[w];
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            depth[*it] = ++d;
            root[*it] = r;
        }
    }
    int levels = 1;
    while ((1 << levels) < std::max(1, n)) ++levels;
    up.assign(levels + 1, std::vector<int>(n, -1));
    up[0] = parent;
    for (int j = 1; j <= levels; ++j)
        for (int v = 0; v < n; ++v)
            up[j][v] = up[j - 1][v] == -1 ? -1 : up[j - 1][up[j - 1][v]];
}

int ForestIndex::ancestor_at_depth(int node, int target_depth) const {
    int lift = depth[node] - target_depth;
    if (lift < 0) return -1;
    for (int j = 0; lift; ++j, lift >>= 1)
        if (lift & 1) node = up[j][node];
    return node;
}

int ForestIndex::lca(int a, int b) const {
    if (root[a] != root[b]) return -1;
    if (depth[a] > depth[b]) std::swap(a, b);
    b = ancestor_at_depth(b, depth[a]);
    if (a == b) return a;
    for (int j = static_cast<int>(up.size()) - 1; j >= 0; --j) {
        if (up[j][a] != up[j][b]) {
            a = up[j][a];
            b = up[j][b];
        }
    }
    return parent[a];
}

namespace {

CutSetAPR build_apr_unchecked(const DiGraph &g, const std::vector<VertexId> &order) {
    CutSetAPR apr;
    apr.order = order;
    const int c = static_cast<int>(order.size());
    for (int i = 0; i < c; ++i) apr.pos.emplace(order[i], i);

    apr.pred_parent.assign(c, -1);
    apr.succ_parent.assign(c, -1);
    for (int w = 0; w < c; ++w) {
        for (int u = w - 1; u >= 0; --u) {
            std::vector<char> removed(g.n(), 0);
            for (int r = 0; r < u; ++r) removed[order[r]] = 1;
            if (strongly_connected_mask(g, order[u], order[w], removed)) {
                apr.pred_parent[w] = u;
                break;
            }
        }
        for (int u = w + 1; u < c; ++u) {
            std::vector<char> removed(g.n(), 0);
            for (int r = u + 1; r < c; ++r) removed[order[r]] = 1;
            if (strongly_connected_mask(g, order[u], order[w], removed)) {
                apr.succ_parent[w] = u;
                break;
            }
        }
    }

    apr.hmap.assign(c, 0);
    for (int a = 0; a < c; ++a) {
        for (int b = 0; b <= a; ++b) {
            std::vector<char> removed(g.n(), 0);
            for (int r = b + 1; r < a; ++r) removed[order[r]] = 1;
            if (reach_mask(g, order[a], Dir::FromRoot, {}, removed)[order[b]]) {
                apr.hmap[a] = b;
                break;
            }
        }
    }
    apr.pred_index.build(apr.pred_parent);
    apr.succ_index.build(apr.succ_parent);
    return apr;
}

} // namespace

CutSetAPR build_cutset_apr(const DiGraph &g, VertexId s, VertexId t,
                           const std::vector<VertexId> &cut_subset) {
    CutElements cuts = cut_elements(g, s, t); // validates reachability
    std::map<VertexId, int> sigma;
    for (int i = 0; i < static_cast<int>(cuts.vertices.size()); ++i)
        sigma.emplace(cuts.vertices[i], i);
    int prev = -1;
    for (VertexId v : cut_subset) {
        auto it = sigma.find(v);
        if (it == sigma.end())
            throw input_error("apr: vertex is not a cut vertex of the pair");
        if (it->second <= prev) throw input_error("apr: subset is not in path order");
        prev = it->second;
    }
    return build_apr_unchecked(g, cut_subset);
}

VertexId order_neighbor(const CutSetAPR &apr, VertexId x, VertexId y, OrderDir dir) {
    if (!apr.contains(x) || !apr.contains(y)) throw input_error("apr: unknown vertex");
    int px = apr.pos.at(x), py = apr.pos.at(y);
    if (dir == OrderDir::Successor) {
        if (px >= py) throw input_error("apr: successor query needs x before y");
        int r = apr.pred_index.root[py];
        if (px < r) return apr.order[r];
        int a = apr.pred_index.lca(px, py);
        if (a < 0) throw std::logic_error("apr: x left the predecessor tree of y");
        int b = apr.pred_index.ancestor_at_depth(py, apr.pred_index.depth[a] + 1);
        return apr.order[b];
    }
    if (py >= px) throw input_error("apr: predecessor query needs y before x");
    int r = apr.succ_index.root[py];
    if (r < px) return apr.order[r];
    int a = apr.succ_index.lca(px, py);
    if (a < 0) throw std::logic_error("apr: x left the successor tree of y");
    int b = apr.succ_index.ancestor_at_depth(py, apr.succ_index.depth[a] + 1);
    return apr.order[b];
}

bool apr_query(const CutSetAPR &apr, VertexId x, VertexId y, VertexId z) {
    if (!apr.contains(x) || !apr.contains(y) || !apr.contains(z))
        throw input_error("apr: unknown vertex");
    if (x == y || x == z) return false;
    if (y == z) return true;
    int px = apr.pos.at(x), py = apr.pos.at(y), pz = apr.pos.at(z);
    if (py < px && px < pz) return false;
    if (pz < px && px < py) {
        VertexId y0 = order_neighbor(apr, x, y, OrderDir::Successor);
        VertexId z0 = order_neighbor(apr, x, z, OrderDir::Predecessor);
        return apr.hmap[apr.pos.at(y0)] <= apr.pos.at(z0);
    }
    if (px < py) { // x before both
        if (py < pz) return true;
        VertexId y0 = order_neighbor(apr, x, y, OrderDir::Successor);
        return apr.pos.at(y0) <= pz;
    }
    // x after both
    if (py < pz) return true;
    VertexId z0 = order_neighbor(apr, x, z, OrderDir::Predecessor);
    return py <= apr.pos.at(z0);
}

std::size_t VertexFailOracle::words() const {
    std::size_t w = 1 + pairs.size() * 3 + core_pairs.size() + group_of.size() * 2;
    for (const auto &g : groups) w += g.size();
    for (const auto &a : aprs) w += a.words();
    for (const auto &s : span) w += s.size() * 2;
    for (const auto &l : leftover) w += l.size();
    return w;
}

VertexFailOracle build_vertex_ftro(const DiGraph &g, const PairList &pairs) {
    VertexFailOracle oracle;
    oracle.n = g.n();
    oracle.alpha = 1;
    while (oracle.alpha * oracle.alpha < g.n()) ++oracle.alpha;

    std::vector<std::vector<VertexId>> cv; // per pair, sigma order
    for (const VertexPair &p : pairs) {
        if (!g.has_vertex(p.s) || !g.has_vertex(p.t))
            throw input_error("unknown vertex in pair");
        if (oracle.pair_index.count(p)) continue;
        oracle.pair_index.emplace(p, static_cast<int>(oracle.pairs.size()));
        oracle.pairs.push_back(p);
        if (p.s == p.t) {
            oracle.trivial.push_back(1);
            oracle.base_reachable.push_back(1);
            cv.emplace_back();
        } else if (!reachable_ids(g, p.s, p.t, {})) {
            oracle.trivial.push_back(0);
            oracle.base_reachable.push_back(0);
            cv.emplace_back();
        } else {
            oracle.trivial.push_back(0);
            oracle.base_reachable.push_back(1);
            cv.push_back(cut_elements(g, p.s, p.t).vertices);
        }
    }

    std::vector<char> covered(g.n(), 0);
    for (int idx = 0; idx < static_cast<int>(oracle.pairs.size()); ++idx) {
        std::vector<VertexId> fresh;
        for (VertexId v : cv[idx])
            if (!covered[v]) fresh.push_back(v);
        if (static_cast<int>(fresh.size()) <= oracle.alpha) continue;
        int group = static_cast<int>(oracle.groups.size());
        for (VertexId v : fresh) {
            covered[v] = 1;
            oracle.group_of.emplace(v, group);
        }
        oracle.core_pairs.push_back(idx);
        oracle.groups.push_back(std::move(fresh));
        oracle.aprs.push_back(build_apr_unchecked(g, oracle.groups.back()));
    }

    for (int idx = 0; idx < static_cast<int>(oracle.pairs.size()); ++idx) {
        std::vector<std::pair<VertexId, VertexId>> spans(oracle.groups.size(), {-1, -1});
        std::vector<VertexId> rest;
        for (VertexId v : cv[idx]) {
            auto it = oracle.group_of.find(v);
            if (it == oracle.group_of.end()) {
                rest.push_back(v);
                continue;
            }
            auto &[first, last] = spans[it->second];
            if (first == -1) first = v;
            last = v;
        }
        std::sort(rest.begin(), rest.end());
        oracle.span.push_back(std::move(spans));
        oracle.leftover.push_back(std::move(rest));
    }
    return oracle;
}

bool vertex_query(const VertexFailOracle &oracle, VertexPair pair, VertexId x) {
    auto it = oracle.pair_index.find(pair);
    if (it == oracle.pair_index.end()) throw input_error("unknown query pair");
    if (x < 0 || x >= oracle.n) throw input_error("unknown vertex");
    int idx = it->second;
    if (oracle.trivial[idx]) return x != pair.s;
    if (!oracle.base_reachable[idx]) return false;
    if (x == pair.s || x == pair.t) return false;
    auto group_it = oracle.group_of.find(x);
    if (group_it == oracle.group_of.end())
        return !std::binary_search(oracle.leftover[idx].begin(),
                                   oracle.leftover[idx].end(), x);
    int group = group_it->second;
    auto [a, b] = oracle.span[idx][group];
    if (a == -1) return true; // x is no cut vertex of this pair
    if (x == a || x == b) return false;
    return apr_query(oracle.aprs[group], x, a, b);
}

std::size_t EdgeFailOracle::words() const {
    return cut_edges.size() * 2 + strong_cut_edges.size() * 2 + mid_of.size() * 3 +
           inner.words();
}

EdgeFailOracle build_edge_ftro(const DiGraph &g, const PairList &pairs) {
    EdgeFailOracle oracle;
    oracle.host = &g;
    std::set<VertexPair> seen;
    for (const VertexPair &p : pairs) {
        if (!g.has_vertex(p.s) || !g.has_vertex(p.t))
            throw input_error("unknown vertex in pair");
        if (!seen.insert(p).second) continue;
        if (p.s == p.t || !reachable_ids(g, p.s, p.t, {})) continue;
        for (EdgeId e : cut_elements(g, p.s, p.t).edges)
            oracle.cut_edges.insert(g.edge(e));
    }

    std::vector<EdgeId> c0_ids;
    for (const Edge &e : oracle.cut_edges) {
        EdgeId id = *g.find_edge(e.tail, e.head);
        if (!strongly_connected_mask(g, e.tail, e.head, {})) continue;
        std::vector<char> blocked(g.m(), 0);
        blocked[id] = 1;
        if (!strongly_connected_mask(g, e.tail, e.head, {}, blocked)) {
            oracle.strong_cut_edges.insert(e);
            c0_ids.push_back(id);
        }
    }
    if (static_cast<int>(c0_ids.size()) > 2 * g.n())
        throw std::logic_error("strong cut-edge set exceeded its 2n bound");

    oracle.split = split_edges(g, c0_ids);
    for (const auto &[edge_id, mid] : oracle.split.mid_of)
        oracle.mid_of.emplace(g.edge(edge_id), mid);
    oracle.inner = build_vertex_ftro(oracle.split.graph, pairs);
    return oracle;
}

bool edge_query(const EdgeFailOracle &oracle, VertexPair pair, Edge e) {
    if (oracle.host && !oracle.host->find_edge(e.tail, e.head))
        throw input_error("unknown failure edge");
    auto it = oracle.inner.pair_index.find(pair);
    if (it == oracle.inner.pair_index.end()) throw input_error("unknown query pair");
    int idx = it->second;
    if (oracle.inner.trivial[idx]) return true;
    if (!oracle.inner.base_reachable[idx]) return false;
    if (!oracle.cut_edges.count(e)) return true; // a cut edge for no pair at all
    auto mid = oracle.mid_of.find(e);
    if (mid != oracle.mid_of.end())
        return vertex_query(oracle.inner, pair, mid->second);
    bool tail_ok = vertex_query(oracle.inner, pair, e.tail);
    bool head_ok = vertex_query(oracle.inner, pair, e.head);
    return tail_ok || head_ok;
}

} // namespace ftreach
