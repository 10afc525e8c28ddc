#include "ftreach/ss_provider.hpp"

#include "ftreach/verify.hpp"

#include <algorithm>
#include <functional>

namespace ftreach {

namespace {

SsFtrs whole(const DiGraph &g, VertexId root, int k, Dir dir) {
    SsFtrs out;
    out.root = root;
    out.dir = dir;
    out.k = k;
    out.pruned = false;
    out.sub = g;
    out.kept_host_ids.resize(g.m());
    for (EdgeId e = 0; e < g.m(); ++e) out.kept_host_ids[e] = e;
    return out;
}

// Does the candidate subgraph agree with g on root reachability for every
// failure set of at most k host edges?
bool equivalent_under_failures(const DiGraph &g, const Subgraph &sub, VertexId root,
                               int k, Dir dir) {
    std::vector<char> host_blocked(g.m(), 0), sub_blocked(g.m(), 0);
    for (EdgeId e = 0; e < g.m(); ++e)
        if (!sub.has(e)) sub_blocked[e] = 1;

    std::vector<EdgeId> failed;
    std::function<bool(EdgeId, int)> rec = [&](EdgeId start, int depth) {
        auto host_reach = reach_mask(g, root, dir, host_blocked);
        auto sub_reach = reach_mask(g, root, dir, sub_blocked);
        if (host_reach != sub_reach) return false;
        if (depth == k) return true;
        for (EdgeId e = start; e < g.m(); ++e) {
            host_blocked[e] = 1;
            char prev = sub_blocked[e];
            sub_blocked[e] = 1;
            bool ok = rec(e + 1, depth + 1);
            host_blocked[e] = 0;
            sub_blocked[e] = prev;
            if (!ok) return false;
        }
        return true;
    };
    return rec(0, 0);
}

} // namespace

SsFtrs ss_ftrs_baseline(const DiGraph &g, VertexId root, int k, Dir dir,
                        long long budget) {
    if (!g.has_vertex(root)) throw input_error("unknown root vertex");
    if (k < 0) throw input_error("failure budget must be non-negative");

    long long estimated = static_cast<long long>(g.n()) * failure_set_count(g.m(), k);
    if (estimated > budget / std::max(1, g.n() + g.m()))
        return whole(g, root, k, dir);

    Subgraph kept(g);
    for (EdgeId e = 0; e < g.m(); ++e) kept.add(e);
    for (EdgeId e = g.m() - 1; e >= 0; --e) {
        kept.remove(e);
        if (!equivalent_under_failures(g, kept, root, k, dir)) kept.add(e);
    }

    SsFtrs out;
    out.root = root;
    out.dir = dir;
    out.k = k;
    out.pruned = true;
    out.kept_host_ids = kept.ids();
    out.sub = kept.materialize();
    return out;
}

SsFtro ss_ftro_baseline(const DiGraph &g, VertexId root, Dir dir, long long budget) {
    return SsFtro{ss_ftrs_baseline(g, root, 2, dir, budget)};
}

bool SsFtro::query(VertexId v, const EdgeList &failures) const {
    if (failures.size() > 2) throw input_error("oracle accepts at most two failures");
    if (!base.sub.has_vertex(v)) throw input_error("unknown vertex");
    std::vector<EdgeId> failed;
    for (const Edge &f : failures)
        if (auto id = base.sub.find_edge(f.tail, f.head)) failed.push_back(*id);
    if (v == base.root) return true;
    auto mask = edge_id_mask(base.sub, failed);
    return reach_mask(base.sub, base.root, base.dir, mask)[v] != 0;
}

SsFtrs Providers::ftrs(const DiGraph &g, VertexId root, int k, Dir dir) const {
    if (whole_graph) return whole(g, root, k, dir);
    return ss_ftrs_baseline(g, root, k, dir, budget);
}

SsFtro Providers::ftro(const DiGraph &g, VertexId root, Dir dir) const {
    if (whole_graph) return SsFtro{whole(g, root, 2, dir)};
    return ss_ftro_baseline(g, root, dir, budget);
}

Providers Providers::by_name(const std::string &name) {
    Providers p;
    if (name == "whole-graph")
        p.whole_graph = true;
    else if (name != "baseline")
        throw input_error("unknown provider: " + name);
    return p;
}

} // namespace ftreach
