#include "ftreach/dual_preserver.hpp"

#include "ftreach/hitting_set.hpp"
#include "ftreach/pair_skeleton.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace ftreach {

namespace {

// Smallest L with L^3 * pair_count >= n^2, i.e. ceil((n^2/|P|)^(1/3)).
int segment_length_cuberoot(const DiGraph &g, std::size_t pair_count) {
    long long n2 = static_cast<long long>(g.n()) * g.n();
    long long p = static_cast<long long>(pair_count);
    int L = 1;
    while (static_cast<long long>(L) * L * L * p < n2) ++L;
    return L;
}

long long ceil_sqrt_ll(long long x) {
    long long r = 0;
    while (r * r < x) ++r;
    return r;
}

} // namespace

DualPreserverBuild build_dual_preserver_slack(const DiGraph &g, const PairList &pairs,
                                              const Providers &providers) {
    if (pairs.empty()) throw input_error("slack construction needs at least one pair");
    DualPreserverBuild build;
    build.L = segment_length_cuberoot(g, pairs.size());
    build.segments = Subgraph(g);
    build.hub_ftrs = Subgraph(g);
    build.heavy_ftrs = Subgraph(g);
    build.surviving_paths = Subgraph(g);
    build.result = Subgraph(g);

    struct Prep {
        VertexPair pair;
        bool skip = false; // trivial or unreachable: nothing to keep
        std::optional<PairSkeleton> skeleton;
    };
    std::vector<Prep> preps;
    SetFamily family;
    family.universe_size = g.n();
    std::vector<int> family_owner;
    std::set<VertexPair> seen_pairs;

    auto segment = [&](const std::vector<VertexId> &p, bool from_front) {
        if (from_front)
            return std::vector<VertexId>(
                p.begin(), p.begin() + std::min<std::size_t>(build.L, p.size()));
        std::size_t from = p.size() > static_cast<std::size_t>(build.L)
                               ? p.size() - build.L
                               : 0;
        return std::vector<VertexId>(p.begin() + from, p.end());
    };

    for (const VertexPair &p : pairs) {
        Prep prep;
        prep.pair = p;
        if (!g.has_vertex(p.s) || !g.has_vertex(p.t)) throw input_error("unknown vertex in pair");
        if (!seen_pairs.insert(p).second) continue;
        if (p.s == p.t || !reachable_ids(g, p.s, p.t, {})) {
            prep.skip = true;
        } else {
            prep.skeleton = build_pair_skeleton(g, p.s, p.t);
            // As in the oracle: only full-length segments need hub coverage.
            for (const auto *strand : {&prep.skeleton->strands.p1, &prep.skeleton->strands.p2}) {
                for (bool front : {true, false}) {
                    auto seg = segment(*strand, front);
                    if (static_cast<int>(seg.size()) == build.L) {
                        family.sets.push_back(std::move(seg));
                        family_owner.push_back(static_cast<int>(preps.size()));
                    }
                }
            }
        }
        preps.push_back(std::move(prep));
    }

    HitResult hit = fractional_hitting_set(family, build.L);
    build.hitting = hit.chosen;
    std::vector<char> all_hit(preps.size(), 1);
    for (std::size_t f = 0; f < family.sets.size(); ++f)
        if (!hit.hit_mask[f]) all_hit[family_owner[f]] = 0;

    for (VertexId v : build.hitting) {
        build.hub_ftrs.add_all(providers.ftrs(g, v, 2, Dir::FromRoot).kept_host_ids);
        build.hub_ftrs.add_all(providers.ftrs(g, v, 2, Dir::ToRoot).kept_host_ids);
    }

    // Coupling paths whose target sits on a trailing strand segment of a
    // covered pair; these carry the nice paths that dodge the hitting set.
    struct PoolPath {
        std::vector<VertexId> vertices;
        std::vector<EdgeId> edges;
        bool alive = true;
    };
    std::vector<PoolPath> pool;

    for (std::size_t i = 0; i < preps.size(); ++i) {
        Prep &prep = preps[i];
        bool in_q = prep.skip || all_hit[i];
        if (!in_q) continue;
        build.covered.push_back(prep.pair);
        if (prep.skip) continue;
        const PairSkeleton &sk = *prep.skeleton;
        for (const auto *strand : {&sk.strands.p1, &sk.strands.p2}) {
            auto seg = segment(*strand, true);
            for (std::size_t v = 0; v + 1 < seg.size(); ++v)
                build.segments.add(*g.find_edge(seg[v], seg[v + 1]));
            seg = segment(*strand, false);
            for (std::size_t v = 0; v + 1 < seg.size(); ++v)
                build.segments.add(*g.find_edge(seg[v], seg[v + 1]));
        }
        std::unordered_set<VertexId> tail_segment;
        for (const auto *strand : {&sk.strands.p1, &sk.strands.p2})
            for (VertexId v : segment(*strand, false)) tail_segment.insert(v);
        for (const CouplingKey &key : sk.essential) {
            if (!tail_segment.count(key.first)) continue;
            const CouplingRecord &rec = sk.couplings.at(key);
            PoolPath path;
            path.vertices = rec.path.empty() ? std::vector<VertexId>{rec.target} : rec.path;
            path.edges = rec.path_edges;
            pool.push_back(std::move(path));
        }
    }
    build.initial_path_count = pool.size();

    build.heavy_threshold =
        ceil_sqrt_ll(static_cast<long long>(build.L) *
                     static_cast<long long>(build.covered.size()));
    std::map<VertexId, long long> freq;
    for (const PoolPath &path : pool)
        for (VertexId v : path.vertices) ++freq[v];
    while (true) {
        VertexId heavy = -1;
        for (const auto &[v, count] : freq) {
            if (count >= build.heavy_threshold) {
                heavy = v;
                break; // std::map iterates ascending: lowest id first
            }
        }
        if (heavy == -1) break;
        build.heavy.push_back(heavy);
        for (PoolPath &path : pool) {
            if (!path.alive) continue;
            if (std::find(path.vertices.begin(), path.vertices.end(), heavy) ==
                path.vertices.end())
                continue;
            path.alive = false;
            for (VertexId v : path.vertices) --freq[v];
        }
    }
    build.final_max_frequency = 0;
    for (const auto &[v, count] : freq)
        build.final_max_frequency = std::max(build.final_max_frequency, count);

    for (VertexId w : build.heavy) {
        build.heavy_ftrs.add_all(providers.ftrs(g, w, 2, Dir::FromRoot).kept_host_ids);
        build.heavy_ftrs.add_all(providers.ftrs(g, w, 2, Dir::ToRoot).kept_host_ids);
    }
    for (const PoolPath &path : pool)
        if (path.alive) build.surviving_paths.add_all(path.edges);

    build.result.unite(build.hub_ftrs);
    build.result.unite(build.segments);
    build.result.unite(build.heavy_ftrs);
    build.result.unite(build.surviving_paths);
    return build;
}

Subgraph build_dual_preserver(const DiGraph &g, const PairList &pairs,
                              const Providers &providers) {
    auto slack = [&providers](const DiGraph &graph, const PairList &subset) {
        DualPreserverBuild build = build_dual_preserver_slack(graph, subset, providers);
        return std::make_pair(std::move(build.result), std::move(build.covered));
    };
    auto base = [](const DiGraph &graph, VertexPair p) {
        if (p.s == p.t || !reachable_ids(graph, p.s, p.t, {})) return Subgraph(graph);
        return build_pair_skeleton(graph, p.s, p.t).kept;
    };
    return lift_preserver(slack, base, g, pairs);
}

} // namespace ftreach
