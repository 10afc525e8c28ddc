#include "ftreach/dual_oracle.hpp"

#include "ftreach/hitting_set.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace ftreach {

namespace {

int ceil_sqrt(long long x) {
    int r = 0;
    while (static_cast<long long>(r) * r < x) ++r;
    return r;
}

int segment_length(const DiGraph &g, std::size_t pair_count) {
    int root = std::max(1, ceil_sqrt(static_cast<long long>(pair_count)));
    return std::max(1, (g.n() + root - 1) / root);
}

// The four strand segments: strand-1 prefix, strand-1 suffix, strand-2
// prefix, strand-2 suffix, each truncated to L vertices.
std::array<std::vector<VertexId>, 4> segments_of(const StrandPair &st, int L) {
    auto prefix = [&](const std::vector<VertexId> &p) {
        return std::vector<VertexId>(p.begin(),
                                     p.begin() + std::min<std::size_t>(L, p.size()));
    };
    auto suffix = [&](const std::vector<VertexId> &p) {
        std::size_t from = p.size() > static_cast<std::size_t>(L) ? p.size() - L : 0;
        return std::vector<VertexId>(p.begin() + from, p.end());
    };
    return {prefix(st.p1), suffix(st.p1), prefix(st.p2), suffix(st.p2)};
}

} // namespace

AuxGraph aux_graph(const PairSkeleton &sk, int L) {
    AuxGraph aux;
    auto segs = segments_of(sk.strands, L);
    for (const auto &seg : segs) {
        for (VertexId v : seg) {
            if (!aux.aux_of.count(v)) {
                aux.aux_of.emplace(v, static_cast<int>(aux.origin.size()));
                aux.origin.push_back(v);
            }
        }
    }
    aux.graph = DiGraph(static_cast<int>(aux.origin.size()));

    auto add_once = [&](int u, int v) {
        if (aux.graph.find_edge(u, v)) return false;
        aux.graph.add_edge(u, v);
        aux.off_strand.push_back(0);
        return true;
    };
    const std::vector<VertexId> *strand_verts[2] = {&sk.strands.p1, &sk.strands.p2};
    for (int i = 0; i < 2; ++i) {
        const auto &verts = *strand_verts[i];
        int len = static_cast<int>(verts.size());
        int pre = std::min(L, len);
        int suf_from = std::max(0, len - L);
        for (int p = 0; p + 1 < len; ++p) {
            bool in_prefix = p + 1 <= pre - 1;
            bool in_suffix = p >= suf_from;
            if (!in_prefix && !in_suffix) continue;
            if (add_once(aux.aux_of.at(verts[p]), aux.aux_of.at(verts[p + 1])))
                ++aux.path_edge_count;
        }
    }

    if (sk.s != sk.t) {
        const DiGraph &g = *sk.host;
        std::vector<char> blocked(g.m(), 1);
        for (EdgeId e = 0; e < g.m(); ++e)
            if (sk.kept.has(e)) blocked[e] = 0;
        for (EdgeId e : sk.strands.p1_edges) blocked[e] = 1;
        for (EdgeId e : sk.strands.p2_edges) blocked[e] = 1;
        for (std::size_t u = 0; u < aux.origin.size(); ++u) {
            auto reach = reach_mask(g, aux.origin[u], Dir::FromRoot, blocked);
            for (std::size_t v = 0; v < aux.origin.size(); ++v) {
                if (u == v || !reach[aux.origin[v]]) continue;
                add_once(static_cast<int>(u), static_cast<int>(v));
                aux.off_strand[*aux.graph.find_edge(static_cast<int>(u),
                                                    static_cast<int>(v))] = 1;
                ++aux.aux_edge_count;
            }
        }
    }
    return aux;
}

std::size_t DualOracleSlack::words() const {
    std::size_t w = 1 + hitting.size();
    for (const auto &o : to_hub) w += o.words();
    for (const auto &o : from_hub) w += o.words();
    for (const auto &rec : records) {
        w += 4 + rec.table.size();
        w += 1 + rec.aux.origin.size() * 2 + 2 * rec.aux.graph.m();
        w += rec.aux_oracle.words();
    }
    return w;
}

DualOracleSlack build_dual_oracle_slack(const DiGraph &g, const PairList &pairs,
                                        const Providers &providers) {
    if (pairs.empty()) throw input_error("slack construction needs at least one pair");
    DualOracleSlack oracle;
    oracle.L = segment_length(g, pairs.size());

    struct Prep {
        VertexPair pair;
        bool trivial = false, unreachable = false;
        std::optional<PairSkeleton> skeleton;
        std::array<std::vector<VertexId>, 4> segs;
    };
    std::vector<Prep> preps;
    SetFamily family;
    family.universe_size = g.n();
    std::vector<std::pair<int, int>> family_owner; // (prep index, segment slot)
    std::set<VertexPair> seen_pairs;

    for (const VertexPair &p : pairs) {
        Prep prep;
        prep.pair = p;
        if (!g.has_vertex(p.s) || !g.has_vertex(p.t)) throw input_error("unknown vertex in pair");
        if (!seen_pairs.insert(p).second) continue;
        if (p.s == p.t) {
            prep.trivial = true;
        } else if (!reachable_ids(g, p.s, p.t, {})) {
            prep.unreachable = true;
        } else {
            prep.skeleton = build_pair_skeleton(g, p.s, p.t);
            prep.segs = segments_of(prep.skeleton->strands, oracle.L);
            // Only full-length segments join the hitting family: a truncated
            // segment covers its whole strand, so no surviving route can
            // bypass it, but a full-length one needs a stored hub.
            for (int slot = 0; slot < 4; ++slot) {
                if (static_cast<int>(prep.segs[slot].size()) == oracle.L) {
                    family.sets.push_back(prep.segs[slot]);
                    family_owner.emplace_back(static_cast<int>(preps.size()), slot);
                }
            }
        }
        preps.push_back(std::move(prep));
    }

    HitResult hit = fractional_hitting_set(family, oracle.L);
    oracle.hitting = hit.chosen;
    std::unordered_set<VertexId> hit_set(hit.chosen.begin(), hit.chosen.end());
    for (std::size_t i = 0; i < oracle.hitting.size(); ++i) {
        VertexId v = oracle.hitting[i];
        oracle.hub_index.emplace(v, static_cast<int>(i));
        oracle.to_hub.push_back(providers.ftro(g, v, Dir::ToRoot));
        oracle.from_hub.push_back(providers.ftro(g, v, Dir::FromRoot));
    }

    std::vector<std::array<char, 4>> slot_hit(preps.size(), {1, 1, 1, 1});
    for (std::size_t f = 0; f < family.sets.size(); ++f) {
        auto [prep_idx, slot] = family_owner[f];
        slot_hit[prep_idx][slot] = hit.hit_mask[f];
    }

    for (std::size_t i = 0; i < preps.size(); ++i) {
        Prep &prep = preps[i];
        bool in_q = prep.trivial || prep.unreachable ||
                    (slot_hit[i][0] && slot_hit[i][1] && slot_hit[i][2] && slot_hit[i][3]);
        if (!in_q) continue;
        DualOracleSlack::PairRecord rec;
        rec.pair = prep.pair;
        rec.trivial = prep.trivial;
        rec.unreachable = prep.unreachable;
        if (!prep.trivial && !prep.unreachable) {
            for (int slot = 0; slot < 4; ++slot) {
                for (VertexId v : prep.segs[slot]) {
                    if (hit_set.count(v)) {
                        rec.table[slot] = v;
                        break;
                    }
                }
            }
            rec.aux = aux_graph(*prep.skeleton, oracle.L);
            rec.aux_oracle =
                providers.ftro(rec.aux.graph, rec.aux.aux_of.at(prep.pair.s), Dir::FromRoot);
        }
        oracle.record_of.emplace(prep.pair, static_cast<int>(oracle.records.size()));
        oracle.records.push_back(std::move(rec));
        oracle.covered.push_back(prep.pair);
    }
    return oracle;
}

bool query_slack(const DualOracleSlack &oracle, VertexPair pair, const EdgeList &failures) {
    auto it = oracle.record_of.find(pair);
    if (it == oracle.record_of.end())
        throw input_error("pair is not covered by this slack level");
    if (failures.size() > 2) throw input_error("oracle accepts at most two failures");
    const auto &rec = oracle.records[it->second];
    if (rec.trivial) return true;
    if (rec.unreachable) return false;

    for (const auto &entry : rec.table) {
        if (!entry) continue;
        int idx = oracle.hub_index.at(*entry);
        if (oracle.to_hub[idx].query(pair.s, failures) &&
            oracle.from_hub[idx].query(pair.t, failures))
            return true;
    }

    EdgeList translated;
    for (const Edge &f : failures) {
        auto u = rec.aux.aux_of.find(f.tail);
        auto v = rec.aux.aux_of.find(f.head);
        if (u == rec.aux.aux_of.end() || v == rec.aux.aux_of.end()) continue;
        auto id = rec.aux.graph.find_edge(u->second, v->second);
        if (!id || rec.aux.off_strand[*id]) continue; // only pure path edges fail
        translated.push_back({u->second, v->second});
    }
    return rec.aux_oracle.query(rec.aux.aux_of.at(pair.t), translated);
}

std::size_t DualOracle::words() const {
    std::size_t w = lifted.route.size();
    for (const auto &level : lifted.levels) w += level.words();
    for (const auto &base : lifted.bases) w += base.words();
    return w;
}

bool DualOracle::query(VertexPair pair, const EdgeList &failures) const {
    auto it = lifted.route.find(pair);
    if (it == lifted.route.end()) throw input_error("unknown query pair");
    auto [kind, idx] = it->second;
    if (kind == 0) return query_slack(lifted.levels[idx], pair, failures);
    const PairBase &base = lifted.bases[idx];
    if (base.trivial) return true;
    if (base.unreachable) return false;
    if (failures.size() > 2) throw input_error("oracle accepts at most two failures");
    std::vector<EdgeId> failed;
    for (const Edge &f : failures)
        if (auto id = base.sub.find_edge(f.tail, f.head)) failed.push_back(*id);
    return reachable_ids(base.sub, pair.s, pair.t, failed);
}

DualOracle build_dual_oracle(const DiGraph &g, const PairList &pairs,
                             const Providers &providers) {
    auto slack = [&providers](const DiGraph &graph, const PairList &subset) {
        DualOracleSlack level = build_dual_oracle_slack(graph, subset, providers);
        PairList covered = level.covered;
        return std::make_pair(std::move(level), std::move(covered));
    };
    auto base = [](const DiGraph &graph, VertexPair p) {
        DualOracle::PairBase b;
        b.pair = p;
        if (p.s == p.t) {
            b.trivial = true;
        } else if (!reachable_ids(graph, p.s, p.t, {})) {
            b.unreachable = true;
        } else {
            b.sub = build_pair_skeleton(graph, p.s, p.t).kept.materialize();
        }
        return b;
    };
    DualOracle oracle;
    oracle.lifted =
        lift_oracle<DualOracleSlack, DualOracle::PairBase>(slack, base, g, pairs);
    return oracle;
}

} // namespace ftreach
