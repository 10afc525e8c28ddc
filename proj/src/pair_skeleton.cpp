#include "ftreach/pair_skeleton.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace ftreach {

namespace {

struct StrandIndex {
    std::vector<VertexId> verts;
    std::vector<EdgeId> edges;
    std::unordered_map<VertexId, int> pos;
};

StrandIndex index_strand(const std::vector<VertexId> &verts,
                         const std::vector<EdgeId> &edges) {
    StrandIndex idx;
    idx.verts = verts;
    idx.edges = edges;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) idx.pos[verts[i]] = i;
    return idx;
}

} // namespace

std::size_t PairSkeleton::words() const {
    std::size_t w = 3 + strands.p1.size() + strands.p2.size() + kept.edge_count();
    for (const auto &kv : couplings) w += 4 + kv.second.path.size();
    return w + essential.size() * 2;
}

PairSkeleton build_pair_skeleton(const DiGraph &g, VertexId s, VertexId t) {
    PairSkeleton sk;
    sk.host = &g;
    sk.s = s;
    sk.t = t;
    sk.kept = Subgraph(g);
    sk.strands = strands(g, s, t); // throws if t is unreachable
    sk.kept.add_all(sk.strands.p1_edges);
    sk.kept.add_all(sk.strands.p2_edges);
    if (s == t) return sk;

    const StrandIndex strand[2] = {index_strand(sk.strands.p1, sk.strands.p1_edges),
                                   index_strand(sk.strands.p2, sk.strands.p2_edges)};

    std::vector<char> off(g.m(), 0); // blocks strand edges
    for (EdgeId e : sk.strands.p1_edges) off[e] = 1;
    for (EdgeId e : sk.strands.p2_edges) off[e] = 1;

    // Deduplicated strand vertex set, strand-1 order then new strand-2 ones.
    std::vector<VertexId> targets;
    {
        std::unordered_set<VertexId> seen;
        for (const auto &si : strand)
            for (VertexId v : si.verts)
                if (seen.insert(v).second) targets.push_back(v);
    }

    std::unordered_map<VertexId, std::vector<char>> reach_off;
    for (VertexId v : targets) reach_off.emplace(v, reach_mask(g, v, Dir::FromRoot, off));

    // Earliest strand-i vertex that reaches each target off-strand; a vertex
    // trivially reaches itself.
    for (VertexId v : targets) {
        for (int i = 0; i < 2; ++i) {
            for (VertexId u : strand[i].verts) {
                if (!reach_off.at(u)[v]) continue;
                CouplingRecord rec;
                rec.anchor = u;
                rec.anchor_strand = i + 1;
                rec.target = v;
                if (u != v) {
                    auto path = bfs_path(g, u, v, off);
                    rec.path_edges = *path;
                    rec.path = path_vertices(g, u, rec.path_edges);
                }
                sk.couplings.emplace(CouplingKey{v, i + 1}, std::move(rec));
                break;
            }
        }
    }

    // Admission: the anchor of v must strictly precede the anchor of every
    // later vertex on v's strand (per anchor strand); undefined anchors never
    // block.
    auto anchor_pos = [&](VertexId v, int i) -> std::optional<int> {
        auto it = sk.couplings.find({v, i + 1});
        if (it == sk.couplings.end()) return std::nullopt;
        return strand[i].pos.at(it->second.anchor);
    };
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const auto &sj = strand[j];
            for (int vp = 0; vp < static_cast<int>(sj.verts.size()); ++vp) {
                VertexId v = sj.verts[vp];
                auto mine = anchor_pos(v, i);
                if (!mine) continue;
                bool admit = true;
                for (int wp = vp + 1; wp < static_cast<int>(sj.verts.size()) && admit; ++wp) {
                    auto later = anchor_pos(sj.verts[wp], i);
                    if (later && *later <= *mine) admit = false;
                }
                if (admit) sk.essential.insert({v, i + 1});
            }
        }
    }
    for (const CouplingKey &key : sk.essential)
        sk.kept.add_all(sk.couplings.at(key).path_edges);
    return sk;
}

std::optional<NicePath> find_nice_path(const PairSkeleton &sk,
                                       const std::vector<EdgeId> &failed_ids) {
    if (failed_ids.size() > 2) throw input_error("nice path search allows at most two failures");
    std::unordered_set<EdgeId> failed(failed_ids.begin(), failed_ids.end());
    auto survives = [&](const std::vector<EdgeId> &edges, int from, int count) {
        for (int i = from; i < from + count; ++i)
            if (failed.count(edges[i])) return false;
        return true;
    };

    if (sk.s == sk.t)
        return NicePath{1, 1, sk.s, sk.s, {sk.s}};

    const std::vector<VertexId> *verts[2] = {&sk.strands.p1, &sk.strands.p2};
    const std::vector<EdgeId> *edges[2] = {&sk.strands.p1_edges, &sk.strands.p2_edges};

    for (int i = 0; i < 2; ++i) {
        if (survives(*edges[i], 0, static_cast<int>(edges[i]->size())))
            return NicePath{i + 1, i + 1, sk.t, sk.t, *verts[i]};
    }

    auto pos_on = [&](int i, VertexId v) -> std::optional<int> {
        const auto &vs = *verts[i];
        for (int p = 0; p < static_cast<int>(vs.size()); ++p)
            if (vs[p] == v) return p;
        return std::nullopt;
    };

    for (const CouplingKey &key : sk.essential) {
        const CouplingRecord &rec = sk.couplings.at(key);
        int i = rec.anchor_strand - 1;
        auto upos = pos_on(i, rec.anchor);
        if (!upos || !survives(*edges[i], 0, *upos)) continue;
        if (!survives(rec.path_edges, 0, static_cast<int>(rec.path_edges.size()))) continue;
        for (int j = 0; j < 2; ++j) {
            auto vpos = pos_on(j, rec.target);
            if (!vpos) continue;
            int suffix_len = static_cast<int>(edges[j]->size()) - *vpos;
            if (!survives(*edges[j], *vpos, suffix_len)) continue;
            NicePath nice;
            nice.prefix_strand = i + 1;
            nice.suffix_strand = j + 1;
            nice.anchor = rec.anchor;
            nice.target = rec.target;
            nice.vertices.assign(verts[i]->begin(), verts[i]->begin() + *upos + 1);
            if (!rec.path.empty())
                nice.vertices.insert(nice.vertices.end(), rec.path.begin() + 1, rec.path.end());
            nice.vertices.insert(nice.vertices.end(), verts[j]->begin() + *vpos + 1,
                                 verts[j]->end());
            return nice;
        }
    }
    return std::nullopt;
}

} // namespace ftreach
