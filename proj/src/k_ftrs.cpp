#include "ftreach/k_ftrs.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace ftreach {

long long default_ell(int k, int n, std::size_t pair_count) {
    if (n <= 1 || pair_count == 0) return 1;
    double value = static_cast<double>(k) * std::ldexp(1.0, k) *
                   static_cast<double>(n) * n / static_cast<double>(pair_count) *
                   std::log(static_cast<double>(n));
    double ell = std::ceil(std::pow(value, 1.0 / (k + 1)));
    return std::max<long long>(1, static_cast<long long>(ell));
}

StrandPair disjoint_paths_after(const DiGraph &g, const std::vector<EdgeId> &failed_ids,
                                VertexId s, VertexId t) {
    return strands_filtered(g, s, t, edge_id_mask(g, failed_ids));
}

namespace {

std::optional<long long> dist_edges(const DiGraph &g, VertexId s, VertexId t,
                                    const std::vector<char> &blocked) {
    auto path = bfs_path(g, s, t, blocked);
    if (!path) return std::nullopt;
    return static_cast<long long>(path->size());
}

} // namespace

ShortFailureSets enumerate_short_failure_sets(const DiGraph &g, VertexId s, VertexId t,
                                              int k, long long ell) {
    if (k < 1) throw input_error("failure budget must be at least 1");
    if (!g.has_vertex(s) || !g.has_vertex(t)) throw input_error("unknown vertex");
    ShortFailureSets out;
    out.levels.resize(k);

    std::vector<char> blocked(g.m(), 0);
    auto d0 = dist_edges(g, s, t, blocked);
    if (d0 && *d0 <= ell) out.levels[0].push_back({});

    for (int r = 1; r < k; ++r) {
        std::set<std::vector<EdgeId>> seen;
        for (const auto &parent : out.levels[r - 1]) {
            std::fill(blocked.begin(), blocked.end(), 0);
            for (EdgeId e : parent) blocked[e] = 1;
            auto path = bfs_path(g, s, t, blocked);
            if (!path) continue; // parent distance was finite by construction
            for (EdgeId e : *path) {
                blocked[e] = 1;
                auto d = dist_edges(g, s, t, blocked);
                blocked[e] = 0;
                if (!d || *d > ell) continue;
                std::vector<EdgeId> child(parent);
                child.push_back(e);
                std::sort(child.begin(), child.end());
                seen.insert(std::move(child));
            }
        }
        out.levels[r].assign(seen.begin(), seen.end());
        // each parent branches over one path of at most ell edges
        double cap = std::pow(static_cast<double>(ell), r);
        if (cap <= 1e18 && static_cast<double>(out.levels[r].size()) > cap)
            throw std::logic_error("failure family exceeded its branching bound");
    }

    for (int r = 0; r < k; ++r) {
        for (const auto &failure : out.levels[r]) {
            StrandPair qs = disjoint_paths_after(g, failure, s, t);
            ShortFailureSets::Admitted adm;
            adm.failures = failure;
            adm.keep_first = static_cast<long long>(qs.p1_edges.size()) <= ell;
            adm.keep_second = static_cast<long long>(qs.p2_edges.size()) <= ell;
            if (adm.keep_first || adm.keep_second)
                out.admitted.push_back(std::move(adm));
        }
    }
    return out;
}

KFtrsResult build_k_ftrs(const DiGraph &g, const PairList &pairs,
                         const KFtrsParams &params, const Providers &providers) {
    if (params.k < 1) throw input_error("failure budget must be at least 1");
    KFtrsResult result;
    result.sub = Subgraph(g);
    if (pairs.empty()) return result;

    result.ell = params.ell > 0 ? params.ell : default_ell(params.k, g.n(), pairs.size());

    std::size_t sample_size = 0;
    if (g.n() > 0) {
        double want = params.sample_c * params.k *
                      (static_cast<double>(g.n()) / static_cast<double>(result.ell)) *
                      std::log(std::max(2.0, static_cast<double>(g.n())));
        want = std::ceil(std::max(0.0, want));
        sample_size = static_cast<std::size_t>(
            std::min<double>(g.n(), std::min(want, 1e9)));
    }
    std::vector<VertexId> deck(g.n());
    for (VertexId v = 0; v < g.n(); ++v) deck[v] = v;
    std::mt19937_64 rng(params.seed);
    for (std::size_t i = 0; i < sample_size; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng() % (deck.size() - i));
        std::swap(deck[i], deck[j]);
    }
    result.sampled.assign(deck.begin(), deck.begin() + sample_size);

    for (VertexId w : result.sampled) {
        result.sub.add_all(providers.ftrs(g, w, params.k, Dir::FromRoot).kept_host_ids);
        result.sub.add_all(providers.ftrs(g, w, params.k, Dir::ToRoot).kept_host_ids);
    }

    std::set<VertexPair> seen;
    for (const VertexPair &p : pairs) {
        if (!g.has_vertex(p.s) || !g.has_vertex(p.t)) throw input_error("unknown vertex in pair");
        if (p.s == p.t || !seen.insert(p).second) continue;
        auto short_sets = enumerate_short_failure_sets(g, p.s, p.t, params.k, result.ell);
        for (const auto &adm : short_sets.admitted) {
            StrandPair qs = disjoint_paths_after(g, adm.failures, p.s, p.t);
            if (adm.keep_first) result.sub.add_all(qs.p1_edges);
            if (adm.keep_second) result.sub.add_all(qs.p2_edges);
        }
    }
    return result;
}

} // namespace ftreach
