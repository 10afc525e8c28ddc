#include "ftreach/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

namespace ftreach {

long long failure_set_count(int m, int k) {
    long long total = 0;
    for (int r = 0; r <= k; ++r) {
        long long c = 1;
        for (int i = 0; i < r; ++i) {
            c = c * (m - i) / (i + 1);
            if (c > (1LL << 60)) return 1LL << 60;
        }
        if (r > m) c = 0;
        total += c;
        if (total > (1LL << 60)) return 1LL << 60;
    }
    return total;
}

bool brute_reachable_edges(const DiGraph &g, VertexId s, VertexId t,
                           const std::vector<EdgeId> &failed) {
    return reachable_ids(g, s, t, failed);
}

bool brute_reachable_vertices(const DiGraph &g, VertexId s, VertexId t,
                              const std::vector<VertexId> &failed) {
    for (VertexId x : failed)
        if (x == s || x == t) return false;
    if (s == t) return true;
    std::vector<char> removed(g.n(), 0);
    for (VertexId x : failed) removed.at(x) = 1;
    return reach_mask(g, s, Dir::FromRoot, {}, removed)[t] != 0;
}

namespace {

// Enumerates subsets of {0..m-1} of size <= k in lexicographic order of the
// sorted id tuples, size 0 first. Returns false when the callback stops early.
bool for_each_subset(int m, int k, const std::function<bool(const std::vector<int> &)> &fn) {
    std::vector<int> subset;
    if (!fn(subset)) return false;
    for (int size = 1; size <= k; ++size) {
        // lexicographic within each size; sizes ascending
        std::function<bool(int, int, int)> rec_sz = [&](int start, int depth, int target) {
            for (int i = start; i < m; ++i) {
                subset.push_back(i);
                if (depth + 1 == target) {
                    if (!fn(subset)) {
                        subset.pop_back();
                        return false;
                    }
                } else if (!rec_sz(i + 1, depth + 1, target)) {
                    subset.pop_back();
                    return false;
                }
                subset.pop_back();
            }
            return true;
        };
        if (!rec_sz(0, 0, size)) return false;
    }
    return true;
}

std::vector<int> sample_subset(std::mt19937_64 &rng, int m, int k) {
    if (m == 0 || k == 0) return {};
    int size = static_cast<int>(rng() % static_cast<std::uint64_t>(k + 1));
    size = std::min(size, m);
    std::vector<int> picked;
    while (static_cast<int>(picked.size()) < size) {
        int candidate = static_cast<int>(rng() % static_cast<std::uint64_t>(m));
        if (std::find(picked.begin(), picked.end(), candidate) == picked.end())
            picked.push_back(candidate);
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

} // namespace

CheckReport is_k_ftrs(const DiGraph &g, const Subgraph &h, const PairList &pairs,
                      int k, const CheckOptions &options) {
    Timer timer;
    CheckReport report;
    auto compare = [&](const std::vector<EdgeId> &failed) {
        for (const VertexPair &p : pairs) {
            bool expected = brute_reachable_edges(g, p.s, p.t, failed);
            bool got = reachable_in(h, p.s, p.t, failed);
            ++report.total_queries;
            if (expected != got &&
                static_cast<long long>(report.mismatches.size()) < options.max_mismatches)
                report.mismatches.push_back({p, failed, {}, expected, got});
        }
        return static_cast<long long>(report.mismatches.size()) < options.max_mismatches;
    };

    if (options.sample) {
        report.sampled = true;
        std::mt19937_64 rng(options.seed);
        for (long long i = 0; i < *options.sample; ++i)
            if (!compare(sample_subset(rng, g.m(), k))) break;
    } else {
        if (failure_set_count(g.m(), k) > options.budget)
            throw budget_error("failure enumeration exceeds budget; pass a sample count");
        for_each_subset(g.m(), k, compare);
    }
    report.elapsed_seconds = timer.seconds();
    return report;
}

CheckReport check_oracle(const OracleFn &oracle, const DiGraph &g, const PairList &pairs,
                         FailMode mode, int k, const CheckOptions &options) {
    Timer timer;
    CheckReport report;
    const int universe = mode == FailMode::Edge ? g.m() : g.n();
    auto compare = [&](const std::vector<int> &failed) {
        for (const VertexPair &p : pairs) {
            bool expected, got;
            if (mode == FailMode::Edge) {
                expected = brute_reachable_edges(g, p.s, p.t, failed);
                got = oracle(p, failed, {});
            } else {
                expected = brute_reachable_vertices(g, p.s, p.t, failed);
                got = oracle(p, {}, failed);
            }
            ++report.total_queries;
            if (expected != got &&
                static_cast<long long>(report.mismatches.size()) < options.max_mismatches) {
                Mismatch mm{p, {}, {}, expected, got};
                (mode == FailMode::Edge ? mm.failed_edges : mm.failed_vertices) = failed;
                report.mismatches.push_back(mm);
            }
        }
        return static_cast<long long>(report.mismatches.size()) < options.max_mismatches;
    };

    if (options.sample) {
        report.sampled = true;
        std::mt19937_64 rng(options.seed);
        for (long long i = 0; i < *options.sample; ++i)
            if (!compare(sample_subset(rng, universe, k))) break;
    } else {
        if (failure_set_count(universe, k) > options.budget)
            throw budget_error("failure enumeration exceeds budget; pass a sample count");
        for_each_subset(universe, k, compare);
    }
    report.elapsed_seconds = timer.seconds();
    return report;
}

std::string describe(const Mismatch &mm, const DiGraph &g) {
    std::ostringstream os;
    os << "pair " << mm.pair.s << ' ' << mm.pair.t << " F";
    for (EdgeId e : mm.failed_edges)
        os << " (" << g.edge(e).tail << ',' << g.edge(e).head << ')';
    for (VertexId v : mm.failed_vertices) os << " v" << v;
    os << " expected " << (mm.expected ? 1 : 0) << " got " << (mm.got ? 1 : 0);
    return os.str();
}

} // namespace ftreach
