#include "ftreach/hitting_set.hpp"

#include <algorithm>

namespace ftreach {

HitResult fractional_hitting_set(const SetFamily &family, int k) {
    const int n = family.universe_size;
    const int m = static_cast<int>(family.sets.size());
    if (k <= 0) throw input_error("hitting set: k must be positive");
    for (const auto &set : family.sets) {
        if (static_cast<int>(set.size()) < k)
            throw input_error("hitting set: set smaller than k");
        for (VertexId v : set)
            if (v < 0 || v >= n) throw input_error("hitting set: element out of universe");
    }

    HitResult result;
    result.hit_mask.assign(m, 0);
    if (m == 0 || n == 0) return result;

    std::vector<std::vector<int>> sets_of(n);
    for (int i = 0; i < m; ++i)
        for (VertexId v : family.sets[i]) sets_of[v].push_back(i);

    std::vector<long long> count(n, 0);
    for (VertexId v = 0; v < n; ++v) count[v] = static_cast<long long>(sets_of[v].size());

    const long long rounds = (4LL * n + k - 1) / k;
    int remaining = m;
    for (long long round = 0; round < rounds && remaining > 0; ++round) {
        VertexId best = -1;
        for (VertexId v = 0; v < n; ++v)
            if (count[v] > 0 && (best == -1 || count[v] > count[best])) best = v;
        if (best == -1) break;
        result.chosen.push_back(best);
        for (int set_idx : sets_of[best]) {
            if (result.hit_mask[set_idx]) continue;
            result.hit_mask[set_idx] = 1;
            --remaining;
            for (VertexId v : family.sets[set_idx]) --count[v];
        }
    }
    result.hit_count = m - remaining;
    return result;
}

} // namespace ftreach
