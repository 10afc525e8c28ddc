#pragma once

#include "ftreach/digraph.hpp"

#include <vector>

namespace ftreach {

struct SetFamily {
    int universe_size = 0;
    std::vector<std::vector<VertexId>> sets;
};

struct HitResult {
    std::vector<VertexId> chosen; // in pick order
    std::vector<char> hit_mask;   // per input set
    int hit_count = 0;
};

// Greedy max-coverage run for ceil(4n/k) rounds or until every set is hit,
// ties broken by lowest vertex id. When every set has size >= k the result
// hits at least 9/10 of the sets and |chosen| <= ceil(4n/k).
HitResult fractional_hitting_set(const SetFamily &family, int k);

} // namespace ftreach
