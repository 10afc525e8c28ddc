#pragma once

#include "ftreach/digraph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace ftreach {

class contract_violation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline int lift_level_cap(std::size_t pair_count) {
    if (pair_count < 2) return 2;
    return static_cast<int>(std::ceil(std::log(static_cast<double>(pair_count)) /
                                      std::log(2.5))) +
           2;
}

namespace detail {

inline PairList unique_pairs(const PairList &pairs) {
    PairList out;
    std::set<VertexPair> seen;
    for (const VertexPair &p : pairs)
        if (seen.insert(p).second) out.push_back(p);
    return out;
}

inline PairList subtract(const PairList &pairs, const PairList &covered) {
    std::set<VertexPair> gone(covered.begin(), covered.end());
    PairList out;
    for (const VertexPair &p : pairs)
        if (!gone.count(p)) out.push_back(p);
    return out;
}

} // namespace detail

// Repeatedly applies a slack builder (which must cover at least 3/5 of two
// or more pairs per level), then finishes any leftover pair with the
// single-pair base builder. Returns the union of all kept edges.
//
// slack_builder: (g, pairs) -> std::pair<Subgraph, PairList>
// base_builder:  (g, pair)  -> Subgraph
template <class SlackBuilder, class BaseBuilder>
Subgraph lift_preserver(SlackBuilder &&slack_builder, BaseBuilder &&base_builder,
                        const DiGraph &g, const PairList &pairs) {
    Subgraph result(g);
    PairList remaining = detail::unique_pairs(pairs);
    const int cap = lift_level_cap(remaining.size());
    int levels = 0;
    while (remaining.size() >= 2) {
        if (++levels > cap)
            throw contract_violation("slack recursion exceeded its level cap");
        auto [sub, covered] = slack_builder(g, remaining);
        if (covered.empty())
            throw contract_violation("slack builder covered no pairs");
        result.unite(sub);
        remaining = detail::subtract(remaining, covered);
    }
    for (const VertexPair &p : remaining) result.unite(base_builder(g, p));
    return result;
}

// Per-pair routing table over slack levels plus single-pair base structures.
// Every input pair is served by exactly one entry.
template <class Level, class Base>
struct LiftedOracle {
    std::vector<Level> levels;
    std::vector<Base> bases;
    // pair -> (0, level index) or (1, base index)
    std::map<VertexPair, std::pair<int, int>> route;
    std::vector<std::size_t> level_inputs, level_covered;

    bool has_pair(const VertexPair &p) const { return route.count(p) != 0; }
};

// slack_builder: (g, pairs) -> std::pair<Level, PairList>
// base_builder:  (g, pair)  -> Base
template <class Level, class Base, class SlackBuilder, class BaseBuilder>
LiftedOracle<Level, Base> lift_oracle(SlackBuilder &&slack_builder,
                                      BaseBuilder &&base_builder, const DiGraph &g,
                                      const PairList &pairs) {
    LiftedOracle<Level, Base> oracle;
    PairList remaining = detail::unique_pairs(pairs);
    const int cap = lift_level_cap(remaining.size());
    int levels = 0;
    while (remaining.size() >= 2) {
        if (++levels > cap)
            throw contract_violation("slack recursion exceeded its level cap");
        auto [level, covered] = slack_builder(g, remaining);
        if (covered.empty())
            throw contract_violation("slack builder covered no pairs");
        int idx = static_cast<int>(oracle.levels.size());
        oracle.levels.push_back(std::move(level));
        oracle.level_inputs.push_back(remaining.size());
        oracle.level_covered.push_back(covered.size());
        for (const VertexPair &p : covered) oracle.route[p] = {0, idx};
        remaining = detail::subtract(remaining, covered);
    }
    for (const VertexPair &p : remaining) {
        int idx = static_cast<int>(oracle.bases.size());
        oracle.bases.push_back(base_builder(g, p));
        oracle.route[p] = {1, idx};
    }
    return oracle;
}

} // namespace ftreach
