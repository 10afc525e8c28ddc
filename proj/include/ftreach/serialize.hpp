#pragma once

#include "ftreach/digraph.hpp"
#include "ftreach/dual_oracle.hpp"
#include "ftreach/k_ftrs.hpp"
#include "ftreach/pair_skeleton.hpp"
#include "ftreach/single_oracle.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace ftreach {

// CLI-facing wrapper for per-pair skeletons: one stored subgraph per pair.
struct StoredSkeletons {
    struct Entry {
        VertexPair pair;
        bool trivial = false, unreachable = false;
        DiGraph sub;
    };
    std::vector<Entry> entries;
    std::map<VertexPair, int> index;

    bool query(VertexPair pair, const EdgeList &failures) const;
    std::size_t words() const;
};

StoredSkeletons build_stored_skeletons(const DiGraph &g, const PairList &pairs);

// CLI-facing wrapper for preserver outputs (dual-preserver, k-ftrs).
struct StoredSubgraph {
    std::string kind; // "dual-preserver" or "k-ftrs"
    int k = 2;
    long long ell = 0;
    std::vector<VertexId> sampled;
    DiGraph sub;

    bool query(VertexPair pair, const EdgeList &failures) const;
    std::size_t words() const { return 3 + sampled.size() + 2 * sub.m(); }
};

// Tagged union of every structure the CLI can build, save, load, and query.
struct AnyStructure {
    std::string kind;
    std::optional<StoredSkeletons> skeletons;
    std::optional<DualOracle> dual;
    std::optional<VertexFailOracle> vertex_oracle;
    std::optional<EdgeFailOracle> edge_oracle;
    std::optional<StoredSubgraph> stored;

    bool query(VertexPair pair, const EdgeList &edge_failures,
               const std::vector<VertexId> &vertex_failures) const;
    std::size_t words() const;
    std::size_t edges_kept() const;
};

void save_structure(std::ostream &os, const AnyStructure &structure);
AnyStructure load_structure(std::istream &is);

} // namespace ftreach
