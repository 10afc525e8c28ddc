#pragma once

#include "ftreach/digraph.hpp"
#include "ftreach/graph_core.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ftreach {

enum class FailMode { Edge, Vertex };

struct Mismatch {
    VertexPair pair;
    std::vector<EdgeId> failed_edges;    // edge mode
    std::vector<VertexId> failed_vertices; // vertex mode
    bool expected = false;
    bool got = false;
};

struct CheckReport {
    long long total_queries = 0;
    std::vector<Mismatch> mismatches;
    double elapsed_seconds = 0.0;
    bool sampled = false;
    bool pass() const { return mismatches.empty(); }
};

struct CheckOptions {
    long long budget = 10'000'000;       // max enumerated failure sets
    std::optional<long long> sample;     // sample count instead of enumeration
    std::uint64_t seed = 0;
    long long max_mismatches = 1'000'000; // stop collecting past this
};

class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Number of failure sets of size <= k over m elements, saturating.
long long failure_set_count(int m, int k);

// Ground truth: does s reach t in g with the given elements removed?
bool brute_reachable_edges(const DiGraph &g, VertexId s, VertexId t,
                           const std::vector<EdgeId> &failed);
bool brute_reachable_vertices(const DiGraph &g, VertexId s, VertexId t,
                              const std::vector<VertexId> &failed);

// Compares reachability in g against the subgraph h for every pair and
// every failure set of at most k edges (enumerated lexicographically, or
// seeded-sampled when options request it or the budget is exceeded with
// sampling enabled).
CheckReport is_k_ftrs(const DiGraph &g, const Subgraph &h, const PairList &pairs,
                      int k, const CheckOptions &options = {});

// Oracle answer for a pair under a failure set; edge mode receives edge ids,
// vertex mode receives vertex ids.
using OracleFn =
    std::function<bool(VertexPair, const std::vector<EdgeId> &, const std::vector<VertexId> &)>;

CheckReport check_oracle(const OracleFn &oracle, const DiGraph &g, const PairList &pairs,
                         FailMode mode, int k, const CheckOptions &options = {});

std::string describe(const Mismatch &mm, const DiGraph &g);

} // namespace ftreach
