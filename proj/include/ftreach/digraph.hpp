#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ftreach {

using VertexId = int;
using EdgeId = int;

struct Edge {
    VertexId tail = -1;
    VertexId head = -1;

    friend bool operator==(const Edge &a, const Edge &b) {
        return a.tail == b.tail && a.head == b.head;
    }
    friend bool operator<(const Edge &a, const Edge &b) {
        return a.tail != b.tail ? a.tail < b.tail : a.head < b.head;
    }
};

using EdgeList = std::vector<Edge>;

struct VertexPair {
    VertexId s = -1;
    VertexId t = -1;

    friend bool operator==(const VertexPair &a, const VertexPair &b) {
        return a.s == b.s && a.t == b.t;
    }
    friend bool operator<(const VertexPair &a, const VertexPair &b) {
        return a.s != b.s ? a.s < b.s : a.t < b.t;
    }
};

using PairList = std::vector<VertexPair>;

class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Simple directed graph: no self-loops, no duplicate (tail, head) pairs.
// Edge ids are 0..m-1 in insertion order; adjacency lists hold edge ids in
// ascending order. Once built, a DiGraph is never mutated.
class DiGraph {
public:
    DiGraph() = default;
    explicit DiGraph(int n) : n_(n) {
        if (n < 0) throw input_error("vertex count must be non-negative");
        out_.resize(n);
        in_.resize(n);
    }

    EdgeId add_edge(VertexId u, VertexId v);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge> &edges() const { return edges_; }
    const Edge &edge(EdgeId e) const { return edges_.at(e); }
    const std::vector<EdgeId> &out(VertexId v) const { return out_.at(v); }
    const std::vector<EdgeId> &in(VertexId v) const { return in_.at(v); }

    bool has_vertex(VertexId v) const { return v >= 0 && v < n_; }
    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

    // Resolves endpoint-specified failure edges to edge ids; throws on
    // unknown vertices or edges.
    std::vector<EdgeId> resolve(const EdgeList &failures) const;

    // Text format: "n m" then one "u v" line per edge; '#' starts a comment.
    static DiGraph parse(std::istream &is);
    static DiGraph parse_string(const std::string &text);
    void format(std::ostream &os) const;
    std::string format_string() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> out_, in_;
    std::unordered_map<std::uint64_t, EdgeId> by_endpoints_;

    static std::uint64_t key(VertexId u, VertexId v) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
               static_cast<std::uint32_t>(v);
    }
};

// An edge-id subset of a parent graph. The vertex set is the parent's.
class Subgraph {
public:
    Subgraph() = default;
    explicit Subgraph(const DiGraph &parent)
        : parent_(&parent), kept_(parent.m(), 0) {}

    const DiGraph &parent() const { return *parent_; }
    bool has(EdgeId e) const { return kept_.at(e) != 0; }
    void add(EdgeId e) {
        if (!kept_.at(e)) {
            kept_[e] = 1;
            ++count_;
        }
    }
    void add_all(const std::vector<EdgeId> &ids) {
        for (EdgeId e : ids) add(e);
    }
    void remove(EdgeId e) {
        if (kept_.at(e)) {
            kept_[e] = 0;
            --count_;
        }
    }
    void unite(const Subgraph &other);
    int edge_count() const { return count_; }
    std::vector<EdgeId> ids() const;

    // Materializes the kept edges as a standalone graph on the same vertex
    // ids.
    DiGraph materialize() const;

private:
    const DiGraph *parent_ = nullptr;
    std::vector<char> kept_;
    int count_ = 0;
};

PairList parse_pairs(std::istream &is);
PairList parse_pairs_string(const std::string &text);
void format_pairs(std::ostream &os, const PairList &pairs);

} // namespace ftreach
