#include "ftreach/digraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace ftreach {

EdgeId DiGraph::add_edge(VertexId u, VertexId v) {
    if (!has_vertex(u) || !has_vertex(v))
        throw input_error("edge endpoint out of range");
    if (u == v) throw input_error("self-loops are not allowed");
    if (by_endpoints_.count(key(u, v)))
        throw input_error("duplicate edge");
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v});
    out_[u].push_back(id);
    in_[v].push_back(id);
    by_endpoints_.emplace(key(u, v), id);
    return id;
}

std::optional<EdgeId> DiGraph::find_edge(VertexId u, VertexId v) const {
    if (!has_vertex(u) || !has_vertex(v)) return std::nullopt;
    auto it = by_endpoints_.find(key(u, v));
    if (it == by_endpoints_.end()) return std::nullopt;
    return it->second;
}

std::vector<EdgeId> DiGraph::resolve(const EdgeList &failures) const {
    std::vector<EdgeId> ids;
    ids.reserve(failures.size());
    for (const Edge &f : failures) {
        if (!has_vertex(f.tail) || !has_vertex(f.head))
            throw input_error("failure endpoint out of range");
        auto id = find_edge(f.tail, f.head);
        if (!id) throw input_error("failure edge not present in graph");
        ids.push_back(*id);
    }
    return ids;
}

namespace {

// Strips '#' comments and returns whitespace-separated tokens.
std::vector<std::string> tokenize(std::istream &is) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

long long to_int(const std::string &tok) {
    try {
        size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw parse_error("bad integer: " + tok);
        return v;
    } catch (const std::invalid_argument &) {
        throw parse_error("bad integer: " + tok);
    } catch (const std::out_of_range &) {
        throw parse_error("integer out of range: " + tok);
    }
}

} // namespace

DiGraph DiGraph::parse(std::istream &is) {
    auto tokens = tokenize(is);
    if (tokens.size() < 2) throw parse_error("missing graph header");
    long long n = to_int(tokens[0]);
    long long m = to_int(tokens[1]);
    if (n < 0 || m < 0) throw parse_error("negative count in header");
    if (static_cast<long long>(tokens.size()) != 2 + 2 * m)
        throw parse_error("edge token count does not match header");
    DiGraph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u = to_int(tokens[2 + 2 * i]);
        long long v = to_int(tokens[3 + 2 * i]);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("edge endpoint out of range");
        try {
            g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
        } catch (const input_error &e) {
            throw parse_error(e.what());
        }
    }
    return g;
}

DiGraph DiGraph::parse_string(const std::string &text) {
    std::istringstream is(text);
    return parse(is);
}

void DiGraph::format(std::ostream &os) const {
    os << n_ << ' ' << m() << '\n';
    for (const Edge &e : edges_) os << e.tail << ' ' << e.head << '\n';
}

std::string DiGraph::format_string() const {
    std::ostringstream os;
    format(os);
    return os.str();
}

void Subgraph::unite(const Subgraph &other) {
    if (parent_ != &other.parent())
        throw input_error("subgraph union across different parents");
    for (EdgeId e = 0; e < static_cast<EdgeId>(kept_.size()); ++e)
        if (other.has(e)) add(e);
}

std::vector<EdgeId> Subgraph::ids() const {
    std::vector<EdgeId> out;
    out.reserve(count_);
    for (EdgeId e = 0; e < static_cast<EdgeId>(kept_.size()); ++e)
        if (kept_[e]) out.push_back(e);
    return out;
}

DiGraph Subgraph::materialize() const {
    DiGraph g(parent_->n());
    for (EdgeId e = 0; e < static_cast<EdgeId>(kept_.size()); ++e)
        if (kept_[e]) g.add_edge(parent_->edge(e).tail, parent_->edge(e).head);
    return g;
}

PairList parse_pairs(std::istream &is) {
    auto tokens = tokenize(is);
    if (tokens.size() % 2 != 0) throw parse_error("odd token count in pair file");
    PairList pairs;
    for (size_t i = 0; i < tokens.size(); i += 2) {
        long long s = to_int(tokens[i]);
        long long t = to_int(tokens[i + 1]);
        pairs.push_back({static_cast<VertexId>(s), static_cast<VertexId>(t)});
    }
    return pairs;
}

PairList parse_pairs_string(const std::string &text) {
    std::istringstream is(text);
    return parse_pairs(is);
}

void format_pairs(std::ostream &os, const PairList &pairs) {
    for (const VertexPair &p : pairs) os << p.s << ' ' << p.t << '\n';
}

} // namespace ftreach
