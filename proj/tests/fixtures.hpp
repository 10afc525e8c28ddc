#pragma once

#include "ftreach/digraph.hpp"

#include <cstdint>
#include <initializer_list>
#include <random>

namespace ftreach::test {

inline DiGraph make_graph(int n, std::initializer_list<Edge> edges) {
    DiGraph g(n);
    for (const Edge &e : edges) g.add_edge(e.tail, e.head);
    return g;
}

inline DiGraph chain3() { return make_graph(3, {{0, 1}, {1, 2}}); }
inline DiGraph chain4() { return make_graph(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline DiGraph diamond() { return make_graph(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}}); }
inline DiGraph cycle3() { return make_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline DiGraph loopy() { return make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {2, 1}}); }

// Two parallel 0->..->5 routes with one cross edge 1->4.
inline DiGraph cross6() {
    return make_graph(6, {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}, {1, 4}});
}

// Long chain plus seeded random chords; strands for pairs along the chain
// stay long, which stresses the segment machinery.
inline DiGraph chordal_chain(int n, double q, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    DiGraph g(n);
    for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
            if (u != v && v != u + 1 && !g.find_edge(u, v) &&
                static_cast<double>(rng() >> 11) * 0x1.0p-53 < q)
                g.add_edge(u, v);
    return g;
}

} // namespace ftreach::test
