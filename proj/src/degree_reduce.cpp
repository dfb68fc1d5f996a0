#include "dirdiam/degree_reduce.hpp"

#include <algorithm>

namespace dirdiam {

DegreeReduction degree_reduce(const DirectedGraph &g) {
    std::size_t n = g.num_vertices();
    std::vector<std::size_t> offsets(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) {
        offsets[v + 1] = offsets[v] + std::max<std::size_t>(g.degree(v), 1);
    }
    std::size_t total = offsets[n];
    std::vector<Vertex> inverse(total);
    for (Vertex v = 0; v < n; ++v) {
        std::fill(inverse.begin() + offsets[v], inverse.begin() + offsets[v + 1], v);
    }

    std::vector<std::size_t> next_slot(offsets.begin(), offsets.end() - 1);
    std::vector<Edge> edges;
    edges.reserve(g.num_edges() + total);
    for (const Edge &e : g.edges()) {
        Vertex tail = static_cast<Vertex>(next_slot[e.source]++);
        Vertex head = static_cast<Vertex>(next_slot[e.target]++);
        edges.push_back(Edge{tail, head, e.weight});
    }
    for (Vertex v = 0; v < n; ++v) {
        std::size_t begin = offsets[v];
        std::size_t deg = offsets[v + 1] - begin;
        if (deg < 2) {
            continue;
        }
        for (std::size_t i = 0; i < deg; ++i) {
            edges.push_back(Edge{static_cast<Vertex>(begin + i),
                                 static_cast<Vertex>(begin + (i + 1) % deg), 0});
        }
    }
    return DegreeReduction{DirectedGraph(total, std::move(edges)),
                           VertexMap(std::move(offsets), std::move(inverse))};
}

} // namespace dirdiam
