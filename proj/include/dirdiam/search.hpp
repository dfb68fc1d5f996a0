#ifndef DIRDIAM_SEARCH_HPP_
#define DIRDIAM_SEARCH_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "dirdiam/graph.hpp"

namespace dirdiam {

/// A vertex paired with a distance (exact or an upper bound, depending on context).
struct VertexDistance {
    Vertex vertex;
    Distance distance;

    friend bool operator==(const VertexDistance &, const VertexDistance &) = default;
};

/**
 * Exact distances from (kOut) or to (kIn) `source`. Uses a 0-1 BFS when all
 * weights are 0 or 1, Dijkstra otherwise.
 */
std::vector<Distance> sssp(const DirectedGraph &g, Vertex source, Direction dir);

/**
 * Scratch buffers for repeated searches on one graph. Only touched entries
 * are reset between searches, so a search costs time proportional to the
 * part of the graph it explores.
 */
struct SearchWorkspace {
    explicit SearchWorkspace(std::size_t n = 0) { ensure(n); }

    void ensure(std::size_t n) {
        if (dist.size() < n) {
            dist.resize(n, kInfinity);
            settled.resize(n, 0);
        }
    }
    /// Restores every touched entry to its initial state.
    void reset() {
        for (Vertex v : touched) {
            dist[v] = kInfinity;
            settled[v] = 0;
        }
        touched.clear();
        heap.clear();
    }

    std::vector<Distance> dist;
    std::vector<char> settled;
    std::vector<Vertex> touched;
    std::vector<std::pair<Distance, Vertex>> heap;
};

struct PartialSearchResult {
    /// Settled vertices in settle order with exact distances.
    std::vector<VertexDistance> exact;
    /// Reached but unsettled vertices with their tentative distance, sorted by vertex id.
    std::vector<VertexDistance> frontier;
    std::size_t visited_count = 0;
    /// True when every reachable vertex was settled.
    bool exhausted = false;
};

/**
 * Dijkstra from `source` that stops after `budget` vertices are settled.
 * Equal tentative distances settle the smaller vertex id first.
 */
PartialSearchResult partial_search(const DirectedGraph &g, Vertex source, Direction dir,
                                   std::size_t budget, SearchWorkspace *ws = nullptr);

struct BallResult {
    /// Vertices at distance <= r, sorted by vertex id, with exact distances.
    std::vector<VertexDistance> core;
    /// One-step neighbors of the core outside it, sorted by id, with the bound
    /// min over core u of d(u) + w(u, x).
    std::vector<VertexDistance> plus;
};

/// B_r(v) in the given direction, and its one-step extension when `plus` is set.
BallResult ball(const DirectedGraph &g, Vertex v, Distance r, Direction dir, bool plus,
                SearchWorkspace *ws = nullptr);

/**
 * One-step extension of a set of vertices with known distances: every vertex
 * outside `core` adjacent (in direction `dir`) to it, with the smallest
 * d(u) + w over core neighbors u. Result sorted by vertex id.
 */
std::vector<VertexDistance> plus_extension(const DirectedGraph &g,
                                           const std::vector<VertexDistance> &core,
                                           Direction dir, SearchWorkspace *ws = nullptr);

/// Largest distance from (kOut) or to (kIn) v; kInfinity if some vertex is unreachable.
Distance eccentricity(const DirectedGraph &g, Vertex v, Direction dir);

/// Forward and reverse reachability from vertex 0. Graphs with at most one vertex count as connected.
bool is_strongly_connected(const DirectedGraph &g);

} // namespace dirdiam

#endif // DIRDIAM_SEARCH_HPP_
