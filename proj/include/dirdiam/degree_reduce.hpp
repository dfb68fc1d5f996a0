#ifndef DIRDIAM_DEGREE_REDUCE_HPP_
#define DIRDIAM_DEGREE_REDUCE_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "dirdiam/graph.hpp"

namespace dirdiam {

/// Correspondence between original vertices and their replacement copies.
class VertexMap {
public:
    VertexMap() = default;
    VertexMap(std::vector<std::size_t> offsets, std::vector<Vertex> inverse)
        : offsets_(std::move(offsets)), inverse_(std::move(inverse)) {}

    std::size_t num_original() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t num_reduced() const noexcept { return inverse_.size(); }

    /// Replacement copies of original vertex v, the half-open id range [first, second).
    std::pair<Vertex, Vertex> copies(Vertex v) const {
        return {static_cast<Vertex>(offsets_[v]), static_cast<Vertex>(offsets_[v + 1])};
    }
    Vertex representative(Vertex v) const { return static_cast<Vertex>(offsets_[v]); }
    Vertex original(Vertex reduced) const { return inverse_[reduced]; }

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> inverse_;
};

struct DegreeReduction {
    DirectedGraph graph;
    VertexMap map;
};

/**
 * Replaces every vertex of degree deg >= 2 by a directed cycle of deg copies
 * joined by weight-0 edges; each copy carries exactly one original edge
 * endpoint. Vertices of degree 0 or 1 keep a single copy. Every output vertex
 * has total degree at most 3 and distances between copies equal the original
 * distances.
 */
DegreeReduction degree_reduce(const DirectedGraph &g);

} // namespace dirdiam

#endif // DIRDIAM_DEGREE_REDUCE_HPP_
