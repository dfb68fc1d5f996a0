#ifndef DIRDIAM_GRAPH_HPP_
#define DIRDIAM_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace dirdiam {

using Vertex = std::uint32_t;
using Weight = std::int64_t;
using Distance = std::uint64_t;

/// Distance to an unreachable vertex.
inline constexpr Distance kInfinity = std::numeric_limits<Distance>::max();

/// a + b, saturating to kInfinity.
constexpr Distance saturating_add(Distance a, Distance b) noexcept {
    return (a > kInfinity - b) ? kInfinity : a + b;
}

enum class Direction { kOut, kIn };

constexpr Direction reverse(Direction d) noexcept {
    return d == Direction::kOut ? Direction::kIn : Direction::kOut;
}

struct Edge {
    Vertex source;
    Vertex target;
    Weight weight;

    friend bool operator==(const Edge &, const Edge &) = default;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// One adjacency entry: the vertex at the other end and the edge weight.
struct Arc {
    Vertex head;
    Distance weight;
};

/**
 * Immutable weighted digraph with forward and reverse CSR adjacency.
 *
 * Parallel edges and self-loops are kept. The graph reports itself as
 * unweighted when every edge has weight 1.
 */
class DirectedGraph {
public:
    DirectedGraph() = default;

    /// Throws std::invalid_argument on an out-of-range endpoint or a negative weight.
    DirectedGraph(std::size_t n, std::vector<Edge> edges);

    std::size_t num_vertices() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    bool weighted() const noexcept { return weighted_; }

    std::span<const Edge> edges() const noexcept { return edges_; }

    std::span<const Arc> out_arcs(Vertex v) const noexcept {
        return {out_arcs_.data() + out_offsets_[v], out_arcs_.data() + out_offsets_[v + 1]};
    }
    std::span<const Arc> in_arcs(Vertex v) const noexcept {
        return {in_arcs_.data() + in_offsets_[v], in_arcs_.data() + in_offsets_[v + 1]};
    }
    std::span<const Arc> arcs(Vertex v, Direction d) const noexcept {
        return d == Direction::kOut ? out_arcs(v) : in_arcs(v);
    }

    std::size_t out_degree(Vertex v) const noexcept { return out_offsets_[v + 1] - out_offsets_[v]; }
    std::size_t in_degree(Vertex v) const noexcept { return in_offsets_[v + 1] - in_offsets_[v]; }
    std::size_t degree(Vertex v) const noexcept { return out_degree(v) + in_degree(v); }

    /// Largest edge weight (0 for an edgeless graph).
    Weight max_weight() const noexcept { return max_weight_; }
    /// Sum of all edge weights, saturating.
    Distance total_weight() const noexcept { return total_weight_; }
    /// True when every weight is 0 or 1, so a 0-1 BFS computes exact distances.
    bool zero_one_weights() const noexcept { return max_weight_ <= 1; }

    /// The graph with every edge reversed.
    DirectedGraph transposed() const;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> out_offsets_{0};
    std::vector<std::size_t> in_offsets_{0};
    std::vector<Arc> out_arcs_;
    std::vector<Arc> in_arcs_;
    bool weighted_ = false;
    Weight max_weight_ = 0;
    Distance total_weight_ = 0;
};

/// Convenience constructor for unit-weight graphs.
DirectedGraph unweighted_graph(std::size_t n,
                               std::span<const std::pair<Vertex, Vertex>> pairs);

} // namespace dirdiam

#endif // DIRDIAM_GRAPH_HPP_
