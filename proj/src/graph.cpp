#include "dirdiam/graph.hpp"

#include <stdexcept>
#include <string>

namespace dirdiam {

namespace {

void build_csr(std::size_t n, const std::vector<Edge> &edges, bool forward,
               std::vector<std::size_t> &offsets, std::vector<Arc> &arcs) {
    offsets.assign(n + 1, 0);
    for (const Edge &e : edges) {
        ++offsets[(forward ? e.source : e.target) + 1];
    }
    for (std::size_t v = 0; v < n; ++v) {
        offsets[v + 1] += offsets[v];
    }
    arcs.resize(edges.size());
    std::vector<std::size_t> pos(offsets.begin(), offsets.end() - 1);
    for (const Edge &e : edges) {
        Vertex tail = forward ? e.source : e.target;
        Vertex head = forward ? e.target : e.source;
        arcs[pos[tail]++] = Arc{head, static_cast<Distance>(e.weight)};
    }
}

} // namespace

DirectedGraph::DirectedGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n > std::numeric_limits<Vertex>::max()) {
        throw std::invalid_argument("too many vertices");
    }
    for (const Edge &e : edges_) {
        if (e.source >= n || e.target >= n) {
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.source) +
                                        " -> " + std::to_string(e.target));
        }
        if (e.weight < 0) {
            throw std::invalid_argument("negative edge weight");
        }
        if (e.weight != 1) {
            weighted_ = true;
        }
        if (e.weight > max_weight_) {
            max_weight_ = e.weight;
        }
        total_weight_ = saturating_add(total_weight_, static_cast<Distance>(e.weight));
    }
    build_csr(n_, edges_, true, out_offsets_, out_arcs_);
    build_csr(n_, edges_, false, in_offsets_, in_arcs_);
}

DirectedGraph DirectedGraph::transposed() const {
    std::vector<Edge> rev;
    rev.reserve(edges_.size());
    for (const Edge &e : edges_) {
        rev.push_back(Edge{e.target, e.source, e.weight});
    }
    return DirectedGraph(n_, std::move(rev));
}

DirectedGraph unweighted_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        edges.push_back(Edge{u, v, 1});
    }
    return DirectedGraph(n, std::move(edges));
}

} // namespace dirdiam
