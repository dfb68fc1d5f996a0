#ifndef DIRDIAM_TESTS_SUPPORT_HPP_
#define DIRDIAM_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "dirdiam/bool_matrix.hpp"
#include "dirdiam/graph.hpp"

namespace testsupport {

using dirdiam::Distance;
using dirdiam::DirectedGraph;
using dirdiam::Edge;
using dirdiam::kInfinity;
using dirdiam::Vertex;
using dirdiam::Weight;

/// Arbitrary digraph: parallel edges, self-loops and zero weights all allowed.
inline DirectedGraph arbitrary_graph(std::mt19937_64 &rng, std::size_t n, std::size_t m, Weight max_w) {
    std::uniform_int_distribution<Vertex> vert(0, static_cast<Vertex>(n - 1));
    std::uniform_int_distribution<Weight> wt(0, max_w);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m; ++i) {
        edges.push_back({vert(rng), vert(rng), max_w == 1 ? 1 : wt(rng)});
    }
    return DirectedGraph(n, std::move(edges));
}

/// A random digraph with a Hamiltonian cycle 0 -> 1 -> ... -> n-1 -> 0 plus extra edges.
inline DirectedGraph strong_graph(std::mt19937_64 &rng, std::size_t n, std::size_t extra, Weight max_w) {
    std::uniform_int_distribution<Vertex> vert(0, static_cast<Vertex>(n - 1));
    std::uniform_int_distribution<Weight> wt(1, max_w);
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n && n > 1; ++v) {
        edges.push_back({v, static_cast<Vertex>((v + 1) % n), wt(rng)});
    }
    for (std::size_t i = 0; i < extra; ++i) {
        edges.push_back({vert(rng), vert(rng), wt(rng)});
    }
    return DirectedGraph(n, std::move(edges));
}

/// Bellman-Ford from (out) or to (in) a source, over the raw edge list.
inline std::vector<Distance> bellman_ford(const DirectedGraph &g, Vertex s, bool out) {
    std::vector<Distance> d(g.num_vertices(), kInfinity);
    d[s] = 0;
    for (std::size_t round = 0; round < g.num_vertices(); ++round) {
        bool changed = false;
        for (const Edge &e : g.edges()) {
            Vertex from = out ? e.source : e.target;
            Vertex to = out ? e.target : e.source;
            if (d[from] != kInfinity && d[from] + static_cast<Distance>(e.weight) < d[to]) {
                d[to] = d[from] + static_cast<Distance>(e.weight);
                changed = true;
            }
        }
        if (!changed) {
            break;
        }
    }
    return d;
}

inline std::vector<std::vector<Distance>> bellman_ford_all(const DirectedGraph &g) {
    std::vector<std::vector<Distance>> all;
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        all.push_back(bellman_ford(g, s, true));
    }
    return all;
}

inline Distance max_entry(const std::vector<std::vector<Distance>> &all) {
    Distance best = 0;
    for (const auto &row : all) {
        for (Distance d : row) {
            best = std::max(best, d);
        }
    }
    return best;
}

/// Roundtrip distance table from Bellman-Ford rows.
inline Distance roundtrip(const std::vector<std::vector<Distance>> &all, Vertex u, Vertex v) {
    if (all[u][v] == kInfinity || all[v][u] == kInfinity) {
        return kInfinity;
    }
    return all[u][v] + all[v][u];
}

inline Distance roundtrip_diameter(const DirectedGraph &g) {
    auto all = bellman_ford_all(g);
    Distance best = 0;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        for (Vertex v = u + 1; v < g.num_vertices(); ++v) {
            best = std::max(best, roundtrip(all, u, v));
        }
    }
    return best;
}

/// Dense 0/1 matrix as rows of bools.
using Dense = std::vector<std::vector<bool>>;

inline Dense random_dense(std::mt19937_64 &rng, std::size_t r, std::size_t c, double density) {
    std::bernoulli_distribution coin(density);
    Dense m(r, std::vector<bool>(c));
    for (auto &row : m) {
        for (std::size_t j = 0; j < c; ++j) {
            row[j] = coin(rng);
        }
    }
    return m;
}

inline Dense naive_product(const Dense &a, const Dense &b, std::size_t inner, std::size_t cols) {
    Dense c(a.size(), std::vector<bool>(cols));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < cols; ++k) {
            for (std::size_t j = 0; j < inner; ++j) {
                if (a[i][j] && b[j][k]) {
                    c[i][k] = true;
                    break;
                }
            }
        }
    }
    return c;
}

inline dirdiam::SparseBoolMatrix from_dense(const Dense &m, std::size_t cols) {
    std::vector<std::vector<dirdiam::SparseBoolMatrix::Index>> rows(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (m[i][j]) {
                rows[i].push_back(static_cast<dirdiam::SparseBoolMatrix::Index>(j));
            }
        }
    }
    return dirdiam::SparseBoolMatrix(m.size(), cols, std::move(rows));
}

inline Dense to_dense(const dirdiam::SparseBoolMatrix &m) {
    Dense d(m.rows(), std::vector<bool>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (auto j : m.row(i)) {
            d[i][j] = true;
        }
    }
    return d;
}

} // namespace testsupport

#endif // DIRDIAM_TESTS_SUPPORT_HPP_
