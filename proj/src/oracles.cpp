#include "dirdiam/oracles.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dirdiam/parallel.hpp"
#include "dirdiam/search.hpp"

namespace dirdiam {

namespace {

void guard(const DirectedGraph &g) {
    if (g.num_vertices() > kOracleVertexLimit) {
        throw std::invalid_argument("oracle limited to " + std::to_string(kOracleVertexLimit) +
                                    " vertices, got " + std::to_string(g.num_vertices()));
    }
}

} // namespace

DistanceMatrix apsp_floyd_warshall(const DirectedGraph &g) {
    guard(g);
    const std::size_t n = g.num_vertices();
    DistanceMatrix dm(n);
    for (std::size_t v = 0; v < n; ++v) {
        dm(v, v) = 0;
    }
    for (const Edge &e : g.edges()) {
        auto w = static_cast<Distance>(e.weight);
        dm(e.source, e.target) = std::min(dm(e.source, e.target), w);
    }
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t u = 0; u < n; ++u) {
            const Distance um = dm(u, m);
            if (um == kInfinity) {
                continue;
            }
            for (std::size_t v = 0; v < n; ++v) {
                const Distance via = saturating_add(um, dm(m, v));
                if (via < dm(u, v)) {
                    dm(u, v) = via;
                }
            }
        }
    }
    return dm;
}

DistanceMatrix apsp_dijkstra(const DirectedGraph &g, unsigned threads) {
    guard(g);
    const std::size_t n = g.num_vertices();
    DistanceMatrix dm(n);
    parallel_chunks(n, threads, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t u = begin; u < end; ++u) {
            std::vector<Distance> row = sssp(g, static_cast<Vertex>(u), Direction::kOut);
            for (std::size_t v = 0; v < n; ++v) {
                dm(u, v) = row[v];
            }
        }
    });
    return dm;
}

DistanceMatrix apsp(const DirectedGraph &g, unsigned threads) {
    guard(g);
    const std::size_t n = g.num_vertices();
    if (threads <= 1 && g.num_edges() * 8 > n * n) {
        return apsp_floyd_warshall(g);
    }
    return apsp_dijkstra(g, threads);
}

Distance diameter_of(const DistanceMatrix &dm) {
    Distance best = 0;
    for (std::size_t u = 0; u < dm.size(); ++u) {
        for (std::size_t v = 0; v < dm.size(); ++v) {
            best = std::max(best, dm(u, v));
        }
    }
    return best;
}

Distance roundtrip_diameter_of(const DistanceMatrix &dm) {
    Distance best = 0;
    for (std::size_t u = 0; u < dm.size(); ++u) {
        for (std::size_t v = u + 1; v < dm.size(); ++v) {
            best = std::max(best, dm.roundtrip(u, v));
        }
    }
    return best;
}

Distance exact_roundtrip_diameter(const DirectedGraph &g, unsigned threads) {
    return roundtrip_diameter_of(apsp(g, threads));
}

Distance rt_two_approx(const DirectedGraph &g) {
    if (g.num_vertices() == 0) {
        return 0;
    }
    std::vector<Distance> from = sssp(g, 0, Direction::kOut);
    std::vector<Distance> to = sssp(g, 0, Direction::kIn);
    Distance best = 0;
    for (std::size_t v = 0; v < from.size(); ++v) {
        best = std::max(best, saturating_add(from[v], to[v]));
    }
    return best;
}

ClosestPair brute_linfty(const VectorSet &vs) {
    if (vs.n < 2) {
        throw std::invalid_argument("brute_linfty needs at least two vectors");
    }
    ClosestPair best{linf_distance(vs, 0, 1), 0, 1};
    for (std::size_t i = 0; i < vs.n; ++i) {
        for (std::size_t j = i + 1; j < vs.n; ++j) {
            Rational d = linf_distance(vs, i, j);
            if (d < best.distance) {
                best = {d, i, j};
            }
        }
    }
    return best;
}

PromiseSide classify_promise(const VectorSet &vs, Rational alpha) {
    if (vs.n < 2) {
        return PromiseSide::kFar;
    }
    Rational d = brute_linfty(vs).distance;
    if (d <= Rational(1)) {
        return PromiseSide::kClose;
    }
    return d >= alpha ? PromiseSide::kFar : PromiseSide::kOutside;
}

GapReport verify_gap(const ReductionArtifact &art, unsigned threads) {
    DistanceMatrix dm = apsp(art.graph, threads);
    GapReport r;
    r.rt_diameter = roundtrip_diameter_of(dm);
    for (auto [u, v] : art.interesting_pairs) {
        r.max_interesting = std::max(r.max_interesting, dm.roundtrip(u, v));
    }
    if (r.rt_diameter <= art.no_threshold) {
        r.side = GapSide::kSmall;
    } else if (r.max_interesting >= art.yes_threshold) {
        r.side = GapSide::kLarge;
    } else {
        r.side = GapSide::kViolated;
    }
    return r;
}

} // namespace dirdiam
