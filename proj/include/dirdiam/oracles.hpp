#ifndef DIRDIAM_ORACLES_HPP_
#define DIRDIAM_ORACLES_HPP_

#include <cstddef>
#include <vector>

#include "dirdiam/artifact.hpp"
#include "dirdiam/graph.hpp"
#include "dirdiam/vector_set.hpp"

namespace dirdiam {

/// Oracles refuse larger graphs.
inline constexpr std::size_t kOracleVertexLimit = 2000;

/// Dense n x n distance table; kInfinity marks unreachable pairs.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kInfinity) {}

    std::size_t size() const noexcept { return n_; }
    Distance operator()(std::size_t u, std::size_t v) const { return d_[u * n_ + v]; }
    Distance &operator()(std::size_t u, std::size_t v) { return d_[u * n_ + v]; }

    /// d(u, v) + d(v, u), saturating.
    Distance roundtrip(std::size_t u, std::size_t v) const {
        return saturating_add((*this)(u, v), (*this)(v, u));
    }

    friend bool operator==(const DistanceMatrix &, const DistanceMatrix &) = default;

private:
    std::size_t n_ = 0;
    std::vector<Distance> d_;
};

DistanceMatrix apsp_floyd_warshall(const DirectedGraph &g);
DistanceMatrix apsp_dijkstra(const DirectedGraph &g, unsigned threads = 1);

/// Floyd-Warshall on dense graphs, one search per source otherwise. Throws above kOracleVertexLimit.
DistanceMatrix apsp(const DirectedGraph &g, unsigned threads = 1);

/// Largest entry of the table (kInfinity if any pair is unreachable); 0 for n <= 1.
Distance diameter_of(const DistanceMatrix &dm);
/// Largest roundtrip distance over all pairs; 0 for n <= 1.
Distance roundtrip_diameter_of(const DistanceMatrix &dm);

Distance exact_roundtrip_diameter(const DirectedGraph &g, unsigned threads = 1);

/// max_v d(0, v) + d(v, 0); lies in [RT/2, RT].
Distance rt_two_approx(const DirectedGraph &g);

struct ClosestPair {
    Rational distance;
    std::size_t i = 0;
    std::size_t j = 0;
};

/// Exact minimum l_inf distance over pairs i < j. Throws if n < 2.
ClosestPair brute_linfty(const VectorSet &vs);

enum class PromiseSide { kClose, kFar, kOutside };

/// kClose if some pair is within 1, kFar if all pairs are at least alpha apart.
PromiseSide classify_promise(const VectorSet &vs, Rational alpha);

enum class GapSide { kSmall, kLarge, kViolated };

struct GapReport {
    Distance rt_diameter = 0;
    /// Largest roundtrip distance among the interesting pairs.
    Distance max_interesting = 0;
    GapSide side = GapSide::kViolated;
};

/// Exact check of an artifact: small if RT <= no_threshold, large if some interesting pair reaches yes_threshold.
GapReport verify_gap(const ReductionArtifact &art, unsigned threads = 1);

} // namespace dirdiam

#endif // DIRDIAM_ORACLES_HPP_
