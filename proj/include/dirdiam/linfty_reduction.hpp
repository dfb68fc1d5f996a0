#ifndef DIRDIAM_LINFTY_REDUCTION_HPP_
#define DIRDIAM_LINFTY_REDUCTION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "dirdiam/artifact.hpp"
#include "dirdiam/graph.hpp"
#include "dirdiam/vector_set.hpp"

namespace dirdiam {

/// Roundtrip-diameter routine plugged into the end-to-end reductions.
using RtSolver = std::function<Distance(const DirectedGraph &)>;

/**
 * Per coordinate, sorts the values and replaces them by prefix sums of the
 * gaps clipped at alpha. Output coordinates lie in [0, alpha*n]; for every
 * pair, |diff| <= 1 and |diff| >= alpha hold after iff they held before.
 */
VectorSet flatten_coordinates(const VectorSet &vs, Rational alpha);

struct Fold {
    std::vector<Rational> g;
    Rational h;
};

/// ceil(1/eps). Throws unless 0 < eps < 1/2.
std::int64_t inverse_epsilon(Rational eps);

/**
 * One folding step on [0, M]: g has 2E+1 clipped coordinates f_z(a) with
 * z = M/2 + i*alpha/(2E), i = -E..E, E = ceil(1/eps); h = |a - M/2|.
 * Throws std::invalid_argument if a is outside [0, M].
 */
Fold fold_once(Rational a, Rational M, Rational alpha, Rational eps);

/// Number of folding rounds used for n vectors: max(1, ceil(log2 n)).
std::size_t fold_rounds(std::size_t n);

/// Output dimension of bound_domain: 4 * d * ceil(1/eps) * fold_rounds(n).
std::size_t bounded_dimension(std::size_t n, std::size_t d, Rational eps);

/**
 * Maps every coordinate of vs (which must lie in [0, alpha*n]) through the
 * iterated fold, zero-padded to bounded_dimension. All outputs lie in
 * [-(0.5+eps)alpha, (0.5+eps)alpha] and min(dist, alpha) is preserved for
 * every pair.
 */
VectorSet bound_domain(const VectorSet &vs, Rational alpha, Rational eps);

/**
 * Weighted graph on S (n vectors) and coordinate copies X1, X2 (d each).
 * Requires coordinates in [-(0.5+eps)alpha, (0.5+eps)alpha]. Weights are
 * multiplied by the least common multiple of vs.scale and alpha's denominator.
 */
ReductionArtifact build_weighted_rt_graph(const VectorSet &vs, Rational alpha, Rational eps);
ReductionArtifact build_weighted_rt_graph(const VectorSet &vs, Rational alpha);

/// floor(M*alpha - 1).
std::int64_t unweighted_beta(Rational alpha, std::int64_t M);

/// 1 / (4(beta + 1.5)), the bound used for inputs of the unweighted construction.
Rational unweighted_epsilon(Rational alpha, std::int64_t M);

/**
 * Unit-weight graph: one path gadget per vector plus X1, X2. Coordinates are
 * integerized as floor(M*v). Requires frac(M*alpha) < 1/2, integer entries of
 * absolute value at most beta/2 + 2 and 4*beta - 2M > 2*beta + 8.
 */
ReductionArtifact build_unweighted_rt_graph(const VectorSet &vs, Rational alpha, std::int64_t M);

struct LinftyPipelineOptions {
    bool unweighted = false;
    std::int64_t M = 6;
    /// Zero means 1/(4 alpha) for the weighted graph; ignored by the unweighted one.
    Rational eps{0};
};

/**
 * flatten -> bound_domain -> graph -> rt_solver. Returns true (a pair within
 * distance 1 exists) iff the solver's answer exceeds the small-side threshold.
 * Answers on inputs outside the promise are unspecified. n < 2 gives false.
 */
bool solve_linfty_via_rt(const VectorSet &vs, Rational alpha, const RtSolver &rt_solver,
                         const LinftyPipelineOptions &opt = {});

} // namespace dirdiam

#endif // DIRDIAM_LINFTY_REDUCTION_HPP_
