#ifndef DIRDIAM_GENERATORS_HPP_
#define DIRDIAM_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>

#include "dirdiam/ankc_reduction.hpp"
#include "dirdiam/graph.hpp"
#include "dirdiam/vector_set.hpp"

namespace dirdiam {

/**
 * m edges with weights uniform in [1, max_weight] and no self-loops. With
 * ensure_strongly_connected the first n edges form a cycle through a random
 * permutation of the vertices. Throws std::invalid_argument if m < n in that
 * mode or n < 2 while m > 0.
 */
DirectedGraph generate_random_graph(std::size_t n, std::size_t m, Weight max_weight, std::uint64_t seed,
                                    bool ensure_strongly_connected);

/// Integer coordinates uniform in [lo, hi] over the given scale.
VectorSet random_vector_set(std::size_t n, std::size_t d, std::int64_t lo, std::int64_t hi,
                            std::int64_t scale, std::uint64_t seed);

/**
 * Vectors in [-(0.5+eps)alpha, (0.5+eps)alpha]^d with scale `scale`.
 * Far: distinct sign patterns with magnitudes in [alpha/2, (0.5+eps)alpha],
 * so every pair is at least alpha apart (needs n <= 2^d). Close: random
 * vectors plus a planted pair within distance 1.
 */
VectorSet bounded_promise_instance(std::size_t n, std::size_t d, Rational alpha, Rational eps, bool close,
                                   std::int64_t scale, std::uint64_t seed);

/**
 * Unbounded integer vectors satisfying the promise for alpha: either some
 * pair within 1 (close) or all pairs at least alpha apart. Far instances are
 * drawn by rejection on a grid of spacing ceil(alpha).
 */
VectorSet promise_instance(std::size_t n, std::size_t d, Rational alpha, bool close, std::uint64_t seed);

/// Each possible layer edge present independently with probability p.
LayeredCycleInstance random_layered_instance(std::size_t k, std::size_t per_layer, double p, std::uint64_t seed);

/**
 * A k-cycle planted through every layer-0 node plus random extra edges with
 * probability p. If `uncovered` is set, all edges into that node are removed,
 * so exactly that node lies on no k-cycle.
 */
LayeredCycleInstance planted_layered_instance(std::size_t k, std::size_t per_layer, double p,
                                              std::optional<std::uint32_t> uncovered, std::uint64_t seed);

} // namespace dirdiam

#endif // DIRDIAM_GENERATORS_HPP_
