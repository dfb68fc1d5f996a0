#ifndef DIRDIAM_ANKC_REDUCTION_HPP_
#define DIRDIAM_ANKC_REDUCTION_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "dirdiam/artifact.hpp"
#include "dirdiam/linfty_reduction.hpp"

namespace dirdiam {

/// Edge from node u of layer `layer` to node v of layer (layer + 1) mod k.
struct LayerEdge {
    std::uint32_t layer;
    std::uint32_t u;
    std::uint32_t v;

    friend bool operator==(const LayerEdge &, const LayerEdge &) = default;
    friend auto operator<=>(const LayerEdge &, const LayerEdge &) = default;
};

/// k-partite digraph whose edges only go from layer i to layer i+1 mod k. Layer 0 is V_1.
struct LayeredCycleInstance {
    std::vector<std::size_t> sizes;
    std::vector<LayerEdge> edges;

    std::size_t k() const noexcept { return sizes.size(); }
};

/// Throws std::invalid_argument if k < 3 or an edge is out of range.
void validate(const LayeredCycleInstance &inst);

/// Header `k n_0 ... n_{k-1}`, then lines `i u j v` with j = (i+1) mod k.
LayeredCycleInstance read_layered_instance(std::istream &in);
void write_layered_instance(std::ostream &out, const LayeredCycleInstance &inst);

using Identifier = std::vector<std::uint8_t>;

/**
 * Identifiers of length 2*max(1, ceil(log2 n)) + 2: the binary name (most
 * significant bit first), its complement, then 0 and 1.
 */
std::vector<Identifier> make_identifiers(std::size_t n);

struct CycleCoverage {
    bool all_covered = true;
    /// Layer-0 nodes lying on no k-cycle, ascending.
    std::vector<std::uint32_t> uncovered;
};

/// Per layer-0 node, a layered reachability sweep around the cycle.
CycleCoverage all_nodes_k_cycle_brute(const LayeredCycleInstance &inst);

/**
 * Weighted graph with O(n) vertices and O(n log n) edges. Small side
 * (every layer-0 node covered): roundtrip diameter at most 6t + 2k. Large
 * side: an uncovered a has rtd(a, a') >= 10t. Requires t > 2k.
 */
ReductionArtifact build_weighted_ankc_graph(const LayeredCycleInstance &inst, std::uint64_t t);

/// Additive slack of the unit-weight construction's small side, frozen from a brute-force sweep.
std::uint64_t unweighted_ankc_slack(std::size_t k);

/**
 * Unit-weight version using 7t+1 copies of each of S and T. Large side:
 * d(a, a') >= 8t and d(a', a) >= 2t. Small side: roundtrip diameter at most
 * 6t + unweighted_ankc_slack(k). Requires t > 2k.
 */
ReductionArtifact build_unweighted_ankc_graph(const LayeredCycleInstance &inst, std::uint64_t t);

/// True (every layer-0 node lies on a k-cycle) iff the solver's answer is at most the small-side threshold.
bool decide_ankc_via_rt(const LayeredCycleInstance &inst, std::uint64_t t, const RtSolver &rt_solver,
                        bool unweighted = false);

} // namespace dirdiam

#endif // DIRDIAM_ANKC_REDUCTION_HPP_
