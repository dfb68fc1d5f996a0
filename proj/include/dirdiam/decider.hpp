#ifndef DIRDIAM_DECIDER_HPP_
#define DIRDIAM_DECIDER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "dirdiam/alpha_schedule.hpp"
#include "dirdiam/degree_reduce.hpp"
#include "dirdiam/graph.hpp"

namespace dirdiam {

using Rational = boost::rational<std::int64_t>;

/// Parses "0.05", "1/20" or "3" into an exact rational. Throws std::invalid_argument.
Rational parse_rational(const std::string &text);

/// Input graph together with its degree-3 reduction, computed once per graph.
struct PreparedGraph {
    explicit PreparedGraph(const DirectedGraph &g);

    const DirectedGraph &original;
    DegreeReduction reduced;

    /// Edge count of the reduced graph, clamped to at least 2 so logarithms stay positive.
    double m() const;
};

enum class Verdict { kAccept, kReject };

struct LevelTrace {
    unsigned level = 0;
    std::size_t s_hat = 0;
    std::size_t s_out = 0;
    std::size_t s_in = 0;
    std::size_t t_hat = 0;
    std::size_t t_out = 0;
    std::size_t t_in = 0;
    std::size_t products = 0;
};

struct DecisionTrace {
    /// "sample-eccentricity", "small-out-ball", "small-in-ball", "product" or "none".
    std::string fired = "none";
    std::size_t step1_samples = 0;
    std::optional<Vertex> small_out_ball;
    std::optional<Vertex> small_in_ball;
    std::vector<LevelTrace> levels;
};

struct Decision {
    Verdict verdict = Verdict::kReject;
    DecisionTrace trace;

    bool accepted() const noexcept { return verdict == Verdict::kAccept; }
};

struct DeciderConfig {
    std::uint64_t D = 1;
    unsigned t = 0;
    Rational epsilon{1, 20};
    double omega = kDefaultOmega;
    std::uint64_t seed = 0;
    /// Uses epsilon = 1/D and restricts the products to windows of width about 2C around each radius.
    bool integer_weight_mode = false;
    unsigned threads = 1;
};

/**
 * Randomized decision procedure for the 7/4 case on unweighted graphs.
 * Accepts with high probability when the diameter is at least D and always
 * rejects when it is below 4D/7. Throws std::invalid_argument on a weighted
 * graph or D = 0.
 */
Decision decide_74(const PreparedGraph &pg, std::uint64_t D, std::uint64_t seed,
                   double omega = kDefaultOmega, unsigned threads = 1);
Decision decide_74(const DirectedGraph &g, std::uint64_t D, std::uint64_t seed);

/**
 * Decision procedure for k = 2^(t+2). Accepts with high probability when the
 * diameter is at least D and always rejects when it is below
 * (k/(2k-1) - epsilon) D.
 */
Decision decide_general(const PreparedGraph &pg, const DeciderConfig &cfg);
Decision decide_general(const DirectedGraph &g, const DeciderConfig &cfg);

enum class DeciderKind { kGeneral, kSeventyFour };

struct EstimateOptions {
    DeciderKind kind = DeciderKind::kGeneral;
    unsigned t = 0;
    Rational epsilon{1, 20};
    double omega = kDefaultOmega;
    std::uint64_t seed = 0;
    bool integer_weight_mode = false;
    unsigned threads = 1;
};

struct EstimateReport {
    Distance estimate = kInfinity;
    std::size_t decider_calls = 0;
    std::vector<std::pair<std::uint64_t, bool>> probes;
};

/**
 * Binary search over D with lo = 0 and hi = n (unweighted) or 1 + total
 * weight (weighted). Returns kInfinity when g is not strongly connected.
 */
EstimateReport estimate_diameter_report(const DirectedGraph &g, const EstimateOptions &opt);
Distance estimate_diameter(const DirectedGraph &g, unsigned t, Rational epsilon, std::uint64_t seed);

/// Largest d(u, v) over ordered pairs via one search per source; kInfinity if not strongly connected.
Distance exact_diameter(const DirectedGraph &g, unsigned threads = 1);

/// max(out-eccentricity(0), in-eccentricity(0)); within a factor 2 of the diameter.
Distance two_approx(const DirectedGraph &g);

} // namespace dirdiam

#endif // DIRDIAM_DECIDER_HPP_
