#ifndef DIRDIAM_ALPHA_SCHEDULE_HPP_
#define DIRDIAM_ALPHA_SCHEDULE_HPP_

#include <cstdint>
#include <vector>

namespace dirdiam {

/// Default matrix multiplication exponent.
inline constexpr double kDefaultOmega = 2.3728596;

/**
 * Exponents for the level-t decider: k = 2^(t+2), the overall exponent alpha
 * and the per-level budgets alpha_0 > ... > alpha_{t+1} = alpha with
 * alpha_0 = 1 - alpha and 2 alpha = alpha_i + (1 - alpha_{i+1})(omega - 1)/2.
 */
struct AlphaSchedule {
    unsigned t = 0;
    double omega = kDefaultOmega;
    std::uint64_t k = 4;
    double alpha = 0.0;
    std::vector<double> alphas;

    /// Largest |2 alpha - alpha_i - (1 - alpha_{i+1})(omega - 1)/2| over i = 0..t.
    double max_residual() const;
};

/// Throws std::invalid_argument unless t <= 60 and 2 <= omega <= 3.
AlphaSchedule alpha_schedule(unsigned t, double omega = kDefaultOmega);

} // namespace dirdiam

#endif // DIRDIAM_ALPHA_SCHEDULE_HPP_
