#include "dirdiam/alpha_schedule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dirdiam {

namespace {

// alpha_i is affine in alpha: alpha_i = a + b * alpha. Solving alpha_{t+1} = alpha
// gives the same value as the closed form and stays defined at omega = 3,
// where the closed form is 0/0.
double solve_affine(unsigned t, double r) {
    double a = 1.0;
    double b = -1.0;
    for (unsigned i = 0; i <= t; ++i) {
        a = r * a + 1.0;
        b = r * b - 2.0 * r;
    }
    return a / (1.0 - b);
}

} // namespace

double AlphaSchedule::max_residual() const {
    double worst = 0.0;
    for (unsigned i = 0; i <= t; ++i) {
        double rhs = alphas[i] + (1.0 - alphas[i + 1]) * (omega - 1.0) / 2.0;
        worst = std::max(worst, std::abs(2.0 * alpha - rhs));
    }
    return worst;
}

AlphaSchedule alpha_schedule(unsigned t, double omega) {
    if (t > 60) {
        throw std::invalid_argument("alpha_schedule: t must be at most 60");
    }
    if (!(omega >= 2.0 && omega <= 3.0)) {
        throw std::invalid_argument("alpha_schedule: omega must lie in [2, 3]");
    }
    AlphaSchedule s;
    s.t = t;
    s.omega = omega;
    s.k = std::uint64_t{1} << (t + 2);
    double r = 2.0 / (omega - 1.0);
    double rt = std::pow(r, static_cast<double>(t));
    double num = 2.0 * rt - (omega - 1.0) * (omega - 1.0) / 2.0;
    double den = rt * (7.0 - omega) - (omega * omega - 1.0) / 2.0;
    if (std::abs(3.0 - omega) < 1e-6) {
        s.alpha = solve_affine(t, r);
    } else {
        s.alpha = num / den;
    }
    s.alphas.resize(t + 2);
    s.alphas[0] = 1.0 - s.alpha;
    for (unsigned i = 0; i <= t; ++i) {
        s.alphas[i + 1] = r * s.alphas[i] + 1.0 - 2.0 * r * s.alpha;
    }
    // Pin the endpoint; the recursion reproduces it up to rounding.
    s.alphas[t + 1] = s.alpha;
    return s;
}

} // namespace dirdiam
