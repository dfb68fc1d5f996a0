// Acceptance suite: one PASS/FAIL line per criterion. Pass criterion numbers
// as arguments to run a subset.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dirdiam/alpha_schedule.hpp"
#include "dirdiam/ankc_reduction.hpp"
#include "dirdiam/bool_matrix.hpp"
#include "dirdiam/decider.hpp"
#include "dirdiam/generators.hpp"
#include "dirdiam/linfty_reduction.hpp"
#include "dirdiam/oracles.hpp"
#include "dirdiam/random.hpp"
#include "support.hpp"

using namespace dirdiam;

namespace {

// Pinned tolerances and sizes.
constexpr int kApproxGraphs = 100;
constexpr int kApproxRequired = 95;
const Rational kApproxEps(1, 20);
constexpr int kSoundnessTriples = 500;
constexpr double kOmega = 2.3728596;
constexpr double kAlphaTarget = 0.457470;
constexpr double kAlphaTolerance = 1e-6;
constexpr double kResidualTolerance = 1e-12;
constexpr int kMatrixPairs = 200;
constexpr int kFoldPairs = 10000;
constexpr int kBoundSets = 50;
constexpr int kWeightedLinftyInstances = 50;
constexpr int kEndToEndInstances = 50;
constexpr double kDeciderSlopeMax = 1.9;
constexpr double kApspSlopeMin = 1.9;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char *f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

Rational clip(Rational r, Rational alpha) { return r < alpha ? r : alpha; }

// ---------------------------------------------------------------- 1
Outcome approximation_guarantee() {
    int in_range[2] = {0, 0};
    int unsound = 0;
    for (int trial = 0; trial < kApproxGraphs; ++trial) {
        Rng rng(child_seed(1, trial));
        std::size_t n = std::uniform_int_distribution<std::size_t>(5, 100)(rng);
        std::size_t m = std::uniform_int_distribution<std::size_t>(n, std::min<std::size_t>(400, 4 * n))(rng);
        DirectedGraph g = generate_random_graph(n, m, 10, child_seed(2, trial), true);
        Distance diam = diameter_of(apsp(g));
        for (unsigned t : {0u, 1u}) {
            EstimateOptions opt;
            opt.t = t;
            opt.epsilon = kApproxEps;
            opt.seed = child_seed(3, trial);
            EstimateReport rep = estimate_diameter_report(g, opt);
            const std::int64_t k = std::int64_t{4} << t;
            Rational ratio(static_cast<std::int64_t>(rep.estimate), static_cast<std::int64_t>(diam));
            Rational upper = Rational(2) - Rational(1, k) + 4 * kApproxEps;
            in_range[t] += ratio >= Rational(1) && ratio <= upper;
            Rational reject_below = Rational(k, 2 * k - 1) - kApproxEps;
            for (auto [D, accepted] : rep.probes) {
                bool below = Rational(static_cast<std::int64_t>(diam)) <
                             reject_below * Rational(static_cast<std::int64_t>(D));
                unsound += accepted && below;
            }
        }
    }
    std::ostringstream s;
    s << "t=0 in range " << in_range[0] << "/" << kApproxGraphs << ", t=1 in range " << in_range[1] << "/"
      << kApproxGraphs << ", soundness violations " << unsound;
    return {in_range[0] >= kApproxRequired && in_range[1] >= kApproxRequired && unsound == 0, s.str()};
}

// ---------------------------------------------------------------- 2
Outcome decider_soundness() {
    int accepts = 0, checked = 0;
    for (int trial = 0; trial < kSoundnessTriples; ++trial) {
        Rng rng(child_seed(20, trial));
        std::size_t n = std::uniform_int_distribution<std::size_t>(3, 60)(rng);
        std::size_t m = std::uniform_int_distribution<std::size_t>(n, 3 * n)(rng);
        bool seventy_four = trial % 2 == 0;
        DirectedGraph g = generate_random_graph(n, m, seventy_four ? 1 : 10, child_seed(21, trial), true);
        const auto diam = static_cast<std::int64_t>(diameter_of(apsp(g)));
        std::uint64_t seed = child_seed(22, trial);
        std::uint64_t extra = std::uniform_int_distribution<std::uint64_t>(0, diam)(rng);
        if (seventy_four) {
            std::uint64_t D = static_cast<std::uint64_t>(7 * diam / 4 + 1) + extra;
            if (!(7 * diam < 4 * static_cast<std::int64_t>(D))) {
                continue;
            }
            accepts += decide_74(g, D, seed).accepted();
        } else {
            DeciderConfig cfg;
            cfg.t = trial % 4 == 1 ? 0 : 1;
            cfg.seed = seed;
            const std::int64_t k = std::int64_t{4} << cfg.t;
            Rational factor = Rational(k, 2 * k - 1) - cfg.epsilon;
            std::int64_t D = boost::rational_cast<std::int64_t>(Rational(diam) / factor) + 1;
            cfg.D = static_cast<std::uint64_t>(D) + extra;
            if (!(Rational(diam) < factor * Rational(static_cast<std::int64_t>(cfg.D)))) {
                continue;
            }
            accepts += decide_general(g, cfg).accepted();
        }
        ++checked;
    }
    return {accepts == 0 && checked == kSoundnessTriples,
            "triples " + std::to_string(checked) + ", accepts " + std::to_string(accepts)};
}

// ---------------------------------------------------------------- 3
Outcome alpha_schedule_check() {
    double alpha = alpha_schedule(0, kOmega).alpha;
    bool close = std::abs(alpha - kAlphaTarget) <= kAlphaTolerance;
    double worst = 0.0;
    bool monotone = true;
    for (double omega : {2.0, kOmega, 3.0}) {
        for (unsigned t = 0; t <= 8; ++t) {
            AlphaSchedule s = alpha_schedule(t, omega);
            worst = std::max(worst, s.max_residual());
            if (omega < 3.0) {
                for (std::size_t i = 0; i + 1 < s.alphas.size(); ++i) {
                    monotone = monotone && s.alphas[i] > s.alphas[i + 1];
                }
            }
        }
    }
    return {close && worst < kResidualTolerance && monotone,
            "alpha=" + fmt("%.7f", alpha) + ", max residual " + fmt("%.2e", worst) +
                (monotone ? ", monotone" : ", NOT monotone")};
}

// ---------------------------------------------------------------- 4
Outcome sparse_product() {
    std::mt19937_64 rng(40);
    std::uniform_int_distribution<std::size_t> dim(1, 200);
    const double densities[] = {0.01, 0.1, 0.5};
    int mismatches = 0;
    for (int trial = 0; trial < kMatrixPairs; ++trial) {
        double density = densities[trial % 3];
        std::size_t r = dim(rng), inner = dim(rng), c = dim(rng);
        testsupport::Dense da = testsupport::random_dense(rng, r, inner, density);
        testsupport::Dense db = testsupport::random_dense(rng, inner, c, density);
        testsupport::Dense want = testsupport::naive_product(da, db, inner, c);
        SparseBoolMatrix a = testsupport::from_dense(da, inner), b = testsupport::from_dense(db, c);
        SparseBoolMatrix full = product(a, b);
        bool ok = testsupport::to_dense(full) == want;
        std::size_t block = 1 + trial % 17;
        ok = ok && product(a, b, block) == full && product(a, b, 1) == full && product(a, b, 0, 2) == full;
        mismatches += !ok;
    }
    return {mismatches == 0, "pairs " + std::to_string(kMatrixPairs) + ", mismatches " + std::to_string(mismatches)};
}

// ---------------------------------------------------------------- 5
Outcome domain_reduction() {
    std::mt19937_64 rng(50);
    int fold_bad = 0;
    for (int trial = 0; trial < kFoldPairs; ++trial) {
        Rational alpha = trial % 2 ? Rational(2) : Rational(5, 2);
        Rational eps = trial % 3 ? Rational(1, 8) : Rational(1, 5);
        std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 12);
        Rational M(1 + static_cast<std::int64_t>(rng() % 40), 1 + static_cast<std::int64_t>(rng() % 3));
        std::uniform_int_distribution<std::int64_t> pick(0, den * 1000);
        Rational a = M * Rational(pick(rng), den * 1000), b = M * Rational(pick(rng), den * 1000);
        Fold fa = fold_once(a, M, alpha, eps), fb = fold_once(b, M, alpha, eps);
        Rational folded = fa.h > fb.h ? fa.h - fb.h : fb.h - fa.h;
        for (std::size_t i = 0; i < fa.g.size(); ++i) {
            folded = std::max(folded, fa.g[i] > fb.g[i] ? fa.g[i] - fb.g[i] : fb.g[i] - fa.g[i]);
        }
        Rational diff = a > b ? a - b : b - a;
        fold_bad += clip(diff, alpha) != clip(folded, alpha);
    }
    int bound_bad = 0;
    for (int trial = 0; trial < kBoundSets; ++trial) {
        std::size_t n = 2 + trial % 15, d = 1 + trial % 4;
        Rational alpha = trial % 2 ? Rational(2) : Rational(3);
        Rational eps(1, 8);
        VectorSet vs = random_vector_set(n, d, -3 * static_cast<std::int64_t>(n), 3 * static_cast<std::int64_t>(n),
                                         1 + trial % 3, child_seed(51, trial));
        VectorSet out = bound_domain(flatten_coordinates(vs, alpha), alpha, eps);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                bound_bad += clip(linf_distance(out, i, j), alpha) != clip(linf_distance(vs, i, j), alpha);
            }
        }
    }
    return {fold_bad == 0 && bound_bad == 0,
            "fold mismatches " + std::to_string(fold_bad) + "/" + std::to_string(kFoldPairs) +
                ", bound_domain pair mismatches " + std::to_string(bound_bad)};
}

// ---------------------------------------------------------------- 6, 7
Outcome linfty_gap(bool unweighted) {
    int violations = 0, instances = 0;
    const Rational alpha(2);
    auto run = [&](VectorSet vs, bool close, const ReductionArtifact &art) {
        if (classify_promise(vs, alpha) != (close ? PromiseSide::kClose : PromiseSide::kFar)) {
            ++violations;
        }
        GapReport rep = verify_gap(art);
        violations += rep.side != (close ? GapSide::kLarge : GapSide::kSmall);
        ++instances;
    };
    if (!unweighted) {
        const Rational eps(1, 8);
        for (int trial = 0; trial < kWeightedLinftyInstances; ++trial) {
            std::size_t d = 1 + trial % 4;
            std::size_t n = std::min<std::size_t>(2 + trial % 11, std::size_t{1} << d);
            bool close = trial % 2 == 0;
            VectorSet vs = bounded_promise_instance(n, d, alpha, eps, close, 8, child_seed(60, trial));
            run(vs, close, build_weighted_rt_graph(vs, alpha));
        }
    } else {
        for (std::int64_t M : {6, 8, 11}) {
            const Rational eps = unweighted_epsilon(alpha, M);
            for (int trial = 0; trial < 10; ++trial) {
                std::size_t d = 1 + trial % 2;
                std::size_t n = std::min<std::size_t>(2 + trial % 3, std::size_t{1} << d);
                bool close = trial % 2 == 0;
                VectorSet vs = bounded_promise_instance(n, d, alpha, eps, close, 4 * M, child_seed(70 + M, trial));
                run(vs, close, build_unweighted_rt_graph(vs, alpha, M));
            }
        }
    }
    return {violations == 0, "instances " + std::to_string(instances) + ", violations " + std::to_string(violations)};
}

// ---------------------------------------------------------------- 8
Outcome weighted_ankc_gap() {
    int covered = 0, uncovered = 0, violations = 0;
    for (std::size_t k : {3u, 4u}) {
        for (std::uint64_t t : {2 * k + 1, 4 * k}) {
            for (std::size_t per = 1; per <= 3; ++per) {
                for (double p : {0.0, 0.3, 0.7}) {
                    for (std::uint64_t seed = 0; seed < 2; ++seed) {
                        std::uint64_t s = child_seed(80 + k * 100 + per, seed * 10 + static_cast<std::uint64_t>(p * 10));
                        LayeredCycleInstance yes = planted_layered_instance(k, per, p, std::nullopt, s);
                        ReductionArtifact art = build_weighted_ankc_graph(yes, t);
                        violations += exact_roundtrip_diameter(art.graph) > 6 * t + 2 * k;
                        ++covered;
                        for (std::uint32_t bad = 0; bad < per; ++bad) {
                            LayeredCycleInstance no = planted_layered_instance(k, per, p, bad, s);
                            ReductionArtifact nart = build_weighted_ankc_graph(no, t);
                            DistanceMatrix dm = apsp(nart.graph);
                            auto [a, a2] = nart.interesting_pairs.at(bad);
                            violations += dm.roundtrip(a, a2) < 10 * t;
                            ++uncovered;
                        }
                    }
                }
            }
        }
    }
    return {violations == 0, "covered " + std::to_string(covered) + ", single-uncovered " +
                                 std::to_string(uncovered) + ", violations " + std::to_string(violations)};
}

// ---------------------------------------------------------------- 9
Outcome unweighted_ankc_gap() {
    // slack[k][t] = max over covered instances of RT - 6t.
    std::map<std::size_t, std::map<std::uint64_t, std::int64_t>> slack;
    int yes_violations = 0, no_violations = 0, instances = 0;
    const std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> sweep = {{3, {7, 10, 14}}, {4, {10, 14}}};
    for (const auto &[k, ts] : sweep) {
        for (std::uint64_t t : ts) {
            std::int64_t worst = std::numeric_limits<std::int64_t>::min();
            for (std::size_t per = 1; per <= 3; ++per) {
                for (double p : {0.0, 0.4, 1.0}) {
                    for (std::uint64_t seed = 0; seed < 2; ++seed) {
                        std::uint64_t s = child_seed(90 + k * 100 + per, seed * 10 + static_cast<std::uint64_t>(p * 10));
                        ReductionArtifact art =
                            build_unweighted_ankc_graph(planted_layered_instance(k, per, p, std::nullopt, s), t);
                        Distance rt = exact_roundtrip_diameter(art.graph);
                        worst = std::max(worst, static_cast<std::int64_t>(rt) - static_cast<std::int64_t>(6 * t));
                        no_violations += rt > art.no_threshold;
                        ++instances;
                        for (std::uint32_t bad = 0; bad < per; ++bad) {
                            ReductionArtifact nart =
                                build_unweighted_ankc_graph(planted_layered_instance(k, per, p, bad, s), t);
                            DistanceMatrix dm = apsp(nart.graph);
                            auto [a, a2] = nart.interesting_pairs.at(bad);
                            yes_violations += dm(a, a2) < 8 * t || dm(a2, a) < 2 * t;
                            ++instances;
                        }
                    }
                }
            }
            slack[k][t] = worst;
        }
    }
    bool invariant = true;
    std::ostringstream s;
    for (const auto &[k, by_t] : slack) {
        s << "k=" << k << " c_slack " << unweighted_ankc_slack(k) << " measured";
        for (const auto &[t, v] : by_t) {
            s << " t" << t << ":" << v;
            invariant = invariant && v == by_t.begin()->second &&
                        v <= static_cast<std::int64_t>(unweighted_ankc_slack(k));
        }
        s << "; ";
    }
    s << "instances " << instances << ", no-side violations " << no_violations << ", yes-side violations "
      << yes_violations;
    return {invariant && no_violations == 0 && yes_violations == 0, s.str()};
}

// ---------------------------------------------------------------- 10
Outcome end_to_end() {
    RtSolver exact = [](const DirectedGraph &g) { return exact_roundtrip_diameter(g); };
    int ankc_agree = 0, ankc_covered = 0;
    for (int trial = 0; trial < kEndToEndInstances; ++trial) {
        Rng rng(child_seed(100, trial));
        double p = std::uniform_real_distribution<double>(0.3, 0.7)(rng);
        LayeredCycleInstance inst = random_layered_instance(3, 3, p, child_seed(101, trial));
        bool truth = all_nodes_k_cycle_brute(inst).all_covered;
        ankc_covered += truth;
        ankc_agree += decide_ankc_via_rt(inst, 7, exact, trial % 2 == 1) == truth;
    }
    int linf_agree = 0;
    const Rational alpha(2);
    for (int trial = 0; trial < kEndToEndInstances; ++trial) {
        bool close = trial % 2 == 0;
        VectorSet vs = promise_instance(2 + trial % 4, 1 + trial % 2, alpha, close, child_seed(102, trial));
        bool truth = classify_promise(vs, alpha) == PromiseSide::kClose;
        linf_agree += truth == close && solve_linfty_via_rt(vs, alpha, exact) == truth;
    }
    return {ankc_agree == kEndToEndInstances && linf_agree == kEndToEndInstances,
            "ankc " + std::to_string(ankc_agree) + "/" + std::to_string(kEndToEndInstances) + " (" +
                std::to_string(ankc_covered) + " covered), linfty " + std::to_string(linf_agree) + "/" +
                std::to_string(kEndToEndInstances)};
}

// ---------------------------------------------------------------- 11
double slope(const std::vector<double> &xs, const std::vector<double> &ys) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double num = 0, den = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    return num / den;
}

Outcome runtime_scaling() {
    using Clock = std::chrono::steady_clock;
    std::vector<double> lm, ld, le;
    std::ostringstream rows;
    for (unsigned lg = 12; lg <= 16; ++lg) {
        const std::size_t m = std::size_t{1} << lg;
        DirectedGraph g = generate_random_graph(m / 2, m, 1, child_seed(110, lg), true);
        DeciderConfig cfg;
        cfg.D = 4 * two_approx(g) + 1;
        cfg.seed = 111;
        auto start = Clock::now();
        PreparedGraph pg(g);
        Decision dec = decide_general(pg, cfg);
        double decide = std::chrono::duration<double>(Clock::now() - start).count();
        start = Clock::now();
        Distance diam = exact_diameter(g);
        double exact = std::chrono::duration<double>(Clock::now() - start).count();
        (void)dec;
        (void)diam;
        lm.push_back(std::log(static_cast<double>(m)));
        ld.push_back(std::log(decide));
        le.push_back(std::log(exact));
        rows << " m=2^" << lg << ":" << fmt("%.2fs", decide) << "/" << fmt("%.2fs", exact);
    }
    double sd = slope(lm, ld), se = slope(lm, le);
    return {sd < kDeciderSlopeMax && se >= kApspSlopeMin,
            "decider exponent " + fmt("%.3f", sd) + ", APSP exponent " + fmt("%.3f", se) + " (decide/exact" +
                rows.str() + ")"};
}

} // namespace

int main(int argc, char **argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"approximation guarantee", approximation_guarantee},
        {"decider soundness", decider_soundness},
        {"alpha schedule", alpha_schedule_check},
        {"sparse product", sparse_product},
        {"domain reduction", domain_reduction},
        {"weighted linfty gap", [] { return linfty_gap(false); }},
        {"unweighted linfty gap", [] { return linfty_gap(true); }},
        {"weighted ankc gap", weighted_ankc_gap},
        {"unweighted ankc gap", unweighted_ankc_gap},
        {"end-to-end agreement", end_to_end},
        {"runtime scaling", runtime_scaling},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        only.insert(std::stoi(argv[i]));
    }
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        int id = static_cast<int>(i) + 1;
        if (!only.empty() && !only.count(id)) {
            continue;
        }
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << criteria[i].first << ": " << o.detail << " ["
                  << fmt("%.1fs", secs) << "]" << std::endl;
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
