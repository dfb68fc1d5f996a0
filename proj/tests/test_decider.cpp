#include <doctest.h>

#include <cmath>
#include <random>

#include "dirdiam/decider.hpp"
#include "dirdiam/generators.hpp"
#include "dirdiam/random.hpp"
#include "support.hpp"

using namespace dirdiam;

namespace {

DirectedGraph cycle(std::size_t n, Weight w = 1) {
    std::vector<Edge> e;
    for (Vertex v = 0; v < n; ++v) {
        e.push_back({v, static_cast<Vertex>((v + 1) % n), w});
    }
    return DirectedGraph(n, e);
}

DirectedGraph two_way_path(std::size_t n, Weight w) {
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < n; ++v) {
        e.push_back({v, v + 1, w});
        e.push_back({v + 1, v, w});
    }
    return DirectedGraph(n, e);
}

Distance reference_diameter(const DirectedGraph &g) {
    return testsupport::max_entry(testsupport::bellman_ford_all(g));
}

// diam < (k/(2k-1) - eps) D, exactly.
bool below_general(Distance diam, std::uint64_t D, std::uint64_t k, Rational eps) {
    Rational bound = Rational(static_cast<std::int64_t>(k), static_cast<std::int64_t>(2 * k - 1)) - eps;
    return Rational(static_cast<std::int64_t>(diam)) < bound * Rational(static_cast<std::int64_t>(D));
}

} // namespace

TEST_CASE("parse_rational") {
    CHECK(parse_rational("0.05") == Rational(1, 20));
    CHECK(parse_rational("1/20") == Rational(1, 20));
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("2.5") == Rational(5, 2));
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("decide_74 examples") {
    DirectedGraph c8 = cycle(8);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        CHECK(decide_74(c8, 7, seed).accepted());
        CHECK_FALSE(decide_74(c8, 13, seed).accepted());
    }
    CHECK_FALSE(decide_74(DirectedGraph(1, {}), 1, 0).accepted());
    CHECK(decide_74(DirectedGraph(2, {{0, 1, 1}}), 5, 0).accepted());
    CHECK_THROWS_AS(decide_74(cycle(3, 2), 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(decide_74(c8, 0, 0), std::invalid_argument);
}

TEST_CASE("decide_general on a weighted two-way path") {
    DirectedGraph p = two_way_path(6, 10);
    REQUIRE(reference_diameter(p) == 50);
    DeciderConfig cfg;
    cfg.t = 1;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        cfg.seed = seed;
        cfg.D = 50;
        CHECK(decide_general(p, cfg).accepted());
        // (8/15 - 1/20) * 104 > 50
        cfg.D = 104;
        CHECK_FALSE(decide_general(p, cfg).accepted());
    }
}

TEST_CASE("decide_74 is sound on random unweighted graphs") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 2 + trial % 25;
        DirectedGraph g = testsupport::strong_graph(rng, n, n + trial % 20, 1);
        Distance diam = reference_diameter(g);
        for (std::uint64_t D = 1; D <= 2 * diam + 2; ++D) {
            if (7 * diam < 4 * D) {
                CHECK_FALSE(decide_74(g, D, trial).accepted());
            }
        }
    }
}

TEST_CASE("decide_general is sound on random weighted graphs") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 2 + trial % 20;
        DirectedGraph g = testsupport::strong_graph(rng, n, n, trial % 3 == 0 ? 1 : 10);
        Distance diam = reference_diameter(g);
        DeciderConfig cfg;
        cfg.t = trial % 2;
        cfg.seed = trial;
        std::uint64_t k = std::uint64_t{4} << cfg.t;
        for (std::uint64_t D = 1; D <= 3 * diam + 3; D += 1 + diam / 10) {
            cfg.D = D;
            if (below_general(diam, D, k, cfg.epsilon)) {
                CHECK_FALSE(decide_general(g, cfg).accepted());
            }
        }
    }
}

TEST_CASE("deciders accept when the diameter reaches D") {
    std::mt19937_64 rng(47);
    int accepted = 0, total = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 5 + trial % 30;
        DirectedGraph g = testsupport::strong_graph(rng, n, n / 2, trial % 2 ? 1 : 6);
        Distance diam = reference_diameter(g);
        DeciderConfig cfg;
        cfg.D = diam;
        cfg.t = trial % 2;
        cfg.seed = trial;
        accepted += decide_general(g, cfg).accepted();
        ++total;
        if (!g.weighted()) {
            accepted += decide_74(g, diam, trial).accepted();
            ++total;
        }
    }
    CHECK(accepted >= total * 95 / 100);
}

TEST_CASE("t = 0 agrees with the 7/4 decider in distribution") {
    std::mt19937_64 rng(53);
    int agree = 0, total = 0;
    for (int graph = 0; graph < 20; ++graph) {
        std::size_t n = 6 + graph;
        DirectedGraph g = testsupport::strong_graph(rng, n, n, 1);
        Distance diam = reference_diameter(g);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            for (std::uint64_t D : {diam, 2 * diam}) {
                DeciderConfig cfg;
                cfg.D = D;
                cfg.seed = seed;
                cfg.epsilon = Rational(1, 1000);
                agree += decide_general(g, cfg).accepted() == decide_74(g, D, seed).accepted();
                ++total;
            }
        }
    }
    CHECK(agree >= total * 95 / 100);
}

TEST_CASE("integer weight mode gives the same verdict as the full j range") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 4 + trial % 16;
        DirectedGraph g = testsupport::strong_graph(rng, n, n, 1 + trial % 4);
        Distance diam = reference_diameter(g);
        for (std::uint64_t D : {diam, diam + 1, 2 * diam, diam / 2 + 1}) {
            DeciderConfig full;
            full.D = D;
            full.t = trial % 2;
            full.seed = trial;
            full.epsilon = Rational(1, static_cast<std::int64_t>(D));
            DeciderConfig windowed = full;
            windowed.integer_weight_mode = true;
            CHECK(decide_general(g, full).accepted() == decide_general(g, windowed).accepted());
        }
    }
}

TEST_CASE("verdicts are reproducible and independent of the thread count") {
    std::mt19937_64 rng(61);
    DirectedGraph g = testsupport::strong_graph(rng, 60, 80, 5);
    PreparedGraph pg(g);
    Distance diam = reference_diameter(g);
    for (std::uint64_t D : {diam / 2, diam, diam + diam / 3}) {
        DeciderConfig one;
        one.D = std::max<std::uint64_t>(D, 1);
        one.seed = 9;
        DeciderConfig four = one;
        four.threads = 4;
        Decision a = decide_general(pg, one);
        CHECK(a.accepted() == decide_general(pg, one).accepted());
        CHECK(a.accepted() == decide_general(pg, four).accepted());
        CHECK(a.trace.fired == decide_general(pg, four).trace.fired);
    }
}

TEST_CASE("estimate examples") {
    DirectedGraph p = two_way_path(6, 1);
    for (unsigned t : {0u, 1u}) {
        Distance e = estimate_diameter(p, t, Rational(1, 20), 3);
        CHECK(e >= 5);
        CHECK(e <= 8);
    }
    CHECK(estimate_diameter(cycle(2), 0, Rational(1, 20), 0) == 1);
    CHECK(estimate_diameter(DirectedGraph(2, {{0, 1, 1}}), 0, Rational(1, 20), 0) == kInfinity);
    CHECK(estimate_diameter(DirectedGraph(1, {}), 0, Rational(1, 20), 0) == 0);
}

TEST_CASE("estimates land within the approximation ratio") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 3 + trial % 30;
        DirectedGraph g = testsupport::strong_graph(rng, n, n, trial % 2 ? 1 : 10);
        Distance diam = reference_diameter(g);
        unsigned t = trial % 2;
        EstimateOptions opt;
        opt.t = t;
        opt.seed = trial;
        opt.kind = (t == 0 && !g.weighted() && trial % 4 == 1) ? DeciderKind::kSeventyFour
                                                                 : DeciderKind::kGeneral;
        EstimateReport rep = estimate_diameter_report(g, opt);
        double k = 4 << t;
        CHECK(rep.estimate >= diam);
        CHECK(static_cast<double>(rep.estimate) <= (2.0 - 1.0 / k + 4 * 0.05) * diam + 1e-9);
        CHECK(rep.decider_calls == rep.probes.size());
    }
}

TEST_CASE("exact diameter and the 2-approximation") {
    CHECK(exact_diameter(cycle(2)) == 1);
    CHECK(exact_diameter(cycle(5)) == 4);
    CHECK(exact_diameter(DirectedGraph(2, {{0, 1, 1}})) == kInfinity);
    CHECK(two_approx(cycle(5)) == 4);
    CHECK(two_approx(cycle(2)) == 1);

    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + trial % 15;
        DirectedGraph g = testsupport::strong_graph(rng, n, n, 1 + trial % 9);
        Distance diam = reference_diameter(g);
        CHECK(exact_diameter(g) == diam);
        CHECK(exact_diameter(g, 3) == diam);
        Distance two = two_approx(g);
        CHECK(two <= diam);
        CHECK(2 * two >= diam);
    }
}

TEST_CASE("degree-reduced edge count is clamped") {
    PreparedGraph pg(DirectedGraph(1, {}));
    CHECK(pg.m() == 2.0);
}

TEST_CASE("sampled sets hit every planted set of size m^alpha") {
    const std::uint64_t m = 1000;
    const double alpha = 0.45;
    const auto planted = static_cast<std::uint64_t>(std::ceil(std::pow(m, alpha)));
    const auto count = static_cast<std::uint64_t>(std::ceil(4 * std::pow(m, 1 - alpha) * std::log(m)));
    int misses = 0;
    const int trials = 2000;
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(child_seed(77, trial));
        std::vector<std::uint64_t> s = sample_with_replacement<std::uint64_t>(rng, m, count);
        misses += s.front() >= planted;
    }
    // Miss probability is at most 1/m^2 per trial.
    CHECK(misses == 0);
}
