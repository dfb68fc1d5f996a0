#include "dirdiam/decider.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dirdiam/bool_matrix.hpp"
#include "dirdiam/parallel.hpp"
#include "dirdiam/random.hpp"
#include "dirdiam/search.hpp"

namespace dirdiam {

namespace {

using i128 = __int128;

std::uint64_t sample_count(double m, double exponent) {
    return static_cast<std::uint64_t>(std::ceil(4.0 * std::pow(m, exponent) * std::log(m)));
}

std::size_t search_budget(double m, double exponent) {
    return static_cast<std::size_t>(std::ceil(std::pow(m, exponent))) + 1;
}

// Settled vertices of `res` satisfying `within`, which must be a prefix of the settle order.
template <class Within>
std::vector<VertexDistance> core_of(const PartialSearchResult &res, Within within) {
    std::vector<VertexDistance> core;
    for (const VertexDistance &vd : res.exact) {
        if (!within(vd.distance)) {
            break;
        }
        core.push_back(vd);
    }
    return core;
}

std::vector<VertexDistance> sorted_by_vertex(std::vector<VertexDistance> v) {
    std::sort(v.begin(), v.end(),
              [](const VertexDistance &a, const VertexDistance &b) { return a.vertex < b.vertex; });
    return v;
}

// True if some vertex in `reduced` (ids of the reduced graph) has in- or
// out-eccentricity satisfying `big`. Eccentricities are computed on the
// original graph, where they coincide.
template <class Big>
bool any_eccentric(const PreparedGraph &pg, const std::vector<Vertex> &reduced, Big big,
                   unsigned threads) {
    std::atomic<bool> found{false};
    parallel_chunks(reduced.size(), threads, [&](std::size_t first, std::size_t last, std::size_t) {
        for (std::size_t i = first; i < last && !found.load(std::memory_order_relaxed); ++i) {
            Vertex v = pg.reduced.map.original(reduced[i]);
            if (big(eccentricity(pg.original, v, Direction::kOut)) ||
                big(eccentricity(pg.original, v, Direction::kIn))) {
                found = true;
            }
        }
    });
    return found.load();
}

// Smallest reduced vertex whose ball (radius given by `within`) has at most
// `limit` vertices, probed with a partial search of `budget` settled vertices.
template <class Within>
std::optional<Vertex> first_small_ball(const DirectedGraph &g, Direction dir, std::size_t budget,
                                       double limit, Within within, unsigned threads) {
    std::size_t n = g.num_vertices();
    std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
    std::vector<std::optional<Vertex>> hits(chunks);
    parallel_chunks(n, threads, [&](std::size_t first, std::size_t last, std::size_t c) {
        SearchWorkspace ws(n);
        for (std::size_t v = first; v < last; ++v) {
            PartialSearchResult res = partial_search(g, static_cast<Vertex>(v), dir, budget, &ws);
            std::size_t count = 0;
            for (const VertexDistance &vd : res.exact) {
                if (within(vd.distance)) {
                    ++count;
                }
            }
            if (static_cast<double>(count) <= limit) {
                hits[c] = static_cast<Vertex>(v);
                return;
            }
        }
    });
    for (auto &h : hits) {
        if (h) {
            return h;
        }
    }
    return std::nullopt;
}

// Vertices of B_r(v) and its one-step extension, with r given by `within`.
template <class Within>
std::vector<Vertex> ball_plus_vertices(const DirectedGraph &g, Vertex v, Direction dir,
                                       std::size_t budget, Within within) {
    SearchWorkspace ws(g.num_vertices());
    PartialSearchResult res = partial_search(g, v, dir, budget, &ws);
    std::vector<VertexDistance> core = core_of(res, within);
    std::vector<Vertex> out;
    for (const VertexDistance &vd : core) {
        out.push_back(vd.vertex);
    }
    for (const VertexDistance &vd : plus_extension(g, core, dir, &ws)) {
        out.push_back(vd.vertex);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Steps shared by both deciders: sampled eccentricities, then the two
// small-ball scans. Returns true (and sets trace.fired) on Accept.
template <class Big, class Within>
bool eccentricity_steps(const PreparedGraph &pg, double m, double alpha, Rng &rng, Big big,
                        Within within, unsigned threads, DecisionTrace &trace) {
    const DirectedGraph &g = pg.reduced.graph;
    std::vector<Vertex> sampled =
        sample_with_replacement<Vertex>(rng, g.num_vertices(), sample_count(m, alpha));
    trace.step1_samples = sampled.size();
    if (any_eccentric(pg, sampled, big, threads)) {
        trace.fired = "sample-eccentricity";
        return true;
    }
    std::size_t budget = search_budget(m, alpha);
    double limit = std::pow(m, alpha);
    for (Direction dir : {Direction::kOut, Direction::kIn}) {
        std::optional<Vertex> v = first_small_ball(g, dir, budget, limit, within, threads);
        (dir == Direction::kOut ? trace.small_out_ball : trace.small_in_ball) = v;
        if (v && any_eccentric(pg, ball_plus_vertices(g, *v, dir, budget, within), big, threads)) {
            trace.fired = dir == Direction::kOut ? "small-out-ball" : "small-in-ball";
            return true;
        }
    }
    return false;
}

void check_D(std::uint64_t D) {
    if (D == 0) {
        throw std::invalid_argument("D must be positive");
    }
    if (D > (std::uint64_t{1} << 62)) {
        throw std::invalid_argument("D too large");
    }
}

} // namespace

Rational parse_rational(const std::string &text) {
    auto fail = [&] { throw std::invalid_argument("not a rational number: '" + text + "'"); };
    if (text.empty()) {
        fail();
    }
    std::size_t slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            std::size_t used = 0;
            long long num = std::stoll(text.substr(0, slash), &used);
            if (used != slash) {
                fail();
            }
            std::string den_text = text.substr(slash + 1);
            long long den = std::stoll(den_text, &used);
            if (used != den_text.size() || den == 0) {
                fail();
            }
            return Rational(num, den);
        }
        std::size_t dot = text.find('.');
        std::string int_part = dot == std::string::npos ? text : text.substr(0, dot);
        std::string frac_part = dot == std::string::npos ? "" : text.substr(dot + 1);
        bool negative = !int_part.empty() && int_part[0] == '-';
        if (negative || (!int_part.empty() && int_part[0] == '+')) {
            int_part.erase(0, 1);
        }
        if ((int_part.empty() && frac_part.empty()) || frac_part.size() > 17) {
            fail();
        }
        for (char c : int_part + frac_part) {
            if (c < '0' || c > '9') {
                fail();
            }
        }
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i) {
            den *= 10;
        }
        std::int64_t whole = int_part.empty() ? 0 : std::stoll(int_part);
        std::int64_t frac = frac_part.empty() ? 0 : std::stoll(frac_part);
        Rational r = Rational(whole) + Rational(frac, den);
        return negative ? -r : r;
    } catch (const std::out_of_range &) {
        fail();
    }
    return Rational(0);
}

PreparedGraph::PreparedGraph(const DirectedGraph &g) : original(g), reduced(degree_reduce(g)) {}

double PreparedGraph::m() const {
    return static_cast<double>(std::max<std::size_t>(reduced.graph.num_edges(), 2));
}

Decision decide_74(const PreparedGraph &pg, std::uint64_t D, std::uint64_t seed, double omega,
                   unsigned threads) {
    check_D(D);
    if (pg.original.weighted()) {
        throw std::invalid_argument("decide_74 requires an unweighted graph");
    }
    Decision decision;
    DecisionTrace &trace = decision.trace;
    const DirectedGraph &g = pg.reduced.graph;
    double m = pg.m();
    double alpha = alpha_schedule(0, omega).alpha;
    std::uint64_t run_seed = child_seed(seed, D);
    Rng rng(child_seed(run_seed, 1));

    auto big = [D](Distance ecc) { return ecc == kInfinity || i128(7) * ecc >= i128(4) * D; };
    auto within_1 = [D](Distance d) { return i128(7) * d <= i128(D); };
    if (eccentricity_steps(pg, m, alpha, rng, big, within_1, threads, trace)) {
        decision.verdict = Verdict::kAccept;
        return decision;
    }

    const std::uint64_t r2 = 2 * D / 7;
    const bool use_plus = (4 * D / 7) != 2 * r2;
    auto within_2 = [r2](Distance d) { return d <= r2; };
    Rng rng4(child_seed(run_seed, 4));
    std::vector<Vertex> s_hat =
        sample_with_replacement<Vertex>(rng4, g.num_vertices(), sample_count(m, 1.0 - alpha));
    std::size_t budget = search_budget(m, 1.0 - alpha);
    double limit = std::pow(m, 1.0 - alpha);

    // Per sample: out-ball row (if small) and in-ball list (if small).
    std::vector<std::optional<std::vector<Vertex>>> out_rows(s_hat.size());
    std::vector<std::optional<std::vector<Vertex>>> in_cols(s_hat.size());
    parallel_chunks(s_hat.size(), threads, [&](std::size_t first, std::size_t last, std::size_t) {
        SearchWorkspace ws(g.num_vertices());
        for (std::size_t i = first; i < last; ++i) {
            for (Direction dir : {Direction::kOut, Direction::kIn}) {
                PartialSearchResult res = partial_search(g, s_hat[i], dir, budget, &ws);
                std::vector<VertexDistance> core = core_of(res, within_2);
                if (static_cast<double>(core.size()) > limit) {
                    continue;
                }
                std::vector<Vertex> ids;
                for (const VertexDistance &vd : core) {
                    ids.push_back(vd.vertex);
                }
                if (dir == Direction::kIn && use_plus) {
                    for (const VertexDistance &vd : plus_extension(g, core, dir, &ws)) {
                        ids.push_back(vd.vertex);
                    }
                }
                std::sort(ids.begin(), ids.end());
                (dir == Direction::kOut ? out_rows : in_cols)[i] = std::move(ids);
            }
        }
    });

    std::vector<std::vector<SparseBoolMatrix::Index>> a_out;
    std::vector<std::vector<SparseBoolMatrix::Index>> a_in(g.num_vertices());
    LevelTrace level;
    level.s_hat = s_hat.size();
    for (std::size_t i = 0; i < s_hat.size(); ++i) {
        if (out_rows[i]) {
            a_out.emplace_back(out_rows[i]->begin(), out_rows[i]->end());
        }
        if (in_cols[i]) {
            for (Vertex v : *in_cols[i]) {
                a_in[v].push_back(static_cast<SparseBoolMatrix::Index>(level.s_in));
            }
            ++level.s_in;
        }
    }
    level.s_out = a_out.size();
    level.products = 1;
    trace.levels.push_back(level);
    SparseBoolMatrix A_out(level.s_out, g.num_vertices(), std::move(a_out));
    SparseBoolMatrix A_in(g.num_vertices(), level.s_in, std::move(a_in));
    SparseBoolMatrix C = product(A_out, A_in, 0, threads);
    if (find_zero_entry(C)) {
        trace.fired = "product";
        decision.verdict = Verdict::kAccept;
    }
    return decision;
}

Decision decide_74(const DirectedGraph &g, std::uint64_t D, std::uint64_t seed) {
    PreparedGraph pg(g);
    return decide_74(pg, D, seed);
}

Decision decide_general(const PreparedGraph &pg, const DeciderConfig &cfg) {
    const std::uint64_t D = cfg.D;
    check_D(D);
    if (cfg.t > 20) {
        throw std::invalid_argument("decide_general: t must be at most 20");
    }
    if (!cfg.integer_weight_mode && cfg.epsilon <= Rational(0)) {
        throw std::invalid_argument("decide_general: epsilon must be positive");
    }
    Decision decision;
    DecisionTrace &trace = decision.trace;
    const DirectedGraph &g = pg.reduced.graph;
    const std::size_t n = g.num_vertices();
    const double m = pg.m();
    const AlphaSchedule sched = alpha_schedule(cfg.t, cfg.omega);
    const double alpha = sched.alpha;
    const i128 k = static_cast<i128>(sched.k);
    const i128 two_k1 = 2 * k - 1;
    const i128 p = cfg.integer_weight_mode ? 1 : cfg.epsilon.numerator();
    const i128 q = cfg.integer_weight_mode ? static_cast<i128>(D) : cfg.epsilon.denominator();
    const std::uint64_t run_seed = child_seed(cfg.seed, D);
    Rng rng(child_seed(run_seed, 1));

    // ecc >= k D / (2k-1)
    auto big = [&](Distance ecc) { return ecc == kInfinity || two_k1 * ecc >= k * i128(D); };
    // d <= c D / (2k-1)
    auto within = [&](i128 c) { return [c, two_k1, D](Distance d) { return two_k1 * d <= c * i128(D); }; };
    if (eccentricity_steps(pg, m, alpha, rng, big, within(1), cfg.threads, trace)) {
        decision.verdict = Verdict::kAccept;
        return decision;
    }

    // Largest j with j * epsilon <= k / (2k-1).
    const i128 j_max = (q * k) / (p * two_k1);
    const i128 C = static_cast<i128>(pg.original.max_weight());

    for (unsigned i = 0; i <= cfg.t; ++i) {
        const i128 c_s = i128(1) << (i + 1);
        const i128 c_t = k - c_s;
        auto within_s = within(c_s);
        auto within_t = within(c_t);
        const double limit = std::pow(m, sched.alphas[i]);
        const std::size_t budget = search_budget(m, sched.alphas[i]);

        Rng rng_s(child_seed(run_seed, 100 + 2 * i));
        Rng rng_t(child_seed(run_seed, 101 + 2 * i));
        std::vector<Vertex> s_hat =
            sample_with_replacement<Vertex>(rng_s, n, sample_count(m, 1.0 - sched.alphas[i + 1]));
        std::vector<Vertex> t_hat = sample_with_replacement<Vertex>(rng_t, n, sample_count(m, 1.0 - alpha));

        // Union of both samples with role flags.
        std::vector<Vertex> pool;
        std::merge(s_hat.begin(), s_hat.end(), t_hat.begin(), t_hat.end(), std::back_inserter(pool));
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

        struct Record {
            bool in_s = false;
            bool in_t = false;
            std::vector<VertexDistance> dist;
        };
        // records[dir][pool index]
        std::vector<Record> records[2] = {std::vector<Record>(pool.size()), std::vector<Record>(pool.size())};
        parallel_chunks(pool.size(), cfg.threads, [&](std::size_t first, std::size_t last, std::size_t) {
            SearchWorkspace ws(n);
            for (std::size_t idx = first; idx < last; ++idx) {
                Vertex x = pool[idx];
                bool sampled_s = std::binary_search(s_hat.begin(), s_hat.end(), x);
                bool sampled_t = std::binary_search(t_hat.begin(), t_hat.end(), x);
                for (int d = 0; d < 2; ++d) {
                    Direction dir = d == 0 ? Direction::kOut : Direction::kIn;
                    PartialSearchResult res = partial_search(g, x, dir, budget, &ws);
                    std::size_t count_s = 0;
                    std::size_t count_t = 0;
                    for (const VertexDistance &vd : res.exact) {
                        count_s += within_s(vd.distance);
                        count_t += within_t(vd.distance);
                    }
                    Record &rec = records[d][idx];
                    rec.in_s = sampled_s && static_cast<double>(count_s) <= limit;
                    rec.in_t = sampled_t && static_cast<double>(count_t) <= limit;
                    if (!rec.in_s && !rec.in_t) {
                        continue;
                    }
                    // Recording at the largest qualifying radius equals the
                    // minimum over all recordings of the pair.
                    i128 c = std::max(rec.in_s ? c_s : i128(0), rec.in_t ? c_t : i128(0));
                    std::vector<VertexDistance> core = core_of(res, within(c));
                    std::vector<VertexDistance> plus = plus_extension(g, core, dir, &ws);
                    core.insert(core.end(), plus.begin(), plus.end());
                    rec.dist = sorted_by_vertex(std::move(core));
                }
            }
        });

        std::vector<std::size_t> s_out, s_in, t_out, t_in;
        for (std::size_t idx = 0; idx < pool.size(); ++idx) {
            if (records[0][idx].in_s) s_out.push_back(idx);
            if (records[1][idx].in_s) s_in.push_back(idx);
            if (records[0][idx].in_t) t_out.push_back(idx);
            if (records[1][idx].in_t) t_in.push_back(idx);
        }
        LevelTrace level;
        level.level = i;
        level.s_hat = s_hat.size();
        level.t_hat = t_hat.size();
        level.s_out = s_out.size();
        level.s_in = s_in.size();
        level.t_out = t_out.size();
        level.t_in = t_in.size();

        // Row matrix: row r lists v with d(row_r, v) * q <= j p D.
        auto out_matrix = [&](const std::vector<std::size_t> &rows, i128 j) {
            std::vector<std::vector<SparseBoolMatrix::Index>> entries(rows.size());
            for (std::size_t r = 0; r < rows.size(); ++r) {
                for (const VertexDistance &vd : records[0][rows[r]].dist) {
                    if (i128(vd.distance) * q <= j * p * i128(D)) {
                        entries[r].push_back(vd.vertex);
                    }
                }
            }
            return SparseBoolMatrix(rows.size(), n, std::move(entries));
        };
        // Column matrix: row v lists columns c with d(v, col_c) (2k-1) q <= (k q - j p (2k-1)) D.
        auto in_matrix = [&](const std::vector<std::size_t> &cols, i128 j) {
            std::vector<std::vector<SparseBoolMatrix::Index>> entries(n);
            i128 rhs = (k * q - j * p * two_k1) * i128(D);
            for (std::size_t c = 0; c < cols.size(); ++c) {
                for (const VertexDistance &vd : records[1][cols[c]].dist) {
                    if (i128(vd.distance) * two_k1 * q <= rhs) {
                        entries[vd.vertex].push_back(static_cast<SparseBoolMatrix::Index>(c));
                    }
                }
            }
            return SparseBoolMatrix(n, cols.size(), std::move(entries));
        };
        auto j_range = [&](i128 c) {
            if (!cfg.integer_weight_mode) {
                return std::pair<i128, i128>{0, j_max};
            }
            i128 lo = (c * i128(D)) / two_k1;
            i128 hi = (c * i128(D) + two_k1 - 1) / two_k1;
            return std::pair<i128, i128>{std::max<i128>(0, lo - C), std::min(j_max, hi + C)};
        };
        auto unwitnessed = [&](const std::vector<std::size_t> &rows, const std::vector<std::size_t> &cols,
                               i128 center) {
            if (rows.empty() || cols.empty()) {
                return false;
            }
            auto [lo, hi] = j_range(center);
            std::vector<SparseBoolMatrix> lefts, rights;
            for (i128 j = lo; j <= hi; ++j) {
                lefts.push_back(out_matrix(rows, j));
                rights.push_back(in_matrix(cols, j));
            }
            if (lefts.empty()) {
                return true;
            }
            std::vector<MatrixPair> family;
            for (std::size_t f = 0; f < lefts.size(); ++f) {
                family.emplace_back(&lefts[f], &rights[f]);
            }
            level.products += family.size();
            return find_unwitnessed_pair(family, cfg.threads).has_value();
        };
        bool accept = unwitnessed(s_out, t_in, c_s) || unwitnessed(t_out, s_in, c_t);
        trace.levels.push_back(level);
        if (accept) {
            trace.fired = "product";
            decision.verdict = Verdict::kAccept;
            return decision;
        }
    }
    return decision;
}

Decision decide_general(const DirectedGraph &g, const DeciderConfig &cfg) {
    PreparedGraph pg(g);
    return decide_general(pg, cfg);
}

EstimateReport estimate_diameter_report(const DirectedGraph &g, const EstimateOptions &opt) {
    EstimateReport report;
    if (!is_strongly_connected(g)) {
        report.estimate = kInfinity;
        return report;
    }
    PreparedGraph pg(g);
    std::uint64_t lo = 0;
    std::uint64_t hi = g.weighted() ? saturating_add(g.total_weight(), 1) : g.num_vertices();
    while (hi - lo > 1) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        bool accept = false;
        if (opt.kind == DeciderKind::kSeventyFour) {
            accept = decide_74(pg, mid, opt.seed, opt.omega, opt.threads).accepted();
        } else {
            DeciderConfig cfg;
            cfg.D = mid;
            cfg.t = opt.t;
            cfg.epsilon = opt.epsilon;
            cfg.omega = opt.omega;
            cfg.seed = opt.seed;
            cfg.integer_weight_mode = opt.integer_weight_mode;
            cfg.threads = opt.threads;
            accept = decide_general(pg, cfg).accepted();
        }
        ++report.decider_calls;
        report.probes.emplace_back(mid, accept);
        (accept ? lo : hi) = mid;
    }
    report.estimate = lo;
    return report;
}

Distance estimate_diameter(const DirectedGraph &g, unsigned t, Rational epsilon, std::uint64_t seed) {
    EstimateOptions opt;
    opt.t = t;
    opt.epsilon = epsilon;
    opt.seed = seed;
    return estimate_diameter_report(g, opt).estimate;
}

Distance exact_diameter(const DirectedGraph &g, unsigned threads) {
    std::size_t n = g.num_vertices();
    if (n == 0) {
        return 0;
    }
    std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
    std::vector<Distance> best(chunks, 0);
    parallel_chunks(n, threads, [&](std::size_t first, std::size_t last, std::size_t c) {
        for (std::size_t v = first; v < last && best[c] != kInfinity; ++v) {
            best[c] = std::max(best[c], eccentricity(g, static_cast<Vertex>(v), Direction::kOut));
        }
    });
    return *std::max_element(best.begin(), best.end());
}

Distance two_approx(const DirectedGraph &g) {
    if (g.num_vertices() == 0) {
        return 0;
    }
    return std::max(eccentricity(g, 0, Direction::kOut), eccentricity(g, 0, Direction::kIn));
}

} // namespace dirdiam
