#include "dirdiam/linfty_reduction.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dirdiam {

namespace {

std::string str(Rational r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t floor_of(Rational r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) {
        --q;
    }
    return q;
}

Rational abs_of(Rational r) { return r < Rational(0) ? -r : r; }

void check_alpha(Rational alpha) {
    if (alpha <= Rational(1)) {
        throw std::invalid_argument("alpha must exceed 1");
    }
}

} // namespace

VectorSet flatten_coordinates(const VectorSet &vs, Rational alpha) {
    check_alpha(alpha);
    std::vector<Rational> out(vs.n * vs.d);
    std::vector<std::size_t> order(vs.n);
    for (std::size_t x = 0; x < vs.d; ++x) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return vs.raw(a, x) < vs.raw(b, x); });
        Rational acc = 0;
        for (std::size_t r = 0; r < vs.n; ++r) {
            if (r > 0) {
                acc += std::min(alpha, vs.at(order[r], x) - vs.at(order[r - 1], x));
            }
            out[order[r] * vs.d + x] = acc;
        }
    }
    return VectorSet::from_rationals(vs.n, vs.d, out);
}

std::int64_t inverse_epsilon(Rational eps) {
    if (eps <= Rational(0) || eps >= Rational(1, 2)) {
        throw std::invalid_argument("eps must lie in (0, 1/2)");
    }
    return (eps.denominator() + eps.numerator() - 1) / eps.numerator();
}

Fold fold_once(Rational a, Rational M, Rational alpha, Rational eps) {
    check_alpha(alpha);
    if (a < Rational(0) || a > M) {
        throw std::invalid_argument("fold_once: value outside [0, M]");
    }
    const std::int64_t E = inverse_epsilon(eps);
    const Rational bound = (Rational(1, 2) + Rational(1, E)) * alpha;
    const Rational mid = M / 2;
    Fold f;
    f.g.reserve(static_cast<std::size_t>(2 * E + 1));
    for (std::int64_t i = -E; i <= E; ++i) {
        Rational z = mid + Rational(i, 2 * E) * alpha;
        f.g.push_back(std::clamp(a - z, -bound, bound));
    }
    f.h = abs_of(a - mid);
    return f;
}

std::size_t fold_rounds(std::size_t n) {
    if (n <= 2) {
        return 1;
    }
    return static_cast<std::size_t>(std::bit_width(n - 1));
}

std::size_t bounded_dimension(std::size_t n, std::size_t d, Rational eps) {
    return 4 * d * static_cast<std::size_t>(inverse_epsilon(eps)) * fold_rounds(n);
}

VectorSet bound_domain(const VectorSet &vs, Rational alpha, Rational eps) {
    check_alpha(alpha);
    const std::size_t L = fold_rounds(vs.n);
    const std::size_t per = bounded_dimension(vs.n, 1, eps);
    const Rational top = alpha * static_cast<std::int64_t>(vs.n);
    std::vector<Rational> out(vs.n * vs.d * per, Rational(0));
    for (std::size_t i = 0; i < vs.n; ++i) {
        for (std::size_t x = 0; x < vs.d; ++x) {
            Rational a = vs.at(i, x);
            if (a < Rational(0) || a > top) {
                throw std::invalid_argument("bound_domain: coordinate outside [0, alpha*n]");
            }
            std::size_t pos = (i * vs.d + x) * per;
            Rational M = top;
            for (std::size_t l = 0; l < L; ++l) {
                Fold f = fold_once(a, M, alpha, eps);
                for (const Rational &g : f.g) {
                    out[pos++] = g;
                }
                a = f.h;
                M /= 2;
            }
            out[pos] = a - alpha / 2;
        }
    }
    return VectorSet::from_rationals(vs.n, vs.d * per, out);
}

ReductionArtifact build_weighted_rt_graph(const VectorSet &vs, Rational alpha, Rational eps) {
    check_alpha(alpha);
    const Rational bound = (Rational(1, 2) + eps) * alpha;
    for (std::size_t i = 0; i < vs.n; ++i) {
        for (std::size_t x = 0; x < vs.d; ++x) {
            if (abs_of(vs.at(i, x)) > bound) {
                throw std::invalid_argument("build_weighted_rt_graph: coordinate outside the bounded domain");
            }
        }
    }
    const std::int64_t scale = std::lcm(vs.scale, alpha.denominator());
    const std::int64_t a = (alpha * scale).numerator();
    const std::int64_t unit = scale / vs.scale;
    const auto n = static_cast<Vertex>(vs.n);
    const auto d = static_cast<Vertex>(vs.d);
    auto x1 = [&](Vertex x) { return n + x; };
    auto x2 = [&](Vertex x) { return n + d + x; };

    std::vector<Edge> edges;
    edges.reserve(4 * vs.n * vs.d + 2 * vs.d * (2 * vs.d - 1));
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex x = 0; x < d; ++x) {
            const std::int64_t v = vs.raw(i, x) * unit;
            edges.push_back({i, x1(x), a + v});
            edges.push_back({x1(x), i, a - v});
            edges.push_back({i, x2(x), a - v});
            edges.push_back({x2(x), i, a + v});
        }
    }
    for (Vertex u = n; u < n + 2 * d; ++u) {
        for (Vertex w = n; w < n + 2 * d; ++w) {
            if (u != w) {
                edges.push_back({u, w, a});
            }
        }
    }

    ReductionArtifact art;
    art.graph = DirectedGraph(vs.n + 2 * vs.d, std::move(edges));
    art.kind = ArtifactKind::kLinftyWeighted;
    art.no_threshold = static_cast<Distance>(2 * a);
    art.yes_threshold = static_cast<Distance>(4 * a - 2 * scale);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            art.interesting_pairs.emplace_back(i, j);
        }
    }
    art.metadata = {{"alpha", str(alpha)}, {"eps", str(eps)}, {"scale", scale},
                    {"n", vs.n},           {"d", vs.d}};
    return art;
}

ReductionArtifact build_weighted_rt_graph(const VectorSet &vs, Rational alpha) {
    return build_weighted_rt_graph(vs, alpha, 1 / (4 * alpha));
}

std::int64_t unweighted_beta(Rational alpha, std::int64_t M) { return floor_of(alpha * M - 1); }

Rational unweighted_epsilon(Rational alpha, std::int64_t M) {
    return Rational(1) / (4 * (Rational(unweighted_beta(alpha, M)) + Rational(3, 2)));
}

ReductionArtifact build_unweighted_rt_graph(const VectorSet &vs, Rational alpha, std::int64_t M) {
    check_alpha(alpha);
    if (M < 1) {
        throw std::invalid_argument("M must be positive");
    }
    const Rational Ma = alpha * M;
    if (Ma - floor_of(Ma) >= Rational(1, 2)) {
        throw std::invalid_argument("fractional part of M*alpha must be below 1/2");
    }
    const std::int64_t beta = unweighted_beta(alpha, M);
    const std::int64_t no = 2 * beta + 8;
    const std::int64_t yes = 4 * beta - 2 * M;
    if (yes <= no) {
        throw std::invalid_argument("M too small: 4*beta - 2M must exceed 2*beta + 8");
    }

    std::vector<std::int64_t> iv(vs.values.size());
    for (std::size_t i = 0; i < vs.n; ++i) {
        for (std::size_t x = 0; x < vs.d; ++x) {
            std::int64_t v = floor_of(vs.at(i, x) * M);
            if (2 * std::abs(v) > beta + 4) {
                throw std::invalid_argument("build_unweighted_rt_graph: integerized coordinate exceeds beta/2 + 2");
            }
            iv[i * vs.d + x] = v;
        }
    }

    std::vector<Edge> edges;
    std::vector<Vertex> roots(vs.n);
    std::vector<std::size_t> path_len(vs.n);
    Vertex next = 0;
    // Layout of one gadget: root, f_1..f_L, b_1..b_L, p_1..p_{beta+1}.
    for (std::size_t i = 0; i < vs.n; ++i) {
        std::int64_t peak = 0;
        for (std::size_t x = 0; x < vs.d; ++x) {
            peak = std::max(peak, std::abs(iv[i * vs.d + x]));
        }
        path_len[i] = static_cast<std::size_t>(std::max<std::int64_t>(0, beta + peak - 1));
        roots[i] = next;
        next += static_cast<Vertex>(1 + 2 * path_len[i] + static_cast<std::size_t>(beta + 1));
    }
    const Vertex x1_base = next;
    const Vertex x2_base = next + static_cast<Vertex>(vs.d);
    const std::size_t total = static_cast<std::size_t>(x2_base) + vs.d;

    for (std::size_t i = 0; i < vs.n; ++i) {
        const Vertex r = roots[i];
        const auto L = static_cast<Vertex>(path_len[i]);
        auto f = [&](Vertex j) { return j == 0 ? r : r + j; };
        auto b = [&](Vertex j) { return j == 0 ? r : r + L + j; };
        auto p = [&](Vertex j) { return r + 2 * L + j; };
        for (Vertex j = 0; j < L; ++j) {
            edges.push_back({f(j), f(j + 1), 1});
            edges.push_back({b(j + 1), b(j), 1});
        }
        for (Vertex j = 1; j <= static_cast<Vertex>(beta); ++j) {
            edges.push_back({p(j), p(j + 1), 1});
        }
        for (Vertex j = 1; j <= L; ++j) {
            edges.push_back({b(j), p(1), 1});
            edges.push_back({p(static_cast<Vertex>(beta + 1)), f(j), 1});
        }
        for (std::size_t x = 0; x < vs.d; ++x) {
            const std::int64_t v = iv[i * vs.d + x];
            const Vertex x1 = x1_base + static_cast<Vertex>(x);
            const Vertex x2 = x2_base + static_cast<Vertex>(x);
            for (auto j = static_cast<Vertex>(std::max<std::int64_t>(0, beta + v - 1)); j <= L; ++j) {
                edges.push_back({f(j), x1, 1});
                edges.push_back({x2, b(j), 1});
            }
            for (auto j = static_cast<Vertex>(std::max<std::int64_t>(0, beta - v - 1)); j <= L; ++j) {
                edges.push_back({x1, b(j), 1});
                edges.push_back({f(j), x2, 1});
            }
        }
    }

    ReductionArtifact art;
    art.graph = DirectedGraph(total, std::move(edges));
    art.kind = ArtifactKind::kLinftyUnweighted;
    art.no_threshold = static_cast<Distance>(no);
    art.yes_threshold = static_cast<Distance>(yes);
    for (std::size_t i = 0; i < vs.n; ++i) {
        for (std::size_t j = i + 1; j < vs.n; ++j) {
            art.interesting_pairs.emplace_back(roots[i], roots[j]);
        }
    }
    nlohmann::json root_ids = nlohmann::json::array();
    for (Vertex r : roots) {
        root_ids.push_back(r);
    }
    art.metadata = {{"alpha", str(alpha)}, {"M", M},   {"beta", beta},
                    {"n", vs.n},           {"d", vs.d}, {"roots", std::move(root_ids)}};
    return art;
}

bool solve_linfty_via_rt(const VectorSet &vs, Rational alpha, const RtSolver &rt_solver,
                         const LinftyPipelineOptions &opt) {
    if (vs.n < 2) {
        return false;
    }
    VectorSet flat = flatten_coordinates(vs, alpha);
    ReductionArtifact art;
    if (opt.unweighted) {
        Rational eps = unweighted_epsilon(alpha, opt.M);
        art = build_unweighted_rt_graph(bound_domain(flat, alpha, eps), alpha, opt.M);
    } else {
        Rational eps = opt.eps == Rational(0) ? 1 / (4 * alpha) : opt.eps;
        art = build_weighted_rt_graph(bound_domain(flat, alpha, eps), alpha, eps);
    }
    return rt_solver(art.graph) > art.no_threshold;
}

} // namespace dirdiam
