#include "dirdiam/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "dirdiam/random.hpp"

namespace dirdiam {

namespace {

std::int64_t ceil_of(Rational r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) {
        ++q;
    }
    return q;
}

std::int64_t floor_of(Rational r) { return -ceil_of(-r); }

std::int64_t uniform(Rng &rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

} // namespace

DirectedGraph generate_random_graph(std::size_t n, std::size_t m, Weight max_weight, std::uint64_t seed,
                                    bool ensure_strongly_connected) {
    if (max_weight < 1) {
        throw std::invalid_argument("max_weight must be at least 1");
    }
    if (m > 0 && n < 2) {
        throw std::invalid_argument("edges need at least two vertices");
    }
    if (ensure_strongly_connected && m < n) {
        throw std::invalid_argument("strong connectivity needs m >= n");
    }
    Rng rng(seed);
    auto weight = [&] { return uniform(rng, 1, max_weight); };
    std::vector<Edge> edges;
    edges.reserve(m);
    if (ensure_strongly_connected && n >= 2) {
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        for (std::size_t i = 0; i < n; ++i) {
            edges.push_back({perm[i], perm[(i + 1) % n], weight()});
        }
    }
    while (edges.size() < m) {
        auto u = static_cast<Vertex>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
        auto v = static_cast<Vertex>(uniform(rng, 0, static_cast<std::int64_t>(n) - 2));
        if (v >= u) {
            ++v;
        }
        edges.push_back({u, v, weight()});
    }
    return DirectedGraph(n, std::move(edges));
}

VectorSet random_vector_set(std::size_t n, std::size_t d, std::int64_t lo, std::int64_t hi,
                            std::int64_t scale, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::int64_t> values(n * d);
    for (auto &v : values) {
        v = uniform(rng, lo, hi);
    }
    return VectorSet(n, d, scale, std::move(values));
}

VectorSet bounded_promise_instance(std::size_t n, std::size_t d, Rational alpha, Rational eps, bool close,
                                   std::int64_t scale, std::uint64_t seed) {
    Rng rng(seed);
    const std::int64_t lo = ceil_of(alpha / 2 * scale);
    const std::int64_t hi = floor_of((Rational(1, 2) + eps) * alpha * scale);
    if (lo > hi) {
        throw std::invalid_argument("scale too coarse for the bounded domain");
    }
    std::vector<std::int64_t> values(n * d);
    if (!close) {
        if (d < 64 && n > (std::size_t{1} << d)) {
            throw std::invalid_argument("far instance needs n <= 2^d");
        }
        std::set<std::vector<bool>> used;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<bool> signs(d);
            do {
                for (std::size_t x = 0; x < d; ++x) {
                    signs[x] = uniform(rng, 0, 1) == 1;
                }
            } while (!used.insert(signs).second);
            for (std::size_t x = 0; x < d; ++x) {
                std::int64_t mag = uniform(rng, lo, hi);
                values[i * d + x] = signs[x] ? mag : -mag;
            }
        }
        return VectorSet(n, d, scale, std::move(values));
    }
    if (n < 2) {
        throw std::invalid_argument("close instance needs n >= 2");
    }
    for (auto &v : values) {
        v = uniform(rng, -hi, hi);
    }
    auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 2));
    if (j >= i) {
        ++j;
    }
    for (std::size_t x = 0; x < d; ++x) {
        std::int64_t delta = uniform(rng, -scale / 2, scale / 2);
        values[j * d + x] = std::clamp(values[i * d + x] + delta, -hi, hi);
    }
    return VectorSet(n, d, scale, std::move(values));
}

VectorSet promise_instance(std::size_t n, std::size_t d, Rational alpha, bool close, std::uint64_t seed) {
    Rng rng(seed);
    const std::int64_t spacing = ceil_of(alpha);
    const auto span = static_cast<std::int64_t>(2 * n);
    std::vector<std::int64_t> values(n * d);
    if (close) {
        if (n < 2) {
            throw std::invalid_argument("close instance needs n >= 2");
        }
        for (auto &v : values) {
            v = uniform(rng, 0, spacing * span);
        }
        auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
        auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 2));
        if (j >= i) {
            ++j;
        }
        for (std::size_t x = 0; x < d; ++x) {
            values[j * d + x] = values[i * d + x] + uniform(rng, -1, 1);
        }
        return VectorSet(n, d, 1, std::move(values));
    }
    std::set<std::vector<std::int64_t>> used;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> grid(d);
        do {
            for (auto &g : grid) {
                g = uniform(rng, 0, span);
            }
        } while (!used.insert(grid).second);
        for (std::size_t x = 0; x < d; ++x) {
            values[i * d + x] = grid[x] * spacing;
        }
    }
    return VectorSet(n, d, 1, std::move(values));
}

LayeredCycleInstance random_layered_instance(std::size_t k, std::size_t per_layer, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::bernoulli_distribution coin(p);
    LayeredCycleInstance inst;
    inst.sizes.assign(k, per_layer);
    for (std::uint32_t l = 0; l < k; ++l) {
        for (std::uint32_t u = 0; u < per_layer; ++u) {
            for (std::uint32_t v = 0; v < per_layer; ++v) {
                if (coin(rng)) {
                    inst.edges.push_back({l, u, v});
                }
            }
        }
    }
    return inst;
}

LayeredCycleInstance planted_layered_instance(std::size_t k, std::size_t per_layer, double p,
                                              std::optional<std::uint32_t> uncovered, std::uint64_t seed) {
    if (uncovered && *uncovered >= per_layer) {
        throw std::invalid_argument("uncovered node out of range");
    }
    LayeredCycleInstance inst = random_layered_instance(k, per_layer, p, seed);
    Rng rng(child_seed(seed, 1));
    for (std::uint32_t a = 0; a < per_layer; ++a) {
        std::uint32_t cur = a;
        for (std::uint32_t l = 0; l + 1 < k; ++l) {
            auto next = static_cast<std::uint32_t>(uniform(rng, 0, static_cast<std::int64_t>(per_layer) - 1));
            inst.edges.push_back({l, cur, next});
            cur = next;
        }
        inst.edges.push_back({static_cast<std::uint32_t>(k - 1), cur, a});
    }
    std::sort(inst.edges.begin(), inst.edges.end());
    inst.edges.erase(std::unique(inst.edges.begin(), inst.edges.end()), inst.edges.end());
    if (uncovered) {
        std::erase_if(inst.edges, [&](const LayerEdge &e) { return e.layer == k - 1 && e.v == *uncovered; });
    }
    return inst;
}

} // namespace dirdiam
