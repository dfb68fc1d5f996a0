#include "dirdiam/ankc_reduction.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "dirdiam/edge_list_io.hpp"

namespace dirdiam {

namespace {

void check_t(const LayeredCycleInstance &inst, std::uint64_t t) {
    validate(inst);
    if (t <= 2 * inst.k()) {
        throw std::invalid_argument("t must exceed 2k");
    }
}

/// Vertex ids of the copies of layers 1..k-1, laid out layer by layer from `base`.
struct LayerCopies {
    std::vector<Vertex> start;

    LayerCopies(const LayeredCycleInstance &inst, Vertex base) : start(inst.k(), 0) {
        for (std::size_t l = 1; l < inst.k(); ++l) {
            start[l] = base;
            base += static_cast<Vertex>(inst.sizes[l]);
        }
        end = base;
    }

    Vertex at(std::uint32_t layer, std::uint32_t x) const { return start[layer] + x; }

    Vertex begin() const { return start.size() > 1 ? start[1] : end; }
    Vertex end = 0;
};

} // namespace

void validate(const LayeredCycleInstance &inst) {
    if (inst.k() < 3) {
        throw std::invalid_argument("layered instance needs k >= 3");
    }
    for (const LayerEdge &e : inst.edges) {
        if (e.layer >= inst.k()) {
            throw std::invalid_argument("layer index out of range");
        }
        std::size_t next = (e.layer + 1) % inst.k();
        if (e.u >= inst.sizes[e.layer] || e.v >= inst.sizes[next]) {
            throw std::invalid_argument("layer node index out of range");
        }
    }
}

LayeredCycleInstance read_layered_instance(std::istream &in) {
    std::vector<std::string> tok;
    if (!detail::next_record(in, tok, nullptr)) {
        throw ParseError("missing layered-instance header");
    }
    LayeredCycleInstance inst;
    std::size_t k = detail::parse_unsigned(tok[0], "k");
    if (k < 3 || tok.size() != k + 1) {
        throw ParseError("header must be 'k n_0 ... n_{k-1}' with k >= 3");
    }
    for (std::size_t i = 0; i < k; ++i) {
        inst.sizes.push_back(detail::parse_unsigned(tok[i + 1], "layer size"));
    }
    while (detail::next_record(in, tok, nullptr)) {
        if (tok.size() != 4) {
            throw ParseError("edge line must be 'i u j v'");
        }
        auto i = detail::parse_unsigned(tok[0], "layer");
        auto u = detail::parse_unsigned(tok[1], "node");
        auto j = detail::parse_unsigned(tok[2], "layer");
        auto v = detail::parse_unsigned(tok[3], "node");
        if (i >= k || j != (i + 1) % k) {
            throw ParseError("edge must go from layer i to layer (i+1) mod k");
        }
        if (u >= inst.sizes[i] || v >= inst.sizes[j]) {
            throw ParseError("node index exceeds its layer size");
        }
        inst.edges.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(u),
                              static_cast<std::uint32_t>(v)});
    }
    return inst;
}

void write_layered_instance(std::ostream &out, const LayeredCycleInstance &inst) {
    out << inst.k();
    for (std::size_t s : inst.sizes) {
        out << ' ' << s;
    }
    out << '\n';
    for (const LayerEdge &e : inst.edges) {
        out << e.layer << ' ' << e.u << ' ' << (e.layer + 1) % inst.k() << ' ' << e.v << '\n';
    }
}

std::vector<Identifier> make_identifiers(std::size_t n) {
    const std::size_t bits = n <= 2 ? 1 : static_cast<std::size_t>(std::bit_width(n - 1));
    std::vector<Identifier> ids(n);
    for (std::size_t a = 0; a < n; ++a) {
        Identifier &id = ids[a];
        id.reserve(2 * bits + 2);
        for (std::size_t b = 0; b < bits; ++b) {
            id.push_back(static_cast<std::uint8_t>((a >> (bits - 1 - b)) & 1));
        }
        for (std::size_t b = 0; b < bits; ++b) {
            id.push_back(static_cast<std::uint8_t>(1 - id[b]));
        }
        id.push_back(0);
        id.push_back(1);
    }
    return ids;
}

CycleCoverage all_nodes_k_cycle_brute(const LayeredCycleInstance &inst) {
    validate(inst);
    const std::size_t k = inst.k();
    std::vector<std::vector<std::vector<std::uint32_t>>> out(k);
    for (std::size_t l = 0; l < k; ++l) {
        out[l].resize(inst.sizes[l]);
    }
    for (const LayerEdge &e : inst.edges) {
        out[e.layer][e.u].push_back(e.v);
    }
    CycleCoverage cov;
    for (std::uint32_t a = 0; a < inst.sizes[0]; ++a) {
        std::vector<char> here(inst.sizes[0], 0);
        here[a] = 1;
        for (std::size_t l = 0; l < k; ++l) {
            std::vector<char> next(inst.sizes[(l + 1) % k], 0);
            for (std::uint32_t u = 0; u < here.size(); ++u) {
                if (here[u]) {
                    for (std::uint32_t v : out[l][u]) {
                        next[v] = 1;
                    }
                }
            }
            here = std::move(next);
        }
        if (!here[a]) {
            cov.all_covered = false;
            cov.uncovered.push_back(a);
        }
    }
    return cov;
}

ReductionArtifact build_weighted_ankc_graph(const LayeredCycleInstance &inst, std::uint64_t t) {
    check_t(inst, t);
    const std::size_t k = inst.k();
    const auto n = static_cast<Vertex>(inst.sizes[0]);
    const std::vector<Identifier> ids = make_identifiers(n);
    const auto d = static_cast<Vertex>(ids.empty() ? make_identifiers(1)[0].size() : ids[0].size());
    const auto T = static_cast<Weight>(t);

    auto S_ = [](Vertex a) { return a; };
    auto T_ = [n](Vertex a) { return n + a; };
    const LayerCopies fwd(inst, 2 * n);
    const LayerCopies bwd(inst, fwd.end);
    const Vertex o1 = bwd.end, o2 = o1 + 1, o3 = o1 + 2, o4 = o1 + 3;
    const Vertex jbase = o1 + 4;
    const std::size_t total = jbase + d;

    std::vector<Edge> edges;
    for (const LayerEdge &e : inst.edges) {
        if (e.layer == 0) {
            edges.push_back({S_(e.u), fwd.at(1, e.v), 3 * T + 1});
            edges.push_back({bwd.at(1, e.v), S_(e.u), 1});
        } else if (e.layer == k - 1) {
            edges.push_back({fwd.at(e.layer, e.u), T_(e.v), 3 * T + 1});
            edges.push_back({T_(e.v), bwd.at(e.layer, e.u), 1});
        } else {
            edges.push_back({fwd.at(e.layer, e.u), fwd.at(e.layer + 1, e.v), 1});
            edges.push_back({bwd.at(e.layer + 1, e.v), bwd.at(e.layer, e.u), 1});
        }
    }
    for (Vertex x = fwd.begin(); x < fwd.end; ++x) {
        edges.push_back({o1, x, 1});
        edges.push_back({x, o2, 1});
    }
    for (Vertex x = bwd.begin(); x < bwd.end; ++x) {
        edges.push_back({o3, x, 1});
        edges.push_back({x, o4, 1});
    }
    for (Vertex a = 0; a < n; ++a) {
        edges.push_back({S_(a), o1, 5 * T + 1});
        edges.push_back({T_(a), o1, T + 1});
        edges.push_back({o2, S_(a), T + 1});
        edges.push_back({o2, T_(a), 5 * T + 1});
        edges.push_back({T_(a), o3, 2 * T + 1});
        edges.push_back({S_(a), o3, 4 * T + 1});
        edges.push_back({o4, T_(a), 4 * T + 1});
        edges.push_back({o4, S_(a), 2 * T + 1});
    }
    for (Vertex p = o1; p <= o4; ++p) {
        for (Vertex q = o1; q <= o4; ++q) {
            if (p != q) {
                edges.push_back({p, q, 3 * T});
            }
        }
    }
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex j = 0; j < d; ++j) {
            const Vertex g = jbase + j;
            const bool one = ids[a][j] != 0;
            edges.push_back({S_(a), g, one ? 3 * T + 1 : 5 * T + 1});
            edges.push_back({g, S_(a), one ? 2 * T + 1 : 1});
            edges.push_back({g, T_(a), one ? 5 * T + 1 : 3 * T + 1});
            edges.push_back({T_(a), g, one ? 1 : 2 * T + 1});
        }
    }
    for (Vertex j = 0; j < d; ++j) {
        for (Vertex o = o1; o <= o4; ++o) {
            edges.push_back({jbase + j, o, 3 * T + 1});
            edges.push_back({o, jbase + j, 3 * T + 1});
        }
        for (Vertex i = 0; i < d; ++i) {
            if (i != j) {
                edges.push_back({jbase + j, jbase + i, 3 * T + 1});
            }
        }
    }

    ReductionArtifact art;
    art.graph = DirectedGraph(total, std::move(edges));
    art.kind = ArtifactKind::kAnkcWeighted;
    art.no_threshold = 6 * t + 2 * k;
    art.yes_threshold = 10 * t;
    for (Vertex a = 0; a < n; ++a) {
        art.interesting_pairs.emplace_back(S_(a), T_(a));
    }
    art.metadata = {{"t", t},
                    {"k", k},
                    {"n", n},
                    {"d", d},
                    {"corrections",
                     {"o2 -> T edges of weight 5t+1 point from o2 into T",
                      "J -> J edges of weight 3t+1 in both directions, as used by the distance argument"}}};
    return art;
}

// Largest observed RT - 6t over planted all-covered instances with k in {3, 4, 5},
// up to 4 nodes per layer and three values of t each; the same for every t.
std::uint64_t unweighted_ankc_slack(std::size_t k) { return 2 * k; }

ReductionArtifact build_unweighted_ankc_graph(const LayeredCycleInstance &inst, std::uint64_t t) {
    check_t(inst, t);
    const std::size_t k = inst.k();
    const auto n = static_cast<Vertex>(inst.sizes[0]);
    const std::vector<Identifier> ids = make_identifiers(n);
    const auto d = static_cast<Vertex>(ids.empty() ? make_identifiers(1)[0].size() : ids[0].size());
    const auto tt = static_cast<Vertex>(t);

    // Each area holds copies 0 (S or T), fwd 1..5t, then bwd 1..2t, each a block of n.
    const Vertex area = (7 * tt + 1) * n;
    auto sf = [&](Vertex i, Vertex a) { return i * n + a; };
    auto sb = [&](Vertex i, Vertex a) { return i == 0 ? a : (5 * tt + i) * n + a; };
    auto tf = [&](Vertex i, Vertex a) { return area + i * n + a; };
    auto tb = [&](Vertex i, Vertex a) { return i == 0 ? area + a : area + (5 * tt + i) * n + a; };
    const LayerCopies fwd(inst, 2 * area);
    const LayerCopies bwd(inst, fwd.end);
    const Vertex o1 = bwd.end, o2 = o1 + 1, o3 = o1 + 2, o4 = o1 + 3;
    const Vertex jbase = o1 + 4;
    const std::size_t total = jbase + d;

    std::vector<Edge> edges;
    auto add = [&](Vertex u, Vertex v) { edges.push_back({u, v, 1}); };
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex i = 0; i < 5 * tt; ++i) {
            add(sf(i, a), sf(i + 1, a));
            add(tf(i + 1, a), tf(i, a));
        }
        for (Vertex i = 0; i < 2 * tt; ++i) {
            add(sb(i + 1, a), sb(i, a));
            add(tb(i, a), tb(i + 1, a));
        }
    }
    for (const LayerEdge &e : inst.edges) {
        if (e.layer == 0) {
            add(sf(3 * tt, e.u), fwd.at(1, e.v));
            add(bwd.at(1, e.v), sf(0, e.u));
        } else if (e.layer == k - 1) {
            add(fwd.at(e.layer, e.u), tf(3 * tt, e.v));
            add(tf(0, e.v), bwd.at(e.layer, e.u));
        } else {
            add(fwd.at(e.layer, e.u), fwd.at(e.layer + 1, e.v));
            add(bwd.at(e.layer + 1, e.v), bwd.at(e.layer, e.u));
        }
    }
    for (Vertex a = 0; a < n; ++a) {
        add(sf(5 * tt, a), o1);
        add(sf(4 * tt, a), o3);
        add(sf(5 * tt, a), o3);
        add(o2, sb(tt, a));
        add(o2, sb(2 * tt, a));
        add(o4, sb(2 * tt, a));
        add(o2, tf(5 * tt, a));
        add(o4, tf(4 * tt, a));
        add(o4, tf(5 * tt, a));
        add(tb(tt, a), o1);
        add(tb(2 * tt, a), o1);
        add(tb(2 * tt, a), o3);
    }
    for (Vertex x = fwd.begin(); x < fwd.end; ++x) {
        add(o1, x);
        add(x, o2);
    }
    for (Vertex x = bwd.begin(); x < bwd.end; ++x) {
        add(o3, x);
        add(x, o4);
    }
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex j = 0; j < d; ++j) {
            const Vertex g = jbase + j;
            const bool one = ids[a][j] != 0;
            add(sf(5 * tt, a), g);
            add(g, sb(2 * tt, a));
            if (one) {
                add(sf(3 * tt, a), g);
            } else {
                add(g, sf(0, a));
            }
            add(g, tf(5 * tt, a));
            add(tb(2 * tt, a), g);
            if (one) {
                add(tf(0, a), g);
            } else {
                add(g, tf(3 * tt, a));
            }
        }
    }
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex src : {sb(1, a), sb(tt + 1, a)}) {
            add(src, sf(2 * tt + 1, a));
            add(src, sf(3 * tt + 1, a));
        }
        for (Vertex src : {tf(2 * tt + 1, a), tf(3 * tt + 1, a)}) {
            add(src, tb(1, a));
            add(src, tb(tt + 1, a));
        }
    }

    const std::uint64_t slack = unweighted_ankc_slack(k);
    ReductionArtifact art;
    art.graph = DirectedGraph(total, std::move(edges));
    art.kind = ArtifactKind::kAnkcUnweighted;
    art.no_threshold = 6 * t + slack;
    art.yes_threshold = 10 * t;
    for (Vertex a = 0; a < n; ++a) {
        art.interesting_pairs.emplace_back(sf(0, a), tf(0, a));
    }
    art.metadata = {
        {"t", t},
        {"k", k},
        {"n", n},
        {"d", d},
        {"c_slack", slack},
        {"liberties",
         {"S_5t^fwd -> J and J -> S_2t^bwd for every coordinate, without a bit condition",
          "J -> T_5t^fwd and T_2t^bwd -> J for every coordinate, without a bit condition"}},
        {"corrections",
         {"x^bwd -> S[a] and T[a] -> x^bwd follow the direction of the instance edge",
          "the bit-1 T-side gadget edge leaves T[a]",
          "o4 -> S_2t^bwd and T_2t^bwd -> o3 added, as used by the distance argument"}},
    };
    return art;
}

bool decide_ankc_via_rt(const LayeredCycleInstance &inst, std::uint64_t t, const RtSolver &rt_solver,
                        bool unweighted) {
    ReductionArtifact art =
        unweighted ? build_unweighted_ankc_graph(inst, t) : build_weighted_ankc_graph(inst, t);
    return rt_solver(art.graph) <= art.no_threshold;
}

} // namespace dirdiam
