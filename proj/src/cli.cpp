#include "dirdiam/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "dirdiam/ankc_reduction.hpp"
#include "dirdiam/artifact.hpp"
#include "dirdiam/decider.hpp"
#include "dirdiam/edge_list_io.hpp"
#include "dirdiam/generators.hpp"
#include "dirdiam/linfty_reduction.hpp"
#include "dirdiam/oracles.hpp"
#include "dirdiam/random.hpp"
#include "dirdiam/search.hpp"
#include "dirdiam/vector_set.hpp"

namespace dirdiam::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

/// Thrown to leave with exit code 1 after printing a message.
struct AssertionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string show(Distance d) { return d == kInfinity ? "inf" : std::to_string(d); }

json show_json(Distance d) { return d == kInfinity ? json("inf") : json(d); }

std::string show(Rational r) {
    std::ostringstream s;
    s << r.numerator();
    if (r.denominator() != 1) {
        s << '/' << r.denominator();
    }
    return s.str();
}

void with_input(const std::string &path, std::istream &fallback, const std::function<void(std::istream &)> &fn) {
    if (path.empty() || path == "-") {
        fn(fallback);
        return;
    }
    std::ifstream f(path);
    if (!f) {
        throw ParseError("cannot open '" + path + "'");
    }
    fn(f);
}

void with_output(const std::string &path, std::ostream &fallback, const std::function<void(std::ostream &)> &fn) {
    if (path.empty() || path == "-") {
        fn(fallback);
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw ParseError("cannot write '" + path + "'");
    }
    fn(f);
    if (!f) {
        throw ParseError("write to '" + path + "' failed");
    }
}

/// Command, parameters, per-phase wall time and result, emitted as one JSON object.
class RunReport {
public:
    explicit RunReport(std::string command) { j_["command"] = std::move(command); }

    template <class Fn>
    auto phase(const std::string &name, Fn &&fn) {
        auto start = Clock::now();
        if constexpr (std::is_void_v<decltype(fn())>) {
            fn();
            record(name, start);
        } else {
            auto r = fn();
            record(name, start);
            return r;
        }
    }

    json &operator[](const std::string &key) { return j_[key]; }
    const json &data() const { return j_; }

private:
    void record(const std::string &name, Clock::time_point start) {
        j_["wall_seconds"][name] = std::chrono::duration<double>(Clock::now() - start).count();
    }

    json j_;
};

struct Common {
    std::string input;
    std::string output;
    std::string stats;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

void add_common(CLI::App *sub, Common &c, bool with_output_flag) {
    sub->add_option("--input", c.input, "Input file (default: stdin)");
    if (with_output_flag) {
        sub->add_option("--output", c.output, "Output file (default: stdout)");
    }
    sub->add_option("--stats", c.stats, "Emit a JSON run report")->check(CLI::IsMember({"json"}));
    sub->add_option("--seed", c.seed, "Random seed");
    sub->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
}

void emit_report(std::ostream &out, const Common &c, const RunReport &r) {
    if (c.stats == "json") {
        json j = r.data();
        j["seed"] = c.seed;
        out << j.dump() << '\n';
    }
}

DirectedGraph load_graph(const Common &c, std::istream &in) {
    DirectedGraph g;
    with_input(c.input, in, [&](std::istream &s) { g = read_edge_list(s); });
    return g;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Directed diameter approximation and roundtrip-diameter reductions", "dirdiam"};
    app.require_subcommand(1);
    Common c;

    // gen
    auto *gen = app.add_subcommand("gen", "Generate a random graph, vector set or layered instance");
    std::string gen_kind = "graph";
    std::size_t gen_n = 8, gen_m = 16, gen_d = 2, gen_k = 3;
    Weight gen_w = 1;
    bool gen_loose = false, gen_close = false;
    double gen_p = 0.3;
    std::string gen_alpha = "2";
    std::int64_t gen_uncovered = -1;
    gen->add_option("--kind", gen_kind)->check(CLI::IsMember({"graph", "vectors", "layered"}));
    gen->add_option("--n", gen_n, "Vertices, vectors, or nodes per layer");
    gen->add_option("--m", gen_m, "Edges");
    gen->add_option("--max-weight", gen_w, "Largest edge weight (1 = unweighted)");
    gen->add_flag("--allow-disconnected", gen_loose, "Skip the Hamiltonian backbone cycle");
    gen->add_option("--d", gen_d, "Vector dimension");
    gen->add_option("--alpha", gen_alpha, "Promise gap for vectors");
    gen->add_flag("--close", gen_close, "Plant a close pair (default: all pairs far)");
    gen->add_option("--k", gen_k, "Layer count");
    gen->add_option("--p", gen_p, "Extra edge probability for layered instances");
    gen->add_option("--uncovered", gen_uncovered, "Layer-0 node left off every k-cycle");
    add_common(gen, c, true);

    // diameter
    auto *dia = app.add_subcommand("diameter", "Estimate the directed diameter");
    std::string algo = "approx";
    unsigned t = 0;
    std::string eps = "0.05";
    double omega = kDefaultOmega;
    bool integer_weights = false;
    dia->add_option("--algo", algo)->check(CLI::IsMember({"exact", "two", "approx", "approx74"}));
    dia->add_option("--t", t, "Level; k = 2^(t+2)");
    dia->add_option("--eps", eps, "Accuracy, e.g. 0.05 or 1/20");
    dia->add_option("--omega", omega, "Matrix multiplication exponent for the sample schedule");
    dia->add_flag("--integer-weights", integer_weights, "Use epsilon = 1/D with windowed products");
    add_common(dia, c, false);

    // rt-diameter
    auto *rt = app.add_subcommand("rt-diameter", "Roundtrip diameter");
    std::string rt_algo = "exact";
    rt->add_option("--algo", rt_algo)->check(CLI::IsMember({"exact", "two"}));
    add_common(rt, c, false);

    // reduce
    auto *red = app.add_subcommand("reduce", "Build a hardness-reduction graph");
    red->require_subcommand(1);
    std::string meta_path;
    auto *red_l = red->add_subcommand("linfty", "l_inf closest pair -> roundtrip diameter");
    std::string red_alpha = "2", red_eps;
    bool red_unweighted = false, red_bounded = false;
    std::int64_t red_M = 6;
    red_l->add_option("--alpha", red_alpha);
    red_l->add_option("--eps", red_eps, "Domain bound slack (default 1/(4 alpha))");
    red_l->add_flag("--unweighted", red_unweighted);
    red_l->add_option("--M", red_M, "Integerization factor for --unweighted");
    red_l->add_flag("--bounded", red_bounded, "Input is already bounded; skip flattening and folding");
    red_l->add_option("--meta", meta_path, "Write the threshold/pair JSON here as well");
    add_common(red_l, c, true);
    auto *red_a = red->add_subcommand("ankc", "All-nodes k-cycle -> roundtrip diameter");
    std::uint64_t red_t = 7;
    red_a->add_option("--t", red_t);
    red_a->add_flag("--unweighted", red_unweighted);
    red_a->add_option("--meta", meta_path, "Write the threshold/pair JSON here as well");
    add_common(red_a, c, true);

    // oracle
    auto *ora = app.add_subcommand("oracle", "Brute-force reference answers");
    std::string ora_what;
    std::string ora_alpha = "2";
    ora->add_option("what", ora_what)->required()->check(CLI::IsMember({"diameter", "rt-diameter", "linfty", "ankc"}));
    ora->add_option("--alpha", ora_alpha, "Promise gap for linfty classification");
    add_common(ora, c, false);

    // verify-gap
    auto *ver = app.add_subcommand("verify-gap", "Check a reduction graph against its thresholds");
    ver->add_option("--meta", meta_path, "Meta JSON file (default: the embedded '# meta' line)");
    add_common(ver, c, false);

    // bench
    auto *bench = app.add_subcommand("bench", "Time the decider against exact APSP on growing graphs");
    unsigned min_log = 12, max_log = 16;
    bool skip_exact = false;
    bench->add_option("--min-log", min_log, "Smallest m as a power of two");
    bench->add_option("--max-log", max_log, "Largest m as a power of two");
    bench->add_option("--t", t);
    bench->add_flag("--skip-exact", skip_exact);
    add_common(bench, c, false);

    std::vector<std::string> argv_store{"dirdiam"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const std::string &s : argv_store) {
        argv.push_back(s.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (gen->parsed()) {
            RunReport rep("gen");
            rep["parameters"] = {{"kind", gen_kind}, {"n", gen_n}, {"seed", c.seed}};
            with_output(c.output, out, [&](std::ostream &o) {
                if (gen_kind == "graph") {
                    write_edge_list(o, generate_random_graph(gen_n, gen_m, gen_w, c.seed, !gen_loose));
                } else if (gen_kind == "vectors") {
                    write_vector_set(o, promise_instance(gen_n, gen_d, parse_rational(gen_alpha), gen_close, c.seed));
                } else {
                    std::optional<std::uint32_t> unc;
                    if (gen_uncovered >= 0) {
                        unc = static_cast<std::uint32_t>(gen_uncovered);
                    }
                    write_layered_instance(o, planted_layered_instance(gen_k, gen_n, gen_p, unc, c.seed));
                }
            });
            if (!c.output.empty()) {
                emit_report(out, c, rep);
            }
            return kExitOk;
        }

        if (dia->parsed()) {
            RunReport rep("diameter");
            DirectedGraph g = rep.phase("read", [&] { return load_graph(c, in); });
            rep["parameters"] = {{"algo", algo}, {"t", t},         {"eps", eps}, {"omega", omega},
                                 {"threads", c.threads}, {"integer_weights", integer_weights}};
            Distance est = kInfinity;
            if (algo == "exact") {
                est = rep.phase("solve", [&] { return exact_diameter(g, c.threads); });
            } else if (algo == "two") {
                est = rep.phase("solve", [&] { return two_approx(g); });
            } else {
                EstimateOptions opt;
                opt.kind = algo == "approx74" ? DeciderKind::kSeventyFour : DeciderKind::kGeneral;
                opt.t = t;
                opt.epsilon = parse_rational(eps);
                opt.omega = omega;
                opt.seed = c.seed;
                opt.integer_weight_mode = integer_weights;
                opt.threads = c.threads;
                EstimateReport r = rep.phase("solve", [&] { return estimate_diameter_report(g, opt); });
                est = r.estimate;
                rep["decider_calls"] = r.decider_calls;
            }
            rep["estimate"] = show_json(est);
            out << "estimate=" << show(est) << '\n';
            emit_report(out, c, rep);
            return kExitOk;
        }

        if (rt->parsed()) {
            RunReport rep("rt-diameter");
            DirectedGraph g = rep.phase("read", [&] { return load_graph(c, in); });
            Distance est = rep.phase("solve", [&] {
                return rt_algo == "exact" ? exact_roundtrip_diameter(g, c.threads) : rt_two_approx(g);
            });
            rep["parameters"] = {{"algo", rt_algo}};
            rep["estimate"] = show_json(est);
            out << "estimate=" << show(est) << '\n';
            emit_report(out, c, rep);
            return kExitOk;
        }

        if (red_l->parsed() || red_a->parsed()) {
            RunReport rep(red_l->parsed() ? "reduce linfty" : "reduce ankc");
            ReductionArtifact art;
            if (red_l->parsed()) {
                VectorSet vs;
                with_input(c.input, in, [&](std::istream &s) { vs = read_vector_set(s); });
                Rational alpha = parse_rational(red_alpha);
                rep.phase("build", [&] {
                    if (red_unweighted) {
                        VectorSet b = red_bounded
                                          ? vs
                                          : bound_domain(flatten_coordinates(vs, alpha), alpha,
                                                         unweighted_epsilon(alpha, red_M));
                        art = build_unweighted_rt_graph(b, alpha, red_M);
                    } else {
                        Rational e = red_eps.empty() ? 1 / (4 * alpha) : parse_rational(red_eps);
                        VectorSet b = red_bounded ? vs : bound_domain(flatten_coordinates(vs, alpha), alpha, e);
                        art = build_weighted_rt_graph(b, alpha, e);
                    }
                });
            } else {
                LayeredCycleInstance inst;
                with_input(c.input, in, [&](std::istream &s) { inst = read_layered_instance(s); });
                rep.phase("build", [&] {
                    art = red_unweighted ? build_unweighted_ankc_graph(inst, red_t)
                                         : build_weighted_ankc_graph(inst, red_t);
                });
            }
            with_output(c.output, out, [&](std::ostream &o) { write_artifact(o, art); });
            if (!meta_path.empty()) {
                with_output(meta_path, out, [&](std::ostream &o) { o << artifact_meta(art).dump(2) << '\n'; });
            }
            rep["vertices"] = art.graph.num_vertices();
            rep["edges"] = art.graph.num_edges();
            if (!c.output.empty()) {
                emit_report(out, c, rep);
            }
            return kExitOk;
        }

        if (ora->parsed()) {
            RunReport rep("oracle " + ora_what);
            if (ora_what == "diameter" || ora_what == "rt-diameter") {
                DirectedGraph g = load_graph(c, in);
                DistanceMatrix dm = rep.phase("apsp", [&] { return apsp(g, c.threads); });
                Distance v = ora_what == "diameter" ? diameter_of(dm) : roundtrip_diameter_of(dm);
                rep["estimate"] = show_json(v);
                out << "estimate=" << show(v) << '\n';
            } else if (ora_what == "linfty") {
                VectorSet vs;
                with_input(c.input, in, [&](std::istream &s) { vs = read_vector_set(s); });
                ClosestPair cp = brute_linfty(vs);
                PromiseSide side = classify_promise(vs, parse_rational(ora_alpha));
                const char *name = side == PromiseSide::kClose ? "close"
                                   : side == PromiseSide::kFar ? "far"
                                                               : "outside-promise";
                out << "min_distance=" << show(cp.distance) << " pair=" << cp.i << ',' << cp.j
                    << " side=" << name << '\n';
                rep["side"] = name;
            } else {
                LayeredCycleInstance inst;
                with_input(c.input, in, [&](std::istream &s) { inst = read_layered_instance(s); });
                CycleCoverage cov = all_nodes_k_cycle_brute(inst);
                out << "all_covered=" << (cov.all_covered ? "true" : "false") << " uncovered=";
                for (std::size_t i = 0; i < cov.uncovered.size(); ++i) {
                    out << (i ? "," : "") << cov.uncovered[i];
                }
                out << '\n';
                rep["all_covered"] = cov.all_covered;
            }
            emit_report(out, c, rep);
            return kExitOk;
        }

        if (ver->parsed()) {
            RunReport rep("verify-gap");
            ReductionArtifact art;
            with_input(c.input, in, [&](std::istream &s) {
                if (meta_path.empty()) {
                    art = read_artifact(s);
                    return;
                }
                DirectedGraph g = read_edge_list(s);
                json meta;
                with_input(meta_path, in, [&](std::istream &m) {
                    try {
                        meta = json::parse(m);
                    } catch (const json::exception &e) {
                        throw ParseError(std::string("bad meta file: ") + e.what());
                    }
                });
                art = artifact_from_meta(std::move(g), meta);
            });
            GapReport r = rep.phase("apsp", [&] { return verify_gap(art, c.threads); });
            const char *side = r.side == GapSide::kSmall   ? "small"
                               : r.side == GapSide::kLarge ? "large"
                                                           : "violated";
            out << "side=" << side << " rt_diameter=" << show(r.rt_diameter)
                << " max_interesting=" << show(r.max_interesting) << " no_threshold=" << art.no_threshold
                << " yes_threshold=" << art.yes_threshold << '\n';
            rep["side"] = side;
            emit_report(out, c, rep);
            if (r.side == GapSide::kViolated) {
                throw AssertionFailure("roundtrip diameter falls strictly inside the gap");
            }
            return kExitOk;
        }

        if (bench->parsed()) {
            if (min_log > max_log || max_log > 24) {
                throw std::invalid_argument("need min-log <= max-log <= 24");
            }
            for (unsigned lg = min_log; lg <= max_log; ++lg) {
                const std::size_t m = std::size_t{1} << lg;
                const std::size_t n = m / 2;
                RunReport rep("bench");
                DirectedGraph g = generate_random_graph(n, m, 1, child_seed(c.seed, lg), true);
                PreparedGraph pg(g);
                DeciderConfig cfg;
                cfg.t = t;
                cfg.seed = c.seed;
                cfg.threads = c.threads;
                cfg.D = 4 * two_approx(g) + 1;
                Decision dec = rep.phase("decide", [&] { return decide_general(pg, cfg); });
                rep["n"] = n;
                rep["m"] = m;
                rep["D"] = cfg.D;
                rep["verdict"] = dec.accepted() ? "accept" : "reject";
                if (!skip_exact) {
                    rep["diameter"] = show_json(rep.phase("exact", [&] { return exact_diameter(g, c.threads); }));
                }
                out << rep.data().dump() << '\n';
            }
            return kExitOk;
        }
    } catch (const AssertionFailure &e) {
        err << "assertion failed: " << e.what() << '\n';
        return kExitAssertion;
    } catch (const ParseError &e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument &e) {
        err << "invalid argument: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}

} // namespace dirdiam::cli
