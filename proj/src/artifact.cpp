#include "dirdiam/artifact.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include "dirdiam/edge_list_io.hpp"

namespace dirdiam {

namespace {

constexpr const char *kMetaPrefix = " meta ";

} // namespace

std::string to_string(ArtifactKind kind) {
    switch (kind) {
    case ArtifactKind::kLinftyWeighted:
        return "linfty-weighted";
    case ArtifactKind::kLinftyUnweighted:
        return "linfty-unweighted";
    case ArtifactKind::kAnkcWeighted:
        return "ankc-weighted";
    case ArtifactKind::kAnkcUnweighted:
        return "ankc-unweighted";
    }
    return "unknown";
}

ArtifactKind artifact_kind_from_string(const std::string &name) {
    for (ArtifactKind k : {ArtifactKind::kLinftyWeighted, ArtifactKind::kLinftyUnweighted,
                           ArtifactKind::kAnkcWeighted, ArtifactKind::kAnkcUnweighted}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    throw std::invalid_argument("unknown artifact kind '" + name + "'");
}

nlohmann::json artifact_meta(const ReductionArtifact &a) {
    nlohmann::json pairs = nlohmann::json::array();
    for (auto [u, v] : a.interesting_pairs) {
        pairs.push_back({u, v});
    }
    return {
        {"kind", to_string(a.kind)},
        {"yes_threshold", a.yes_threshold},
        {"no_threshold", a.no_threshold},
        {"interesting_pairs", std::move(pairs)},
        {"parameters", a.metadata},
    };
}

ReductionArtifact artifact_from_meta(DirectedGraph graph, const nlohmann::json &meta) {
    ReductionArtifact a;
    try {
        a.kind = artifact_kind_from_string(meta.at("kind").get<std::string>());
        a.yes_threshold = meta.at("yes_threshold").get<Distance>();
        a.no_threshold = meta.at("no_threshold").get<Distance>();
        for (const auto &p : meta.at("interesting_pairs")) {
            a.interesting_pairs.emplace_back(p.at(0).get<Vertex>(), p.at(1).get<Vertex>());
        }
        if (meta.contains("parameters")) {
            a.metadata = meta.at("parameters");
        }
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("bad artifact meta: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
    for (auto [u, v] : a.interesting_pairs) {
        if (u >= graph.num_vertices() || v >= graph.num_vertices()) {
            throw ParseError("interesting pair refers to a missing vertex");
        }
    }
    a.graph = std::move(graph);
    return a;
}

void write_artifact(std::ostream &out, const ReductionArtifact &a) {
    write_edge_list(out, a.graph, {kMetaPrefix + artifact_meta(a).dump()});
}

ReductionArtifact read_artifact(std::istream &in) {
    std::vector<std::string> comments;
    DirectedGraph g = read_edge_list(in, &comments);
    const std::string prefix = kMetaPrefix;
    for (const std::string &c : comments) {
        if (c.compare(0, prefix.size(), prefix) == 0) {
            nlohmann::json meta;
            try {
                meta = nlohmann::json::parse(c.substr(prefix.size()));
            } catch (const nlohmann::json::exception &e) {
                throw ParseError(std::string("bad meta line: ") + e.what());
            }
            return artifact_from_meta(std::move(g), meta);
        }
    }
    throw ParseError("no '# meta' line in artifact input");
}

} // namespace dirdiam
