#ifndef DIRDIAM_ARTIFACT_HPP_
#define DIRDIAM_ARTIFACT_HPP_

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dirdiam/graph.hpp"

namespace dirdiam {

enum class ArtifactKind { kLinftyWeighted, kLinftyUnweighted, kAnkcWeighted, kAnkcUnweighted };

std::string to_string(ArtifactKind kind);
/// Throws std::invalid_argument on an unknown name.
ArtifactKind artifact_kind_from_string(const std::string &name);

/**
 * A graph produced by a hardness reduction, with its two gap thresholds.
 * Small side: every roundtrip distance is at most no_threshold. Large side:
 * some interesting pair has roundtrip distance at least yes_threshold.
 */
struct ReductionArtifact {
    DirectedGraph graph;
    ArtifactKind kind = ArtifactKind::kLinftyWeighted;
    Distance yes_threshold = 0;
    Distance no_threshold = 0;
    std::vector<std::pair<Vertex, Vertex>> interesting_pairs;
    nlohmann::json metadata = nlohmann::json::object();
};

/// Thresholds, pairs and parameters as one JSON object (the graph itself is not included).
nlohmann::json artifact_meta(const ReductionArtifact &a);

/// Rebuilds an artifact from a graph and the object produced by artifact_meta. Throws ParseError.
ReductionArtifact artifact_from_meta(DirectedGraph graph, const nlohmann::json &meta);

/// Edge list with the meta object embedded as a `# meta {...}` line after the header.
void write_artifact(std::ostream &out, const ReductionArtifact &a);
/// Reads what write_artifact wrote. Throws ParseError if the meta line is missing.
ReductionArtifact read_artifact(std::istream &in);

} // namespace dirdiam

#endif // DIRDIAM_ARTIFACT_HPP_
