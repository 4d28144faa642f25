#pragma once

#include "pathpebble/graph.hpp"
#include "pathpebble/guest_tree.hpp"
#include "pathpebble/pebbling.hpp"
#include "pathpebble/verification.hpp"

#include <json.hpp>

#include <optional>
#include <span>
#include <vector>

namespace pathpebble {

using Json = nlohmann::json;

/// {"n": 3, "edges": [[0, 1], [1, 2]]}
Json graph_to_json(const Graph &g);
Graph graph_from_json(const Json &j);

/// {"bags": [[0, 1], [1, 2]]}
Json decomposition_to_json(const PathDecomposition &d);
/// Accepts a bare bag array, {"bags": ...}, or an outcome document (its
/// "decomposition" member). Throws std::invalid_argument on other shapes.
PathDecomposition decomposition_from_json(const Json &j);

/// Label form:
///   {"labels": ["-", "1", ...],
///    "tokenHost": {"-": 4, "1": 7, ...},
///    "edgePaths": {"1": [5, 6], ...}}
/// edgePaths is keyed by the child label of each tree edge and lists the host
/// vertices strictly between the parent's image and the child's.
Json certificate_to_json(const EmbeddingCertificate &c, std::span<const TokenLabel> labels);

/// Parsed certificate plus, in label form, the labels of guest vertices.
struct CertificateDocument {
    EmbeddingCertificate certificate;
    std::vector<TokenLabel> labels;   ///< empty for the generic form

    /// The tree on labels (vertex i is labels[i]), when labels are known.
    std::optional<Graph> label_tree() const;
};

/// Reads the label form above, or the generic form
///   {"vertexMap": [...], "edgePaths": [{"from": 0, "to": 1, "path": [...]}]},
/// or an outcome document (its "certificate" member). In label form without a
/// "labels" array, guest vertices follow the tokenHost keys in heap order.
CertificateDocument certificate_from_json(const Json &j);

Json stats_to_json(const RunStats &s);
RunStats stats_from_json(const Json &j);

/// "full-decomposition", "fat-factor" or "edge-bound-reject".
const char *outcome_kind(const Outcome &o);

Json outcome_to_json(const Outcome &o);
/// Inverse of outcome_to_json. Throws std::invalid_argument on malformed input.
Outcome outcome_from_json(const Json &j);

} // namespace pathpebble
