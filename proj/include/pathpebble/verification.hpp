#pragma once

#include "pathpebble/graph.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace pathpebble {

/// Ordered sequence of bags X_1..X_r over some target graph.
struct PathDecomposition {
    std::vector<std::vector<Vertex>> bags;

    /// max |X_i| - 1; -1 when there are no non-empty bags.
    int width() const;
};

/// Host path realising one guest edge. `internal` lists the host vertices
/// strictly between the images of `from` and `to`, in order from `from`.
struct EdgePath {
    Vertex from = 0;
    Vertex to = 0;
    std::vector<Vertex> internal;
};

/// Homeomorphic embedding witness: guest vertex i sits on vertex_map[i], and
/// every guest edge has exactly one EdgePath.
struct EmbeddingCertificate {
    std::vector<Vertex> vertex_map;
    std::vector<EdgePath> edge_paths;
};

enum class DecompositionViolation {
    None,
    BadVertex,         ///< bag mentions an id outside the graph, or twice
    UncoveredVertex,   ///< vertex in no bag
    Interpolation,     ///< vertex bags are not contiguous
    UncoveredEdge      ///< no bag holds both endpoints
};

struct DecompositionReport {
    bool ok = false;
    int width = -1;
    DecompositionViolation violation = DecompositionViolation::None;
    Vertex vertex = -1;
    Edge edge{};
    /// For interpolation: bags i < j < k with vertex in i and k but not j.
    /// For a bad vertex: the bag index in first.
    std::size_t first = 0, middle = 0, last = 0;
    std::string message;
};

/// Checks vertex coverage, then interpolation, then edge coverage, and
/// reports the first failure found in that order.
DecompositionReport validate_decomposition(const PathDecomposition &d, const Graph &g);

enum class EmbeddingViolation {
    None,
    BadVertexMap,      ///< wrong size, out of range, or not injective
    MissingEdge,       ///< guest edge without a path
    ExtraPath,         ///< path for a pair that is not a guest edge, or a second path
    BrokenPath,        ///< consecutive vertices not adjacent in the host
    NotDisjoint        ///< internal vertex reused or equal to a mapped vertex
};

struct EmbeddingReport {
    bool ok = false;
    EmbeddingViolation violation = EmbeddingViolation::None;
    Edge guest_edge{};
    Vertex host_vertex = -1;
    std::string message;
};

EmbeddingReport validate_embedding(const EmbeddingCertificate &c, const Graph &guest, const Graph &host);

/// Subset DP cap. Beyond 20 vertices the caller has to ask for it.
enum class OracleLimit { Default = 20, Forced = 22 };

/// Exact pathwidth as the vertex separation number, by dynamic programming
/// over vertex subsets. Throws GraphError above the limit.
int exact_pathwidth(const Graph &g, OracleLimit limit = OracleLimit::Default);

/// |E| <= n k - (k^2 + k) / 2 with k = min(t, n - 1), which every graph of
/// pathwidth at most t meets.
bool check_edge_bound(const Graph &g, int t);

} // namespace pathpebble
