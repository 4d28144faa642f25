#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pathpebble {

using Vertex = std::int32_t;

/// Unordered vertex pair, stored with u < v once it is inside a Graph.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge &) const = default;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
public:
    ParseError(std::size_t line, const std::string &what);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable once built. Adjacency is stored in CSR form with every
/// neighbour list sorted ascending, so iteration order is deterministic.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(Vertex n);

    /// Throws GraphError on self-loops, repeated edges or ids outside 0..n-1.
    static Graph from_edges(Vertex n, std::vector<Edge> edges);

    /// Same as from_edges but silently drops repeated edges. Self-loops and
    /// out-of-range ids still throw.
    static Graph merged(Vertex n, std::vector<Edge> edges);

    Vertex size() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;

    bool operator==(const Graph &other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    void build_adjacency();

    Vertex n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> adjacency_;
};

/// Graph with k distinguished vertices; boundary[i] carries label i + 1.
struct BoundaryGraph {
    Graph graph;
    std::vector<Vertex> boundary;

    std::size_t boundary_size() const noexcept { return boundary.size(); }

    /// Throws GraphError unless the labels map to distinct, valid vertices.
    void check() const;
};

/// a ⊕ b: disjoint union with equally labelled boundary vertices identified.
///
/// Vertex ids of the result: a keeps its ids 0..n_a-1, then b's non-boundary
/// vertices follow in ascending order of their id in b. Parallel edges that
/// appear through the identification are merged.
Graph glue(const BoundaryGraph &a, const BoundaryGraph &b);

/// For every vertex of b, its id in glue(a, b).
std::vector<Vertex> glue_mapping(const BoundaryGraph &a, const BoundaryGraph &b);

/// Subgraph induced by `vertices` (sorted, distinct); vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph &g, std::span<const Vertex> vertices);

enum class GraphFormat { EdgeList, Dimacs };

/// Guesses the format from the first non-blank line ("c"/"p" means DIMACS).
GraphFormat detect_format(std::string_view text);

GraphFormat parse_format(std::string_view name);

Graph read_graph(std::istream &in, GraphFormat format);
Graph read_graph(std::string_view text, GraphFormat format);
Graph read_graph_file(const std::string &path, GraphFormat format);
Graph read_graph_file(const std::string &path);

void write_graph(std::ostream &out, const Graph &g, GraphFormat format);
std::string write_graph(const Graph &g, GraphFormat format);

} // namespace pathpebble
