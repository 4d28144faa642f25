#include "pathpebble/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>

namespace pathpebble {

ParseError::ParseError(std::size_t line, const std::string &what) :
    GraphError("line " + std::to_string(line) + ": " + what),
    line_(line)
{
}

Graph::Graph(Vertex n) :
    n_(n)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    build_adjacency();
}

namespace {
    auto normalize(Vertex n, std::vector<Edge> & edges) -> void
    {
        for (auto & e : edges) {
            if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
                throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v)
                        + ") out of range for " + std::to_string(n) + " vertices");
            if (e.u == e.v)
                throw GraphError("self-loop at vertex " + std::to_string(e.u));
            if (e.u > e.v)
                std::swap(e.u, e.v);
        }
        std::sort(edges.begin(), edges.end());
    }
}

Graph Graph::from_edges(Vertex n, std::vector<Edge> edges)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    normalize(n, edges);
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw GraphError("duplicate edge (" + std::to_string(dup->u) + ", " + std::to_string(dup->v) + ")");

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.build_adjacency();
    return g;
}

Graph Graph::merged(Vertex n, std::vector<Edge> edges)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    normalize(n, edges);
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.build_adjacency();
    return g;
}

void Graph::build_adjacency()
{
    std::vector<std::size_t> degrees(n_, 0);
    for (const auto & e : edges_) {
        ++degrees[e.u];
        ++degrees[e.v];
    }

    offsets_.assign(n_ + 1, 0);
    for (Vertex v = 0; v < n_; ++v)
        offsets_[v + 1] = offsets_[v] + degrees[v];

    adjacency_.assign(offsets_[n_], 0);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto & e : edges_) {
        adjacency_[fill[e.u]++] = e.v;
        adjacency_[fill[e.v]++] = e.u;
    }
    for (Vertex v = 0; v < n_; ++v)
        std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const
{
    return std::span<const Vertex>(adjacency_).subspan(offsets_.at(v), offsets_.at(v + 1) - offsets_.at(v));
}

std::size_t Graph::degree(Vertex v) const
{
    return offsets_.at(v + 1) - offsets_.at(v);
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    auto nu = neighbors(u);
    return std::binary_search(nu.begin(), nu.end(), v);
}

void BoundaryGraph::check() const
{
    std::vector<bool> seen(graph.size(), false);
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        Vertex v = boundary[i];
        if (v < 0 || v >= graph.size())
            throw GraphError("boundary label " + std::to_string(i + 1) + " maps outside the graph");
        if (seen[v])
            throw GraphError("boundary vertex " + std::to_string(v) + " carries two labels");
        seen[v] = true;
    }
}

std::vector<Vertex> glue_mapping(const BoundaryGraph &a, const BoundaryGraph &b)
{
    a.check();
    b.check();
    if (a.boundary_size() != b.boundary_size())
        throw GraphError("boundary size mismatch: " + std::to_string(a.boundary_size()) + " vs "
                + std::to_string(b.boundary_size()));

    std::vector<Vertex> map(b.graph.size(), -1);
    for (std::size_t i = 0; i < b.boundary.size(); ++i)
        map[b.boundary[i]] = a.boundary[i];

    Vertex next = a.graph.size();
    for (Vertex v = 0; v < b.graph.size(); ++v)
        if (map[v] < 0)
            map[v] = next++;
    return map;
}

Graph glue(const BoundaryGraph &a, const BoundaryGraph &b)
{
    auto map = glue_mapping(a, b);
    Vertex n = a.graph.size() + b.graph.size() - static_cast<Vertex>(b.boundary_size());

    std::vector<Edge> edges(a.graph.edges().begin(), a.graph.edges().end());
    for (const auto & e : b.graph.edges())
        edges.push_back({map[e.u], map[e.v]});
    return Graph::merged(n, std::move(edges));
}

Graph induced_subgraph(const Graph &g, std::span<const Vertex> vertices)
{
    std::vector<Vertex> local(g.size(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local.at(vertices[i]) = static_cast<Vertex>(i);

    std::vector<Edge> edges;
    for (const auto & e : g.edges())
        if (local[e.u] >= 0 && local[e.v] >= 0)
            edges.push_back({local[e.u], local[e.v]});
    return Graph::from_edges(static_cast<Vertex>(vertices.size()), std::move(edges));
}

GraphFormat parse_format(std::string_view name)
{
    if (name == "edge-list" || name == "edgelist")
        return GraphFormat::EdgeList;
    if (name == "dimacs")
        return GraphFormat::Dimacs;
    throw GraphError("unknown graph format '" + std::string(name) + "'");
}

namespace {
    struct Line
    {
        std::size_t number;
        std::vector<std::string_view> fields;
    };

    auto split_lines(std::string_view text) -> std::vector<Line>
    {
        std::vector<Line> result;
        std::size_t number = 0;
        while (! text.empty()) {
            auto end = text.find('\n');
            auto raw = text.substr(0, end);
            text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
            ++number;
            raw = raw.substr(0, raw.find('#'));

            Line line{number, {}};
            std::size_t i = 0;
            while (i < raw.size()) {
                while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r'))
                    ++i;
                std::size_t j = i;
                while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r')
                    ++j;
                if (j > i)
                    line.fields.push_back(raw.substr(i, j - i));
                i = j;
            }
            if (! line.fields.empty())
                result.push_back(std::move(line));
        }
        return result;
    }

    auto to_int(const Line & line, std::string_view field) -> std::int64_t
    {
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size())
            throw ParseError(line.number, "expected an integer, got '" + std::string(field) + "'");
        return value;
    }

    auto to_vertex(const Line & line, std::int64_t value) -> Vertex
    {
        if (value < 0 || value > std::numeric_limits<Vertex>::max() - 1)
            throw ParseError(line.number, "vertex id " + std::to_string(value) + " out of range");
        return static_cast<Vertex>(value);
    }

    auto build(Vertex n, std::vector<Edge> edges, const std::vector<std::size_t> & lines) -> Graph
    {
        // report problems against the line that introduced them
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto & e = edges[i];
            if (e.u == e.v)
                throw ParseError(lines[i], "self-loop at vertex " + std::to_string(e.u));
            if (e.u >= n || e.v >= n)
                throw ParseError(lines[i], "vertex id out of range for " + std::to_string(n) + " vertices");
        }
        std::vector<std::pair<Edge, std::size_t>> keyed;
        keyed.reserve(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i)
            keyed.emplace_back(Edge{std::min(edges[i].u, edges[i].v), std::max(edges[i].u, edges[i].v)}, lines[i]);
        std::stable_sort(keyed.begin(), keyed.end(), [] (const auto & a, const auto & b) { return a.first < b.first; });
        for (std::size_t i = 1; i < keyed.size(); ++i)
            if (keyed[i].first == keyed[i - 1].first)
                throw ParseError(keyed[i].second, "duplicate edge (" + std::to_string(keyed[i].first.u) + ", "
                        + std::to_string(keyed[i].first.v) + ")");
        return Graph::from_edges(n, std::move(edges));
    }

    auto read_edge_list(const std::vector<Line> & lines) -> Graph
    {
        for (const auto & line : lines)
            if (line.fields.size() != 2)
                throw ParseError(line.number, "expected two fields");

        // An "n m" header is recognised when n >= 1 and exactly m edge lines
        // with ids below n follow it. Anything else is a bare edge list with
        // n = max id + 1.
        bool has_header = false;
        if (! lines.empty()) {
            auto n = to_int(lines[0], lines[0].fields[0]);
            auto m = to_int(lines[0], lines[0].fields[1]);
            if (n >= 1 && m >= 0 && static_cast<std::size_t>(m) == lines.size() - 1) {
                has_header = true;
                for (std::size_t i = 1; i < lines.size() && has_header; ++i)
                    for (auto f : lines[i].fields) {
                        auto x = to_int(lines[i], f);
                        if (x < 0 || x >= n)
                            has_header = false;
                    }
            }
        }

        std::vector<Edge> edges;
        std::vector<std::size_t> where;
        Vertex n = 0;
        for (std::size_t i = has_header ? 1 : 0; i < lines.size(); ++i) {
            auto u = to_vertex(lines[i], to_int(lines[i], lines[i].fields[0]));
            auto v = to_vertex(lines[i], to_int(lines[i], lines[i].fields[1]));
            edges.push_back({u, v});
            where.push_back(lines[i].number);
            n = std::max({n, u + 1, v + 1});
        }
        if (has_header)
            n = to_vertex(lines[0], to_int(lines[0], lines[0].fields[0]));
        return build(n, std::move(edges), where);
    }

    auto read_dimacs(const std::vector<Line> & lines) -> Graph
    {
        std::optional<Vertex> n;
        std::int64_t m = 0;
        std::size_t header_line = 0;
        std::vector<Edge> edges;
        std::vector<std::size_t> where;

        for (const auto & line : lines) {
            auto kind = line.fields[0];
            if (kind == "c")
                continue;
            if (kind == "p") {
                if (n)
                    throw ParseError(line.number, "second problem line");
                if (line.fields.size() != 4 || (line.fields[1] != "edge" && line.fields[1] != "col"))
                    throw ParseError(line.number, "expected 'p edge n m'");
                n = to_vertex(line, to_int(line, line.fields[2]));
                m = to_int(line, line.fields[3]);
                header_line = line.number;
                continue;
            }
            if (kind == "e") {
                if (! n)
                    throw ParseError(line.number, "edge before problem line");
                if (line.fields.size() != 3)
                    throw ParseError(line.number, "expected 'e u v'");
                auto u = to_int(line, line.fields[1]);
                auto v = to_int(line, line.fields[2]);
                if (u < 1 || v < 1 || u > *n || v > *n)
                    throw ParseError(line.number, "vertex id out of range 1.." + std::to_string(*n));
                edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
                where.push_back(line.number);
                continue;
            }
            throw ParseError(line.number, "unknown line type '" + std::string(kind) + "'");
        }
        if (! n)
            throw ParseError(lines.empty() ? 1 : lines.back().number, "missing problem line");
        if (static_cast<std::size_t>(m) != edges.size())
            throw ParseError(header_line, "header announces " + std::to_string(m) + " edges, found "
                    + std::to_string(edges.size()));
        return build(*n, std::move(edges), where);
    }
}

GraphFormat detect_format(std::string_view text)
{
    for (const auto & line : split_lines(text)) {
        auto first = line.fields[0];
        return (first == "c" || first == "p" || first == "e") ? GraphFormat::Dimacs : GraphFormat::EdgeList;
    }
    return GraphFormat::EdgeList;
}

Graph read_graph(std::string_view text, GraphFormat format)
{
    auto lines = split_lines(text);
    return format == GraphFormat::Dimacs ? read_dimacs(lines) : read_edge_list(lines);
}

Graph read_graph(std::istream &in, GraphFormat format)
{
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return read_graph(text, format);
}

namespace {
    auto slurp(const std::string & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw GraphError("cannot open '" + path + "'");
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
}

Graph read_graph_file(const std::string &path, GraphFormat format)
{
    return read_graph(slurp(path), format);
}

Graph read_graph_file(const std::string &path)
{
    auto text = slurp(path);
    return read_graph(text, detect_format(text));
}

void write_graph(std::ostream &out, const Graph &g, GraphFormat format)
{
    if (format == GraphFormat::Dimacs) {
        out << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
        for (const auto & e : g.edges())
            out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
        return;
    }

    // the empty graph has no valid header; an empty file reads back as it
    if (g.size() == 0)
        return;
    out << g.size() << ' ' << g.edge_count() << '\n';
    for (const auto & e : g.edges())
        out << e.u << ' ' << e.v << '\n';
}

std::string write_graph(const Graph &g, GraphFormat format)
{
    std::ostringstream out;
    write_graph(out, g, format);
    return out.str();
}

} // namespace pathpebble
