#include "pathpebble/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pathpebble::generators {

Graph path(Vertex n)
{
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.push_back({v - 1, v});
    return Graph::from_edges(n, std::move(edges));
}

Graph cycle(Vertex n)
{
    if (n < 3)
        throw GraphError("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        edges.push_back({v, (v + 1) % n});
    return Graph::from_edges(n, std::move(edges));
}

Graph complete(Vertex n)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph::from_edges(n, std::move(edges));
}

Graph star(Vertex leaves, Vertex centre)
{
    if (centre < 0 || centre > leaves)
        throw GraphError("star centre out of range");
    std::vector<Edge> edges;
    for (Vertex v = 0; v <= leaves; ++v)
        if (v != centre)
            edges.push_back({centre, v});
    return Graph::from_edges(leaves + 1, std::move(edges));
}

Graph complete_binary_tree(int height)
{
    if (height < 0 || height > 24)
        throw GraphError("binary tree height out of range");
    Vertex n = (Vertex{1} << height) - 1;
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.push_back({(v - 1) / 2, v});
    return Graph::from_edges(n, std::move(edges));
}

Graph caterpillar(Vertex spine, Vertex legs)
{
    std::vector<Edge> edges;
    Vertex next = spine;
    for (Vertex s = 0; s < spine; ++s) {
        if (s > 0)
            edges.push_back({s - 1, s});
        for (Vertex l = 0; l < legs; ++l)
            edges.push_back({s, next++});
    }
    return Graph::from_edges(next, std::move(edges));
}

Graph grid(Vertex rows, Vertex cols)
{
    std::vector<Edge> edges;
    for (Vertex r = 0; r < rows; ++r)
        for (Vertex c = 0; c < cols; ++c) {
            Vertex v = r * cols + c;
            if (c + 1 < cols)
                edges.push_back({v, v + 1});
            if (r + 1 < rows)
                edges.push_back({v, v + cols});
        }
    return Graph::from_edges(rows * cols, std::move(edges));
}

Graph shuffled(const Graph &g, std::mt19937_64 &rng)
{
    std::vector<Vertex> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const auto & e : g.edges())
        edges.push_back({perm[e.u], perm[e.v]});
    return Graph::from_edges(g.size(), std::move(edges));
}

Graph random_tree(Vertex n, std::mt19937_64 &rng)
{
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.push_back({std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v});
    return shuffled(Graph::from_edges(n, std::move(edges)), rng);
}

Graph random_caterpillar(Vertex n, Vertex max_legs, std::mt19937_64 &rng)
{
    std::vector<Edge> edges;
    Vertex next = 0, previous_spine = -1;
    while (next < n) {
        Vertex s = next++;
        if (previous_spine >= 0)
            edges.push_back({previous_spine, s});
        previous_spine = s;
        Vertex legs = std::uniform_int_distribution<Vertex>(0, max_legs)(rng);
        for (Vertex l = 0; l < legs && next < n; ++l)
            edges.push_back({s, next++});
    }
    return shuffled(Graph::from_edges(n, std::move(edges)), rng);
}

Graph random_gnm(Vertex n, std::size_t m, std::mt19937_64 &rng)
{
    auto possible = static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max<Vertex>(n - 1, 0)) / 2;
    m = std::min(m, possible);
    std::set<Edge> chosen;
    std::uniform_int_distribution<Vertex> pick(0, std::max<Vertex>(n - 1, 0));
    while (chosen.size() < m) {
        Vertex u = pick(rng), v = pick(rng);
        if (u == v)
            continue;
        chosen.insert({std::min(u, v), std::max(u, v)});
    }
    return Graph::from_edges(n, std::vector<Edge>(chosen.begin(), chosen.end()));
}

} // namespace pathpebble::generators
