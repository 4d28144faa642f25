#pragma once

#include "pathpebble/graph.hpp"

#include <cstdint>
#include <random>

namespace pathpebble::generators {

Graph path(Vertex n);
Graph cycle(Vertex n);
Graph complete(Vertex n);
/// Centre is vertex `centre`; leaves are the other vertices.
Graph star(Vertex leaves, Vertex centre = 0);
/// B_h in heap order: vertex i has children 2i+1 and 2i+2.
Graph complete_binary_tree(int height);
/// Spine of `spine` vertices, each with `legs` pendant vertices.
Graph caterpillar(Vertex spine, Vertex legs);
/// rows x cols grid, vertex r * cols + c.
Graph grid(Vertex rows, Vertex cols);

/// Uniform random recursive tree: vertex i > 0 attaches to a uniform earlier
/// vertex, then ids are shuffled.
Graph random_tree(Vertex n, std::mt19937_64 &rng);
/// Caterpillar with a random number of legs (0..max_legs) per spine vertex,
/// totalling n vertices, with shuffled ids.
Graph random_caterpillar(Vertex n, Vertex max_legs, std::mt19937_64 &rng);
/// m distinct uniformly random edges (m capped at n(n-1)/2).
Graph random_gnm(Vertex n, std::size_t m, std::mt19937_64 &rng);
/// Random relabelling of g.
Graph shuffled(const Graph &g, std::mt19937_64 &rng);

} // namespace pathpebble::generators
