#include "pathpebble/generators.hpp"
#include "pathpebble/verification.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace pathpebble;

namespace {
    /// Brute force over all orderings: the vertex separation number.
    int separation_by_permutation(const Graph & g)
    {
        std::vector<Vertex> order(g.size());
        std::iota(order.begin(), order.end(), 0);
        int best = g.size();
        do {
            std::vector<int> position(g.size());
            for (Vertex i = 0; i < g.size(); ++i)
                position[order[i]] = i;
            int worst = 0;
            for (Vertex i = 0; i < g.size(); ++i) {
                int boundary = 0;
                for (Vertex j = 0; j <= i; ++j)
                    for (Vertex w : g.neighbors(order[j]))
                        if (position[w] > i) {
                            ++boundary;
                            break;
                        }
                worst = std::max(worst, boundary);
            }
            best = std::min(best, worst);
        } while (std::next_permutation(order.begin(), order.end()));
        return g.size() == 0 ? 0 : best;
    }
}

TEST_SUITE("verification") {

TEST_CASE("K2 with one bag has width 1")
{
    auto r = validate_decomposition({{{0, 1}}}, generators::path(2));
    CHECK(r.ok);
    CHECK(r.width == 1);
}

TEST_CASE("path u-v-w with two bags has width 1")
{
    auto r = validate_decomposition({{{0, 1}, {1, 2}}}, generators::path(3));
    CHECK(r.ok);
    CHECK(r.width == 1);
}

TEST_CASE("non-contiguous bags break interpolation")
{
    auto r = validate_decomposition({{{0, 1}, {2}, {1}}}, generators::path(3));
    CHECK_FALSE(r.ok);
    CHECK(r.violation == DecompositionViolation::Interpolation);
    CHECK(r.vertex == 1);
    CHECK(r.first == 0);
    CHECK(r.middle == 1);
    CHECK(r.last == 2);
}

TEST_CASE("uncovered vertices and edges are reported")
{
    auto missing = validate_decomposition({{{0, 1}}}, generators::path(3));
    CHECK(missing.violation == DecompositionViolation::UncoveredVertex);
    CHECK(missing.vertex == 2);

    auto edge = validate_decomposition({{{0}, {1}, {2}}}, generators::path(3));
    CHECK(edge.violation == DecompositionViolation::UncoveredEdge);
    CHECK(edge.edge == Edge{0, 1});

    auto bad = validate_decomposition({{{0, 7}}}, Graph(1));
    CHECK(bad.violation == DecompositionViolation::BadVertex);
    auto twice = validate_decomposition({{{0, 0}}}, Graph(1));
    CHECK(twice.violation == DecompositionViolation::BadVertex);
}

TEST_CASE("empty graph has the empty decomposition")
{
    auto r = validate_decomposition({}, Graph(0));
    CHECK(r.ok);
    CHECK(r.width == -1);
}

TEST_CASE("K2 mapped onto a host edge with an empty path")
{
    EmbeddingCertificate c{{3, 4}, {{0, 1, {}}}};
    CHECK(validate_embedding(c, generators::path(2), generators::path(6)).ok);
}

TEST_CASE("K1,3 onto itself under the identity")
{
    Graph star = generators::star(3);
    EmbeddingCertificate c{{0, 1, 2, 3}, {{0, 1, {}}, {0, 2, {}}, {0, 3, {}}}};
    CHECK(validate_embedding(c, star, star).ok);
}

TEST_CASE("subdivided edge embeds through a path")
{
    EmbeddingCertificate c{{0, 3}, {{0, 1, {1, 2}}}};
    CHECK(validate_embedding(c, generators::path(2), generators::path(4)).ok);
}

TEST_CASE("two guest edges sharing an internal vertex are not disjoint")
{
    // guest path a-b-c; host: 0 - 3 - 1 and 1 - 3 - 2 reuse 3
    Graph host = Graph::from_edges(4, {{0, 3}, {1, 3}, {2, 3}});
    EmbeddingCertificate c{{0, 1, 2}, {{0, 1, {3}}, {1, 2, {3}}}};
    auto r = validate_embedding(c, generators::path(3), host);
    CHECK_FALSE(r.ok);
    CHECK(r.violation == EmbeddingViolation::NotDisjoint);
    CHECK(r.host_vertex == 3);
}

TEST_CASE("embedding violations by kind")
{
    Graph guest = generators::path(3), host = generators::path(5);
    CHECK(validate_embedding({{0, 0, 1}, {}}, guest, host).violation == EmbeddingViolation::BadVertexMap);
    CHECK(validate_embedding({{0, 1}, {}}, guest, host).violation == EmbeddingViolation::BadVertexMap);
    CHECK(validate_embedding({{0, 1, 2}, {{0, 1, {}}}}, guest, host).violation == EmbeddingViolation::MissingEdge);
    CHECK(validate_embedding({{0, 1, 2}, {{0, 1, {}}, {1, 2, {}}, {0, 2, {}}}}, guest, host).violation
            == EmbeddingViolation::ExtraPath);
    CHECK(validate_embedding({{0, 1, 2}, {{0, 1, {}}, {1, 2, {}}, {2, 1, {}}}}, guest, host).violation
            == EmbeddingViolation::ExtraPath);
    CHECK(validate_embedding({{0, 1, 4}, {{0, 1, {}}, {1, 2, {}}}}, guest, host).violation
            == EmbeddingViolation::BrokenPath);
    CHECK(validate_embedding({{0, 2, 4}, {{0, 1, {1}}, {1, 2, {3}}}}, guest, host).ok);
    CHECK(validate_embedding({{0, 2, 4}, {{0, 1, {2}}, {1, 2, {3}}}}, guest, host).violation
            == EmbeddingViolation::NotDisjoint);
}

TEST_CASE("oracle on small families")
{
    CHECK(exact_pathwidth(Graph(0)) == 0);
    CHECK(exact_pathwidth(Graph(1)) == 0);
    for (Vertex n = 2; n <= 6; ++n)
        CHECK(exact_pathwidth(generators::complete(n)) == n - 1);
    for (Vertex n = 3; n <= 10; ++n)
        CHECK(exact_pathwidth(generators::cycle(n)) == 2);
    for (Vertex n = 2; n <= 12; ++n)
        CHECK(exact_pathwidth(generators::path(n)) == 1);
    CHECK(exact_pathwidth(generators::grid(3, 5)) == 3);
}

TEST_CASE("oracle on the spider and binary trees")
{
    Graph spider = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK(exact_pathwidth(spider) == 2);
    CHECK(exact_pathwidth(generators::complete_binary_tree(2)) == 1);
    CHECK(exact_pathwidth(generators::complete_binary_tree(4)) == 2);
    CHECK(exact_pathwidth(generators::caterpillar(4, 3)) == 1);
}

TEST_CASE("oracle limits")
{
    CHECK_THROWS_AS(exact_pathwidth(generators::path(21)), GraphError);
    CHECK(exact_pathwidth(generators::path(21), OracleLimit::Forced) == 1);
    CHECK_THROWS_AS(exact_pathwidth(generators::path(23), OracleLimit::Forced), GraphError);
}

TEST_CASE("oracle agrees with brute force over orderings")
{
    std::mt19937_64 rng(8);
    for (int round = 0; round < 40; ++round) {
        auto n = std::uniform_int_distribution<Vertex>(1, 7)(rng);
        auto m = std::uniform_int_distribution<std::size_t>(0, static_cast<std::size_t>(n) * (n - 1) / 2)(rng);
        Graph g = generators::random_gnm(n, m, rng);
        CHECK(exact_pathwidth(g) == separation_by_permutation(g));
    }
}

TEST_CASE("oracle is invariant under relabelling")
{
    std::mt19937_64 rng(9);
    for (int round = 0; round < 20; ++round) {
        Graph g = generators::random_gnm(12, 16, rng);
        CHECK(exact_pathwidth(g) == exact_pathwidth(generators::shuffled(g, rng)));
    }
}

TEST_CASE("edge bound examples")
{
    CHECK(check_edge_bound(generators::path(5), 1));
    CHECK_FALSE(check_edge_bound(generators::complete(4), 1));
}

TEST_CASE("graphs of pathwidth at most t meet the edge bound")
{
    std::mt19937_64 rng(10);
    for (int round = 0; round < 150; ++round) {
        auto n = std::uniform_int_distribution<Vertex>(1, 10)(rng);
        auto m = std::uniform_int_distribution<std::size_t>(0, static_cast<std::size_t>(n) * (n - 1) / 2)(rng);
        Graph g = generators::random_gnm(n, m, rng);
        int pw = exact_pathwidth(g);
        for (int t = pw; t <= pw + 2; ++t)
            CHECK(check_edge_bound(g, t));
    }
}

}
