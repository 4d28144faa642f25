#include "pathpebble/generators.hpp"
#include "pathpebble/graph.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace pathpebble;

TEST_SUITE("graph") {

TEST_CASE("from_edges normalises and sorts")
{
    Graph g = Graph::from_edges(4, {{2, 1}, {0, 3}, {1, 0}});
    CHECK(g.size() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.edges()[0] == Edge{0, 1});
    CHECK(g.edges()[1] == Edge{0, 3});
    CHECK(g.edges()[2] == Edge{1, 2});
    CHECK(g.degree(0) == 2);
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(2, 3));
    auto n0 = g.neighbors(0);
    CHECK(std::vector<Vertex>(n0.begin(), n0.end()) == std::vector<Vertex>{1, 3});
}

TEST_CASE("from_edges rejects loops, duplicates and bad ids")
{
    CHECK_THROWS_AS(Graph::from_edges(2, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(2, {{-1, 0}}), GraphError);
    CHECK(Graph::merged(2, {{0, 1}, {1, 0}}).edge_count() == 1);
}

TEST_CASE("glue of two single labelled vertices is K1")
{
    BoundaryGraph a{Graph(1), {0}}, b{Graph(1), {0}};
    Graph g = glue(a, b);
    CHECK(g.size() == 1);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("glue of two edges at a labelled end is a path on 3 vertices")
{
    BoundaryGraph a{Graph::from_edges(2, {{0, 1}}), {0}};
    BoundaryGraph b{Graph::from_edges(2, {{0, 1}}), {0}};
    Graph g = glue(a, b);
    CHECK(g == Graph::from_edges(3, {{0, 1}, {0, 2}}));
    CHECK(glue_mapping(a, b) == std::vector<Vertex>{0, 2});
}

TEST_CASE("glue merges parallel edges between boundary vertices")
{
    BoundaryGraph a{Graph::from_edges(2, {{0, 1}}), {0, 1}};
    BoundaryGraph b{Graph::from_edges(3, {{0, 1}, {1, 2}}), {1, 0}};
    Graph g = glue(a, b);
    CHECK(g.size() == 3);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("glue is commutative up to the id mapping")
{
    std::mt19937_64 rng(11);
    for (int round = 0; round < 30; ++round) {
        Graph ga = generators::random_gnm(6, 7, rng), gb = generators::random_gnm(5, 5, rng);
        BoundaryGraph a{ga, {0, 2, 4}}, b{gb, {3, 1, 0}};
        Graph ab = glue(a, b), ba = glue(b, a);
        REQUIRE(ab.size() == ba.size());
        REQUIRE(ab.edge_count() == ba.edge_count());

        // id of each vertex of ab inside ba
        std::vector<Vertex> to_ba(ab.size());
        auto b_in_ab = glue_mapping(a, b);
        auto a_in_ba = glue_mapping(b, a);
        for (Vertex v = 0; v < ga.size(); ++v)
            to_ba[v] = a_in_ba[v];
        for (Vertex v = 0; v < gb.size(); ++v)
            to_ba[b_in_ab[v]] = v;
        for (const auto & e : ab.edges())
            CHECK(ba.adjacent(to_ba[e.u], to_ba[e.v]));
    }
}

TEST_CASE("BoundaryGraph::check rejects repeated or invalid boundary vertices")
{
    CHECK_THROWS_AS((BoundaryGraph{Graph(2), {0, 0}}.check()), GraphError);
    CHECK_THROWS_AS((BoundaryGraph{Graph(2), {2}}.check()), GraphError);
    CHECK_NOTHROW((BoundaryGraph{Graph(2), {1, 0}}.check()));
}

TEST_CASE("induced_subgraph renumbers by position")
{
    Graph g = generators::cycle(5);
    Graph h = induced_subgraph(g, std::vector<Vertex>{0, 1, 4});
    CHECK(h == Graph::from_edges(3, {{0, 1}, {0, 2}}));
}

TEST_CASE("edge list without header")
{
    Graph g = read_graph("0 1\n1 2\n", GraphFormat::EdgeList);
    CHECK(g == generators::path(3));
}

TEST_CASE("edge list comments and blank lines are ignored")
{
    Graph g = read_graph("# a path\n0 1  # first\n\n1 2\n", GraphFormat::EdgeList);
    CHECK(g == generators::path(3));
}

TEST_CASE("edge list with header keeps isolated vertices")
{
    Graph g = read_graph("5 2\n0 1\n1 2\n", GraphFormat::EdgeList);
    CHECK(g.size() == 5);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("DIMACS input is 1-based")
{
    Graph g = read_graph("c a comment\np edge 3 2\ne 1 2\ne 2 3\n", GraphFormat::Dimacs);
    CHECK(g == generators::path(3));
    CHECK(detect_format("p edge 3 2\ne 1 2\ne 2 3\n") == GraphFormat::Dimacs);
    CHECK(detect_format("0 1\n") == GraphFormat::EdgeList);
}

TEST_CASE("self-loop is a parse error with its line")
{
    try {
        read_graph("0 0\n", GraphFormat::EdgeList);
        FAIL("expected a parse error");
    }
    catch (const ParseError & e) {
        CHECK(e.line() == 1);
    }
}

TEST_CASE("malformed input is rejected")
{
    CHECK_THROWS_AS(read_graph("0 x\n", GraphFormat::EdgeList), ParseError);
    CHECK_THROWS_AS(read_graph("p edge 3 2\ne 1 2\n", GraphFormat::Dimacs), ParseError);
    CHECK_THROWS_AS(read_graph("p edge 2 1\ne 1 3\n", GraphFormat::Dimacs), ParseError);
    CHECK_THROWS(parse_format("csv"));
}

TEST_CASE("K1 writes as a header with no edge lines")
{
    CHECK(write_graph(Graph(1), GraphFormat::EdgeList) == "1 0\n");
    CHECK(write_graph(Graph(0), GraphFormat::EdgeList).empty());
    CHECK(read_graph(write_graph(Graph(1), GraphFormat::EdgeList), GraphFormat::EdgeList) == Graph(1));
}

TEST_CASE("path on 3 vertices round-trips in both formats")
{
    Graph p = generators::path(3);
    for (auto fmt : {GraphFormat::EdgeList, GraphFormat::Dimacs})
        CHECK(read_graph(write_graph(p, fmt), fmt) == p);
}

TEST_CASE("read after write is the identity on random graphs")
{
    std::mt19937_64 rng(50);
    for (int round = 0; round < 25; ++round) {
        auto m = std::uniform_int_distribution<std::size_t>(0, 200)(rng);
        Graph g = generators::random_gnm(50, m, rng);
        for (auto fmt : {GraphFormat::EdgeList, GraphFormat::Dimacs}) {
            std::ostringstream out;
            write_graph(out, g, fmt);
            std::istringstream in(out.str());
            CHECK(read_graph(in, fmt) == g);
        }
    }
}

TEST_CASE("generators have the expected shape")
{
    CHECK(generators::complete(5).edge_count() == 10);
    CHECK(generators::star(3, 3).degree(3) == 3);
    CHECK(generators::complete_binary_tree(4).size() == 15);
    CHECK(generators::caterpillar(3, 2).size() == 9);
    CHECK(generators::grid(3, 4).edge_count() == 17);
    std::mt19937_64 rng(3);
    CHECK(generators::random_tree(40, rng).edge_count() == 39);
}

}
