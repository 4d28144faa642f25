#include "pathpebble/generators.hpp"
#include "pathpebble/outcome_json.hpp"

#include <doctest.h>

#include <random>

using namespace pathpebble;

namespace {
    void check_same(const Outcome & a, const Outcome & b)
    {
        CHECK(a.t == b.t);
        CHECK(a.result.index() == b.result.index());
        CHECK(a.history.bags == b.history.bags);
        CHECK(a.stats.touches == b.stats.touches);
        CHECK(a.stats.iterations == b.stats.iterations);
        CHECK(outcome_to_json(a) == outcome_to_json(b));
    }
}

TEST_SUITE("outcome-json") {

TEST_CASE("graphs round-trip")
{
    Graph g = generators::grid(2, 3);
    CHECK(graph_from_json(graph_to_json(g)) == g);
    CHECK(graph_from_json(Json::parse(R"({"n": 2, "edges": [[1, 0]]})")) == generators::path(2));
    CHECK_THROWS(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0]]})")));
}

TEST_CASE("decomposition readers accept several shapes")
{
    PathDecomposition d{{{0, 1}, {1, 2}}};
    CHECK(decomposition_from_json(decomposition_to_json(d)).bags == d.bags);
    CHECK(decomposition_from_json(Json::parse("[[0, 1], [1, 2]]")).bags == d.bags);
    CHECK_THROWS_AS(decomposition_from_json(Json::parse(R"({"x": 1})")), std::invalid_argument);
}

TEST_CASE("full decomposition outcome round-trips")
{
    Graph host = generators::path(40);
    Outcome o = run(host, 1);
    REQUIRE(o.is_full());
    Json j = outcome_to_json(o);
    CHECK(j["outcome"] == "full-decomposition");
    CHECK(j["f"] == 15);
    check_same(o, outcome_from_json(Json::parse(j.dump())));
    CHECK(validate_decomposition(decomposition_from_json(j), host).ok);
}

TEST_CASE("fat factor outcome round-trips and its certificate validates")
{
    Graph host = generators::complete_binary_tree(6);
    Outcome o = run(host, 1);
    REQUIRE(o.is_fat());
    Json j = outcome_to_json(o);
    Outcome back = outcome_from_json(Json::parse(j.dump()));
    check_same(o, back);

    const auto & a = std::get<FatFactor>(o.result);
    const auto & b = std::get<FatFactor>(back.result);
    CHECK(a.factor.graph == b.factor.graph);
    CHECK(a.factor.boundary == b.factor.boundary);
    CHECK(a.complement_hosts == b.complement_hosts);
    CHECK(a.certificate.vertex_map == b.certificate.vertex_map);

    auto doc = certificate_from_json(j);
    auto guest = doc.label_tree();
    REQUIRE(guest);
    CHECK(*guest == a.guest);
    CHECK(validate_embedding(doc.certificate, *guest, host).ok);
}

TEST_CASE("reject outcome round-trips")
{
    Outcome o = run(generators::complete(5), 1);
    REQUIRE(o.is_reject());
    Json j = outcome_to_json(o);
    CHECK(j["edgeCount"] == 10);
    CHECK(j["bound"] == 5);
    check_same(o, outcome_from_json(j));
}

TEST_CASE("label-form certificate without a labels array uses heap order")
{
    auto j = Json::parse(R"({"tokenHost": {"1": 1, "-": 0, "0": 2}, "edgePaths": {"1": [], "0": [3]}})");
    auto doc = certificate_from_json(j);
    REQUIRE(doc.labels.size() == 3);
    CHECK(doc.labels[0].is_root());
    CHECK(doc.labels[1].to_string() == "0");
    CHECK(doc.certificate.vertex_map == std::vector<Vertex>{0, 2, 1});
    Graph host = Graph::from_edges(4, {{0, 1}, {0, 3}, {2, 3}});
    CHECK(validate_embedding(doc.certificate, *doc.label_tree(), host).ok);
}

TEST_CASE("generic certificate form")
{
    auto j = Json::parse(R"({"vertexMap": [0, 2], "edgePaths": [{"from": 0, "to": 1, "path": [1]}]})");
    auto doc = certificate_from_json(j);
    CHECK(doc.labels.empty());
    CHECK_FALSE(doc.label_tree());
    CHECK(validate_embedding(doc.certificate, generators::path(2), generators::path(3)).ok);
}

TEST_CASE("malformed certificates are rejected")
{
    CHECK_THROWS(certificate_from_json(Json::parse(R"({"tokenHost": {"-": 0}, "edgePaths": {"1": []}})")));
    CHECK_THROWS(certificate_from_json(Json::parse(R"({"tokenHost": {"-": 0, "11": 1}, "edgePaths": {}})"))
            .label_tree());
    CHECK_THROWS(outcome_from_json(Json::parse(R"({"outcome": "other", "t": 1, "stats": {}})")));
}

TEST_CASE("random outcomes round-trip")
{
    std::mt19937_64 rng(21);
    for (int round = 0; round < 60; ++round) {
        Graph host = generators::random_gnm(14, 14 + round % 8, rng);
        Outcome o = run(host, 1 + round % 2, {.seed = static_cast<std::uint64_t>(round)});
        check_same(o, outcome_from_json(Json::parse(outcome_to_json(o).dump())));
    }
}

}
