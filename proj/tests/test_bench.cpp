#include "pathpebble/bench.hpp"

#include <doctest.h>

using namespace pathpebble;

TEST_SUITE("bench") {

TEST_CASE("empty size list gives an empty table")
{
    CHECK(run_bench({}, {}).empty());
    CHECK(bench_to_json({}).empty());
}

TEST_CASE("random trees stay within the touch budget")
{
    std::vector<Vertex> sizes{10'000, 20'000, 40'000};
    auto rows = run_bench(sizes, {.family = BenchFamily::RandomTree, .t = 2});
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].n == sizes[i]);
        CHECK(rows[i].edges == static_cast<std::size_t>(sizes[i] - 1));
        CHECK(rows[i].touches <= 2 * static_cast<std::uint64_t>(sizes[i] - 1) + sizes[i]);
        CHECK(rows[i].within_budget());
    }
}

TEST_CASE("all families, serial and threaded agree on counters")
{
    std::vector<Vertex> sizes{3000, 6000, 12'000};
    for (auto family : {BenchFamily::RandomTree, BenchFamily::GridStrip, BenchFamily::RandomSparse}) {
        auto serial = run_bench(sizes, {.family = family, .t = 2, .jobs = 1});
        auto threaded = run_bench(sizes, {.family = family, .t = 2, .jobs = 3});
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            CHECK(serial[i].touches == threaded[i].touches);
            CHECK(serial[i].outcome == threaded[i].outcome);
            CHECK(serial[i].within_budget());
            CHECK(serial[i].snapshots <= static_cast<std::size_t>(sizes[i]));
        }
    }
}

TEST_CASE("grid strips scan every edge and stay linear")
{
    std::vector<Vertex> sizes{30'000, 60'000};
    auto rows = run_bench(sizes, {.family = BenchFamily::GridStrip, .t = 2});
    CHECK(rows[0].outcome == "full-decomposition");
    CHECK(rows[0].touches >= static_cast<std::uint64_t>(sizes[0]));
    CHECK(rows[1].touches < 3 * rows[0].touches);
    auto ratios = time_ratios(rows);
    CHECK_FALSE(ratios[0]);
    auto table = bench_to_json(rows);
    CHECK(table.size() == 2);
    CHECK(table[0]["timeRatio"].is_null());
}

TEST_CASE("family names")
{
    CHECK(parse_bench_family("grid-strip") == BenchFamily::GridStrip);
    CHECK(std::string(bench_family_name(BenchFamily::RandomSparse)) == "random-sparse");
    CHECK_THROWS(parse_bench_family("clique"));
}

}
