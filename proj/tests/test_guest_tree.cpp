#include "pathpebble/generators.hpp"
#include "pathpebble/guest_tree.hpp"
#include "pathpebble/verification.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace pathpebble;

namespace {
    std::vector<TokenLabel> labels(std::initializer_list<const char *> names)
    {
        std::vector<TokenLabel> out;
        for (auto name : names)
            out.push_back(TokenLabel::parse(name));
        return out;
    }

    std::vector<std::string> names(const std::vector<TokenLabel> & ls)
    {
        std::vector<std::string> out;
        for (auto l : ls)
            out.push_back(l.to_string());
        return out;
    }

    bool closed_under_parent(const std::vector<TokenLabel> & ls)
    {
        std::set<std::uint64_t> codes;
        for (auto l : ls)
            codes.insert(l.code());
        return std::all_of(ls.begin(), ls.end(), [&] (TokenLabel l) {
                return l.is_root() || codes.count(l.parent().code());
                });
    }
}

TEST_SUITE("guest-tree") {

TEST_CASE("token labels")
{
    auto root = TokenLabel::root();
    CHECK(root.is_root());
    CHECK(root.code() == 1);
    CHECK(root.to_string() == "-");
    CHECK(root.bits().empty());
    CHECK(TokenLabel::parse("") == root);

    auto l = TokenLabel::parse("10");
    CHECK(l.length() == 2);
    CHECK(l.code() == 0b110);
    CHECK(l.parent() == TokenLabel::parse("1"));
    CHECK(l.sibling() == TokenLabel::parse("11"));
    CHECK(l.last_bit() == 0);
    CHECK(root.left() == TokenLabel::parse("1"));
    CHECK(root.right() == TokenLabel::parse("0"));
    CHECK(TokenLabel::parse("1").is_prefix_of(l));
    CHECK(l.is_prefix_of(l));
    CHECK_FALSE(TokenLabel::parse("0").is_prefix_of(l));
    CHECK(TokenLabel::parse("1101").replace_prefix(TokenLabel::parse("11"), TokenLabel::parse("0")).to_string() == "001");
    CHECK(TokenLabel::parse("1").replace_prefix(TokenLabel::parse("1"), root) == root);

    CHECK_THROWS(TokenLabel::parse("12"));
    CHECK_THROWS(root.parent());
    CHECK_THROWS(root.sibling());
    CHECK_THROWS(TokenLabel::from_code(0));
}

TEST_CASE("lexicographic order on labels")
{
    auto ls = labels({"1", "01", "-", "00", "0"});
    std::sort(ls.begin(), ls.end(), lexicographic_less);
    CHECK(names(ls) == std::vector<std::string>{"-", "0", "00", "01", "1"});
}

TEST_CASE("f(t) for t = 0, 1, 2 and its range")
{
    CHECK(f_bound(0) == 3);
    CHECK(f_bound(1) == 15);
    CHECK(f_bound(2) == 63);
    CHECK(f_bound(3) == 255);
    CHECK(h_bound(1) == 4);
    CHECK(f_bound(28) == (std::int64_t{1} << 58) - 1);
    CHECK_THROWS_AS(f_bound(29), std::out_of_range);
    CHECK_THROWS_AS(f_bound(-1), std::out_of_range);
}

TEST_CASE("obstruction order formula")
{
    CHECK(obstruction_order(0) == 2);
    CHECK(obstruction_order(1) == 7);
    CHECK(obstruction_order(2) == 22);
    CHECK(obstruction_order(3) == 67);
}

TEST_CASE("universe of B_h has 2^h - 1 tokens")
{
    for (int h = 1; h <= 8; ++h) {
        auto g = GuestTree::complete(h);
        CHECK(g.universe_size() == (std::uint64_t{1} << h) - 1);
        CHECK(g.flagged_count() == g.universe_size());
        CHECK(g.is_complete());
        Graph tree = g.flagged_tree();
        CHECK(tree.size() == static_cast<Vertex>(g.universe_size()));
        CHECK(tree.edge_count() == g.universe_size() - 1);
    }
}

TEST_CASE("children in a height-2 tree")
{
    auto g = GuestTree::complete(2);
    CHECK(names(g.children(TokenLabel::root())) == std::vector<std::string>{"1", "0"});
    CHECK(g.children(TokenLabel::parse("1")).empty());
    CHECK(g.children(TokenLabel::parse("0")).empty());
}

TEST_CASE("with_flags validates the flag set")
{
    CHECK_THROWS_AS(GuestTree::with_flags(3, labels({"1"})), std::invalid_argument);
    CHECK_THROWS_AS(GuestTree::with_flags(3, labels({"-", "11"})), std::invalid_argument);
    CHECK_THROWS_AS(GuestTree::with_flags(2, labels({"-", "1", "11"})), std::invalid_argument);

    auto g = GuestTree::with_flags(3, labels({"-", "1", "10"}));
    CHECK(g.flagged_count() == 3);
    CHECK(names(g.flagged_children(TokenLabel::root())) == std::vector<std::string>{"1"});
    CHECK(names(g.unflagged_children(TokenLabel::root())) == std::vector<std::string>{"0"});
    CHECK(names(g.unflagged_children(TokenLabel::parse("1"))) == std::vector<std::string>{"11"});
    CHECK_THROWS(g.flag(TokenLabel::parse("0")));
}

TEST_CASE("expandable guests accept new flags below flagged parents")
{
    auto g = GuestTree::with_flags(3, labels({"-"}), true);
    g.flag(TokenLabel::parse("0"));
    CHECK(g.is_flagged(TokenLabel::parse("0")));
    CHECK_THROWS(g.flag(TokenLabel::parse("11")));
    CHECK(g.flagged_count() == 2);
}

TEST_CASE("flag sets round-trip through text")
{
    auto ls = labels({"-", "1", "0", "11"});
    auto text = write_flag_set(ls);
    CHECK(text == "-\n1\n0\n11\n");
    CHECK(names(parse_flag_set(text)) == names(ls));
    CHECK(names(parse_flag_set("-\n\n  1  \n")) == std::vector<std::string>{"-", "1"});
}

TEST_CASE("canonical form identifies isomorphic trees")
{
    std::mt19937_64 rng(4);
    for (int round = 0; round < 40; ++round) {
        Graph t = generators::random_tree(12, rng);
        CHECK(tree_canonical_form(t) == tree_canonical_form(generators::shuffled(t, rng)));
    }
    CHECK(tree_canonical_form(generators::path(6)) != tree_canonical_form(generators::star(5)));
    CHECK(tree_canonical_form(generators::path(2)) == tree_canonical_form(generators::path(2)));
    CHECK_THROWS_AS(tree_canonical_form(generators::cycle(4)), GraphError);
    CHECK_THROWS_AS(tree_canonical_form(Graph(2)), GraphError);
}

TEST_CASE("t = 0 obstruction is K2")
{
    auto obs = generate_obstructions(0);
    REQUIRE(obs.size() == 1);
    CHECK(obs[0].tree == generators::path(2));
}

TEST_CASE("t = 1 obstruction is the spider with three legs of length 2")
{
    auto obs = generate_obstructions(1);
    REQUIRE(obs.size() == 1);
    Graph spider = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK(tree_canonical_form(obs[0].tree) == tree_canonical_form(spider));
}

TEST_CASE("t = 2 obstructions are ten distinct 22-vertex trees")
{
    auto obs = generate_obstructions(2);
    CHECK(obs.size() == 10);
    std::set<std::string> forms;
    for (const auto & o : obs) {
        CHECK(o.tree.size() == 22);
        CHECK(o.t == 2);
        forms.insert(tree_canonical_form(o.tree));
    }
    CHECK(forms.size() == obs.size());
}

TEST_CASE("obstruction generation range")
{
    CHECK_THROWS_AS(generate_obstructions(4), std::out_of_range);
    CHECK_THROWS_AS(generate_obstructions(-1), std::out_of_range);
    std::size_t seen = 0;
    for_each_obstruction(2, [&] (const ObstructionTree &) { return ++seen < 3; });
    CHECK(seen == 3);
}

TEST_CASE("K2 embeds as the root and one child")
{
    auto e = embed_in_binary_tree(generate_obstructions(0)[0]);
    CHECK(e.guest.height() == 2);
    CHECK(names(e.labels) == std::vector<std::string>{"-", "1"});
    CHECK(validate_embedding(e.certificate, e.obstruction.tree, e.guest_graph).ok);
}

TEST_CASE("t = 1 spider embeds into B4 with seven tokens")
{
    auto e = embed_in_binary_tree(generate_obstructions(1)[0]);
    CHECK(e.guest.height() == 4);
    CHECK(e.labels.size() == 7);
    CHECK(e.depth == 4);
    CHECK(closed_under_parent(e.labels));
    CHECK(validate_embedding(e.certificate, e.obstruction.tree, e.guest_graph).ok);
    CHECK(e.guest_graph == e.guest.flagged_tree());

    // the centre has three legs of two tokens each
    Vertex centre = -1;
    for (Vertex v = 0; v < e.guest_graph.size(); ++v)
        if (e.guest_graph.degree(v) == 3)
            centre = v;
    REQUIRE(centre >= 0);
    for (Vertex leg : e.guest_graph.neighbors(centre))
        CHECK(e.guest_graph.degree(leg) == 2);
}

TEST_CASE("flagged children of the root follow the t = 1 embedding")
{
    const auto & e = default_obstruction_guest(1);
    std::vector<TokenLabel> expected;
    for (auto l : e.labels)
        if (! l.is_root() && l.parent().is_root())
            expected.push_back(l);
    auto got = e.guest.flagged_children(TokenLabel::root());
    std::sort(expected.begin(), expected.end(), [] (TokenLabel a, TokenLabel b) { return a.code() > b.code(); });
    CHECK(names(got) == names(expected));
}

TEST_CASE("every t = 2 obstruction that fits embeds validly")
{
    std::size_t fitting = 0;
    for (const auto & obs : generate_obstructions(2)) {
        try {
            auto e = embed_in_binary_tree(obs);
            ++fitting;
            CHECK(closed_under_parent(e.labels));
            CHECK(e.depth <= h_bound(2));
            CHECK(e.labels.size() >= obs.tree.size());
            CHECK(validate_embedding(e.certificate, obs.tree, e.guest_graph).ok);
        }
        catch (const GraphError &) {
        }
    }
    CHECK(fitting == 2);
}

TEST_CASE("default guests have the least depth")
{
    CHECK(default_obstruction_guest(0).depth == 2);
    CHECK(default_obstruction_guest(1).depth == 4);
    const auto & g2 = default_obstruction_guest(2);
    CHECK(g2.depth == 6);
    CHECK(g2.labels.size() == 22);
    CHECK(exact_pathwidth(g2.guest_graph, OracleLimit::Forced) == 3);
}

}
