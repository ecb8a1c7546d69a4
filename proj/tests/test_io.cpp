#include <doctest.h>

#include <random>

#include "support/generators.hpp"
#include "tmlab/errors.hpp"
#include "tmlab/io.hpp"

using namespace tmlab;

TEST_CASE("graph parsing") {
    const Graph g = io::parse_graph("# a 4-cycle\n4 4\n\n3 0  # closing edge\n0 1\n2 1\n2 3\n");
    CHECK(g == graphs::cycle(4));
    CHECK(io::format_graph(g) == "4 4\n0 1\n0 3\n1 2\n2 3\n");
    CHECK(io::parse_graph("0 0\n").num_vertices() == 0);

    CHECK_THROWS_AS(io::parse_graph(""), InputError);
    CHECK_THROWS_AS(io::parse_graph("3\n"), InputError);
    CHECK_THROWS_AS(io::parse_graph("3 2\n0 1\n"), InputError);
    CHECK_THROWS_AS(io::parse_graph("3 1\n0 x\n"), InputError);
    CHECK_THROWS_AS(io::parse_graph("3 1\n0 1 2\n"), InputError);
    CHECK_THROWS_AS(io::parse_graph("3 1\n0 3\n"), InputError);
    CHECK_THROWS_AS(io::parse_graph("3 2\n0 1\n1 0\n"), InputError);
    CHECK_THROWS_AS(io::parse_graph("-1 0\n"), InputError);
    CHECK_THROWS_AS(io::read_graph("/nonexistent/graph.txt"), InputError);
}

TEST_CASE("shipped fixtures load") {
    const std::string dir = TMLAB_DATA_DIR "/graphs/";
    CHECK(io::read_graph(dir + "k23.txt") == graphs::complete_bipartite(2, 3));
    CHECK(io::read_graph(dir + "k33.txt") == graphs::complete_bipartite(3, 3));
    CHECK(io::read_graph(dir + "c4.txt") == graphs::cycle(4));
    CHECK(io::read_graph(dir + "p4.txt") == graphs::path(4));
    CHECK(io::read_graph(dir + "k23_pendant.txt") ==
          graphs::with_pendant(graphs::complete_bipartite(2, 3), 2));
    CHECK(io::read_graph(dir + "empty.txt").num_vertices() == 0);
    CHECK(is_tree(io::read_graph(dir + "tree_spider.txt")));
    CHECK(is_tree(io::read_graph(dir + "tree_caterpillar.txt")));
}

TEST_CASE("inequality parsing") {
    const auto ineqs = io::parse_inequalities("# comment\n1 1 1 <= 1\n3/2 -1/2 0 <= 2\n", 3);
    REQUIRE(ineqs.size() == 2);
    CHECK(ineqs[0].coeffs == RationalVector{1, 1, 1});
    CHECK(ineqs[1].coeffs == RationalVector{Rational(3, 2), Rational(-1, 2), 0});
    CHECK(ineqs[1].rhs == 2);
    CHECK(io::format_inequality(ineqs[1]) == "3/2 -1/2 0 <= 2");
    CHECK(io::parse_inequalities("", 3).empty());

    CHECK_THROWS_AS(io::parse_inequalities("1 1 <= 1\n", 3), InputError);
    CHECK_THROWS_AS(io::parse_inequalities("1 1 1 1\n", 3), InputError);
    CHECK_THROWS_AS(io::parse_inequalities("1 1 1 >= 1\n", 3), InputError);
    CHECK_THROWS_AS(io::parse_inequalities("1 a 1 <= 1\n", 3), InputError);
    CHECK_THROWS_AS(io::parse_inequalities("1 1/0 1 <= 1\n", 3), InputError);
}

TEST_CASE("labelled inequality output") {
    const Graph p2 = graphs::path(2);
    const auto text = io::format_inequalities(basic_inequalities(p2), &p2);
    CHECK(text.rfind("# ", 0) == 0);
    const auto back = io::parse_inequalities(text, 3);
    CHECK(back.size() == basic_inequalities(p2).size());
}

TEST_CASE("point parsing") {
    CHECK(io::parse_point("1/3 1/3 0\n", 3) == RationalVector{Rational(1, 3), Rational(1, 3), 0});
    CHECK_THROWS_AS(io::parse_point("1 2\n", 3), InputError);
    CHECK_THROWS_AS(io::parse_point("1 2 3\n4 5 6\n", 3), InputError);
    CHECK_THROWS_AS(io::parse_point("", 3), InputError);
    CHECK_THROWS_AS(io::parse_point("1 2 x\n", 3), InputError);
}

TEST_CASE("graph and inequality text round trip") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = tmlab::testing::random_small_graph(rng, 7);
        CHECK(io::parse_graph(io::format_graph(g)) == g);

        std::uniform_int_distribution<int> num(-9, 9), den(1, 8);
        LinearInequality i{RationalVector(g.num_elements()), Rational(num(rng), den(rng)), {}};
        for (auto& c : i.coeffs) c = Rational(num(rng), den(rng));
        const auto back = io::parse_inequalities(io::format_inequality(i) + "\n", g.num_elements());
        REQUIRE(back.size() == 1);
        CHECK(back[0].coeffs == i.coeffs);
        CHECK(back[0].rhs == i.rhs);
    }
}
