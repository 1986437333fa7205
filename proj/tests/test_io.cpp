#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute.hpp"
#include "hamdisc/instruments.hpp"
#include "hamdisc/io.hpp"

using namespace hamdisc;

TEST_CASE("edge list layout") {
  const OrientedGraph g = brute::cyclic_triangle();
  CHECK(to_edge_list(g) == "n 3\n0 1\n1 2\n2 0\n");
}

TEST_CASE("edge list parsing skips comments and blank lines") {
  const OrientedGraph g = parse_edge_list("# a comment\n\nn 3\n0 1\n  # indented comment\n1 2\n\n2 0\n");
  CHECK(g == brute::cyclic_triangle());
}

TEST_CASE("edge list errors") {
  CHECK_THROWS_AS(parse_edge_list("0 1\n"), PreconditionError);
  CHECK_THROWS_AS(parse_edge_list("n 3\n0 5\n"), PreconditionError);
  CHECK_THROWS_AS(parse_edge_list("n 3\n0 1 2\n"), PreconditionError);
  CHECK_THROWS_AS(parse_edge_list("n 3\n0 x\n"), PreconditionError);
  CHECK_THROWS_AS(parse_edge_list("n 3\n0 1\n1 0\n"), PreconditionError);
  CHECK_THROWS_AS(parse_edge_list("n 0\n"), PreconditionError);
  CHECK_THROWS_AS(parse_edge_list(""), PreconditionError);
}

TEST_CASE("digraph6 of a directed triangle") {
  // matrix rows 010 001 100, padded to 12 bits: 010001 100000
  const OrientedGraph g = brute::cyclic_triangle();
  CHECK(to_digraph6(g) == "&BP_");
  CHECK(parse_digraph6("&BP_") == g);
}

TEST_CASE("digraph6 of the single vertex") {
  CHECK(to_digraph6(OrientedGraph(1)) == "&@?");
}

TEST_CASE("round trips are bit-exact") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 1 + static_cast<int>((seed * 37) % 140);
    const OrientedGraph g = random_oriented(n, seed);
    const std::string el = to_edge_list(g);
    CHECK(parse_edge_list(el) == g);
    CHECK(to_edge_list(parse_edge_list(el)) == el);
    const std::string d6 = to_digraph6(g);
    CHECK(parse_digraph6(d6) == g);
    CHECK(to_digraph6(parse_digraph6(d6)) == d6);
    CHECK(parse_graph(d6) == g);
    CHECK(parse_graph(el) == g);
    CHECK(parse_graph(d6 + "\n") == g);
  }
}

TEST_CASE("digraph6 long header form") {
  const OrientedGraph g = random_oriented(100, 3);
  const std::string d6 = to_digraph6(g);
  CHECK(d6[1] == '~');
  CHECK(parse_digraph6(d6) == g);
}

TEST_CASE("digraph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_digraph6("BP_"), PreconditionError);
  CHECK_THROWS_AS(parse_digraph6("&BP"), PreconditionError);
  CHECK_THROWS_AS(parse_digraph6("&BPa"), PreconditionError);  // nonzero padding
  // both directions of a pair set: rows 010 100 000
  CHECK_THROWS_AS(parse_digraph6("&BS?"), PreconditionError);
  // loop at vertex 0
  CHECK_THROWS_AS(parse_digraph6("&B_?"), PreconditionError);
}

TEST_CASE("format names") {
  CHECK(parse_format_name("edge-list") == GraphFormat::EdgeList);
  CHECK(parse_format_name("digraph6") == GraphFormat::Digraph6);
  CHECK(parse_format_name("auto") == GraphFormat::Auto);
  CHECK_THROWS_AS(parse_format_name("graph6"), PreconditionError);
  const OrientedGraph g = brute::cyclic_triangle();
  CHECK(format_graph(g, GraphFormat::Digraph6) == "&BP_\n");
  CHECK_THROWS_AS(parse_graph("n 3\n", GraphFormat::Digraph6), PreconditionError);
}
