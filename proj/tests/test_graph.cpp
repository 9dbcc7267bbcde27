#include <doctest.h>

#include <random>

#include "bchrome/errors.hpp"
#include "bchrome/graph.hpp"
#include "bchrome/graph6.hpp"
#include "test_support.hpp"

using bchrome::Graph;
using test_support::make_graph;

TEST_CASE("graph construction validates and normalizes") {
  Graph g = make_graph(4, {{2, 1}, {0, 1}, {2, 3}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  CHECK(!g.has_edge(0, 3));
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});
  CHECK(g.degree(3) == 1);

  int degree_sum = 0;
  for (int v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
  CHECK(degree_sum == 2 * g.edge_count());

  CHECK_THROWS_AS(make_graph(3, {{0, 0}}), bchrome::PreconditionError);
  CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), bchrome::PreconditionError);
  CHECK_THROWS_AS(make_graph(3, {{0, 3}}), bchrome::PreconditionError);
  CHECK_THROWS_AS(make_graph(3, {{-1, 0}}), bchrome::PreconditionError);
}

TEST_CASE("degree summaries and regularity") {
  Graph c5 = bchrome::gen_cycle(5);
  CHECK(bchrome::max_degree(c5) == 2);
  CHECK(bchrome::min_degree(c5) == 2);
  CHECK(bchrome::regular_degree(c5) == 2);

  Graph p4 = test_support::path_graph(4);
  CHECK(bchrome::max_degree(p4) == 2);
  CHECK(bchrome::min_degree(p4) == 1);
  CHECK(!bchrome::regular_degree(p4).has_value());
}

TEST_CASE("connectivity predicate") {
  CHECK(bchrome::is_connected(test_support::path_graph(6)));
  Graph two_parts = make_graph(4, {{0, 1}, {2, 3}});
  CHECK(!bchrome::is_connected(two_parts));
  Graph single = make_graph(1, {});
  CHECK(bchrome::is_connected(single));
}

TEST_CASE("four-cycle detection on fixtures") {
  CHECK(!bchrome::has_four_cycle(bchrome::gen_cycle(5)));
  CHECK(bchrome::has_four_cycle(bchrome::gen_cycle(4)));
  CHECK(!bchrome::has_four_cycle(bchrome::gen_petersen()));
  CHECK(bchrome::has_four_cycle(test_support::complete_graph(4)));
  CHECK(!bchrome::has_four_cycle(test_support::complete_graph(3)));
}

TEST_CASE("four-cycle detection agrees with the exhaustive scan") {
  std::mt19937_64 rng(20240811);
  for (int round = 0; round < 300; ++round) {
    int n = 4 + static_cast<int>(rng() % 7);  // 4..10
    Graph g = test_support::random_connected_graph(
        n, static_cast<int>(rng() % (n + 3)), rng);
    CHECK(bchrome::has_four_cycle(g) == test_support::has_c4_exhaustive(g));
  }
}

TEST_CASE("girth on fixtures") {
  CHECK(bchrome::girth(bchrome::gen_petersen()) == 5);
  CHECK(bchrome::girth(bchrome::gen_cycle(7)) == 7);
  CHECK(bchrome::girth(bchrome::gen_cycle(3)) == 3);
  CHECK(!bchrome::girth(test_support::path_graph(5)).has_value());
  CHECK(!bchrome::girth(make_graph(1, {})).has_value());
  CHECK(bchrome::girth(test_support::complete_graph(4)) == 3);
  // Triangle with no C4: girth 3 while has_four_cycle stays false.
  Graph tri_tail = make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
  CHECK(bchrome::girth(tri_tail) == 3);
  CHECK(!bchrome::has_four_cycle(tri_tail));
}

TEST_CASE("structure report aggregates the predicates") {
  bchrome::StructureReport r = bchrome::analyze_structure(bchrome::gen_petersen());
  CHECK(r.regular_degree == 3);
  CHECK(r.girth == 5);
  CHECK(!r.has_c4);
  CHECK(r.connected);

  bchrome::StructureReport p = bchrome::analyze_structure(test_support::path_graph(3));
  CHECK(!p.regular_degree.has_value());
  CHECK(!p.girth.has_value());
  CHECK(!p.has_c4);
  CHECK(p.connected);
}

TEST_CASE("graph6 decodes the hand-checked fixtures") {
  // "D?{": n = 5, payload bits place edges (0,4),(1,4),(2,4),(3,4).
  Graph star = bchrome::parse_graph6("D?{");
  CHECK(star.vertex_count() == 5);
  CHECK(star.edges() == std::vector<std::pair<int, int>>{
                            {0, 4}, {1, 4}, {2, 4}, {3, 4}});

  Graph one = bchrome::parse_graph6("@");
  CHECK(one.vertex_count() == 1);
  CHECK(one.edge_count() == 0);

  CHECK(bchrome::parse_graph6("Dhc") == bchrome::gen_cycle(5));
  CHECK(bchrome::parse_graph6("EhEG") == bchrome::gen_cycle(6));
  CHECK(bchrome::parse_graph6("FhCKG") == bchrome::gen_cycle(7));
  CHECK(bchrome::parse_graph6("C~") == test_support::complete_graph(4));
  CHECK(bchrome::parse_graph6("D~{") == test_support::complete_graph(5));
  CHECK(bchrome::parse_graph6("IheA@GUAo") == bchrome::gen_petersen());
}

TEST_CASE("graph6 emit matches the independent encodings") {
  CHECK(bchrome::emit_graph6(bchrome::gen_petersen()) == "IheA@GUAo");
  CHECK(bchrome::emit_graph6(bchrome::gen_cycle(5)) == "Dhc");
  CHECK(bchrome::emit_graph6(test_support::complete_graph(5)) == "D~{");
  CHECK(bchrome::emit_graph6(make_graph(1, {})) == "@");
}

TEST_CASE("graph6 round-trips random graphs including multi-byte headers") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 60; ++round) {
    int n = 1 + static_cast<int>(rng() % 80);
    Graph g = n == 1 ? make_graph(1, {})
                     : test_support::random_connected_graph(
                           n, static_cast<int>(rng() % (2 * n)), rng);
    CHECK(bchrome::parse_graph6(bchrome::emit_graph6(g)) == g);
  }
  // n = 100 forces the '~' three-byte vertex-count header.
  Graph big = test_support::complete_graph(100);
  std::string line = bchrome::emit_graph6(big);
  CHECK(line[0] == '~');
  CHECK(bchrome::parse_graph6(line) == big);
}

TEST_CASE("graph6 accepts the optional format prefix and trims whitespace") {
  CHECK(bchrome::parse_graph6(">>graph6<<Dhc") == bchrome::gen_cycle(5));
  CHECK(bchrome::parse_graph6("Dhc\n") == bchrome::gen_cycle(5));
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(bchrome::parse_graph6(""), bchrome::Graph6Error);
  CHECK_THROWS_AS(bchrome::parse_graph6("D?"), bchrome::Graph6Error);   // short
  CHECK_THROWS_AS(bchrome::parse_graph6("D?{?"), bchrome::Graph6Error); // long
  CHECK_THROWS_AS(bchrome::parse_graph6("D\x1f{{"), bchrome::Graph6Error);
  CHECK_THROWS_AS(bchrome::parse_graph6("D?{ extra"), bchrome::Graph6Error);
  // Nonzero padding bits in the final byte (n = 3 uses only 3 of 6 bits).
  CHECK_THROWS_AS(bchrome::parse_graph6("B@"), bchrome::Graph6Error);
}

TEST_CASE("c4-free edge bound is checked with exact arithmetic") {
  // Petersen: m = 15, bound = 10/4 * (1 + sqrt(37)) ≈ 17.7.
  CHECK(bchrome::c4_edge_bound_holds(10, 15));
  CHECK(!bchrome::c4_edge_bound_holds(10, 18));
  // Incidence graph of the Fano plane: 14 vertices, 21 edges, girth 6;
  // the bound value is 14/4 * (1 + sqrt(53)) ≈ 28.9.
  CHECK(bchrome::c4_edge_bound_holds(14, 21));
  CHECK(!bchrome::c4_edge_bound_holds(14, 29));
  CHECK(bchrome::c4_edge_bound_holds(1, 0));
  // Exact boundary: n = 7, bound = 7/4 * (1 + 5) = 10.5, so 10 passes.
  CHECK(bchrome::c4_edge_bound_holds(7, 10));
  CHECK(!bchrome::c4_edge_bound_holds(7, 11));
}
