#include <doctest.h>

#include <sstream>

#include "corekit/graph.hpp"
#include "corekit/rmat.hpp"
#include "fixtures.hpp"

using namespace corekit;

TEST_CASE("parse_edge_list skips comments and blanks, keeps raw pairs") {
    std::istringstream in("# c\n1 2\n2 3");
    auto edges = parse_edge_list(in);
    REQUIRE(edges.size() == 2);
    CHECK(edges[0] == RawEdge{"1", "2"});
    CHECK(edges[1] == RawEdge{"2", "3"});
}

TEST_CASE("parse_edge_list preserves self-loops and duplicates") {
    std::istringstream loops("1 1");
    CHECK(parse_edge_list(loops).size() == 1);
    std::istringstream dups("1 2\n1 2");
    CHECK(parse_edge_list(dups).size() == 2);
}

TEST_CASE("parse_edge_list names the malformed line") {
    std::istringstream in("1 2\n3\n");
    CHECK_THROWS_WITH_AS(parse_edge_list(in),
                         doctest::Contains("line 2"), std::runtime_error);
    std::istringstream in3("1 2 3\n");
    CHECK_THROWS_AS(parse_edge_list(in3), std::runtime_error);
}

TEST_CASE("data_cleanse removes loops and collapses duplicates") {
    CleanseStats cs;
    Graph g = data_cleanse({{"A", "B"}, {"B", "A"}, {"A", "A"}}, &cs);
    CHECK(g.n() == 2);
    CHECK(g.m() == 1);
    CHECK(cs.loops_removed == 1);
    CHECK(cs.dups_removed == 1);
    CHECK(cs.edges_symmetrized == 0);
}

TEST_CASE("data_cleanse symmetrizes one-directional edges") {
    CleanseStats cs;
    Graph g = data_cleanse({{"A", "B"}}, &cs);
    CHECK(g.m() == 1);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK(cs.edges_symmetrized == 1);
    CHECK(cs.dups_removed == 0);
}

TEST_CASE("data_cleanse is idempotent") {
    Graph g = testutil::figure1();
    std::vector<RawEdge> edges;
    for (VertexId u = 0; u < g.n(); ++u)
        for (VertexId v : g.neighbors(u)) edges.emplace_back(g.label(u), g.label(v));
    CleanseStats cs;
    Graph g2 = data_cleanse(edges, &cs);
    CHECK(graph_equal(g, g2));
    CHECK(cs.loops_removed == 0);
    CHECK(cs.edges_symmetrized == 0);
}

TEST_CASE("adjacency json parsing applies cleansing") {
    Graph g = parse_adjacency_json(R"({"0":[1],"1":[0]})");
    CHECK(g.n() == 2);
    CHECK(g.m() == 1);

    // missing node materialized
    CleanseStats cs;
    Graph repaired = parse_adjacency_json(R"({"0":[1]})", &cs);
    CHECK(repaired.n() == 2);
    CHECK(repaired.m() == 1);
    CHECK(cs.nodes_added == 1);

    // self-loop dropped
    Graph looped = parse_adjacency_json(R"({"0":[0,1],"1":[0]})");
    CHECK(looped.n() == 2);
    CHECK(looped.m() == 1);
}

TEST_CASE("adjacency json rejects malformed input") {
    CHECK_THROWS_AS(parse_adjacency_json("[1,2]"), std::runtime_error);
    CHECK_THROWS_AS(parse_adjacency_json(R"({"0":1})"), std::runtime_error);
    CHECK_THROWS_AS(parse_adjacency_json(R"({"0":["x"]})"), std::runtime_error);
    CHECK_THROWS_AS(parse_adjacency_json("not json"), std::runtime_error);
}

TEST_CASE("adjacency writer round-trips") {
    Graph g = gen_path(2);
    CHECK(write_adjacency_json(g) == R"({"0":[1],"1":[0]})");

    Graph cyc = gen_cycle(5);
    CHECK(graph_equal(parse_adjacency_json(write_adjacency_json(cyc)), cyc));

    RmatParams p;
    p.n_target = 1000;
    p.seed = 11;
    Graph r = rmat_generate(p);
    CHECK(graph_equal(parse_adjacency_json(write_adjacency_json(r)), r));
}

TEST_CASE("stats") {
    auto k4 = stats(gen_complete(4));
    CHECK(k4.n == 4);
    CHECK(k4.m == 6);
    CHECK(k4.avg_degree == doctest::Approx(3.0));
    CHECK(k4.max_degree == 3);

    auto c10 = stats(gen_cycle(10));
    CHECK(c10.avg_degree == doctest::Approx(2.0));
    CHECK(c10.max_degree == 2);

    auto empty = stats(Graph{});
    CHECK(empty.n == 0);
    CHECK(empty.m == 0);
    CHECK(empty.avg_degree == 0.0);
    CHECK(empty.max_degree == 0);
}

TEST_CASE("generators") {
    Graph cyc = gen_cycle(5);
    CHECK(cyc.m() == 5);
    for (VertexId u = 0; u < 5; ++u) CHECK(cyc.degree(u) == 2);

    Graph path = gen_path(2);
    CHECK(path.m() == 1);

    Graph p5 = gen_path(5);
    CHECK(p5.m() == 4);
    CHECK(p5.degree(0) == 1);
    CHECK(p5.degree(4) == 1);

    Graph k4 = gen_complete(4);
    CHECK(k4.m() == 6);
    for (VertexId u = 0; u < 4; ++u) CHECK(k4.degree(u) == 3);

    CHECK_THROWS_AS(gen_cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(gen_path(1), std::invalid_argument);
    CHECK_THROWS_AS(gen_complete(0), std::invalid_argument);
}

TEST_CASE("cleansed graphs satisfy invariants under random inputs") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 25; ++iter) {
        std::vector<RawEdge> edges;
        std::uniform_int_distribution<int> pick(0, 15);
        int count = static_cast<int>(rng() % 60);
        for (int i = 0; i < count; ++i)
            edges.emplace_back(std::to_string(pick(rng)), std::to_string(pick(rng)));
        Graph g = data_cleanse(edges);
        g.check_invariants();  // throws on violation
        CHECK(graph_equal(parse_adjacency_json(write_adjacency_json(g)), g));
    }
}

TEST_CASE("degree-0 vertices are carried through") {
    Graph g = data_cleanse_ids({{0, 1}}, 4);
    CHECK(g.n() == 4);
    CHECK(g.degree(3) == 0);
}
