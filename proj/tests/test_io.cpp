#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pancyc/graph.hpp"
#include "pancyc/io.hpp"

using namespace pancyc;

TEST_CASE("graph6 encodes the documented examples") {
    const Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(encode_graph6(k3) == "Bw");

    // C4 upper-triangle bits in column order: (0,1)=1,(0,2)=0,(1,2)=1,(0,3)=1,(1,3)=0,(2,3)=1
    const Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const std::string g6 = encode_graph6(c4);
    REQUIRE(g6.size() == 2);
    CHECK(g6[0] == static_cast<char>(63 + 4));
    CHECK(g6[1] == static_cast<char>(63 + 0b101101));

    CHECK(encode_graph6(Graph(1)) == "@");
}

TEST_CASE("graph6 round-trips on random graphs") {
    std::mt19937 rng(20240520);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 20);
        const Graph g = oracles::random_graph(rng, n, static_cast<int>(rng() % (3 * n + 1)));
        const Graph back = decode_graph6(encode_graph6(g));
        CHECK(back == g);
    }
}

TEST_CASE("graph6 decode rejects malformed text") {
    CHECK_THROWS_AS(decode_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(decode_graph6("B"), std::invalid_argument);         // truncated payload
    CHECK_THROWS_AS(decode_graph6("Bww"), std::invalid_argument);       // overlong payload
    CHECK_THROWS_AS(decode_graph6(std::string("B\x1f")), std::invalid_argument);  // bad char
    CHECK_THROWS_AS(decode_graph6("~??"), std::invalid_argument);       // long form unsupported
    Graph g63(63);
    CHECK_THROWS_AS(encode_graph6(g63), std::invalid_argument);
}

TEST_CASE("edge list round-trips and reports line numbers") {
    const Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    const Graph back = parse_edge_list(to_edge_list(g));
    CHECK(back == g);

    CHECK_THROWS_WITH_AS(parse_edge_list("n 3\n0 1\n0\n"),
                         doctest::Contains("line 3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 5\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);
}

TEST_CASE("parse_graph_text auto-detects the format") {
    const Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(parse_graph_text(encode_graph6(c4)) == c4);
    CHECK(parse_graph_text(to_edge_list(c4)) == c4);
    CHECK(parse_graph_text("# comment\nn 4\n0 1\n1 2\n2 3\n0 3\n") == c4);
    CHECK(parse_graph_text("  Bw \n") == make_graph(3, {{0, 1}, {1, 2}, {0, 2}}));
}
