#include <doctest.h>

#include "graphfactor/formats.hpp"
#include "helpers.hpp"

using namespace graphfactor;
using namespace testutil;

TEST_SUITE_BEGIN("formats");

TEST_CASE("graph6 decode, hand-checked strings") {
    // 'A' = 63+2, '_' = 63+32 = bits 100000 -> the single pair (0,1)
    Multigraph k2 = parse_graph6("A_");
    CHECK(k2 == path(2));

    // 'C' = 63+4, '~' = 63+63 = all six upper-triangle bits
    Multigraph k4 = parse_graph6("C~");
    CHECK(k4 == complete(4));

    // 'B' = 63+3, '?' = 63+0 -> no edges
    Multigraph e3 = parse_graph6("B?");
    CHECK(e3.order() == 3);
    CHECK(e3.total_multiplicity() == 0);

    CHECK(parse_graph6("A_\n") == path(2)); // trailing newline tolerated
}

TEST_CASE("graph6 parse faults are distinct") {
    auto fault_of = [](std::string_view text) {
        try {
            parse_graph6(text);
        } catch (const Graph6Error& e) {
            return e.fault;
        }
        FAIL("expected a Graph6Error");
        return Graph6Fault::BadHeader;
    };
    CHECK(fault_of("") == Graph6Fault::BadHeader);
    CHECK(fault_of("~??") == Graph6Fault::BadHeader); // long form, n > 62 unsupported
    CHECK(fault_of("\x20_") == Graph6Fault::BadHeader);
    CHECK(fault_of("C") == Graph6Fault::Truncated);
    CHECK(fault_of("C~~") == Graph6Fault::TrailingGarbage);
    CHECK(fault_of("A_X") == Graph6Fault::TrailingGarbage);
    // 'P' = 63+17 = 010001: bit 0 clear, nonzero padding after the only pair
    CHECK(fault_of("AP") == Graph6Fault::TrailingGarbage);
}

TEST_CASE("graph6 round trip on random simple graphs") {
    SplitMix64 rng(101);
    for (int round = 0; round < 200; ++round) {
        const int n = 1 + static_cast<int>(rng.bounded(10));
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.bounded(2)) edges.emplace_back(u, v);
        Multigraph g(n, edges);
        CHECK(parse_graph6(emit_graph6(g)) == g);
    }
    CHECK(emit_graph6(parse_graph6("C~")) == "C~");
    CHECK(emit_graph6(parse_graph6("A_")) == "A_");
}

TEST_CASE("emit_graph6 rejects what graph6 cannot carry") {
    Multigraph dbl(2, std::vector<std::tuple<int, int, int>>{{0, 1, 2}});
    CHECK_THROWS_AS(emit_graph6(dbl), std::invalid_argument);
    Multigraph loop(1, std::vector<std::tuple<int, int, int>>{{0, 0, 1}});
    CHECK_THROWS_AS(emit_graph6(loop), std::invalid_argument);
}

TEST_CASE("edge list parsing") {
    Multigraph dbl = parse_edge_list("2\n0 1 2\n");
    CHECK(dbl.multiplicity(0, 1) == 2);

    Multigraph loop = parse_edge_list("1\n0 0 1");
    CHECK(loop.degree(0) == 2);

    CHECK(parse_edge_list("3\n0 1\n1 2") == path(3));
    CHECK(parse_edge_list("3\n# comment\n0 1 # tail comment\n1 2\n\n") == path(3));

    CHECK_THROWS_AS(parse_edge_list("2\n0 5"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2\n0 1 0"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2\n0 x"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("# nothing"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 3\n0 1"), ParseError);
}

TEST_CASE("edge list round trip") {
    SplitMix64 rng(202);
    for (int round = 0; round < 100; ++round) {
        const int n = 1 + static_cast<int>(rng.bounded(8));
        Multigraph g = random_multigraph(rng, n, static_cast<int>(rng.bounded(5)), true);
        CHECK(parse_edge_list(emit_edge_list(g)) == g);
    }
}

TEST_SUITE_END();
