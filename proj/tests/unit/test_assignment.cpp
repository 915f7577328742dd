#include <doctest.h>

#include "graphfactor/assignment.hpp"
#include "helpers.hpp"

using namespace graphfactor;
using namespace testutil;

TEST_SUITE_BEGIN("assignment");

TEST_CASE("fspec") {
    CHECK_THROWS_AS(FSpec({1, 0}), std::invalid_argument);
    CHECK(FSpec::parse("1,2,3", 3).values() == std::vector<int>{1, 2, 3});
    CHECK(FSpec::parse("const:2", 4) == FSpec::constant(4, 2));
    CHECK_THROWS_AS(FSpec::parse("1,2", 3), ParseError);
    CHECK_THROWS_AS(FSpec::parse("1,x", 2), ParseError);
    CHECK_THROWS_AS(FSpec::parse("const:0", 2), ParseError);

    const FSpec f({3, 1, 4});
    CHECK(f.sum(VertexSet({0, 2})) == 7);
    CHECK(!f.all_odd());
    CHECK(FSpec({1, 3, 5}).all_odd());
}

TEST_CASE("h_family sizes") {
    CHECK(HFamily(FSpec({1, 3, 5})).size() == 1);
    CHECK(HFamily(FSpec({2, 2})).size() == 4);
    CHECK(HFamily(FSpec({1, 2, 3})).size() == 2);
}

TEST_CASE("h_family order and agreement at odd-valued vertices") {
    const FSpec f({1, 2, 3, 4});
    HFamily family(f);
    REQUIRE(family.size() == 4);
    const HAssignment first = family.member(0);
    const HAssignment last = family.member(family.size() - 1);
    for (int v = 0; v < f.size(); ++v) {
        CHECK(first.at(v) == j_set(f.value(v)));
        CHECK(last.at(v) == j_plus_set(f.value(v)));
    }
    // all members coincide at odd-valued vertices
    for (std::uint64_t i = 0; i < family.size(); ++i) {
        const HAssignment h = family.member(i);
        CHECK(h.at(0) == j_set(1));
        CHECK(h.at(2) == j_set(3));
    }
    // the two members of the (1,2,3) family differ exactly at vertex 1
    HFamily small(FSpec({1, 2, 3}));
    const HAssignment a = small.member(0);
    const HAssignment b = small.member(1);
    CHECK(a.at(0) == b.at(0));
    CHECK(a.at(2) == b.at(2));
    CHECK(!(a.at(1) == b.at(1)));
    CHECK_THROWS_AS(small.member(2), std::invalid_argument);
}

TEST_CASE("h_family cap is a hard refusal") {
    CHECK_THROWS_AS(HFamily(FSpec::constant(8, 2), 16), CapError);
    CHECK_NOTHROW(HFamily(FSpec::constant(8, 2), 256));
}

TEST_CASE("colored_h") {
    const Multigraph g = star(4); // center degree 4, leaves degree 1
    const FSpec f = FSpec::constant(5, 2);

    const HAssignment all_r = colored_h(f, std::vector<Color>(5, Color::R), g);
    for (int v = 0; v < 5; ++v) {
        CHECK(all_r.at(v) == j_set(2));
        CHECK(all_r.tag(v) == SetTag::JF);
    }

    std::vector<Color> mixed(5, Color::B);
    const HAssignment all_b = colored_h(f, mixed, g);
    CHECK(all_b.at(0) == DegreeSet::parity_interval(1, 3)); // largest odd <= 4
    CHECK(all_b.at(1) == DegreeSet::parity_interval(1, 1)); // largest odd <= 1
    CHECK(all_b.tag(0) == SetTag::ODD_ALL);

    const Multigraph isolated(2, std::vector<std::pair<int, int>>{});
    CHECK_THROWS_AS(colored_h(FSpec::constant(2, 1), std::vector<Color>(2, Color::B), isolated),
                    IsolatedBlueVertex);
}

TEST_CASE("truncate") {
    const Multigraph g = star(3); // degrees 3,1,1,1
    HAssignment h = HAssignment::uniform(4, j_set(5));
    auto cut = truncate(h, g);
    REQUIRE(std::holds_alternative<HAssignment>(cut));
    const HAssignment& ok = std::get<HAssignment>(cut);
    CHECK(ok.at(0) == j_set(3));
    CHECK(ok.at(1) == j_set(1));
    CHECK(ok.tag(0) == SetTag::OTHER); // tags survive truncation

    // a vertex whose set empties is named
    Multigraph with_isolated(2, std::vector<std::pair<int, int>>{});
    auto bad = truncate(HAssignment::uniform(2, j_set(1)), with_isolated);
    REQUIRE(std::holds_alternative<InfeasibleAt>(bad));
    CHECK(std::get<InfeasibleAt>(bad).vertex == 0);
}

TEST_SUITE_END();
