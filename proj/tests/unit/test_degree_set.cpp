#include <doctest.h>

#include "graphfactor/degree_set.hpp"

using namespace graphfactor;

TEST_SUITE_BEGIN("degree-set");

TEST_CASE("j_set") {
    CHECK(j_set(5).elements() == std::vector<int>{1, 3, 5});
    CHECK(j_set(6).elements() == std::vector<int>{1, 3, 5, 6});
    CHECK(j_set(1).elements() == std::vector<int>{1});
    CHECK(j_set(2).elements() == std::vector<int>{1, 2});
    CHECK_THROWS_AS(j_set(0), std::invalid_argument);
}

TEST_CASE("j_plus_set") {
    CHECK(j_plus_set(4).elements() == std::vector<int>{1, 3, 5});
    CHECK(j_plus_set(3).elements() == std::vector<int>{1, 3});
    CHECK(j_plus_set(1).elements() == std::vector<int>{1});
    CHECK_THROWS_AS(j_plus_set(0), std::invalid_argument);
}

TEST_CASE("j-set family properties") {
    for (int m = 1; m <= 32; ++m) {
        const DegreeSet j = j_set(m);
        const DegreeSet jp = j_plus_set(m);
        // every odd member of J_m lies in J_m^+; only an even top escapes
        for (int d : j.elements()) CHECK(jp.contains(d) == ((d & 1) == 1));
        if (m & 1) {
            CHECK(j == jp);
        } else {
            CHECK(!(j == jp));
            CHECK(j.contains(m));
            CHECK(!jp.contains(m));
        }
        CHECK(j.max_degree() == m);
        CHECK(jp.max_degree() == m + ((m & 1) ? 0 : 1));
        for (int d : j.elements()) {
            CHECK(d >= 1);
            if (d != m || (m & 1)) CHECK((d & 1) == 1); // everything but an even top is odd
        }
        for (int d : jp.elements()) CHECK((d & 1) == 1);
    }
}

TEST_CASE("classify") {
    CHECK(classify(j_set(5)) == SetClass::ParityInterval);
    CHECK(classify(j_set(6)) == SetClass::ParityIntervalPlusTop);
    CHECK(classify(DegreeSet::explicit_set({0, 1, 2})) == SetClass::Other);
    CHECK(classify(j_set(1)) == SetClass::Singleton);
    CHECK(classify(DegreeSet::parity_interval(4, 4)) == SetClass::Singleton);
    for (int m = 2; m <= 20; ++m) {
        if (m & 1) CHECK(classify(j_set(m)) == SetClass::ParityInterval);
        else CHECK(classify(j_set(m)) == SetClass::ParityIntervalPlusTop);
    }
}

TEST_CASE("explicit sets canonicalize to the strongest form") {
    CHECK(DegreeSet::explicit_set({5, 1, 3}) == j_set(5));
    CHECK(DegreeSet::explicit_set({1, 2}) == j_set(2));
    CHECK(DegreeSet::explicit_set({6, 1, 5, 3}) == j_set(6));
    CHECK(DegreeSet::explicit_set({2, 4}) == DegreeSet::parity_interval(2, 4));
    CHECK(DegreeSet::explicit_set({7}) == DegreeSet::parity_interval(7, 7));
    CHECK(DegreeSet::explicit_set({0, 2, 3}).kind() == DegreeSet::Kind::Explicit);
    CHECK_THROWS_AS(DegreeSet::explicit_set({}), std::invalid_argument);
    CHECK_THROWS_AS(DegreeSet::explicit_set({-1}), std::invalid_argument);
}

TEST_CASE("display forms") {
    CHECK(j_set(5).display() == "{1,3,5}");
    CHECK(j_set(6).display() == "odd[1..5]+{6}");
    CHECK(DegreeSet::parity_interval(2, 2).display() == "{2}");
    CHECK(DegreeSet::explicit_set({0, 2, 3}).display() == "{0,2,3}");
}

TEST_CASE("truncation") {
    CHECK(j_set(5).truncated(3) == j_set(3));
    CHECK(j_set(6).truncated(6) == j_set(6));
    CHECK(j_set(6).truncated(5) == j_set(5));
    CHECK(j_set(6).truncated(4) == j_set(3));
    CHECK(!j_set(1).truncated(0).has_value());
    CHECK(DegreeSet::explicit_set({0, 2, 3}).truncated(2) ==
          DegreeSet::parity_interval(0, 2));
}

TEST_CASE("membership agrees with enumerated elements") {
    const std::vector<DegreeSet> sets = {
        j_set(7),          j_set(8),           j_plus_set(8),
        DegreeSet::parity_interval(0, 6), DegreeSet::explicit_set({0, 1, 5}),
        DegreeSet::plus_top(3, 7),
    };
    for (const DegreeSet& s : sets) {
        const std::vector<int> elems = s.elements();
        CHECK(elems.size() == s.count());
        CHECK(elems.front() == s.min_degree());
        CHECK(elems.back() == s.max_degree());
        for (int d = 0; d <= s.max_degree() + 2; ++d) {
            const bool in = std::find(elems.begin(), elems.end(), d) != elems.end();
            CHECK(s.contains(d) == in);
        }
    }
}

TEST_SUITE_END();
